#include <bilat/generate.hpp>

#include <algorithm>
#include <numeric>

namespace bilat {

Relation gen_relation_raw(Rng& rng, const GroundSpace& a, const GroundSpace& b, double density) {
    std::vector<Mask> rows(static_cast<std::size_t>(a.size), 0);
    for (int x = 0; x < a.size; ++x)
        for (int y = 0; y < b.size; ++y)
            if (rng.chance(density)) rows[static_cast<std::size_t>(x)] |= Mask{1} << y;
    return Relation::from_rows(a, b, std::move(rows));
}

Relation gen_relation(Rng& rng, const GroundSpace& a, const GroundSpace& b, double density) {
    Relation e = gen_relation_raw(rng, a, b, density);
    std::vector<Mask> rows(e.rows());
    for (int x = 0; x < a.size; ++x)
        if (rows[static_cast<std::size_t>(x)] == 0)
            rows[static_cast<std::size_t>(x)] = Mask{1} << rng.below(static_cast<std::uint64_t>(b.size));
    Mask seen = 0;
    for (Mask m : rows) seen |= m;
    for (int y = 0; y < b.size; ++y)
        if (!mask_contains(seen, y))
            rows[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(a.size)))] |=
                Mask{1} << y;
    return Relation::from_rows(a, b, std::move(rows));
}

CSL gen_csl(Rng& rng, const GroundSpace& g, double density, int max_generators,
            const Limits& limits) {
    int k = rng.range(0, max_generators);
    std::vector<Proj> gens;
    gens.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        Mask m = 0;
        for (int a = 0; a < g.size; ++a)
            if (rng.chance(density)) m |= Mask{1} << a;
        gens.emplace_back(g.size, m);
    }
    return csl_generate(g, std::span<const Proj>(gens), limits);
}

Bilattice gen_bilattice(Rng& rng, const GroundSpace& gl, const GroundSpace& gr, double density,
                        int max_generators, const Limits& limits) {
    int k = rng.range(0, max_generators);
    std::vector<Bilattice::Pair> gens;
    gens.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        Mask p = 0, q = 0;
        for (int a = 0; a < gl.size; ++a)
            if (rng.chance(density)) p |= Mask{1} << a;
        for (int b = 0; b < gr.size; ++b)
            if (rng.chance(density)) q |= Mask{1} << b;
        gens.emplace_back(Proj(gl.size, p), Proj(gr.size, q));
    }
    return bilattice_generate(gl, gr, std::span<const Bilattice::Pair>(gens), limits);
}

PointMap gen_point_map(Rng& rng, const GroundSpace& from, const GroundSpace& onto) {
    std::vector<int> table(static_cast<std::size_t>(from.size));
    for (int& v : table) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(onto.size)));
    return PointMap(from, onto, std::move(table));
}

PointMap gen_surjection(Rng& rng, const GroundSpace& from, const GroundSpace& onto) {
    if (from.size < onto.size)
        throw Error("gen_surjection: source has fewer atoms than the target");
    std::vector<int> table(static_cast<std::size_t>(from.size));
    for (int& v : table) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(onto.size)));
    // pin one preimage per target atom at distinct random positions
    std::vector<int> slots(static_cast<std::size_t>(from.size));
    std::iota(slots.begin(), slots.end(), 0);
    for (int i = 0; i < onto.size; ++i) {
        std::size_t j = static_cast<std::size_t>(i) +
                        static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(from.size - i)));
        std::swap(slots[static_cast<std::size_t>(i)], slots[j]);
        table[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])] = i;
    }
    return PointMap(from, onto, std::move(table));
}

namespace {

std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
    }
    return perm;
}

}  // namespace

Relation relabeled(Rng& rng, const Relation& e) {
    std::vector<int> pa = random_permutation(rng, e.source().size);
    std::vector<int> pb = random_permutation(rng, e.target().size);
    std::vector<Mask> rows(static_cast<std::size_t>(e.source().size), 0);
    for (int a = 0; a < e.source().size; ++a)
        for (int b : mask_atoms(e.row(a)))
            rows[static_cast<std::size_t>(pa[static_cast<std::size_t>(a)])] |=
                Mask{1} << pb[static_cast<std::size_t>(b)];
    return Relation::from_rows(e.source(), e.target(), std::move(rows));
}

}  // namespace bilat
