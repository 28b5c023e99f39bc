#include <bilat/oracle.hpp>

#include <bilat/rng.hpp>

#include <algorithm>

namespace bilat {

Relation oracle_span_product(std::span<const Relation> chain) {
    if (chain.empty()) throw Error("oracle_span_product: empty chain");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        require_chain_link(chain[i], chain[i + 1], "oracle_span_product");

    std::vector<std::vector<std::pair<int, int>>> units;
    units.reserve(chain.size());
    for (const Relation& r : chain) units.push_back(r.pairs());

    Relation out(chain.front().source(), chain.back().target());
    std::vector<Mask> rows(static_cast<std::size_t>(out.source().size), 0);

    // Depth-first over unit tuples; the running product of matrix units
    // E_{b a} is nonzero exactly when outputs feed the next inputs.
    std::vector<std::size_t> pick(chain.size(), 0);
    std::size_t depth = 0;
    int entry_col = -1;
    std::vector<int> out_row(chain.size(), -1);
    while (true) {
        if (depth == chain.size()) {
            rows[static_cast<std::size_t>(entry_col)] |= Mask{1} << out_row[depth - 1];
            --depth;
            ++pick[depth];
        } else if (pick[depth] >= units[depth].size()) {
            pick[depth] = 0;
            if (depth == 0) break;
            --depth;
            ++pick[depth];
        } else {
            auto [a, b] = units[depth][pick[depth]];
            int incoming = depth == 0 ? a : out_row[depth - 1];
            if (incoming != a) {
                ++pick[depth];
                continue;
            }
            if (depth == 0) entry_col = a;
            out_row[depth] = b;
            ++depth;
        }
    }
    return Relation::from_rows(out.source(), out.target(), std::move(rows));
}

Relation oracle_span_product(std::initializer_list<Relation> chain) {
    std::vector<Relation> v(chain);
    return oracle_span_product(std::span<const Relation>(v));
}

Relation oracle_ref_hull(const Relation& e) {
    int n = e.source().size;
    int m = e.target().size;
    std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) {
            bool member = true;
            for (Mask support = 0;; ++support) {
                if (mask_contains(support, a)) {
                    Mask span = 0;
                    for (int x : mask_atoms(support)) span |= e.row(x);
                    if (!mask_contains(span, b)) {
                        member = false;
                        break;
                    }
                }
                if (support == full_mask(n)) break;
            }
            if (member) rows[static_cast<std::size_t>(a)] |= Mask{1} << b;
        }
    return Relation::from_rows(e.source(), e.target(), std::move(rows));
}

namespace {

// Uncovered complement cells of e under the chosen rectangles, in canonical
// order.
std::vector<std::pair<int, int>> uncovered_cells(const Relation& e,
                                                 const std::vector<Bilattice::Pair>& chosen) {
    int n = e.source().size;
    int m = e.target().size;
    std::vector<Mask> covered(static_cast<std::size_t>(n), 0);
    for (const auto& [p, q] : chosen)
        for (int a : p.atoms()) covered[static_cast<std::size_t>(a)] |= q.bits();
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a) {
        Mask complement = full_mask(m) & ~e.row(a);
        for (int b : mask_atoms(complement & ~covered[static_cast<std::size_t>(a)]))
            out.emplace_back(a, b);
    }
    return out;
}

}  // namespace

CheckReport oracle_minimality_probe(const Relation& e, int trials, std::uint64_t seed,
                                    const Limits& limits) {
    CheckReport rep;
    if (!is_nondegenerate(e))
        throw DegenerateRelation("minimality probe requires a nondegenerate relation");
    Bilattice maximal = bil_of(e, limits);
    Bilattice essential = essential_bilattice(e, limits);
    Rng rng(seed);
    int failures = 0;
    std::string first_failure;
    for (int t = 0; t < trials; ++t) {
        std::vector<Bilattice::Pair> chosen;
        for (const auto& pq : maximal.pairs())
            if (rng.chance(0.5)) chosen.push_back(pq);
        // Repair until the rectangles cover the whole complement, drawing a
        // uniformly random covering pair for each missing cell.
        for (auto [a, b] : uncovered_cells(e, chosen)) {
            std::vector<Bilattice::Pair> covering;
            for (const auto& [p, q] : maximal.pairs())
                if (p.contains(a) && q.contains(b)) covering.push_back({p, q});
            chosen.push_back(covering[rng.below(covering.size())]);
        }
        Bilattice probe = bilattice_generate(
            e.source(), e.target(), std::span<const Bilattice::Pair>(chosen), limits);
        if (!(m_of(probe) == e))
            throw Error("minimality probe construction lost the support (internal)");
        bool contained = true;
        for (const auto& pq : essential.pairs())
            if (!probe.contains(pq)) {
                contained = false;
                if (first_failure.empty())
                    first_failure = "trial " + std::to_string(t) + " missing (" +
                                    pq.first.to_string() + "," + pq.second.to_string() + ")";
                break;
            }
        if (!contained) ++failures;
    }
    rep.add("essential", "minimality probe", failures == 0,
            failures == 0 ? std::to_string(trials) + " probes contained the essential bilattice"
                          : first_failure);
    return rep;
}

CheckReport exhaustive_minimality(const Relation& e, const Limits& limits) {
    CheckReport rep;
    if (e.source().size > 2 || e.target().size > 2)
        throw Error("exhaustive_minimality is defined for ground sizes <= 2");
    if (!is_nondegenerate(e))
        throw DegenerateRelation("exhaustive_minimality requires a nondegenerate relation");
    Bilattice maximal = bil_of(e, limits);
    Bilattice essential = essential_bilattice(e, limits);
    const auto& pool = maximal.pairs();
    const std::size_t k = pool.size();
    if (k > 20) throw SizeLimitExceeded("exhaustive_minimality: candidate pool too large");

    auto index_of = [&](Mask p, Mask q) -> int {
        Bilattice::Pair key{Proj(e.source().size, p), Proj(e.target().size, q)};
        auto it = std::lower_bound(pool.begin(), pool.end(), key);
        return static_cast<int>(it - pool.begin());
    };
    // Operation tables and per-pair rectangle cell masks (cells as a*m+b bits).
    std::vector<std::vector<int>> op_meetjoin(k, std::vector<int>(k));
    std::vector<std::vector<int>> op_joinmeet(k, std::vector<int>(k));
    std::vector<std::uint32_t> cells(k, 0);
    int m = e.target().size;
    for (std::size_t i = 0; i < k; ++i) {
        for (int a : pool[i].first.atoms())
            for (int b : pool[i].second.atoms())
                cells[i] |= std::uint32_t{1} << (a * m + b);
        for (std::size_t j = 0; j < k; ++j) {
            op_meetjoin[i][j] = index_of(pool[i].first.bits() & pool[j].first.bits(),
                                         pool[i].second.bits() | pool[j].second.bits());
            op_joinmeet[i][j] = index_of(pool[i].first.bits() | pool[j].first.bits(),
                                         pool[i].second.bits() & pool[j].second.bits());
        }
    }
    std::uint32_t complement_cells = 0;
    for (int a = 0; a < e.source().size; ++a)
        for (int b : mask_atoms(full_mask(m) & ~e.row(a)))
            complement_cells |= std::uint32_t{1} << (a * m + b);
    std::uint32_t base = 0;
    base |= std::uint32_t{1} << index_of(0, 0);
    base |= std::uint32_t{1} << index_of(full_mask(e.source().size), 0);
    base |= std::uint32_t{1} << index_of(0, full_mask(m));
    std::uint32_t essential_mask = 0;
    for (const auto& [p, q] : essential.pairs())
        essential_mask |= std::uint32_t{1} << index_of(p.bits(), q.bits());

    std::size_t bilattice_count = 0;
    bool ok = true;
    std::string witness;
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << k); ++subset) {
        if ((subset & base) != base) continue;
        std::uint32_t covered = 0;
        bool closed = true;
        for (std::size_t i = 0; i < k && closed; ++i) {
            if (!((subset >> i) & 1)) continue;
            covered |= cells[i];
            for (std::size_t j = i; j < k; ++j) {
                if (!((subset >> j) & 1)) continue;
                if (!((subset >> op_meetjoin[i][j]) & 1) ||
                    !((subset >> op_joinmeet[i][j]) & 1)) {
                    closed = false;
                    break;
                }
            }
        }
        if (!closed || covered != complement_cells) continue;
        ++bilattice_count;
        if ((subset & essential_mask) != essential_mask) {
            ok = false;
            witness = "sub-bilattice bitmask " + std::to_string(subset);
            break;
        }
    }
    rep.add("essential", "exhaustive minimality", ok,
            ok ? std::to_string(bilattice_count) + " sub-bilattices with the same support checked"
               : witness);
    return rep;
}

}  // namespace bilat
