#include <bilat/lattice.hpp>

#include <algorithm>
#include <unordered_set>

namespace bilat {

namespace {

std::vector<Proj> masks_to_projs(int ground_size, std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Proj> out;
    out.reserve(masks.size());
    for (Mask m : masks) out.emplace_back(ground_size, m);
    return out;
}

}  // namespace

CSL CSL::from_elements(GroundSpace ground, std::vector<Proj> elements) {
    CSL l;
    l.ground_ = std::move(ground);
    std::vector<Mask> masks;
    masks.reserve(elements.size());
    for (const Proj& p : elements) {
        if (p.ground_size() != l.ground_.size)
            throw GroundMismatch("CSL element on a different ground space");
        masks.push_back(p.bits());
    }
    l.elements_ = masks_to_projs(l.ground_.size, std::move(masks));

    Mask full = full_mask(l.ground_.size);
    auto has = [&](Mask m) {
        return std::binary_search(l.elements_.begin(), l.elements_.end(),
                                  Proj(l.ground_.size, m));
    };
    if (!has(0) || !has(full)) throw Error("CSL must contain the zero and full projections");
    for (const Proj& a : l.elements_)
        for (const Proj& b : l.elements_) {
            if (!has(a.bits() | b.bits()) || !has(a.bits() & b.bits()))
                throw Error("family is not closed under union/intersection: witness " +
                            a.to_string() + ", " + b.to_string());
        }
    return l;
}

int CSL::index_of(const Proj& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p)) return -1;
    return static_cast<int>(it - elements_.begin());
}

CSL csl_generate(const GroundSpace& ground, std::span<const Proj> generators,
                 const Limits& limits) {
    std::unordered_set<Mask> fam{Mask{0}, full_mask(ground.size)};
    std::vector<Mask> frontier(fam.begin(), fam.end());
    for (const Proj& g : generators) {
        if (g.ground_size() != ground.size)
            throw GroundMismatch("csl_generate: generator on a different ground space");
        if (fam.insert(g.bits()).second) frontier.push_back(g.bits());
    }
    // Fixpoint closure under pairwise union and intersection.
    while (!frontier.empty()) {
        std::vector<Mask> next;
        std::vector<Mask> all(fam.begin(), fam.end());
        for (Mask x : frontier)
            for (Mask y : all) {
                for (Mask z : {x | y, x & y}) {
                    if (fam.insert(z).second) {
                        next.push_back(z);
                        if (fam.size() > limits.element_cap)
                            throw SizeLimitExceeded(
                                "csl_generate: closure exceeds the element cap of " +
                                std::to_string(limits.element_cap));
                    }
                }
            }
        frontier = std::move(next);
    }
    CSL l;
    l.ground_ = ground;
    l.elements_ = masks_to_projs(ground.size, std::vector<Mask>(fam.begin(), fam.end()));
    return l;
}

CSL csl_generate(const GroundSpace& ground, std::initializer_list<Proj> generators,
                 const Limits& limits) {
    std::vector<Proj> v(generators);
    return csl_generate(ground, std::span<const Proj>(v), limits);
}

Relation alg_of_lattice(const CSL& l) {
    int n = l.ground().size;
    // row(x) = intersection of all lattice elements containing x.
    std::vector<Mask> rows(static_cast<std::size_t>(n), full_mask(n));
    for (const Proj& p : l.elements())
        for (int x = 0; x < n; ++x)
            if (p.contains(x)) rows[static_cast<std::size_t>(x)] &= p.bits();
    return Relation::from_rows(l.ground(), l.ground(), std::move(rows));
}

CSL lat_of_relation(const Relation& r) {
    require_endorelation(r, "lat_of_relation");
    int n = r.source().size;
    std::vector<Mask> elements;
    for (Mask alpha = 0;; ++alpha) {
        Mask image = 0;
        for (int a : mask_atoms(alpha)) image |= r.row(a);
        if ((image & ~alpha) == 0) elements.push_back(alpha);
        if (alpha == full_mask(n)) break;
    }
    CSL l;
    l.ground_ = r.source();
    l.elements_ = masks_to_projs(n, std::move(elements));
    return l;
}

JoinIrreducibles join_irreducibles(const CSL& l) {
    JoinIrreducibles ji;
    for (const Proj& e : l.elements()) {
        if (e.is_empty()) continue;
        Mask below_union = 0;
        for (const Proj& f : l.elements())
            if (f.bits() != e.bits() && (f.bits() & ~e.bits()) == 0) below_union |= f.bits();
        if (below_union != e.bits()) ji.elements.push_back(e);
    }
    if (ji.elements.size() > static_cast<std::size_t>(kMaxAtoms))
        throw Error("join-irreducible count exceeds the atom bound");  // impossible for set lattices
    ji.below.resize(ji.elements.size(), 0);
    for (std::size_t i = 0; i < ji.elements.size(); ++i)
        for (std::size_t j = 0; j < ji.elements.size(); ++j)
            if ((ji.elements[j].bits() & ~ji.elements[i].bits()) == 0)
                ji.below[i] |= Mask{1} << j;
    return ji;
}

LatticeHom::LatticeHom(CSL source, CSL target, std::vector<Proj> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.size())
        throw Error("lattice hom table is not total on the source");
    for (const Proj& img : images_)
        if (!target_.contains(img))
            throw Error("lattice hom image " + img.to_string() + " is not a target element");
}

LatticeHom LatticeHom::identity(const CSL& l) {
    return LatticeHom(l, l, l.elements());
}

const Proj& LatticeHom::apply(const Proj& p) const {
    int i = source_.index_of(p);
    if (i < 0) throw Error("lattice hom applied to " + p.to_string() + " outside its source");
    return images_[static_cast<std::size_t>(i)];
}

HomReport hom_validate(const LatticeHom& h) {
    HomReport report;
    auto fail = [&](std::string law, std::string witness) {
        report.valid = false;
        report.violations.push_back({std::move(law), std::move(witness)});
    };
    const CSL& src = h.source();
    const Proj zero = Proj::empty(src.ground().size);
    const Proj full = Proj::full(src.ground().size);
    if (!h.apply(zero).is_empty()) fail("zero", "h(0) = " + h.apply(zero).to_string());
    if (!h.apply(full).is_full()) fail("full", "h(I) = " + h.apply(full).to_string());
    const auto& els = src.elements();
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = i; j < els.size(); ++j) {
            const Proj& a = els[i];
            const Proj& b = els[j];
            Proj join = h.apply(a | b);
            Proj expect = h.apply(a) | h.apply(b);
            if (!(join == expect))
                fail("union", "h(" + a.to_string() + " u " + b.to_string() + ") = " +
                                  join.to_string() + ", expected " + expect.to_string());
            Proj meet = h.apply(a & b);
            expect = h.apply(a) & h.apply(b);
            if (!(meet == expect))
                fail("intersection", "h(" + a.to_string() + " n " + b.to_string() + ") = " +
                                         meet.to_string() + ", expected " + expect.to_string());
        }
    return report;
}

std::optional<LatticeHom> inverse_of(const LatticeHom& h) {
    if (h.source().size() != h.target().size()) return std::nullopt;
    std::vector<Proj> inverse_images(h.target().size(), Proj());
    std::vector<bool> hit(h.target().size(), false);
    const auto& src = h.source().elements();
    for (std::size_t i = 0; i < src.size(); ++i) {
        int t = h.target().index_of(h.images()[i]);
        if (t < 0 || hit[static_cast<std::size_t>(t)]) return std::nullopt;
        hit[static_cast<std::size_t>(t)] = true;
        inverse_images[static_cast<std::size_t>(t)] = src[i];
    }
    return LatticeHom(h.target(), h.source(), std::move(inverse_images));
}

namespace {

// Backtracking over order isomorphisms of join-irreducible posets; each full
// assignment extends to a lattice map by sending α to the union of the images
// of the join-irreducibles below α (these lattices are distributive, so the
// extension of a poset isomorphism is a lattice isomorphism; validated).
struct IsoSearch {
    const CSL& l1;
    const CSL& l2;
    const JoinIrreducibles j1;
    const JoinIrreducibles j2;
    SearchBudget& budget;
    const std::function<bool(const Proj&, const Proj&)>* ji_filter;
    const std::function<bool(const LatticeHom&)>& visit;
    std::vector<int> image;  // image[i] = index into j2, -1 unassigned
    Mask used = 0;

    IsoSearch(const CSL& a, const CSL& b, SearchBudget& bud,
              const std::function<bool(const Proj&, const Proj&)>* filter,
              const std::function<bool(const LatticeHom&)>& v)
        : l1(a), l2(b), j1(join_irreducibles(a)), j2(join_irreducibles(b)), budget(bud),
          ji_filter(filter), visit(v) {
        image.assign(j1.elements.size(), -1);
    }

    bool compatible(std::size_t i, int t) const {
        for (std::size_t s = 0; s < image.size(); ++s) {
            if (image[s] < 0) continue;
            bool a1 = j1.leq(static_cast<int>(s), static_cast<int>(i));
            bool a2 = j2.leq(image[s], t);
            if (a1 != a2) return false;
            bool b1 = j1.leq(static_cast<int>(i), static_cast<int>(s));
            bool b2 = j2.leq(t, image[s]);
            if (b1 != b2) return false;
        }
        return true;
    }

    bool emit() {
        std::vector<Proj> images;
        images.reserve(l1.size());
        for (const Proj& alpha : l1.elements()) {
            Mask out = 0;
            for (std::size_t j = 0; j < j1.elements.size(); ++j)
                if ((j1.elements[j].bits() & ~alpha.bits()) == 0)
                    out |= j2.elements[static_cast<std::size_t>(image[j])].bits();
            images.emplace_back(l2.ground().size, out);
        }
        for (const Proj& img : images)
            if (!l2.contains(img)) return false;
        LatticeHom h(l1, l2, std::move(images));
        if (!hom_validate(h).valid) return false;
        auto inv = inverse_of(h);
        if (!inv || !hom_validate(*inv).valid) return false;
        return visit(h);
    }

    bool run(std::size_t i) {
        if (i == image.size()) return emit();
        for (int t = 0; t < static_cast<int>(j2.elements.size()); ++t) {
            if (mask_contains(used, t)) continue;
            budget.spend("lattice iso search");
            if (ji_filter && !(*ji_filter)(j1.elements[i], j2.elements[static_cast<std::size_t>(t)]))
                continue;
            if (!compatible(i, t)) continue;
            image[i] = t;
            used |= Mask{1} << t;
            if (run(i + 1)) return true;
            image[i] = -1;
            used &= ~(Mask{1} << t);
        }
        return false;
    }
};

}  // namespace

bool for_each_lattice_iso(const CSL& l1, const CSL& l2, SearchBudget& budget,
                          const std::function<bool(const LatticeHom&)>& visit) {
    return for_each_lattice_iso(l1, l2, budget, nullptr, visit);
}

bool for_each_lattice_iso(const CSL& l1, const CSL& l2, SearchBudget& budget,
                          const std::function<bool(const Proj&, const Proj&)>& ji_filter,
                          const std::function<bool(const LatticeHom&)>& visit) {
    if (l1.size() != l2.size()) return false;
    if (l1.size() == 0) return false;
    IsoSearch search(l1, l2, budget, ji_filter ? &ji_filter : nullptr, visit);
    if (search.j1.elements.size() != search.j2.elements.size()) return false;
    return search.run(0);
}

std::optional<LatticeHom> lattice_iso_search(const CSL& l1, const CSL& l2,
                                             const Limits& limits) {
    std::optional<LatticeHom> found;
    SearchBudget budget(limits.node_cap);
    for_each_lattice_iso(l1, l2, budget, [&](const LatticeHom& h) {
        found = h;
        return true;
    });
    return found;
}

}  // namespace bilat
