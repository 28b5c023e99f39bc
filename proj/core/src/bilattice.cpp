#include <bilat/bilattice.hpp>

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace bilat {

namespace {

using MaskPair = std::pair<Mask, Mask>;

struct MaskPairHash {
    std::size_t operator()(const MaskPair& p) const {
        std::uint64_t h = p.first * 0x9e3779b97f4a7c15ULL;
        h ^= p.second + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

std::vector<Bilattice::Pair> sorted_pairs(int nl, int nr, const std::vector<MaskPair>& raw) {
    std::vector<MaskPair> v = raw;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<Bilattice::Pair> out;
    out.reserve(v.size());
    for (auto [p, q] : v) out.emplace_back(Proj(nl, p), Proj(nr, q));
    return out;
}

}  // namespace

Bilattice Bilattice::from_pairs(GroundSpace left, GroundSpace right, std::vector<Pair> pairs,
                                bool validate) {
    Bilattice s;
    s.left_ = std::move(left);
    s.right_ = std::move(right);
    std::vector<MaskPair> raw;
    raw.reserve(pairs.size());
    for (const Pair& pq : pairs) {
        if (pq.first.ground_size() != s.left_.size || pq.second.ground_size() != s.right_.size)
            throw GroundMismatch("bilattice pair on different ground spaces");
        raw.emplace_back(pq.first.bits(), pq.second.bits());
    }
    s.pairs_ = sorted_pairs(s.left_.size, s.right_.size, raw);
    if (validate) {
        Mask fl = full_mask(s.left_.size);
        Mask fr = full_mask(s.right_.size);
        auto has = [&](Mask p, Mask q) {
            return s.contains(Proj(s.left_.size, p), Proj(s.right_.size, q));
        };
        if (!has(0, 0) || !has(fl, 0) || !has(0, fr))
            throw Error("bilattice must contain the three base pairs");
        for (const Pair& a : s.pairs_)
            for (const Pair& b : s.pairs_) {
                if (!has(a.first.bits() & b.first.bits(), a.second.bits() | b.second.bits()) ||
                    !has(a.first.bits() | b.first.bits(), a.second.bits() & b.second.bits()))
                    throw Error("family is not closed under the bilattice operations: witness (" +
                                a.first.to_string() + "," + a.second.to_string() + "), (" +
                                b.first.to_string() + "," + b.second.to_string() + ")");
            }
    }
    return s;
}

bool Bilattice::contains(const Proj& p, const Proj& q) const {
    Pair key{p, q};
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), key);
    return it != pairs_.end() && *it == key;
}

Bilattice bilattice_generate(const GroundSpace& gl, const GroundSpace& gr,
                             std::span<const Bilattice::Pair> generators,
                             const Limits& limits) {
    std::unordered_set<MaskPair, MaskPairHash> fam;
    fam.insert({0, 0});
    fam.insert({full_mask(gl.size), 0});
    fam.insert({0, full_mask(gr.size)});
    std::vector<MaskPair> frontier(fam.begin(), fam.end());
    for (const auto& g : generators) {
        if (g.first.ground_size() != gl.size || g.second.ground_size() != gr.size)
            throw GroundMismatch("bilattice_generate: generator on different ground spaces");
        MaskPair mp{g.first.bits(), g.second.bits()};
        if (fam.insert(mp).second) frontier.push_back(mp);
    }
    while (!frontier.empty()) {
        std::vector<MaskPair> next;
        std::vector<MaskPair> all(fam.begin(), fam.end());
        for (const MaskPair& x : frontier)
            for (const MaskPair& y : all) {
                MaskPair meetjoin{x.first & y.first, x.second | y.second};
                MaskPair joinmeet{x.first | y.first, x.second & y.second};
                for (const MaskPair& z : {meetjoin, joinmeet}) {
                    if (fam.insert(z).second) {
                        next.push_back(z);
                        if (fam.size() > limits.element_cap)
                            throw SizeLimitExceeded(
                                "bilattice_generate: closure exceeds the element cap of " +
                                std::to_string(limits.element_cap));
                    }
                }
            }
        frontier = std::move(next);
    }
    std::vector<Bilattice::Pair> pairs;
    pairs.reserve(fam.size());
    for (auto [p, q] : fam) pairs.emplace_back(Proj(gl.size, p), Proj(gr.size, q));
    return Bilattice::from_pairs(gl, gr, std::move(pairs), false);
}

Bilattice bilattice_generate(const GroundSpace& gl, const GroundSpace& gr,
                             std::initializer_list<Bilattice::Pair> generators,
                             const Limits& limits) {
    std::vector<Bilattice::Pair> v(generators);
    return bilattice_generate(gl, gr, std::span<const Bilattice::Pair>(v), limits);
}

Relation m_of(const Bilattice& s) {
    int nl = s.left().size;
    int nr = s.right().size;
    std::vector<Mask> forbidden(static_cast<std::size_t>(nl), 0);
    for (const auto& [p, q] : s.pairs())
        for (int a : p.atoms()) forbidden[static_cast<std::size_t>(a)] |= q.bits();
    Mask full = full_mask(nr);
    std::vector<Mask> rows(static_cast<std::size_t>(nl));
    for (int a = 0; a < nl; ++a) rows[static_cast<std::size_t>(a)] = full & ~forbidden[static_cast<std::size_t>(a)];
    return Relation::from_rows(s.left(), s.right(), std::move(rows));
}

Bilattice bil_of(const Relation& e, const Limits& limits) {
    int nl = e.source().size;
    int nr = e.target().size;
    std::vector<Bilattice::Pair> pairs;
    Mask full_l = full_mask(nl);
    Mask full_r = full_mask(nr);
    for (Mask alpha = 0;; ++alpha) {
        Mask image = 0;
        for (int a : mask_atoms(alpha)) image |= e.row(a);
        Mask allowed = full_r & ~image;
        // every β ⊆ allowed annihilates E together with α
        Mask beta = allowed;
        while (true) {
            pairs.emplace_back(Proj(nl, alpha), Proj(nr, beta));
            if (pairs.size() > limits.element_cap)
                throw SizeLimitExceeded("bil_of: pair count exceeds the element cap of " +
                                        std::to_string(limits.element_cap));
            if (beta == 0) break;
            beta = (beta - 1) & allowed;
        }
        if (alpha == full_l) break;
    }
    return Bilattice::from_pairs(e.source(), e.target(), std::move(pairs), false);
}

Slices slices(const Bilattice& s) {
    std::vector<Proj> left, right;
    for (const auto& [p, q] : s.pairs()) {
        left.push_back(p);
        right.push_back(q);
    }
    return Slices{CSL::from_elements(s.left(), std::move(left)),
                  CSL::from_elements(s.right(), std::move(right))};
}

Bilattice essential_bilattice(const Relation& e, const Limits& limits) {
    if (!is_nondegenerate(e))
        throw DegenerateRelation("essential_bilattice requires a nondegenerate relation");
    SPhi sp = s_phi(e, limits);
    CSL l1 = csl_generate(e.source(), std::span<const Proj>(sp.s1), limits);
    CSL l2 = csl_generate(e.target(), std::span<const Proj>(sp.s2), limits);
    std::vector<Bilattice::Pair> pairs;
    for (const Proj& p : l1.elements()) {
        Mask image = map_of(e, p).bits();
        for (const Proj& qc : l2.elements()) {
            Mask q = full_mask(e.target().size) & ~qc.bits();
            if ((image & q) == 0) {
                pairs.emplace_back(p, Proj(e.target().size, q));
                if (pairs.size() > limits.element_cap)
                    throw SizeLimitExceeded("essential_bilattice: pair count exceeds the cap");
            }
        }
    }
    return Bilattice::from_pairs(e.source(), e.target(), std::move(pairs), false);
}

Bilattice essential_of_csl_algebra(const CSL& l) {
    std::vector<Bilattice::Pair> pairs;
    int n = l.ground().size;
    for (const Proj& p : l.elements())
        for (const Proj& qc : l.elements()) {
            Mask q = full_mask(n) & ~qc.bits();
            if ((p.bits() & q) == 0) pairs.emplace_back(p, Proj(n, q));
        }
    return Bilattice::from_pairs(l.ground(), l.ground(), std::move(pairs), false);
}

BilatticeHom::BilatticeHom(Bilattice source, Bilattice target, LatticeHom phi, LatticeHom psi)
    : source_(std::move(source)), target_(std::move(target)), phi_(std::move(phi)),
      psi_(std::move(psi)) {
    Slices ss = slices(source_);
    Slices ts = slices(target_);
    if (!(phi_.source() == ss.left) || !(psi_.source() == ss.right))
        throw Error("bilattice hom components are not defined on the source slices");
    if (!(phi_.target() == ts.left) || !(psi_.target() == ts.right))
        throw Error("bilattice hom components do not land in the target slices");
}

BilatticeHom BilatticeHom::identity(const Bilattice& s) {
    Slices ss = slices(s);
    return BilatticeHom(s, s, LatticeHom::identity(ss.left), LatticeHom::identity(ss.right));
}

HomReport hom_check(const BilatticeHom& h) {
    HomReport report = hom_validate(h.phi());
    HomReport right = hom_validate(h.psi());
    report.valid = report.valid && right.valid;
    report.violations.insert(report.violations.end(), right.violations.begin(),
                             right.violations.end());
    for (const auto& [p, q] : h.source().pairs()) {
        const Proj& ip = h.phi().apply(p);
        const Proj& iq = h.psi().apply(q);
        if (!h.target().contains(ip, iq)) {
            report.valid = false;
            report.violations.push_back(
                {"compatibility", "(" + p.to_string() + "," + q.to_string() + ") maps to (" +
                                      ip.to_string() + "," + iq.to_string() +
                                      ") outside the target"});
        }
    }
    return report;
}

bool is_onto(const BilatticeHom& h) {
    std::unordered_set<MaskPair, MaskPairHash> image;
    for (const auto& [p, q] : h.source().pairs())
        image.insert({h.phi().apply(p).bits(), h.psi().apply(q).bits()});
    if (image.size() != h.target().size()) return false;
    for (const auto& [p, q] : h.target().pairs())
        if (!image.count({p.bits(), q.bits()})) return false;
    return true;
}

std::optional<BilatticeHom> inverse_of(const BilatticeHom& h) {
    auto phi_inv = inverse_of(h.phi());
    auto psi_inv = inverse_of(h.psi());
    if (!phi_inv || !psi_inv) return std::nullopt;
    return BilatticeHom(h.target(), h.source(), std::move(*phi_inv), std::move(*psi_inv));
}

namespace {

// max_left[i] = union of all P paired with the i-th right-slice element.
// Together with downward closure this decides membership: (P,Q) ∈ S iff
// P ∈ S_l, Q ∈ S_r and P ⊆ max_left(Q).
std::vector<Mask> max_left_table(const Bilattice& s, const CSL& right_slice) {
    std::vector<Mask> table(right_slice.size(), 0);
    for (const auto& [p, q] : s.pairs()) {
        int i = right_slice.index_of(q);
        table[static_cast<std::size_t>(i)] |= p.bits();
    }
    return table;
}

}  // namespace

std::optional<BilatticeHom> iso_search(const Bilattice& s1, const Bilattice& s2,
                                       const Limits& limits) {
    if (s1.size() != s2.size()) return std::nullopt;
    Slices a = slices(s1);
    Slices b = slices(s2);
    if (a.left.size() != b.left.size() || a.right.size() != b.right.size()) return std::nullopt;

    const std::vector<Mask> max1 = max_left_table(s1, a.right);
    const std::vector<Mask> max2 = max_left_table(s2, b.right);
    std::unordered_set<Mask> max2_values(max2.begin(), max2.end());

    std::optional<BilatticeHom> found;
    SearchBudget budget(limits.node_cap);

    for_each_lattice_iso(a.left, b.left, budget, [&](const LatticeHom& phi) {
        // Image of every per-Q maximal left element must be realized in s2.
        std::vector<Mask> want(a.right.size());
        for (std::size_t i = 0; i < max1.size(); ++i) {
            Mask img = phi.apply(Proj(a.left.ground().size, max1[i])).bits();
            if (!max2_values.count(img)) return false;
            want[i] = img;
        }
        // A pair of slice isos is a bilattice iso (both directions) iff
        // max2(psi(Q)) = phi(max1(Q)) for every right-slice element Q.
        auto ji_filter = [&](const Proj& src_ji, const Proj& dst_ji) {
            int i = a.right.index_of(src_ji);
            int j = b.right.index_of(dst_ji);
            return max2[static_cast<std::size_t>(j)] == want[static_cast<std::size_t>(i)];
        };
        return for_each_lattice_iso(
            a.right, b.right, budget, ji_filter, [&](const LatticeHom& psi) {
                for (std::size_t i = 0; i < max1.size(); ++i) {
                    const Proj& q = a.right.elements()[i];
                    int j = b.right.index_of(psi.apply(q));
                    if (max2[static_cast<std::size_t>(j)] != want[i]) return false;
                }
                found = BilatticeHom(s1, s2, phi, psi);
                return true;
            });
    });
    return found;
}

}  // namespace bilat
