#ifndef BILAT_BILATTICE_HPP
#define BILAT_BILATTICE_HPP

#include <bilat/lattice.hpp>

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bilat {

/// A family of projection pairs containing (0,0), (I,0), (0,I) and closed
/// under (P₁∩P₂, Q₁∪Q₂) and (P₁∪P₂, Q₁∩Q₂). Finite closure is the exact
/// analog of strong closure here. Pairs are canonically ordered.
class Bilattice {
public:
    using Pair = std::pair<Proj, Proj>;

    Bilattice() = default;

    /// validate=true checks the base pairs and both closure laws (quadratic);
    /// internal constructions that are closed by theory may skip it.
    static Bilattice from_pairs(GroundSpace left, GroundSpace right, std::vector<Pair> pairs,
                                bool validate = true);

    const GroundSpace& left() const { return left_; }
    const GroundSpace& right() const { return right_; }
    const std::vector<Pair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool contains(const Proj& p, const Proj& q) const;
    bool contains(const Pair& pq) const { return contains(pq.first, pq.second); }

    friend bool operator==(const Bilattice& a, const Bilattice& b) {
        return a.left_.size == b.left_.size && a.right_.size == b.right_.size &&
               a.pairs_ == b.pairs_;
    }

private:
    GroundSpace left_;
    GroundSpace right_;
    std::vector<Pair> pairs_;  // sorted by (P bits, Q bits)
};

/// Smallest bilattice containing the generators and the three base pairs.
Bilattice bilattice_generate(const GroundSpace& gl, const GroundSpace& gr,
                             std::span<const Bilattice::Pair> generators,
                             const Limits& limits = {});
Bilattice bilattice_generate(const GroundSpace& gl, const GroundSpace& gr,
                             std::initializer_list<Bilattice::Pair> generators,
                             const Limits& limits = {});

/// Support of M(S) = {T : QTP = 0 for all (P,Q) in S}: the complement of the
/// union of the rectangles P×Q.
Relation m_of(const Bilattice& s);

/// All pairs annihilating the pattern: {(α,β) : (α×β) ∩ E = ∅}. The maximal
/// bilattice with m_of equal to E.
Bilattice bil_of(const Relation& e, const Limits& limits = {});

/// Left and right coordinate families; each is a valid CSL.
struct Slices {
    CSL left;
    CSL right;
};
Slices slices(const Bilattice& s);

/// The smallest bilattice S with m_of(S) = e: with (S1,S2) the Erdős families
/// of e and L1, L2 the CSLs they generate, the pairs (P,Q) with P in L1,
/// complement(Q) in L2 and map(e,P) ∩ Q = ∅. Requires a nondegenerate e.
Bilattice essential_bilattice(const Relation& e, const Limits& limits = {});

/// Essential bilattice of a CSL algebra: {(P,Q) : P ∈ L, complement(Q) ∈ L,
/// P∩Q = ∅}. Equals essential_bilattice(alg_of_lattice(L)).
Bilattice essential_of_csl_algebra(const CSL& l);

/// A pair of slice homomorphisms mapping pairs into the target bilattice.
class BilatticeHom {
public:
    BilatticeHom() = default;
    /// phi must map the left slice of source into the left slice of target,
    /// psi the right slices; checked structurally here, laws by hom_check.
    BilatticeHom(Bilattice source, Bilattice target, LatticeHom phi, LatticeHom psi);

    static BilatticeHom identity(const Bilattice& s);

    const Bilattice& source() const { return source_; }
    const Bilattice& target() const { return target_; }
    const LatticeHom& phi() const { return phi_; }
    const LatticeHom& psi() const { return psi_; }

private:
    Bilattice source_;
    Bilattice target_;
    LatticeHom phi_;
    LatticeHom psi_;
};

/// Valid iff phi and psi pass hom_validate and (phi(P),psi(Q)) lands in the
/// target for every source pair; the report lists violations.
HomReport hom_check(const BilatticeHom& h);

/// True iff the image set {(phi(P),psi(Q))} is exactly the target pair set.
/// (Continuity in the source of this notion is vacuous on finite lattices.)
bool is_onto(const BilatticeHom& h);

/// Componentwise inverse of a bijective hom; empty if either side fails.
std::optional<BilatticeHom> inverse_of(const BilatticeHom& h);

/// First bilattice isomorphism (bijective slice homs, inverse also a hom,
/// pairs carried onto pairs in both directions) in canonical search order.
/// Joint backtracking over slice lattice isomorphisms pruned by pair
/// compatibility.
std::optional<BilatticeHom> iso_search(const Bilattice& s1, const Bilattice& s2,
                                       const Limits& limits = {});

}  // namespace bilat

#endif
