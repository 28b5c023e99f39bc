#ifndef BILAT_MORITA_HPP
#define BILAT_MORITA_HPP

#include <bilat/bilattice.hpp>
#include <bilat/report.hpp>

#include <optional>

namespace bilat {

/// The four intertwining bimodules of a spatial Morita equivalence between
/// U1 ⊆ B(H1,H2) and U2 ⊆ B(K1,K2):
///   v1: H1 → K1,  v2: H2 → K2,  w1: K1 → H1,  w2: K2 → H2.
struct MoritaWitness {
    Relation v1;
    Relation v2;
    Relation w1;
    Relation w2;
};

/// Packaging for the lemma identity checks: the two bimodules, a witness
/// quadruple, and optionally the bilattice hom the witness was derived from.
struct MoritaConfig {
    Relation e1;
    Relation e2;
    MoritaWitness witness;
    std::optional<BilatticeHom> hom;
};

/// Support of Op(θ): cell (x,x') allowed iff x ∈ P implies x' ∈ θ(P) for
/// every source element P.
Relation op_of_hom(const LatticeHom& theta);

/// The four intertwiner patterns of a bilattice hom h = (φ,ψ): S1 → S2,
/// as universally quantified annihilation constraints over the source slices:
///   v1: x∈P ⟹ k∈φ(P)      w1: k∈φ(P) ⟹ x∈P
///   v2: k∈ψ(Q) ⟹ y∈Q      w2: y∈Q ⟹ k∈ψ(Q)
MoritaWitness witnesses_from_hom(const Bilattice& s1, const Bilattice& s2,
                                 const BilatticeHom& h);

/// Checks the defining laws of spatial Morita equivalence for (e1, e2, w):
/// the two regeneration identities e1 = [w2 e2 v1], e2 = [v2 e1 w1] (chains in
/// application order) and the four unital-algebra (preorder) conditions.
/// The report lists each law with counterexample cells.
CheckReport verify_morita(const Relation& e1, const Relation& e2, const MoritaWitness& w);

struct MoritaDecision {
    BilatticeHom hom;
    MoritaWitness witness;
};

/// Decision procedure: e1 and e2 are spatially Morita equivalent iff their
/// essential bilattices are isomorphic. On success the found isomorphism and
/// the derived witness are returned, after verify_morita has been asserted on
/// them (the procedure fails loudly on internal inconsistency).
std::optional<MoritaDecision> decide_morita(const Relation& e1, const Relation& e2,
                                            const Limits& limits = {});

/// Identity checks for a witnessed equivalence, with χi = Map(Vi),
/// ψi = Map(Wi) and starred maps through transposes:
/// the Lat exchange identities, meet preservation of χ1 and ψ2* on the
/// essential slices, the slice-transport description of each essential
/// bilattice in terms of the other, and (when a hom is present and
/// invertible) the six regeneration/algebra identities plus the Op-pairing
/// identities for both slice isomorphisms.
CheckReport check_lemma_identities(const MoritaConfig& cfg);

/// Laws satisfied by the witness patterns of an onto bilattice hom:
/// e1 ⊇ [w2 e2 v1], e2 = [v2 e1 w1], [v1 w1-chain] ⊆ Alg(S_l¹),
/// [w1 v1-chain] = Alg(S_l²), and the adjoint-side versions on the right
/// slices. Precondition failures are reported, not thrown.
CheckReport check_theorem42(const Bilattice& s1, const Bilattice& s2, const BilatticeHom& h);

/// Diagonal doubling: the bilattice {(P⊔P, Q⊔Q)} on disjoint-union grounds;
/// its support is the 2×2 block pattern with every block m_of(s).
Bilattice double_diag(const Bilattice& s, const Limits& limits = {});

/// The four blocks of a support on doubled grounds, split as
/// [[upper_left, upper_right],[lower_left, lower_right]] where rows of the
/// matrix are the target parts and columns the source parts.
struct DoubledBlocks {
    Relation upper_left;   // first source part -> first target part
    Relation upper_right;  // second source part -> first target part
    Relation lower_left;   // first source part -> second target part
    Relation lower_right;  // second source part -> second target part
};

struct GraphDoubling {
    Bilattice z2;
    DoubledBlocks blocks;
};

/// Graph doubling of a hom h on s: the bilattice {(P⊔φ(P), Q⊔ψ(Q))} together
/// with the four extracted blocks of its support. The blocks satisfy
/// upper_left = m_of(s), upper_right = the Ω1 pattern
/// {(x1,y): x1∈φ(P) ⟹ y∉Q}, lower_left = the symmetric Ω2 pattern, and,
/// when h is onto, lower_right = m_of(target).
GraphDoubling double_graph(const Bilattice& s, const BilatticeHom& h, const Limits& limits = {});

}  // namespace bilat

#endif
