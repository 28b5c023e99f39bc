#ifndef BILAT_LATTICE_HPP
#define BILAT_LATTICE_HPP

#include <bilat/relation.hpp>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bilat {

/// A commutative subspace lattice over one atom set: a family of projections
/// containing ∅ and the full set, closed under pairwise union and
/// intersection (the exact finite form of arbitrary suprema and infima).
/// Elements are kept distinct and canonically ordered by bitset value.
class CSL {
public:
    CSL() = default;

    /// Validates closure and the two required elements.
    static CSL from_elements(GroundSpace ground, std::vector<Proj> elements);

    const GroundSpace& ground() const { return ground_; }
    const std::vector<Proj>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const Proj& p) const { return index_of(p) >= 0; }
    int index_of(const Proj& p) const;

    friend bool operator==(const CSL& a, const CSL& b) {
        return a.ground_.size == b.ground_.size && a.elements_ == b.elements_;
    }

private:
    friend CSL csl_generate(const GroundSpace&, std::span<const Proj>, const Limits&);
    friend CSL lat_of_relation(const Relation&);
    GroundSpace ground_;
    std::vector<Proj> elements_;
};

/// Smallest CSL containing the generators.
CSL csl_generate(const GroundSpace& ground, std::span<const Proj> generators,
                 const Limits& limits = {});
CSL csl_generate(const GroundSpace& ground, std::initializer_list<Proj> generators,
                 const Limits& limits = {});

/// Support of Alg(L): cell (x,y) allowed iff every lattice element containing
/// x also contains y (the specialization preorder of L).
Relation alg_of_lattice(const CSL& l);

/// Invariant subsets of an endorelation: {α : R[α] ⊆ α}. Always a valid CSL.
CSL lat_of_relation(const Relation& r);

/// Nonzero lattice elements that are not the union of two strictly smaller
/// elements, with their containment order. For these set lattices every
/// element is the union of the join-irreducibles below it, and the lattice is
/// recovered from this poset; isomorphism search runs on it.
struct JoinIrreducibles {
    std::vector<Proj> elements;  // canonical order
    /// below[i] = bitmask of indices j with elements[j] ⊆ elements[i] (includes i).
    std::vector<Mask> below;

    bool leq(int j, int i) const { return mask_contains(below[static_cast<std::size_t>(i)], j); }
};
JoinIrreducibles join_irreducibles(const CSL& l);

/// A lattice homomorphism as an explicit total table on the source elements.
class LatticeHom {
public:
    LatticeHom() = default;
    /// images[i] is the image of source.elements()[i]; each must lie in target.
    LatticeHom(CSL source, CSL target, std::vector<Proj> images);

    static LatticeHom identity(const CSL& l);

    const CSL& source() const { return source_; }
    const CSL& target() const { return target_; }
    const std::vector<Proj>& images() const { return images_; }
    const Proj& apply(const Proj& p) const;

    friend bool operator==(const LatticeHom& a, const LatticeHom& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
    }

private:
    CSL source_;
    CSL target_;
    std::vector<Proj> images_;
};

struct HomViolation {
    std::string law;
    std::string witness;
};

struct HomReport {
    bool valid = true;
    std::vector<HomViolation> violations;
};

/// Accepts iff the table preserves ∪, ∩, ∅ and full; the report lists every
/// violated law instance with witnesses.
HomReport hom_validate(const LatticeHom& h);

/// Inverse table of a bijective hom; empty if the hom is not bijective.
std::optional<LatticeHom> inverse_of(const LatticeHom& h);

/// Tracks backtracking work across one (possibly joint) search.
class SearchBudget {
public:
    explicit SearchBudget(std::size_t cap) : remaining_(cap) {}
    void spend(const char* what) {
        if (remaining_ == 0)
            throw SizeLimitExceeded(std::string(what) + ": search node cap exceeded");
        --remaining_;
    }

private:
    std::size_t remaining_;
};

/// Enumerates union/intersection-preserving bijections L1 → L2 in canonical
/// order by backtracking over order isomorphisms of the join-irreducible
/// posets. Invokes the callback for each; stops (returning true) when the
/// callback returns true.
bool for_each_lattice_iso(const CSL& l1, const CSL& l2, SearchBudget& budget,
                          const std::function<bool(const LatticeHom&)>& visit);

/// Same, with an extra admissibility predicate on join-irreducible image
/// assignments, used for joint searches that can prune candidates early.
bool for_each_lattice_iso(const CSL& l1, const CSL& l2, SearchBudget& budget,
                          const std::function<bool(const Proj&, const Proj&)>& ji_filter,
                          const std::function<bool(const LatticeHom&)>& visit);

/// First lattice isomorphism in canonical order, if any. The returned map and
/// its inverse both pass hom_validate.
std::optional<LatticeHom> lattice_iso_search(const CSL& l1, const CSL& l2,
                                             const Limits& limits = {});

}  // namespace bilat

#endif
