#ifndef BILAT_RELATION_HPP
#define BILAT_RELATION_HPP

#include <bilat/ground.hpp>

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bilat {

/// The support relation of a reflexive masa bimodule U ⊆ B(H_A, H_B).
/// A pair (a,b) means the matrix entry in column a, row b is unconstrained;
/// absent cells are forced zero. Stored row-by-source-atom as target masks.
class Relation {
public:
    Relation() = default;
    Relation(GroundSpace source, GroundSpace target);
    Relation(GroundSpace source, GroundSpace target,
             const std::vector<std::pair<int, int>>& pairs);

    static Relation from_rows(GroundSpace source, GroundSpace target, std::vector<Mask> rows);
    static Relation diagonal(const GroundSpace& g);
    static Relation complete(GroundSpace source, GroundSpace target);

    const GroundSpace& source() const { return source_; }
    const GroundSpace& target() const { return target_; }
    Mask row(int a) const { return rows_[static_cast<std::size_t>(a)]; }
    const std::vector<Mask>& rows() const { return rows_; }
    bool contains(int a, int b) const { return mask_contains(rows_[static_cast<std::size_t>(a)], b); }

    /// Canonical sorted (a,b) list.
    std::vector<std::pair<int, int>> pairs() const;
    std::size_t pair_count() const;
    bool empty() const;

    Relation with_cell(int a, int b) const;
    Relation without_cell(int a, int b) const;
    Relation toggled_cell(int a, int b) const;

    std::string to_string() const;

    /// Structural equality on sizes and cells; labels are diagnostics only.
    friend bool operator==(const Relation& a, const Relation& b) {
        return a.source_.size == b.source_.size && a.target_.size == b.target_.size &&
               a.rows_ == b.rows_;
    }

private:
    GroundSpace source_;
    GroundSpace target_;
    std::vector<Mask> rows_;  // rows_[a] = mask of b with (a,b) present
};

/// Map U applied to a projection: the support of the image span,
/// {b : ∃a∈α, (a,b)∈E}. Sup preserving.
Proj map_of(const Relation& e, const Proj& alpha);

/// Support of the adjoint space; an involution.
Relation transpose(const Relation& e);

/// Support of the closed span of products X_k⋯X_1 where the chain lists the
/// factors in application order (first applied first). Relational composition.
Relation span_compose(std::span<const Relation> chain);
Relation span_compose(std::initializer_list<Relation> chain);

/// The two Erdős structure families of φ = Map U:
/// s2 = {φ(α) : α ⊆ A} (∪-closed), s1 = {A ∖ φ*(β) : β ⊆ B} (∩-closed),
/// both in canonical order.
struct SPhi {
    std::vector<Proj> s1;
    std::vector<Proj> s2;
};
SPhi s_phi(const Relation& e, const Limits& limits = {});

/// Rebuilds the support from the S₁ constraint patterns
/// {(a,b) : a∈P ⟹ b∈φ(P)}; equals e for every pattern bimodule.
Relation erdos_reconstruct(const Relation& e, const Limits& limits = {});

/// Reflexive hull of a pattern bimodule. Pattern spaces are their own hull:
/// membership is decided on standard basis vectors, so this returns e.
/// Contract validated against the basis-vector oracle in the harness.
Relation ref_hull(const Relation& e);

/// True iff every source atom and every target atom occurs in some cell.
bool is_nondegenerate(const Relation& e);

/// True iff r contains the diagonal and is transitive: the support pattern of
/// a unital algebra. Throws GroundMismatch unless r is an endorelation.
bool is_preorder(const Relation& r);

/// Least cell in canonical order, or empty when the support is zero. In the
/// finite model a nonzero compact / finite-rank / rank-one pattern operator
/// exists iff the support is nonempty (a single cell is a rank-one support).
std::optional<std::pair<int, int>> nonzero_witness(const Relation& e);

/// True iff every cell of a is a cell of b (same grounds required).
bool subset_of(const Relation& a, const Relation& b);

/// Cells of a that are not cells of b; counterexample payload for reports.
std::vector<std::pair<int, int>> cell_difference(const Relation& a, const Relation& b);

void require_endorelation(const Relation& r, const char* what);
void require_chain_link(const Relation& a, const Relation& b, const char* what);

}  // namespace bilat

#endif
