#ifndef BILAT_INVERSE_IMAGE_HPP
#define BILAT_INVERSE_IMAGE_HPP

#include <bilat/bilattice.hpp>
#include <bilat/morita.hpp>

namespace bilat {

/// A total map between atom sets: the counting-measure analog of a Borel map.
/// Pushforward absolute continuity is automatic under counting measure, so it
/// is recorded here as a documented no-op rather than checked.
class PointMap {
public:
    PointMap() = default;
    PointMap(GroundSpace source, GroundSpace target, std::vector<int> table);

    static PointMap identity(const GroundSpace& g);

    const GroundSpace& source() const { return source_; }
    const GroundSpace& target() const { return target_; }
    const std::vector<int>& table() const { return table_; }
    int apply(int atom) const { return table_[static_cast<std::size_t>(atom)]; }
    Proj preimage(const Proj& p) const;
    bool surjective() const;

private:
    GroundSpace source_;
    GroundSpace target_;
    std::vector<int> table_;
};

/// A relation presented as the complement of a finite union of rectangles,
/// the finite analog of an ω-closed set.
struct RectanglePresentation {
    GroundSpace left;
    GroundSpace right;
    std::vector<std::pair<Proj, Proj>> rectangles;

    Relation complement_of_union() const;
};

/// {(x,y) : (θ(x), ρ(y)) ∈ e1}.
Relation pullback(const PointMap& theta, const PointMap& rho, const Relation& e1);

/// Canonical row-wise presentation: one rectangle ({x}, Y ∖ row(x)) per
/// source atom, empty rectangles dropped.
RectanglePresentation rectangle_presentation(const Relation& e);

/// Bilattice generated by the rectangle pairs; its support is exactly the
/// complement of the union of the rectangles.
Bilattice generated_bilattice(const RectanglePresentation& p, const Limits& limits = {});

/// The hom induced by preimages: φ(α) = θ⁻¹(α) on the left slice,
/// ψ(β) = ρ⁻¹(β) on the right; the target is the bilattice generated by the
/// image pairs. Always passes hom_check and is onto its target.
BilatticeHom hom_from_point_maps(const PointMap& theta, const PointMap& rho,
                                 const Bilattice& s1, const Limits& limits = {});

/// Structural identity behind the inverse image theorem: pushing the
/// rectangle-generated bilattice of e1 through the preimage hom yields a
/// bilattice whose support is the pullback. (The measure-theoretic synthesis
/// conclusion has no finite content; every finite pattern is synthetic.)
CheckReport check_inverse_image(const PointMap& theta, const PointMap& rho, const Relation& e1,
                                const Limits& limits = {});

/// A nonzero pattern operator supported on the pullback transfers to one
/// supported on e1: (x,y) in the pullback gives (θ(x),ρ(y)) in e1. The
/// compact / finite-rank / rank-one distinctions collapse finitely.
CheckReport check_nonzero_transfer(const PointMap& theta, const PointMap& rho,
                                   const Relation& e1);

}  // namespace bilat

#endif
