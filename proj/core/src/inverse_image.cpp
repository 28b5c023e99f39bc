#include <bilat/inverse_image.hpp>

#include <sstream>

namespace bilat {

PointMap::PointMap(GroundSpace source, GroundSpace target, std::vector<int> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
    if (table_.size() != static_cast<std::size_t>(source_.size))
        throw Error("point map table is not total on its source atoms");
    for (int v : table_)
        if (v < 0 || v >= target_.size) throw Error("point map value outside the target atoms");
}

PointMap PointMap::identity(const GroundSpace& g) {
    std::vector<int> table(static_cast<std::size_t>(g.size));
    for (int i = 0; i < g.size; ++i) table[static_cast<std::size_t>(i)] = i;
    return PointMap(g, g, std::move(table));
}

Proj PointMap::preimage(const Proj& p) const {
    if (p.ground_size() != target_.size)
        throw GroundMismatch("preimage of a projection on a different ground space");
    Mask m = 0;
    for (int a = 0; a < source_.size; ++a)
        if (p.contains(table_[static_cast<std::size_t>(a)])) m |= Mask{1} << a;
    return Proj(source_.size, m);
}

bool PointMap::surjective() const {
    Mask seen = 0;
    for (int v : table_) seen |= Mask{1} << v;
    return seen == full_mask(target_.size);
}

Relation RectanglePresentation::complement_of_union() const {
    std::vector<Mask> forbidden(static_cast<std::size_t>(left.size), 0);
    for (const auto& [p, q] : rectangles)
        for (int a : p.atoms()) forbidden[static_cast<std::size_t>(a)] |= q.bits();
    std::vector<Mask> rows(static_cast<std::size_t>(left.size));
    Mask full = full_mask(right.size);
    for (int a = 0; a < left.size; ++a)
        rows[static_cast<std::size_t>(a)] = full & ~forbidden[static_cast<std::size_t>(a)];
    return Relation::from_rows(left, right, std::move(rows));
}

Relation pullback(const PointMap& theta, const PointMap& rho, const Relation& e1) {
    if (theta.target().size != e1.source().size)
        throw GroundMismatch("pullback: theta does not land in the relation's source space");
    if (rho.target().size != e1.target().size)
        throw GroundMismatch("pullback: rho does not land in the relation's target space");
    std::vector<Mask> rows(static_cast<std::size_t>(theta.source().size), 0);
    for (int x = 0; x < theta.source().size; ++x) {
        Mask row1 = e1.row(theta.apply(x));
        Mask out = 0;
        for (int y = 0; y < rho.source().size; ++y)
            if (mask_contains(row1, rho.apply(y))) out |= Mask{1} << y;
        rows[static_cast<std::size_t>(x)] = out;
    }
    return Relation::from_rows(theta.source(), rho.source(), std::move(rows));
}

RectanglePresentation rectangle_presentation(const Relation& e) {
    RectanglePresentation p{e.source(), e.target(), {}};
    Mask full = full_mask(e.target().size);
    for (int x = 0; x < e.source().size; ++x) {
        Mask missing = full & ~e.row(x);
        if (missing != 0)
            p.rectangles.emplace_back(Proj::of(e.source().size, {x}),
                                      Proj(e.target().size, missing));
    }
    return p;
}

Bilattice generated_bilattice(const RectanglePresentation& p, const Limits& limits) {
    for (const auto& [a, b] : p.rectangles) {
        if (a.ground_size() != p.left.size || b.ground_size() != p.right.size)
            throw GroundMismatch("rectangle on inconsistent ground spaces");
    }
    return bilattice_generate(p.left, p.right,
                              std::span<const Bilattice::Pair>(p.rectangles), limits);
}

BilatticeHom hom_from_point_maps(const PointMap& theta, const PointMap& rho,
                                 const Bilattice& s1, const Limits& limits) {
    if (theta.target().size != s1.left().size)
        throw GroundMismatch("hom_from_point_maps: theta does not land in the left ground");
    if (rho.target().size != s1.right().size)
        throw GroundMismatch("hom_from_point_maps: rho does not land in the right ground");
    std::vector<Bilattice::Pair> image;
    image.reserve(s1.size());
    for (const auto& [p, q] : s1.pairs())
        image.emplace_back(theta.preimage(p), rho.preimage(q));
    Bilattice target =
        bilattice_generate(theta.source(), rho.source(),
                           std::span<const Bilattice::Pair>(image), limits);

    Slices src = slices(s1);
    Slices dst = slices(target);
    std::vector<Proj> phi_images;
    phi_images.reserve(src.left.size());
    for (const Proj& p : src.left.elements()) phi_images.push_back(theta.preimage(p));
    std::vector<Proj> psi_images;
    psi_images.reserve(src.right.size());
    for (const Proj& q : src.right.elements()) psi_images.push_back(rho.preimage(q));
    LatticeHom phi(src.left, dst.left, std::move(phi_images));
    LatticeHom psi(src.right, dst.right, std::move(psi_images));
    return BilatticeHom(s1, std::move(target), std::move(phi), std::move(psi));
}

CheckReport check_inverse_image(const PointMap& theta, const PointMap& rho, const Relation& e1,
                                const Limits& limits) {
    CheckReport rep;
    RectanglePresentation pres = rectangle_presentation(e1);
    rep.add("inverse-image", "presentation complements to e1",
            pres.complement_of_union() == e1);
    Bilattice s1 = generated_bilattice(pres, limits);
    rep.add("inverse-image", "generated bilattice supports e1", m_of(s1) == e1);
    BilatticeHom h = hom_from_point_maps(theta, rho, s1, limits);
    rep.add("inverse-image", "induced hom valid", hom_check(h).valid);
    rep.add("inverse-image", "induced hom onto", is_onto(h));
    Relation pulled = pullback(theta, rho, e1);
    Relation supported = m_of(h.target());
    bool same = supported == pulled;
    std::ostringstream detail;
    if (!same)
        detail << "image bilattice supports " << supported.to_string() << " but pullback is "
               << pulled.to_string();
    rep.add("inverse-image", "image bilattice supports the pullback", same, detail.str());
    return rep;
}

CheckReport check_nonzero_transfer(const PointMap& theta, const PointMap& rho,
                                   const Relation& e1) {
    CheckReport rep;
    Relation pulled = pullback(theta, rho, e1);
    auto cell = nonzero_witness(pulled);
    if (!cell) {
        rep.add("inverse-image", "nonzero transfer", true, "pullback support is zero; vacuous");
        return rep;
    }
    auto original = nonzero_witness(e1);
    std::ostringstream detail;
    detail << "pullback cell (" << cell->first << "," << cell->second << ") transfers to ("
           << theta.apply(cell->first) << "," << rho.apply(cell->second) << ")";
    rep.add("inverse-image", "nonzero transfer", original.has_value(), detail.str());
    return rep;
}

}  // namespace bilat
