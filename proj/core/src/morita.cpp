#include <bilat/morita.hpp>

#include <algorithm>
#include <sstream>

namespace bilat {

namespace {

std::string cells_to_string(const std::vector<std::pair<int, int>>& cells, std::size_t cap = 8) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < cells.size() && i < cap; ++i) {
        if (i) os << ',';
        os << '(' << cells[i].first << ',' << cells[i].second << ')';
    }
    if (cells.size() > cap) os << ",...";
    os << '}';
    return os.str();
}

// Equality check with counterexample cells in both directions.
void add_equality_law(CheckReport& rep, const std::string& group, const std::string& law,
                      const Relation& got, const Relation& expected) {
    bool pass = got == expected;
    std::string detail;
    if (!pass) {
        detail = "extra cells " + cells_to_string(cell_difference(got, expected)) +
                 ", missing cells " + cells_to_string(cell_difference(expected, got));
    }
    rep.add(group, law, pass, detail);
}

void add_subset_law(CheckReport& rep, const std::string& group, const std::string& law,
                    const Relation& small, const Relation& big) {
    bool pass = subset_of(small, big);
    std::string detail;
    if (!pass) detail = "offending cells " + cells_to_string(cell_difference(small, big));
    rep.add(group, law, pass, detail);
}

void add_preorder_law(CheckReport& rep, const std::string& group, const std::string& law,
                      const Relation& r) {
    std::vector<std::pair<int, int>> bad;
    for (int a = 0; a < r.source().size; ++a)
        if (!r.contains(a, a)) bad.emplace_back(a, a);
    bool diag_ok = bad.empty();
    Relation rr = span_compose({r, r});
    auto trans_bad = cell_difference(rr, r);
    bool pass = diag_ok && trans_bad.empty();
    std::string detail;
    if (!pass) {
        if (!diag_ok) detail += "missing diagonal cells " + cells_to_string(bad);
        if (!trans_bad.empty()) {
            if (!detail.empty()) detail += "; ";
            detail += "composition escapes at " + cells_to_string(trans_bad);
        }
    }
    rep.add(group, law, pass, detail);
}

std::vector<Mask> family_masks(const std::vector<Proj>& family) {
    std::vector<Mask> m;
    m.reserve(family.size());
    for (const Proj& p : family) m.push_back(p.bits());
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

std::vector<Mask> mapped_family(const Relation& r, const std::vector<Proj>& family) {
    std::vector<Mask> m;
    m.reserve(family.size());
    for (const Proj& p : family) m.push_back(map_of(r, p).bits());
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

}  // namespace

Relation op_of_hom(const LatticeHom& theta) {
    const CSL& src = theta.source();
    int n = src.ground().size;
    int m = theta.target().ground().size;
    std::vector<Mask> rows(static_cast<std::size_t>(n), full_mask(m));
    const auto& els = src.elements();
    for (std::size_t i = 0; i < els.size(); ++i) {
        Mask image = theta.images()[i].bits();
        for (int x : els[i].atoms()) rows[static_cast<std::size_t>(x)] &= image;
    }
    return Relation::from_rows(src.ground(), theta.target().ground(), std::move(rows));
}

MoritaWitness witnesses_from_hom(const Bilattice& s1, const Bilattice& s2,
                                 const BilatticeHom& h) {
    if (!(h.source() == s1) || !(h.target() == s2))
        throw Error("witnesses_from_hom: hom does not connect the given bilattices");
    if (!hom_check(h).valid) throw Error("witnesses_from_hom requires a valid bilattice hom");

    const int nh1 = s1.left().size;
    const int nh2 = s1.right().size;
    const int nk1 = s2.left().size;
    const int nk2 = s2.right().size;

    Relation v1 = op_of_hom(h.phi());

    // w1(k,x): k in phi(P) implies x in P, over the source left slice.
    std::vector<Mask> w1_rows(static_cast<std::size_t>(nk1), full_mask(nh1));
    const auto& sl = h.phi().source().elements();
    for (std::size_t i = 0; i < sl.size(); ++i) {
        Mask image = h.phi().images()[i].bits();
        for (int k : mask_atoms(image)) w1_rows[static_cast<std::size_t>(k)] &= sl[i].bits();
    }
    Relation w1 = Relation::from_rows(s2.left(), s1.left(), std::move(w1_rows));

    // v2(y,k): k in psi(Q) implies y in Q. Column k admits exactly the
    // intersection of the Q whose image contains k.
    const auto& sr = h.psi().source().elements();
    std::vector<Mask> v2_cols(static_cast<std::size_t>(nk2), full_mask(nh2));
    for (std::size_t i = 0; i < sr.size(); ++i) {
        Mask image = h.psi().images()[i].bits();
        for (int k : mask_atoms(image)) v2_cols[static_cast<std::size_t>(k)] &= sr[i].bits();
    }
    std::vector<Mask> v2_rows(static_cast<std::size_t>(nh2), 0);
    for (int k = 0; k < nk2; ++k)
        for (int y : mask_atoms(v2_cols[static_cast<std::size_t>(k)]))
            v2_rows[static_cast<std::size_t>(y)] |= Mask{1} << k;
    Relation v2 = Relation::from_rows(s1.right(), s2.right(), std::move(v2_rows));

    // w2(k,y): y in Q implies k in psi(Q). Column y admits the intersection
    // of psi(Q) over the Q containing y.
    std::vector<Mask> w2_cols(static_cast<std::size_t>(nh2), full_mask(nk2));
    for (std::size_t i = 0; i < sr.size(); ++i) {
        Mask image = h.psi().images()[i].bits();
        for (int y : sr[i].atoms()) w2_cols[static_cast<std::size_t>(y)] &= image;
    }
    std::vector<Mask> w2_rows(static_cast<std::size_t>(nk2), 0);
    for (int y = 0; y < nh2; ++y)
        for (int k : mask_atoms(w2_cols[static_cast<std::size_t>(y)]))
            w2_rows[static_cast<std::size_t>(k)] |= Mask{1} << y;
    Relation w2 = Relation::from_rows(s2.right(), s1.right(), std::move(w2_rows));

    return MoritaWitness{std::move(v1), std::move(v2), std::move(w1), std::move(w2)};
}

static void require_witness_grounds(const Relation& e1, const Relation& e2,
                                    const MoritaWitness& w) {
    auto need = [](bool ok, const char* what) {
        if (!ok) throw GroundMismatch(std::string("morita witness: ") + what);
    };
    need(w.v1.source().size == e1.source().size && w.v1.target().size == e2.source().size,
         "v1 must map the first source space to the second");
    need(w.w1.source().size == e2.source().size && w.w1.target().size == e1.source().size,
         "w1 must map the second source space to the first");
    need(w.v2.source().size == e1.target().size && w.v2.target().size == e2.target().size,
         "v2 must map the first target space to the second");
    need(w.w2.source().size == e2.target().size && w.w2.target().size == e1.target().size,
         "w2 must map the second target space to the first");
}

CheckReport verify_morita(const Relation& e1, const Relation& e2, const MoritaWitness& w) {
    if (!is_nondegenerate(e1) || !is_nondegenerate(e2))
        throw DegenerateRelation("verify_morita requires nondegenerate bimodules");
    require_witness_grounds(e1, e2, w);

    CheckReport rep;
    add_equality_law(rep, "morita", "e1 = [w2 e2 v1]", span_compose({w.v1, e2, w.w2}), e1);
    add_equality_law(rep, "morita", "e2 = [v2 e1 w1]", span_compose({w.w1, e1, w.v2}), e2);
    add_preorder_law(rep, "morita", "[w1 v1] unital algebra", span_compose({w.v1, w.w1}));
    add_preorder_law(rep, "morita", "[v1 w1] unital algebra", span_compose({w.w1, w.v1}));
    add_preorder_law(rep, "morita", "[w2 v2] unital algebra", span_compose({w.v2, w.w2}));
    add_preorder_law(rep, "morita", "[v2 w2] unital algebra", span_compose({w.w2, w.v2}));
    return rep;
}

std::optional<MoritaDecision> decide_morita(const Relation& e1, const Relation& e2,
                                            const Limits& limits) {
    if (!is_nondegenerate(e1) || !is_nondegenerate(e2))
        throw DegenerateRelation("decide_morita requires nondegenerate bimodules");
    Bilattice s1 = essential_bilattice(e1, limits);
    Bilattice s2 = essential_bilattice(e2, limits);
    auto iso = iso_search(s1, s2, limits);
    if (!iso) return std::nullopt;
    MoritaWitness w = witnesses_from_hom(s1, s2, *iso);
    CheckReport rep = verify_morita(e1, e2, w);
    if (!rep.pass())
        throw Error("decide_morita: derived witness failed verification (internal inconsistency)");
    return MoritaDecision{std::move(*iso), std::move(w)};
}

CheckReport check_lemma_identities(const MoritaConfig& cfg) {
    CheckReport rep;
    if (!is_nondegenerate(cfg.e1) || !is_nondegenerate(cfg.e2))
        throw DegenerateRelation("check_lemma_identities requires nondegenerate bimodules");
    require_witness_grounds(cfg.e1, cfg.e2, cfg.witness);
    const MoritaWitness& w = cfg.witness;
    Bilattice s1 = essential_bilattice(cfg.e1);
    Bilattice s2 = essential_bilattice(cfg.e2);
    Slices sl1 = slices(s1);
    Slices sl2 = slices(s2);

    Relation w1v1 = span_compose({w.v1, w.w1});  // operator product W1 V1, acts on H1
    Relation v1w1 = span_compose({w.w1, w.v1});  // acts on K1
    Relation w2v2 = span_compose({w.v2, w.w2});  // acts on H2
    Relation v2w2 = span_compose({w.w2, w.v2});  // acts on K2

    CSL lat_w1v1 = lat_of_relation(w1v1);
    CSL lat_v1w1 = lat_of_relation(v1w1);
    CSL lat_w2v2 = lat_of_relation(w2v2);
    CSL lat_v2w2 = lat_of_relation(v2w2);

    // Lat exchange under the image maps of the witnesses.
    rep.add("lemmas", "chi1(Lat[w1 v1]) = Lat[v1 w1]",
            mapped_family(w.v1, lat_w1v1.elements()) == family_masks(lat_v1w1.elements()));
    rep.add("lemmas", "chi2(Lat[w2 v2]) = Lat[v2 w2]",
            mapped_family(w.v2, lat_w2v2.elements()) == family_masks(lat_v2w2.elements()));
    rep.add("lemmas", "psi1(Lat[v1 w1]) = Lat[w1 v1]",
            mapped_family(w.w1, lat_v1w1.elements()) == family_masks(lat_w1v1.elements()));
    rep.add("lemmas", "psi2(Lat[v2 w2]) = Lat[w2 v2]",
            mapped_family(w.w2, lat_v2w2.elements()) == family_masks(lat_w2v2.elements()));

    // Meet preservation of chi1 on Lat[w1 v1].
    {
        bool ok = true;
        std::string witness;
        for (const Proj& p1 : lat_w1v1.elements()) {
            for (const Proj& p2 : lat_w1v1.elements()) {
                Proj lhs = map_of(w.v1, p1) & map_of(w.v1, p2);
                Proj rhs = map_of(w.v1, p1 & p2);
                if (!(lhs == rhs)) {
                    ok = false;
                    witness = p1.to_string() + ", " + p2.to_string();
                    break;
                }
            }
            if (!ok) break;
        }
        rep.add("lemmas", "chi1 preserves meets on Lat[w1 v1]", ok, witness);
    }

    // Meet preservation on the essential slices.
    Relation w2t = transpose(w.w2);
    {
        bool ok = true;
        std::string witness;
        for (const Proj& p1 : sl1.left.elements())
            for (const Proj& p2 : sl1.left.elements()) {
                Proj lhs = map_of(w.v1, p1) & map_of(w.v1, p2);
                Proj rhs = map_of(w.v1, p1 & p2);
                if (!(lhs == rhs)) {
                    ok = false;
                    witness = p1.to_string() + ", " + p2.to_string();
                }
            }
        rep.add("lemmas", "chi1 preserves meets on the left slice", ok, witness);
        ok = true;
        witness.clear();
        for (const Proj& q1 : sl1.right.elements())
            for (const Proj& q2 : sl1.right.elements()) {
                Proj lhs = map_of(w2t, q1) & map_of(w2t, q2);
                Proj rhs = map_of(w2t, q1 & q2);
                if (!(lhs == rhs)) {
                    ok = false;
                    witness = q1.to_string() + ", " + q2.to_string();
                }
            }
        rep.add("lemmas", "psi2* preserves meets on the right slice", ok, witness);
    }

    // Slice transport: each essential bilattice is the image of the other.
    Relation v2t = transpose(w.v2);
    {
        std::vector<Bilattice::Pair> image;
        image.reserve(s1.size());
        for (const auto& [p, q] : s1.pairs())
            image.emplace_back(map_of(w.v1, p), map_of(w2t, q));
        Bilattice mapped = Bilattice::from_pairs(s2.left(), s2.right(), std::move(image), false);
        rep.add("lemmas", "(chi1 x psi2*)(S1) = S2", mapped == s2);

        std::vector<Bilattice::Pair> back;
        back.reserve(s2.size());
        for (const auto& [p, q] : s2.pairs())
            back.emplace_back(map_of(w.w1, p), map_of(v2t, q));
        Bilattice mapped_back =
            Bilattice::from_pairs(s1.left(), s1.right(), std::move(back), false);
        rep.add("lemmas", "(psi1 x chi2*)(S2) = S1", mapped_back == s1);
    }

    // Regeneration and algebra identities for an isomorphism-derived witness.
    if (cfg.hom) {
        const BilatticeHom& h = *cfg.hom;
        auto hinv = inverse_of(h);
        if (!hom_check(h).valid || !hinv) {
            rep.add("lemmas", "hom is an isomorphism", false,
                    "provided hom is not a valid invertible bilattice hom");
            return rep;
        }
        add_equality_law(rep, "lemmas", "e1 = [w2 e2 v1]",
                         span_compose({w.v1, cfg.e2, w.w2}), cfg.e1);
        add_equality_law(rep, "lemmas", "e2 = [v2 e1 w1]",
                         span_compose({w.w1, cfg.e1, w.v2}), cfg.e2);
        add_equality_law(rep, "lemmas", "[w1 v1] = alg(left slice 1)", w1v1,
                         alg_of_lattice(sl1.left));
        add_equality_law(rep, "lemmas", "[v1 w1] = alg(left slice 2)", v1w1,
                         alg_of_lattice(sl2.left));
        add_equality_law(rep, "lemmas", "[w2 v2] = alg(right slice 1)*", w2v2,
                         transpose(alg_of_lattice(sl1.right)));
        add_equality_law(rep, "lemmas", "[v2 w2] = alg(right slice 2)*", v2w2,
                         transpose(alg_of_lattice(sl2.right)));

        // Op pairing for the two slice isomorphisms.
        Relation op_phi = op_of_hom(h.phi());
        Relation op_phi_inv = op_of_hom(hinv->phi());
        add_equality_law(rep, "lemmas", "[op(phi^-1) op(phi)] = alg(left slice 1)",
                         span_compose({op_phi, op_phi_inv}), alg_of_lattice(sl1.left));
        add_equality_law(rep, "lemmas", "[op(phi) op(phi^-1)] = alg(left slice 2)",
                         span_compose({op_phi_inv, op_phi}), alg_of_lattice(sl2.left));
        Relation op_psi = op_of_hom(h.psi());
        Relation op_psi_inv = op_of_hom(hinv->psi());
        add_equality_law(rep, "lemmas", "[op(psi^-1) op(psi)] = alg(right slice 1)",
                         span_compose({op_psi, op_psi_inv}), alg_of_lattice(sl1.right));
        add_equality_law(rep, "lemmas", "[op(psi) op(psi^-1)] = alg(right slice 2)",
                         span_compose({op_psi_inv, op_psi}), alg_of_lattice(sl2.right));
    }
    return rep;
}

CheckReport check_theorem42(const Bilattice& s1, const Bilattice& s2, const BilatticeHom& h) {
    CheckReport rep;
    if (!hom_check(h).valid) {
        rep.add("theorem42", "precondition: valid hom", false, "hom_check failed");
        return rep;
    }
    if (!is_onto(h)) {
        rep.add("theorem42", "precondition: onto hom", false,
                "image does not cover the target bilattice");
        return rep;
    }
    MoritaWitness w = witnesses_from_hom(s1, s2, h);
    Relation e1 = m_of(s1);
    Relation e2 = m_of(s2);
    Slices sl1 = slices(s1);
    Slices sl2 = slices(s2);

    add_subset_law(rep, "theorem42", "e1 contains [w2 e2 v1]",
                   span_compose({w.v1, e2, w.w2}), e1);
    add_equality_law(rep, "theorem42", "e2 = [v2 e1 w1]", span_compose({w.w1, e1, w.v2}), e2);
    add_subset_law(rep, "theorem42", "[w1 v1] inside alg(left slice 1)",
                   span_compose({w.v1, w.w1}), alg_of_lattice(sl1.left));
    add_equality_law(rep, "theorem42", "[v1 w1] = alg(left slice 2)",
                     span_compose({w.w1, w.v1}), alg_of_lattice(sl2.left));
    add_subset_law(rep, "theorem42", "[w2 v2] inside alg(right slice 1)*",
                   span_compose({w.v2, w.w2}), transpose(alg_of_lattice(sl1.right)));
    add_equality_law(rep, "theorem42", "[v2 w2] = alg(right slice 2)*",
                     span_compose({w.w2, w.v2}), transpose(alg_of_lattice(sl2.right)));
    rep.add("theorem42", "nonzero transfer", e2.empty() || !e1.empty(),
            e2.empty() || !e1.empty() ? "" : "m_of(target) is nonzero but m_of(source) is zero");
    return rep;
}

namespace {

Mask doubled(Mask m, int n) { return m | (m << n); }

GroundSpace doubled_ground(const GroundSpace& g) {
    if (2 * g.size > kMaxAtoms)
        throw SizeLimitExceeded("doubling exceeds the atom representation limit");
    return GroundSpace(2 * g.size, g.label.empty() ? "" : g.label + "+" + g.label);
}

GroundSpace joined_ground(const GroundSpace& a, const GroundSpace& b) {
    if (a.size + b.size > kMaxAtoms)
        throw SizeLimitExceeded("doubling exceeds the atom representation limit");
    std::string label;
    if (!a.label.empty() || !b.label.empty()) label = a.label + "+" + b.label;
    return GroundSpace(a.size + b.size, label);
}

Relation extract_block(const Relation& m, int src_from, int src_size, int tgt_from, int tgt_size,
                       const GroundSpace& src, const GroundSpace& tgt) {
    std::vector<Mask> rows(static_cast<std::size_t>(src_size), 0);
    for (int a = 0; a < src_size; ++a)
        rows[static_cast<std::size_t>(a)] =
            (m.row(src_from + a) >> tgt_from) & full_mask(tgt_size);
    return Relation::from_rows(src, tgt, std::move(rows));
}

}  // namespace

Bilattice double_diag(const Bilattice& s, const Limits& limits) {
    GroundSpace gl = doubled_ground(s.left());
    GroundSpace gr = doubled_ground(s.right());
    std::vector<Bilattice::Pair> gens;
    gens.reserve(s.size());
    for (const auto& [p, q] : s.pairs())
        gens.emplace_back(Proj(gl.size, doubled(p.bits(), s.left().size)),
                          Proj(gr.size, doubled(q.bits(), s.right().size)));
    return bilattice_generate(gl, gr, std::span<const Bilattice::Pair>(gens), limits);
}

GraphDoubling double_graph(const Bilattice& s, const BilatticeHom& h, const Limits& limits) {
    if (!(h.source() == s)) throw Error("double_graph: hom is not defined on the given bilattice");
    if (!hom_check(h).valid) throw Error("double_graph requires a valid bilattice hom");
    const Bilattice& t = h.target();
    GroundSpace gl = joined_ground(s.left(), t.left());
    GroundSpace gr = joined_ground(s.right(), t.right());
    std::vector<Bilattice::Pair> gens;
    gens.reserve(s.size());
    for (const auto& [p, q] : s.pairs()) {
        Mask pm = p.bits() | (h.phi().apply(p).bits() << s.left().size);
        Mask qm = q.bits() | (h.psi().apply(q).bits() << s.right().size);
        gens.emplace_back(Proj(gl.size, pm), Proj(gr.size, qm));
    }
    GraphDoubling out{bilattice_generate(gl, gr, std::span<const Bilattice::Pair>(gens), limits),
                      DoubledBlocks{}};
    Relation m = m_of(out.z2);
    out.blocks.upper_left =
        extract_block(m, 0, s.left().size, 0, s.right().size, s.left(), s.right());
    out.blocks.upper_right =
        extract_block(m, s.left().size, t.left().size, 0, s.right().size, t.left(), s.right());
    out.blocks.lower_left =
        extract_block(m, 0, s.left().size, s.right().size, t.right().size, s.left(), t.right());
    out.blocks.lower_right = extract_block(m, s.left().size, t.left().size, s.right().size,
                                           t.right().size, t.left(), t.right());
    return out;
}

}  // namespace bilat
