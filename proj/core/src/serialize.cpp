#include <bilat/serialize.hpp>

#include <fstream>
#include <sstream>

namespace bilat {

namespace {

Json proj_array(const Proj& p) {
    Json arr = Json::array();
    for (int a : p.atoms()) arr.push_back(a);
    return arr;
}

Proj proj_from_array(const Json& j, int ground_size, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": projection must be an array");
    std::vector<int> atoms;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError(std::string(what) + ": atom must be an integer");
        atoms.push_back(v.get<int>());
    }
    try {
        return Proj::of(ground_size, atoms);
    } catch (const Error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

const Json& require_field(const Json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(what) + ": missing field '" + key + "'");
    return *it;
}

}  // namespace

Json to_json(const GroundSpace& g) {
    Json j;
    j["size"] = g.size;
    if (!g.label.empty()) j["label"] = g.label;
    return j;
}

GroundSpace ground_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("ground space must be an object");
    const Json& size = require_field(j, "size", "ground space");
    if (!size.is_number_integer()) throw ParseError("ground space size must be an integer");
    std::string label;
    if (j.contains("label")) label = j.at("label").get<std::string>();
    try {
        return GroundSpace(size.get<int>(), std::move(label));
    } catch (const Error& e) {
        throw ParseError(std::string("ground space: ") + e.what());
    }
}

Json to_json(const Proj& p) { return proj_array(p); }

Json to_json(const Relation& r) {
    Json j;
    j["source"] = to_json(r.source());
    j["target"] = to_json(r.target());
    Json pairs = Json::array();
    for (auto [a, b] : r.pairs()) pairs.push_back(Json::array({a, b}));
    j["pairs"] = pairs;
    return j;
}

Relation relation_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("relation must be an object");
    GroundSpace src = ground_from_json(require_field(j, "source", "relation"));
    GroundSpace tgt = ground_from_json(require_field(j, "target", "relation"));
    const Json& pairs = require_field(j, "pairs", "relation");
    if (!pairs.is_array()) throw ParseError("relation pairs must be an array");
    std::vector<std::pair<int, int>> cells;
    for (const auto& cell : pairs) {
        if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() ||
            !cell[1].is_number_integer())
            throw ParseError("relation cell must be a two-integer array");
        cells.emplace_back(cell[0].get<int>(), cell[1].get<int>());
    }
    try {
        return Relation(std::move(src), std::move(tgt), cells);
    } catch (const Error& e) {
        throw ParseError(std::string("relation: ") + e.what());
    }
}

Json to_json(const CSL& l) {
    Json j;
    j["ground"] = to_json(l.ground());
    Json elements = Json::array();
    for (const Proj& p : l.elements()) elements.push_back(proj_array(p));
    j["elements"] = elements;
    return j;
}

CSL csl_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("csl must be an object");
    GroundSpace g = ground_from_json(require_field(j, "ground", "csl"));
    const Json& elements = require_field(j, "elements", "csl");
    if (!elements.is_array()) throw ParseError("csl elements must be an array");
    std::vector<Proj> projs;
    for (const auto& e : elements) projs.push_back(proj_from_array(e, g.size, "csl element"));
    try {
        return CSL::from_elements(std::move(g), std::move(projs));
    } catch (const Error& e) {
        throw ParseError(std::string("csl: ") + e.what());
    }
}

Json to_json(const Bilattice& s) {
    Json j;
    j["left"] = to_json(s.left());
    j["right"] = to_json(s.right());
    Json pairs = Json::array();
    for (const auto& [p, q] : s.pairs())
        pairs.push_back(Json::array({proj_array(p), proj_array(q)}));
    j["pairs"] = pairs;
    return j;
}

Bilattice bilattice_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("bilattice must be an object");
    GroundSpace left = ground_from_json(require_field(j, "left", "bilattice"));
    GroundSpace right = ground_from_json(require_field(j, "right", "bilattice"));
    const Json& pairs = require_field(j, "pairs", "bilattice");
    if (!pairs.is_array()) throw ParseError("bilattice pairs must be an array");
    std::vector<Bilattice::Pair> out;
    for (const auto& pq : pairs) {
        if (!pq.is_array() || pq.size() != 2)
            throw ParseError("bilattice pair must be a two-element array");
        out.emplace_back(proj_from_array(pq[0], left.size, "bilattice pair"),
                         proj_from_array(pq[1], right.size, "bilattice pair"));
    }
    try {
        return Bilattice::from_pairs(std::move(left), std::move(right), std::move(out), true);
    } catch (const Error& e) {
        throw ParseError(std::string("bilattice: ") + e.what());
    }
}

Json to_json(const LatticeHom& h) {
    Json j;
    j["source"] = to_json(h.source());
    j["target"] = to_json(h.target());
    Json images = Json::array();
    for (const Proj& p : h.images()) images.push_back(proj_array(p));
    j["images"] = images;
    return j;
}

LatticeHom lattice_hom_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("lattice hom must be an object");
    CSL src = csl_from_json(require_field(j, "source", "lattice hom"));
    CSL tgt = csl_from_json(require_field(j, "target", "lattice hom"));
    const Json& images = require_field(j, "images", "lattice hom");
    if (!images.is_array()) throw ParseError("lattice hom images must be an array");
    std::vector<Proj> out;
    for (const auto& img : images)
        out.push_back(proj_from_array(img, tgt.ground().size, "lattice hom image"));
    try {
        return LatticeHom(std::move(src), std::move(tgt), std::move(out));
    } catch (const Error& e) {
        throw ParseError(std::string("lattice hom: ") + e.what());
    }
}

Json to_json(const BilatticeHom& h) {
    Json j;
    j["source"] = to_json(h.source());
    j["target"] = to_json(h.target());
    Json phi = Json::array();
    for (const Proj& p : h.phi().images()) phi.push_back(proj_array(p));
    Json psi = Json::array();
    for (const Proj& p : h.psi().images()) psi.push_back(proj_array(p));
    j["phi"] = phi;
    j["psi"] = psi;
    return j;
}

BilatticeHom bilattice_hom_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("bilattice hom must be an object");
    Bilattice src = bilattice_from_json(require_field(j, "source", "bilattice hom"));
    Bilattice tgt = bilattice_from_json(require_field(j, "target", "bilattice hom"));
    Slices ss = slices(src);
    Slices ts = slices(tgt);
    const Json& phi_images = require_field(j, "phi", "bilattice hom");
    const Json& psi_images = require_field(j, "psi", "bilattice hom");
    if (!phi_images.is_array() || !psi_images.is_array())
        throw ParseError("bilattice hom tables must be arrays");
    std::vector<Proj> phi_out, psi_out;
    for (const auto& img : phi_images)
        phi_out.push_back(proj_from_array(img, ts.left.ground().size, "phi image"));
    for (const auto& img : psi_images)
        psi_out.push_back(proj_from_array(img, ts.right.ground().size, "psi image"));
    try {
        LatticeHom phi(ss.left, ts.left, std::move(phi_out));
        LatticeHom psi(ss.right, ts.right, std::move(psi_out));
        return BilatticeHom(std::move(src), std::move(tgt), std::move(phi), std::move(psi));
    } catch (const Error& e) {
        throw ParseError(std::string("bilattice hom: ") + e.what());
    }
}

Json to_json(const MoritaWitness& w) {
    Json j;
    j["v1"] = to_json(w.v1);
    j["v2"] = to_json(w.v2);
    j["w1"] = to_json(w.w1);
    j["w2"] = to_json(w.w2);
    return j;
}

MoritaWitness witness_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("witness must be an object");
    return MoritaWitness{relation_from_json(require_field(j, "v1", "witness")),
                         relation_from_json(require_field(j, "v2", "witness")),
                         relation_from_json(require_field(j, "w1", "witness")),
                         relation_from_json(require_field(j, "w2", "witness"))};
}

Json to_json(const PointMap& m) {
    Json j;
    j["source"] = to_json(m.source());
    j["target"] = to_json(m.target());
    j["table"] = m.table();
    return j;
}

PointMap point_map_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("point map must be an object");
    GroundSpace src = ground_from_json(require_field(j, "source", "point map"));
    GroundSpace tgt = ground_from_json(require_field(j, "target", "point map"));
    const Json& table = require_field(j, "table", "point map");
    if (!table.is_array()) throw ParseError("point map table must be an array");
    std::vector<int> out;
    for (const auto& v : table) {
        if (!v.is_number_integer()) throw ParseError("point map entry must be an integer");
        out.push_back(v.get<int>());
    }
    try {
        return PointMap(std::move(src), std::move(tgt), std::move(out));
    } catch (const Error& e) {
        throw ParseError(std::string("point map: ") + e.what());
    }
}

Json to_json(const CheckReport& r) {
    Json j;
    j["pass"] = r.pass();
    Json laws = Json::array();
    for (const auto& law : r.results()) {
        Json entry;
        entry["group"] = law.group;
        entry["law"] = law.law;
        entry["pass"] = law.pass;
        if (!law.detail.empty()) entry["detail"] = law.detail;
        laws.push_back(entry);
    }
    j["laws"] = laws;
    return j;
}

Json to_json(const SuiteReport& r, bool include_timing) {
    Json j;
    j["version"] = 1;
    j["seed"] = r.seed;
    j["pass"] = r.pass();
    Json laws = Json::array();
    for (const auto& law : r.laws) {
        Json entry;
        entry["group"] = law.group;
        entry["law"] = law.law;
        entry["pass"] = law.pass;
        if (!law.detail.empty()) entry["detail"] = law.detail;
        laws.push_back(entry);
    }
    j["laws"] = laws;
    if (include_timing) {
        Json timing;
        timing["total_ms"] = r.total_ms;
        Json groups;
        for (const auto& [name, ms] : r.group_ms) groups[name] = ms;
        timing["groups_ms"] = groups;
        j["timing"] = timing;
    }
    return j;
}

Json to_json(const InstanceFile& f) {
    Json j;
    j["version"] = f.version;
    if (f.relation) j["relation"] = to_json(*f.relation);
    if (f.relation2) j["relation2"] = to_json(*f.relation2);
    if (f.bilattice) j["bilattice"] = to_json(*f.bilattice);
    if (f.bilattice2) j["bilattice2"] = to_json(*f.bilattice2);
    if (f.csl) j["csl"] = to_json(*f.csl);
    if (f.csl2) j["csl2"] = to_json(*f.csl2);
    if (f.lattice_hom) j["lattice_hom"] = to_json(*f.lattice_hom);
    if (f.bilattice_hom) j["bilattice_hom"] = to_json(*f.bilattice_hom);
    if (f.witness) j["witness"] = to_json(*f.witness);
    if (f.theta) j["theta"] = to_json(*f.theta);
    if (f.rho) j["rho"] = to_json(*f.rho);
    return j;
}

InstanceFile instance_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("instance file must be a JSON object");
    InstanceFile f;
    const Json& version = require_field(j, "version", "instance file");
    if (!version.is_number_integer() || version.get<int>() != 1)
        throw ParseError("unsupported instance file version");
    if (j.contains("relation")) f.relation = relation_from_json(j.at("relation"));
    if (j.contains("relation2")) f.relation2 = relation_from_json(j.at("relation2"));
    if (j.contains("bilattice")) f.bilattice = bilattice_from_json(j.at("bilattice"));
    if (j.contains("bilattice2")) f.bilattice2 = bilattice_from_json(j.at("bilattice2"));
    if (j.contains("csl")) f.csl = csl_from_json(j.at("csl"));
    if (j.contains("csl2")) f.csl2 = csl_from_json(j.at("csl2"));
    if (j.contains("lattice_hom")) f.lattice_hom = lattice_hom_from_json(j.at("lattice_hom"));
    if (j.contains("bilattice_hom"))
        f.bilattice_hom = bilattice_hom_from_json(j.at("bilattice_hom"));
    if (j.contains("witness")) f.witness = witness_from_json(j.at("witness"));
    if (j.contains("theta")) f.theta = point_map_from_json(j.at("theta"));
    if (j.contains("rho")) f.rho = point_map_from_json(j.at("rho"));
    return f;
}

InstanceFile parse_instance(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return instance_from_json(j);
}

InstanceFile load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render_text(const CheckReport& r) {
    std::ostringstream os;
    for (const auto& law : r.results()) {
        os << (law.pass ? "pass" : "FAIL") << "  [" << law.group << "] " << law.law;
        if (!law.detail.empty()) os << "  -- " << law.detail;
        os << '\n';
    }
    os << (r.pass() ? "all laws hold" : std::to_string(r.failed_count()) + " law(s) violated")
       << '\n';
    return os.str();
}

std::string render_text(const SuiteReport& r) {
    std::ostringstream os;
    os << "seed " << r.seed << '\n';
    for (const auto& law : r.laws) {
        os << (law.pass ? "pass" : "FAIL") << "  [" << law.group << "] " << law.law;
        if (!law.detail.empty()) os << "  -- " << law.detail;
        os << '\n';
    }
    os << "total " << r.total_ms << " ms; "
       << (r.pass() ? "all laws hold" : std::to_string(r.failed_count()) + " law(s) violated")
       << '\n';
    return os.str();
}

}  // namespace bilat
