#ifndef BILAT_SERIALIZE_HPP
#define BILAT_SERIALIZE_HPP

#include <bilat/bilattice.hpp>
#include <bilat/inverse_image.hpp>
#include <bilat/morita.hpp>
#include <bilat/report.hpp>

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace bilat {

using Json = nlohmann::ordered_json;

Json to_json(const GroundSpace& g);
Json to_json(const Proj& p);
Json to_json(const Relation& r);
Json to_json(const CSL& l);
Json to_json(const Bilattice& s);
Json to_json(const LatticeHom& h);
Json to_json(const BilatticeHom& h);
Json to_json(const MoritaWitness& w);
Json to_json(const PointMap& m);
Json to_json(const CheckReport& r);
Json to_json(const SuiteReport& r, bool include_timing = true);

GroundSpace ground_from_json(const Json& j);
Relation relation_from_json(const Json& j);
CSL csl_from_json(const Json& j);
Bilattice bilattice_from_json(const Json& j);
LatticeHom lattice_hom_from_json(const Json& j);
BilatticeHom bilattice_hom_from_json(const Json& j);
MoritaWitness witness_from_json(const Json& j);
PointMap point_map_from_json(const Json& j);

/// A versioned instance document with optional sections; each subcommand
/// requires the sections it consumes. Indices are 0-based, sets are sorted
/// arrays, and serialization is canonical (two-space indent, fixed key
/// order, trailing newline) so golden files compare bit-exactly.
struct InstanceFile {
    int version = 1;
    std::optional<Relation> relation;
    std::optional<Relation> relation2;
    std::optional<Bilattice> bilattice;
    std::optional<Bilattice> bilattice2;
    std::optional<CSL> csl;
    std::optional<CSL> csl2;
    std::optional<LatticeHom> lattice_hom;
    std::optional<BilatticeHom> bilattice_hom;
    std::optional<MoritaWitness> witness;
    std::optional<PointMap> theta;
    std::optional<PointMap> rho;
};

Json to_json(const InstanceFile& f);
InstanceFile instance_from_json(const Json& j);
InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::filesystem::path& path);

/// Pinned canonical rendering used for golden-file comparison.
std::string canonical_dump(const Json& j);

/// Human-readable rendering of a report; agrees with the JSON on pass/fail.
std::string render_text(const CheckReport& r);
std::string render_text(const SuiteReport& r);

}  // namespace bilat

#endif
