#ifndef TROPEXT_IO_HPP
#define TROPEXT_IO_HPP

#include <optional>

#include <json.hpp>

#include "tropext/pushout.hpp"

namespace tropext {

using Json = nlohmann::ordered_json;

// Parsed problem file. The strata table is resolved into the curve; the
// degree-one map's source is the top-level curve.
struct ProblemFile {
    std::string version;
    CurveType curve;
    std::optional<ExtendedStructure> extension;
    std::optional<DegreeOneMap> degree_one;
    std::vector<std::string> smooth_edges;

    struct PullbackParams {
        AffineMap map;
        Polyhedron base;
        QVec basepoint;
    };
    std::optional<PullbackParams> pullback;
};

// Throws KernelError("PARSE", ...) on malformed input (bad JSON, bad rational,
// dangling references, zero denominators).
ProblemFile parse_problem(const std::string& text);

// FNV-1a 64-bit hex digest of the raw input bytes.
std::string input_digest(const std::string& text);

Json rat_vec_json(const QVec& v);
QVec rat_vec_from_json(const Json& j);

Json polyhedron_json(const Polyhedron& p, bool with_vrep = false);
Polyhedron polyhedron_from_json(const Json& j);

Json affine_map_json(const AffineMap& a);
AffineMap affine_map_from_json(const Json& j);

Json report_json(const ValidationReport& r);

// Curve serialization with a strata side table (id -> polyhedron); the curve
// entries reference strata by id.
Json curve_json(const CurveType& c, Json& strata);
Json extension_json(const ExtendedStructure& s);
Json degree_one_json(const DegreeOneMap& d, Json& strata);

}  // namespace tropext

#endif
