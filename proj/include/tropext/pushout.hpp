#ifndef TROPEXT_PUSHOUT_HPP
#define TROPEXT_PUSHOUT_HPP

#include <map>

#include "tropext/extension.hpp"

namespace tropext {

// A degree-1 map of curve types: the source refines the target by subdividing
// edges (chains) and contracting subtrees into vertices or into interior
// points of edges/legs.
struct DegreeOneMap {
    CurveType source;  // the refined curve
    CurveType target;

    struct VertexImage {
        enum class Kind { Vertex, Edge, Leg };
        Kind kind = Kind::Vertex;
        std::string id;  // target object id
    };
    // Every source vertex maps somewhere in the target.
    std::map<std::string, VertexImage> vertex_assignment;
    // Target edge id -> ordered source edges covering it; flag 0 of the chain's
    // first edge lies over flag 0 of the target edge.
    std::map<std::string, std::vector<std::string>> edge_chains;
    struct LegChain {
        std::vector<std::string> edges;  // ordered, possibly empty
        std::string leg;                 // final source leg
    };
    std::map<std::string, LegChain> leg_chains;  // target leg id -> chain
};

ValidationReport validate_degree_one(const DegreeOneMap& d);

struct PushoutResult {
    ExtendedStructure structure;        // extension of the target curve
    std::vector<AffineMap> eta_vertex;  // per source vertex: P0 poly -> P1(image)
    std::vector<AffineMap> eta_edge;    // per source edge: P0 node poly -> P1(image)
    std::vector<AffineMap> eta_leg;     // per source leg: P0 leg poly -> P1(image leg)
};

// Push an extension of the refined curve down to the coarse curve:
// rho_e = sum of the chain rho's, nat maps solved from the commuting squares.
// Throws INCONSISTENT_CHAIN when the squares cannot be completed.
PushoutResult pushout_extension(const ExtendedStructure& p0, const DegreeOneMap& d);

// One instance of the pushout's universal property: a map out of a source
// object that should factor uniquely through eta.
struct PushoutSquare {
    Polyhedron source_poly;  // P0 object polyhedron
    AffineMap eta;           // P0 object -> P1 object
    AffineMap value;         // P0 object -> test polyhedron
};

// For each square, confirms that exactly one candidate h satisfies
// h . eta = value on the source polyhedron.
ValidationReport verify_pushout_uniqueness(const std::vector<PushoutSquare>& squares,
                                           const std::vector<AffineMap>& candidates);

}  // namespace tropext

#endif
