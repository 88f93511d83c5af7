#ifndef TROPEXT_EXTENSION_HPP
#define TROPEXT_EXTENSION_HPP

#include "tropext/curve.hpp"

namespace tropext {

// Extended tropical structure on a curve type: a family of tropical curves
// over a common base polytope P.
//
// Coordinate conventions (validated, not merely assumed):
//   - every node polyhedron lives in ambient (base coords..., a, b) and equals
//     the fiber product of rho with (a, b) -> a + b;
//   - the flag-0 structure map lands on the face {a = 0} and the flag-1 map
//     on {b = 0}; a measures distance from the flag-0 end of the edge;
//   - every leg polyhedron is base x [0, inf) in ambient (base coords..., s).
struct ExtendedStructure {
    Polyhedron base;  // P
    QVec basepoint;   // classifies the curve itself

    struct VertexData {
        Polyhedron poly;
        AffineMap iso_to_base;  // integral affine isomorphism poly -> base
        AffineMap nat;          // poly -> vertex stratum ambient
    };
    struct EdgeData {
        AffineMap rho;        // base ambient -> R, nonnegative on base
        Polyhedron node_poly;  // {(x, a, b) : x in base, a,b >= 0, a+b = rho(x)}
        AffineMap flag_map[2];  // vertex poly -> node_poly ambient
        AffineMap nat;          // node_poly ambient -> edge stratum ambient
    };
    struct LegData {
        Polyhedron poly;   // base x [0, inf)
        AffineMap leg_map;  // vertex poly -> poly ambient
        AffineMap nat;      // poly ambient -> leg stratum ambient
    };

    std::vector<VertexData> vertex_data;  // parallel to curve.vertices
    std::vector<EdgeData> edge_data;      // parallel to curve.edges
    std::vector<LegData> leg_data;        // parallel to curve.legs
};

ValidationReport validate_extension(const CurveType& c, const ExtendedStructure& s);

// The extension with a zero-dimensional base: the tropical structure of the
// curve itself.
ExtendedStructure trivial_extension(const CurveType& c);

// The curve classified by a base point: same graph, germs, and monodromy;
// positions, lengths, and trajectories read off the fiber. Throws
// ZERO_LENGTH_EDGE when some rho vanishes at q.
CurveType fiber_at(const CurveType& c, const ExtendedStructure& s, const QVec& q);

// Canonicalize all polyhedra in place (maps unchanged).
ExtendedStructure normalize_extension(ExtendedStructure s);

// Set-level equality: same polyhedra as sets, same maps pointwise on them.
bool equivalent_extensions(const CurveType& c, const ExtendedStructure& a,
                           const ExtendedStructure& b);

}  // namespace tropext

#endif
