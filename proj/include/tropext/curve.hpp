#ifndef TROPEXT_CURVE_HPP
#define TROPEXT_CURVE_HPP

#include <string>

#include "tropext/affine_ops.hpp"
#include "tropext/report.hpp"

namespace tropext {

// The polytope attached to a target point (its tropical part).
struct TargetStratum {
    std::string id;
    Polyhedron polytope;
};

// One end of an edge: which vertex it attaches to, plus the transport of that
// vertex's stratum polytope into the edge's stratum polytope.
struct Flag {
    std::string vertex;
    AffineMap germ;  // vertex stratum ambient -> edge stratum ambient
};

struct Vertex {
    std::string id;
    TargetStratum stratum;
    QVec position;                    // point of stratum.polytope
    std::vector<AffineMap> monodromy;  // endomorphisms of the stratum ambient
};

// A node of the domain curve: a bounded edge of the tropical curve.
// Flag 0 sits at parameter 0 of the trajectory, flag 1 at parameter length.
struct Edge {
    std::string id;
    Rat length;  // > 0
    TargetStratum stratum;
    AffineMap trajectory;  // [0, length] -> stratum ambient
    Flag flags[2];
};

// A marked point: an unbounded ray of the tropical curve.
struct Leg {
    std::string id;
    std::string vertex;
    TargetStratum stratum;
    AffineMap trajectory;  // [0, inf) -> stratum ambient
    AffineMap germ;        // vertex stratum ambient -> stratum ambient
};

// Combinatorial tropical type of a stable curve: dual graph decorated with
// strata, basepoint positions, trajectories, germs, and monodromy generators.
struct CurveType {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Leg> legs;

    std::size_t vertex_index(const std::string& id) const;
    const Vertex& vertex(const std::string& id) const { return vertices[vertex_index(id)]; }
    std::size_t edge_index(const std::string& id) const;
};

ValidationReport validate_curve_type(const CurveType& c);

}  // namespace tropext

#endif
