#ifndef TROPEXT_UNIVERSAL_HPP
#define TROPEXT_UNIVERSAL_HPP

#include <array>

#include "tropext/extension.hpp"

namespace tropext {

// The labeled product Q = (product of vertex stratum polytopes) x [0,inf)^edges.
// Coordinates: vertex blocks in input order, then one length coordinate per
// edge in input order. The basepoint packs the curve's positions and lengths.
struct ScaffoldQ {
    Polyhedron poly;
    std::vector<std::size_t> vertex_offset;
    std::vector<std::size_t> vertex_dim;
    std::size_t edge_offset = 0;
    QVec basepoint;  // q_f

    std::size_t dim() const { return poly.ambient_dim; }
    std::size_t edge_coord(std::size_t e) const { return edge_offset + e; }
    AffineMap vertex_projection(std::size_t v) const {
        return AffineMap::coordinate_projection(dim(), vertex_offset[v], vertex_dim[v]);
    }
    AffineMap edge_projection(std::size_t e) const {
        return AffineMap::coordinate_projection(dim(), edge_coord(e), 1);
    }
};

// Q(e): Q with the length coordinate of edge e expanded in place into two
// coordinates (a, b); a measures distance from the flag-0 end.
struct NodeScaffold {
    Polyhedron poly;
    std::array<AffineMap, 2> incl;  // Q -> Q(e); incl[0] onto {a=0}, incl[1] onto {b=0}
    AffineMap fiber_embed;          // [0, l] -> Q(e), t -> (q_f, a=t, b=l-t)
};

struct UniversalExtension {
    ScaffoldQ q;
    Polyhedron q1;  // monodromy fixed locus inside Q
    Polyhedron pu;  // P_u, canonical, in Q's ambient coordinates
    QVec basepoint;  // q_f
    std::vector<AffineMap> rho;        // per edge: length coordinate of P_u
    std::vector<AffineMap> positions;  // per vertex: block projection A_x
    std::vector<std::array<AffineMap, 2>> interpolants;  // A_gamma per edge flag, on Q(e)
    ExtendedStructure structure;
};

ScaffoldQ build_Q(const CurveType& c);
Polyhedron build_Q1(const CurveType& c, const ScaffoldQ& q);
NodeScaffold build_node_scaffold(const CurveType& c, const ScaffoldQ& q, std::size_t e);

// The unique affine map on Q(e) that restricts to the germ transport of the
// flag-k vertex block on the flag-k face and to the edge trajectory on the
// basepoint fiber.
AffineMap build_interpolant(const CurveType& c, const ScaffoldQ& q, std::size_t e, int flag);

UniversalExtension build_Pu(const CurveType& c);

struct EmbeddingReport {
    bool injective = false;
    // Equalities cutting P_u out of Q (those of canonical P_u that are not
    // already equalities of canonical Q).
    std::vector<LinCon> cutting_equalities;
    std::vector<std::string> lines;
};

EmbeddingReport embedding_report(const UniversalExtension& u);

}  // namespace tropext

#endif
