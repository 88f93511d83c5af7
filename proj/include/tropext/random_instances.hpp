#ifndef TROPEXT_RANDOM_INSTANCES_HPP
#define TROPEXT_RANDOM_INSTANCES_HPP

#include <random>

#include "tropext/universal.hpp"

namespace tropext {

// Random connected curve whose strata are all the single point {0} in R^1
// (smooth target): spanning tree plus optional extra edges, rational lengths.
CurveType random_smooth_curve(std::mt19937_64& rng, std::size_t max_edges);

// Random curve with orthant strata [0,inf)^k, coordinate-permutation monodromy
// generators, positions and trajectories on the fixed locus.
CurveType random_monodromy_curve(std::mt19937_64& rng);

// Random H-polyhedron: dim in [1, max_dim], up to max_cons inequalities with
// small integer data, occasionally an equality.
Polyhedron random_polyhedron(std::mt19937_64& rng, std::size_t max_dim,
                             std::size_t max_cons);

// Random affine map into P_u sending 0 to the basepoint, with the pullback
// domain (preimage of P_u) and basepoint 0.
struct ClassifyInstance {
    AffineMap map;
    Polyhedron base;
    QVec basepoint;
};
ClassifyInstance random_classify_instance(const UniversalExtension& u,
                                          std::mt19937_64& rng);

}  // namespace tropext

#endif
