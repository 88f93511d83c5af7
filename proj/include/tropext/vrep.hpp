#ifndef TROPEXT_VREP_HPP
#define TROPEXT_VREP_HPP

#include "tropext/polyhedron.hpp"

namespace tropext {

// Generator representation: p = conv(vertices) + cone(rays) + span(lines).
// Canonical: generators reduced modulo the line space, rays primitive,
// everything sorted; an empty polyhedron has no generators at all.
struct VRep {
    std::size_t ambient_dim = 0;
    std::vector<QVec> vertices;
    std::vector<QVec> rays;
    std::vector<QVec> lines;

    bool empty() const { return vertices.empty(); }

    friend bool operator==(const VRep&, const VRep&) = default;
};

// Exact generator enumeration by the double description method on the
// homogenization cone.
VRep enumerate_vrep(const Polyhedron& p);

// H-representation of conv(vertices) + cone(rays) + span(lines), recovered by
// Fourier-Motzkin elimination of the combination multipliers. Canonical.
Polyhedron hull_from_vrep(const VRep& v);

}  // namespace tropext

#endif
