#ifndef TROPEXT_AFFINE_OPS_HPP
#define TROPEXT_AFFINE_OPS_HPP

#include "tropext/polyhedron.hpp"

namespace tropext {

// Exact image a(p), computed by eliminating the source variables from the
// graph of a over p. Canonical.
Polyhedron image(const Polyhedron& p, const AffineMap& a);

// {x : a(x) in p}, by substitution. Canonical.
Polyhedron preimage(const Polyhedron& p, const AffineMap& a);

struct FiberProduct {
    Polyhedron poly;  // {(x, y) in p1 x p2 : a1(x) = a2(y)}
    AffineMap proj1;
    AffineMap proj2;
};

FiberProduct fiber_product(const Polyhedron& p1, const AffineMap& a1, const Polyhedron& p2,
                           const AffineMap& a2);

// Witness that a maps src isomorphically onto a face of dst.
struct FaceCertificate {
    Polyhedron face;
    // Indices into dst.inequalities (as given) that hold with equality on the
    // face; dst plus these as equalities is exactly the face.
    std::vector<std::size_t> tight_inequalities;
    // Integral affine left inverse: inverse_on_face(a(x)) = x on src.
    AffineMap inverse_on_face;
};

// Certificate iff a maps the nonempty polyhedron src bijectively onto a face
// of dst, with an inverse that is integral on the face's affine hull.
std::optional<FaceCertificate> is_iso_onto_face(const AffineMap& a, const Polyhedron& src,
                                                const Polyhedron& dst);

// One interpolation condition: result . embed = value on sub.
struct InterpolateConstraint {
    AffineMap embed;  // sub's ambient space -> ambient's space
    Polyhedron sub;
    AffineMap value;  // sub's ambient space -> result target space
};

// The unique integral affine map on ambient's affine hull satisfying all
// constraints, extended by zero off the hull. Throws UNDERDETERMINED /
// INCONSISTENT / NON_INTEGRAL.
AffineMap affine_interpolate(const std::vector<InterpolateConstraint>& constraints,
                             const Polyhedron& ambient);

// p intersected with {x : a1(x) = a2(x)}. Canonical.
Polyhedron equalizer(const Polyhedron& p, const AffineMap& a1, const AffineMap& a2);

// p intersected with the common fixed locus of the endomorphisms. Canonical.
Polyhedron fixed_locus(const Polyhedron& p, const std::vector<AffineMap>& endos);

// Exact test that a1 and a2 agree at every point of p.
bool maps_agree_on(const Polyhedron& p, const AffineMap& a1, const AffineMap& a2);

}  // namespace tropext

#endif
