#ifndef TROPEXT_POLYHEDRON_HPP
#define TROPEXT_POLYHEDRON_HPP

#include <optional>

#include "tropext/affine_map.hpp"
#include "tropext/lp.hpp"

namespace tropext {

// One linear condition <normal, x> >= offset (inequality) or = offset
// (equality). Normals are integer vectors; canonicalization makes them
// primitive.
struct LinCon {
    QVec normal;
    Rat offset;

    friend bool operator==(const LinCon&, const LinCon&) = default;
    friend auto operator<=>(const LinCon&, const LinCon&) = default;
};

// Possibly unbounded rational polyhedron in H-representation.
//
// Canonical form: implicit equalities moved to the equality list; equalities
// in primitive-integer reduced row echelon form with positive leading
// coefficients; inequalities reduced modulo the equalities, primitive,
// irredundant, and sorted; the empty polyhedron is written as the single
// equality 0 = 1.
struct Polyhedron {
    std::size_t ambient_dim = 0;
    std::vector<LinCon> inequalities;
    std::vector<LinCon> equalities;

    static Polyhedron full(std::size_t dim);
    static Polyhedron empty(std::size_t dim);
    static Polyhedron nonneg_orthant(std::size_t dim);
    static Polyhedron point(QVec x);
    static Polyhedron interval(const Rat& lo, const Rat& hi);  // [lo, hi] in R^1
    static Polyhedron ray_from(const Rat& lo);                 // [lo, inf) in R^1

    void add_inequality(QVec normal, Rat offset);
    void add_equality(QVec normal, Rat offset);

    friend bool operator==(const Polyhedron&, const Polyhedron&) = default;
};

Polyhedron canonical(const Polyhedron& p);
bool is_empty(const Polyhedron& p);
bool contains_point(const Polyhedron& p, const QVec& x);
// inner subseteq outer (exact, via LP bounds on outer's constraints).
bool contains(const Polyhedron& outer, const Polyhedron& inner);
bool equal_sets(const Polyhedron& p, const Polyhedron& q);

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q);
Polyhedron product(const Polyhedron& p, const Polyhedron& q);

// Exact projection forgetting the given coordinates (Fourier-Motzkin with
// redundancy trimming); remaining coordinates keep their relative order.
Polyhedron eliminate_coords(const Polyhedron& p, std::vector<std::size_t> coords);

// Any feasible point (deterministic), or nullopt when empty.
std::optional<QVec> any_point(const Polyhedron& p);

// Deterministic point in the relative interior, or nullopt when empty.
std::optional<QVec> relative_interior_point(const Polyhedron& p);

// Smallest face of p containing x (tight inequalities turned into equalities).
Polyhedron minimal_face_at(const Polyhedron& p, const QVec& x);

// Columns: integer basis of the direction lattice of p's affine hull
// (saturated). p must be nonempty.
QMat direction_lattice(const Polyhedron& p);

LpProblem lp_from_polyhedron(const Polyhedron& p);

}  // namespace tropext

#endif
