#ifndef TROPEXT_LINALG_HPP
#define TROPEXT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tropext/rational.hpp"

namespace tropext {

// Dense rational matrix. Row-major.
struct QMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static QMat identity(std::size_t n);
    QVec row(std::size_t i) const;
    void set_row(std::size_t i, const QVec& v);

    friend bool operator==(const QMat&, const QMat&) = default;
};

QMat mat_mul(const QMat& x, const QMat& y);
QVec mat_vec(const QMat& m, const QVec& v);
QMat transpose(const QMat& m);
bool is_integral(const QMat& m);

QVec vec_add(const QVec& x, const QVec& y);
QVec vec_sub(const QVec& x, const QVec& y);
QVec vec_scale(const Rat& c, const QVec& x);
Rat dot(const QVec& x, const QVec& y);
bool is_zero(const QVec& x);

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref(QMat& m);

std::size_t rank(QMat m);

// One solution of m x = b, if any.
std::optional<QVec> solve_linear(const QMat& m, const QVec& b);

// Columns form a basis of { x : m x = 0 }.
QMat nullspace(const QMat& m);

// Inverse of a square matrix, or nullopt when singular.
std::optional<QMat> mat_inverse(const QMat& m);

// Scales a rational vector to a primitive integer vector (gcd 1) preserving
// direction; the zero vector stays zero.
QVec primitive_scale(const QVec& v);

// Integer lattice machinery (entries must be integral rationals).

struct SmithForm {
    QMat u, u_inv;  // unimodular row transform, s = u * m * v
    QMat v, v_inv;
    QMat s;  // diagonal, divisibility-chained
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const QMat& m);

// Basis (columns) of { x in Z^n : m x = 0 } for integer m; saturated.
QMat integral_kernel_basis(const QMat& m);

// Given a saturated primitive lattice basis b (n x k integer, full column
// rank), returns a unimodular n x n matrix whose first k columns are b.
// Throws NON_INTEGRAL if b is not a saturated basis.
QMat unimodular_extension(const QMat& b);

}  // namespace tropext

#endif
