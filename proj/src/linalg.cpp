#include "tropext/linalg.hpp"

#include <algorithm>

namespace tropext {

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QVec QMat::row(std::size_t i) const {
    return QVec(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

void QMat::set_row(std::size_t i, const QVec& v) {
    std::copy(v.begin(), v.end(), a.begin() + i * cols);
}

QMat mat_mul(const QMat& x, const QMat& y) {
    if (x.cols != y.rows) throw KernelError("DIMENSION_MISMATCH", "mat_mul");
    QMat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Rat& xv = x.at(i, k);
            if (xv == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
        }
    return r;
}

QVec mat_vec(const QMat& m, const QVec& v) {
    if (m.cols != v.size()) throw KernelError("DIMENSION_MISMATCH", "mat_vec");
    QVec r(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
    return r;
}

QMat transpose(const QMat& m) {
    QMat r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

bool is_integral(const QMat& m) {
    return std::all_of(m.a.begin(), m.a.end(), [](const Rat& q) { return is_integral(q); });
}

QVec vec_add(const QVec& x, const QVec& y) {
    if (x.size() != y.size()) throw KernelError("DIMENSION_MISMATCH", "vec_add");
    QVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

QVec vec_sub(const QVec& x, const QVec& y) {
    if (x.size() != y.size()) throw KernelError("DIMENSION_MISMATCH", "vec_sub");
    QVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

QVec vec_scale(const Rat& c, const QVec& x) {
    QVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
}

Rat dot(const QVec& x, const QVec& y) {
    if (x.size() != y.size()) throw KernelError("DIMENSION_MISMATCH", "dot");
    Rat r = 0;
    for (std::size_t i = 0; i < x.size(); ++i) r += x[i] * y[i];
    return r;
}

bool is_zero(const QVec& x) {
    return std::all_of(x.begin(), x.end(), [](const Rat& q) { return q == 0; });
}

std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = Rat(1) / m.at(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(QMat m) { return rref(m).size(); }

std::optional<QVec> solve_linear(const QMat& m, const QVec& b) {
    if (m.rows != b.size()) throw KernelError("DIMENSION_MISMATCH", "solve_linear");
    QMat aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // 0 = 1 row
    QVec x(m.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols);
    return x;
}

QMat nullspace(const QMat& m) {
    QMat r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMat basis(m.cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis.at(fc, k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis.at(pivots[i], k) = -r.at(i, fc);
    }
    return basis;
}

std::optional<QMat> mat_inverse(const QMat& m) {
    if (m.rows != m.cols) throw KernelError("DIMENSION_MISMATCH", "mat_inverse");
    std::size_t n = m.rows;
    QMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

QVec primitive_scale(const QVec& v) {
    Int den = 1, num_gcd = 0;
    for (const auto& q : v) den = lcm(den, denominator(q));
    for (const auto& q : v) num_gcd = gcd(num_gcd, numerator(q) * (den / denominator(q)));
    if (num_gcd == 0) return QVec(v.size());
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * Rat(den, num_gcd);
    return r;
}

namespace {

Int ent(const QMat& m, std::size_t i, std::size_t j) { return numerator(m.at(i, j)); }

void row_op(QMat& m, QMat& u, QMat& u_inv, std::size_t i, std::size_t k, const Int& f) {
    // row_i -= f * row_k ; maintain s = u*m0*v, so u gets the same op and
    // u_inv the inverse op on columns.
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= Rat(f) * m.at(k, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(i, j) -= Rat(f) * u.at(k, j);
    for (std::size_t r = 0; r < u_inv.rows; ++r) u_inv.at(r, k) += Rat(f) * u_inv.at(r, i);
}

void col_op(QMat& m, QMat& v, QMat& v_inv, std::size_t j, std::size_t k, const Int& f) {
    // col_j -= f * col_k
    for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) -= Rat(f) * m.at(i, k);
    for (std::size_t i = 0; i < v.rows; ++i) v.at(i, j) -= Rat(f) * v.at(i, k);
    for (std::size_t c = 0; c < v_inv.cols; ++c) v_inv.at(k, c) += Rat(f) * v_inv.at(j, c);
}

void row_swap(QMat& m, QMat& u, QMat& u_inv, std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(i, j), m.at(k, j));
    for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(i, j), u.at(k, j));
    for (std::size_t r = 0; r < u_inv.rows; ++r) std::swap(u_inv.at(r, i), u_inv.at(r, k));
}

void col_swap(QMat& m, QMat& v, QMat& v_inv, std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, j), m.at(i, k));
    for (std::size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, j), v.at(i, k));
    for (std::size_t c = 0; c < v_inv.cols; ++c) std::swap(v_inv.at(j, c), v_inv.at(k, c));
}

void row_negate(QMat& m, QMat& u, QMat& u_inv, std::size_t i) {
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = -m.at(i, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(i, j) = -u.at(i, j);
    for (std::size_t r = 0; r < u_inv.rows; ++r) u_inv.at(r, i) = -u_inv.at(r, i);
}

}  // namespace

SmithForm smith_normal_form(const QMat& m0) {
    if (!is_integral(m0)) throw KernelError("NON_INTEGRAL", "smith_normal_form");
    SmithForm f;
    f.s = m0;
    f.u = QMat::identity(m0.rows);
    f.u_inv = QMat::identity(m0.rows);
    f.v = QMat::identity(m0.cols);
    f.v_inv = QMat::identity(m0.cols);
    QMat& s = f.s;
    std::size_t n = std::min(m0.rows, m0.cols);

    for (std::size_t t = 0; t < n; ++t) {
        // find smallest-magnitude nonzero entry in s[t.., t..]
        bool found = false;
        std::size_t bi = t, bj = t;
        Int best = 0;
        for (std::size_t i = t; i < s.rows; ++i)
            for (std::size_t j = t; j < s.cols; ++j) {
                Int v = abs(ent(s, i, j));
                if (v != 0 && (!found || v < best)) {
                    found = true;
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (!found) break;
        if (bi != t) row_swap(s, f.u, f.u_inv, bi, t);
        if (bj != t) col_swap(s, f.v, f.v_inv, bj, t);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < s.rows; ++i) {
                Int q = ent(s, i, t) / ent(s, t, t);
                if (q != 0) row_op(s, f.u, f.u_inv, i, t, q);
                if (ent(s, i, t) != 0) {
                    row_swap(s, f.u, f.u_inv, i, t);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < s.cols; ++j) {
                Int q = ent(s, t, j) / ent(s, t, t);
                if (q != 0) col_op(s, f.v, f.v_inv, j, t, q);
                if (ent(s, t, j) != 0) {
                    col_swap(s, f.v, f.v_inv, j, t);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (ent(s, t, t) < 0) row_negate(s, f.u, f.u_inv, t);

        // divisibility: s[t][t] must divide every later entry
        for (std::size_t i = t + 1; i < s.rows; ++i)
            for (std::size_t j = t + 1; j < s.cols; ++j)
                if (ent(s, i, j) % ent(s, t, t) != 0) {
                    row_op(s, f.u, f.u_inv, t, i, Int(-1));  // row_t += row_i
                    --t;
                    goto next;
                }
        f.rank = t + 1;
    next:;
    }
    return f;
}

QMat integral_kernel_basis(const QMat& m) {
    if (m.rows == 0) return QMat::identity(m.cols);
    SmithForm f = smith_normal_form(m);
    // s = u m v, kernel basis = columns of v with zero diagonal in s
    QMat basis(m.cols, m.cols - f.rank);
    for (std::size_t k = f.rank; k < m.cols; ++k)
        for (std::size_t i = 0; i < m.cols; ++i) basis.at(i, k - f.rank) = f.v.at(i, k);
    return basis;
}

QMat unimodular_extension(const QMat& b) {
    std::size_t n = b.rows, k = b.cols;
    if (k == 0) return QMat::identity(n);
    SmithForm f = smith_normal_form(b);
    if (f.rank != k) throw KernelError("NON_INTEGRAL", "unimodular_extension: rank deficient");
    for (std::size_t t = 0; t < k; ++t)
        if (f.s.at(t, t) != 1)
            throw KernelError("NON_INTEGRAL", "unimodular_extension: basis not saturated");
    // b = u_inv * s * v_inv; first k columns of u_inv equal b * v, so
    // [b | remaining columns of u_inv] is unimodular.
    QMat ext(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) ext.at(i, j) = b.at(i, j);
        for (std::size_t j = k; j < n; ++j) ext.at(i, j) = f.u_inv.at(i, j);
    }
    return ext;
}

}  // namespace tropext
