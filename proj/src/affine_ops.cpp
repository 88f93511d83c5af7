#include "tropext/affine_ops.hpp"

namespace tropext {

Polyhedron image(const Polyhedron& p, const AffineMap& a) {
    if (a.source_dim != p.ambient_dim) throw KernelError("DIMENSION_MISMATCH", "image");
    const std::size_t m = a.target_dim, n = a.source_dim;
    Polyhedron graph;
    graph.ambient_dim = m + n;
    // y - A x = t
    for (std::size_t i = 0; i < m; ++i) {
        QVec row(m + n);
        row[i] = 1;
        for (std::size_t j = 0; j < n; ++j) row[m + j] = -a.linear.at(i, j);
        graph.add_equality(std::move(row), a.translate[i]);
    }
    auto lift = [&](const LinCon& c) {
        QVec row(m + n);
        for (std::size_t j = 0; j < n; ++j) row[m + j] = c.normal[j];
        return LinCon{std::move(row), c.offset};
    };
    for (const auto& c : p.inequalities) graph.inequalities.push_back(lift(c));
    for (const auto& c : p.equalities) graph.equalities.push_back(lift(c));
    std::vector<std::size_t> drop;
    for (std::size_t j = 0; j < n; ++j) drop.push_back(m + j);
    return eliminate_coords(graph, drop);
}

Polyhedron preimage(const Polyhedron& p, const AffineMap& a) {
    if (a.target_dim != p.ambient_dim) throw KernelError("DIMENSION_MISMATCH", "preimage");
    Polyhedron out;
    out.ambient_dim = a.source_dim;
    auto pulled = [&](const LinCon& c) {
        QVec row(a.source_dim);
        for (std::size_t j = 0; j < a.source_dim; ++j)
            for (std::size_t i = 0; i < a.target_dim; ++i)
                row[j] += c.normal[i] * a.linear.at(i, j);
        return LinCon{std::move(row), c.offset - dot(c.normal, a.translate)};
    };
    for (const auto& c : p.inequalities) out.inequalities.push_back(pulled(c));
    for (const auto& c : p.equalities) out.equalities.push_back(pulled(c));
    return canonical(out);
}

FiberProduct fiber_product(const Polyhedron& p1, const AffineMap& a1, const Polyhedron& p2,
                           const AffineMap& a2) {
    if (a1.source_dim != p1.ambient_dim || a2.source_dim != p2.ambient_dim ||
        a1.target_dim != a2.target_dim)
        throw KernelError("DIMENSION_MISMATCH", "fiber_product");
    const std::size_t n1 = p1.ambient_dim, n2 = p2.ambient_dim;
    Polyhedron poly = product(p1, p2);
    for (std::size_t i = 0; i < a1.target_dim; ++i) {
        QVec row(n1 + n2);
        for (std::size_t j = 0; j < n1; ++j) row[j] = a1.linear.at(i, j);
        for (std::size_t j = 0; j < n2; ++j) row[n1 + j] = -a2.linear.at(i, j);
        poly.add_equality(std::move(row), a2.translate[i] - a1.translate[i]);
    }
    return {canonical(poly), AffineMap::coordinate_projection(n1 + n2, 0, n1),
            AffineMap::coordinate_projection(n1 + n2, n1, n2)};
}

bool maps_agree_on(const Polyhedron& p, const AffineMap& a1, const AffineMap& a2) {
    if (a1.source_dim != p.ambient_dim || a2.source_dim != p.ambient_dim ||
        a1.target_dim != a2.target_dim)
        throw KernelError("DIMENSION_MISMATCH", "maps_agree_on");
    auto x0 = any_point(p);
    if (!x0) return true;
    if (a1.apply(*x0) != a2.apply(*x0)) return false;
    QMat d = direction_lattice(p);
    for (std::size_t k = 0; k < d.cols; ++k) {
        for (std::size_t i = 0; i < a1.target_dim; ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < a1.source_dim; ++j)
                s += (a1.linear.at(i, j) - a2.linear.at(i, j)) * d.at(j, k);
            if (s != 0) return false;
        }
    }
    return true;
}

std::optional<FaceCertificate> is_iso_onto_face(const AffineMap& a, const Polyhedron& src,
                                                const Polyhedron& dst) {
    if (a.source_dim != src.ambient_dim || a.target_dim != dst.ambient_dim)
        throw KernelError("DIMENSION_MISMATCH", "is_iso_onto_face");
    if (!a.integral()) return std::nullopt;
    if (is_empty(src)) return std::nullopt;

    // Injectivity on src: the linear part must be injective on src's
    // direction space.
    QMat bs = direction_lattice(src);  // n x k, saturated basis
    QMat abs = mat_mul(a.linear, bs);
    if (rank(abs) != bs.cols) return std::nullopt;

    Polyhedron im = image(src, a);
    if (!contains(dst, im)) return std::nullopt;

    // Face test: the minimal face of dst at a relative-interior point of the
    // image must be the image itself.
    QVec x0 = *relative_interior_point(im);
    std::vector<std::size_t> tight;
    Polyhedron face;
    face.ambient_dim = dst.ambient_dim;
    face.equalities = dst.equalities;
    for (std::size_t i = 0; i < dst.inequalities.size(); ++i) {
        const auto& c = dst.inequalities[i];
        if (dot(c.normal, x0) == c.offset) {
            tight.push_back(i);
            face.equalities.push_back(c);
        } else {
            face.inequalities.push_back(c);
        }
    }
    face = canonical(face);
    if (!equal_sets(face, im)) return std::nullopt;

    // Integral inverse on the face's affine hull. a maps src's direction
    // lattice into the face's; the change of basis must be unimodular.
    QMat bf = direction_lattice(face);  // m x k'
    if (bf.cols != bs.cols) return std::nullopt;
    const std::size_t k = bs.cols;
    QMat c(k, k);
    for (std::size_t col = 0; col < k; ++col) {
        QVec rhs(abs.rows);
        for (std::size_t i = 0; i < abs.rows; ++i) rhs[i] = abs.at(i, col);
        auto sol = solve_linear(bf, rhs);
        if (!sol) return std::nullopt;
        for (std::size_t i = 0; i < k; ++i) c.at(i, col) = (*sol)[i];
    }
    if (!is_integral(c)) return std::nullopt;
    if (k > 0) {
        SmithForm sf = smith_normal_form(c);
        if (sf.rank != k) return std::nullopt;
        for (std::size_t t = 0; t < k; ++t)
            if (sf.s.at(t, t) != 1) return std::nullopt;  // not unimodular
    }

    // M on the hull: M * bf = bs * c^{-1}; zero off the hull.
    QMat m_lin(a.source_dim, a.target_dim);
    if (k > 0) {
        QMat c_inv = *mat_inverse(c);
        QMat target_cols = mat_mul(bs, c_inv);  // n x k, integral
        QMat u = unimodular_extension(bf);      // m x m
        QMat u_inv = *mat_inverse(u);
        QMat block(a.source_dim, a.target_dim);  // [target_cols | 0]
        for (std::size_t i = 0; i < a.source_dim; ++i)
            for (std::size_t j = 0; j < k; ++j) block.at(i, j) = target_cols.at(i, j);
        m_lin = mat_mul(block, u_inv);
    }
    if (!is_integral(m_lin)) return std::nullopt;
    QVec s0 = *any_point(src);
    QVec u_tr = vec_sub(s0, mat_vec(m_lin, a.apply(s0)));
    AffineMap inv(std::move(m_lin), std::move(u_tr));
    if (!maps_agree_on(src, compose(inv, a), AffineMap::identity(a.source_dim)))
        throw KernelError("INTERNAL", "face inverse failed self-check");
    return FaceCertificate{std::move(face), std::move(tight), std::move(inv)};
}

AffineMap affine_interpolate(const std::vector<InterpolateConstraint>& constraints,
                             const Polyhedron& ambient) {
    const std::size_t n = ambient.ambient_dim;
    if (constraints.empty()) throw KernelError("UNDERDETERMINED", "no constraints");
    const std::size_t m = constraints.front().value.target_dim;
    auto x0_opt = any_point(ambient);
    if (!x0_opt) throw KernelError("PRECONDITION", "affine_interpolate: empty ambient");
    QVec x0 = *x0_opt;
    QMat d = direction_lattice(ambient);  // n x k
    const std::size_t k = d.cols;

    // Unknowns per output coordinate i: (g_i in R^k, w_i), where the result F
    // satisfies F(x0 + d t) = G t + w. All output coordinates share the same
    // coefficient matrix.
    std::vector<QVec> sys_rows;           // length k+1 each
    std::vector<QVec> sys_rhs;            // length m each
    for (const auto& con : constraints) {
        if (con.embed.source_dim != con.sub.ambient_dim || con.embed.target_dim != n ||
            con.value.source_dim != con.sub.ambient_dim || con.value.target_dim != m)
            throw KernelError("DIMENSION_MISMATCH", "affine_interpolate constraint");
        auto p0 = any_point(con.sub);
        if (!p0) continue;  // empty piece constrains nothing
        QVec q0 = con.embed.apply(*p0);
        auto alpha = solve_linear(d, vec_sub(q0, x0));
        if (!alpha || mat_vec(d, *alpha) != vec_sub(q0, x0))
            throw KernelError("PRECONDITION", "embedded piece leaves the affine hull");
        QVec row = *alpha;
        row.push_back(Rat(1));
        sys_rows.push_back(std::move(row));
        sys_rhs.push_back(con.value.apply(*p0));

        QMat ds = direction_lattice(con.sub);
        QMat ed = mat_mul(con.embed.linear, ds);  // n x k_s
        QMat vd = mat_mul(con.value.linear, ds);  // m x k_s
        for (std::size_t col = 0; col < ds.cols; ++col) {
            QVec e(ed.rows);
            for (std::size_t i = 0; i < ed.rows; ++i) e[i] = ed.at(i, col);
            auto beta = solve_linear(d, e);
            if (!beta || mat_vec(d, *beta) != e)
                throw KernelError("PRECONDITION", "embedded piece leaves the affine hull");
            QVec row2 = *beta;
            row2.push_back(Rat(0));
            sys_rows.push_back(std::move(row2));
            QVec rhs(m);
            for (std::size_t i = 0; i < m; ++i) rhs[i] = vd.at(i, col);
            sys_rhs.push_back(std::move(rhs));
        }
    }

    // Solve the shared system with all m right-hand sides at once.
    QMat aug(sys_rows.size(), k + 1 + m);
    for (std::size_t r = 0; r < sys_rows.size(); ++r) {
        for (std::size_t c = 0; c <= k; ++c) aug.at(r, c) = sys_rows[r][c];
        for (std::size_t i = 0; i < m; ++i) aug.at(r, k + 1 + i) = sys_rhs[r][i];
    }
    auto pivots = rref(aug);
    std::size_t struct_rank = 0;
    for (auto p : pivots)
        if (p <= k)
            ++struct_rank;
        else
            throw KernelError("INCONSISTENT", "constraints conflict");
    if (struct_rank < k + 1) throw KernelError("UNDERDETERMINED", "pieces do not span the hull");

    QMat g(m, k);
    QVec w(m);
    for (std::size_t r = 0; r < struct_rank; ++r) {
        std::size_t p = pivots[r];
        for (std::size_t i = 0; i < m; ++i) {
            if (p < k)
                g.at(i, p) = aug.at(r, k + 1 + i);
            else
                w[i] = aug.at(r, k + 1 + i);
        }
    }

    // F's linear part: G on the hull directions, zero on a complement.
    QMat lin(m, n);
    if (k > 0) {
        QMat u = unimodular_extension(d);
        QMat u_inv = *mat_inverse(u);
        QMat block(m, n);  // [G | 0]
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < k; ++j) block.at(i, j) = g.at(i, j);
        lin = mat_mul(block, u_inv);
    }
    if (!is_integral(lin)) throw KernelError("NON_INTEGRAL", "interpolated linear part");
    QVec tr = vec_sub(w, mat_vec(lin, x0));
    return AffineMap(std::move(lin), std::move(tr));
}

Polyhedron equalizer(const Polyhedron& p, const AffineMap& a1, const AffineMap& a2) {
    if (a1.source_dim != p.ambient_dim || a2.source_dim != p.ambient_dim ||
        a1.target_dim != a2.target_dim)
        throw KernelError("DIMENSION_MISMATCH", "equalizer");
    Polyhedron out = p;
    for (std::size_t i = 0; i < a1.target_dim; ++i) {
        QVec row(p.ambient_dim);
        for (std::size_t j = 0; j < p.ambient_dim; ++j)
            row[j] = a1.linear.at(i, j) - a2.linear.at(i, j);
        out.add_equality(std::move(row), a2.translate[i] - a1.translate[i]);
    }
    return canonical(out);
}

Polyhedron fixed_locus(const Polyhedron& p, const std::vector<AffineMap>& endos) {
    Polyhedron out = p;
    AffineMap id = AffineMap::identity(p.ambient_dim);
    for (const auto& e : endos) out = equalizer(out, e, id);
    return canonical(out);
}

}  // namespace tropext
