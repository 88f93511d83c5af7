#include "tropext/polyhedron.hpp"

#include <algorithm>

namespace tropext {

Polyhedron Polyhedron::full(std::size_t dim) {
    Polyhedron p;
    p.ambient_dim = dim;
    return p;
}

Polyhedron Polyhedron::empty(std::size_t dim) {
    Polyhedron p;
    p.ambient_dim = dim;
    p.equalities.push_back({QVec(dim), Rat(1)});
    return p;
}

Polyhedron Polyhedron::nonneg_orthant(std::size_t dim) {
    Polyhedron p;
    p.ambient_dim = dim;
    for (std::size_t i = 0; i < dim; ++i) {
        QVec n(dim);
        n[i] = 1;
        p.add_inequality(std::move(n), Rat(0));
    }
    return p;
}

Polyhedron Polyhedron::point(QVec x) {
    Polyhedron p;
    p.ambient_dim = x.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
        QVec n(x.size());
        n[i] = 1;
        p.add_equality(std::move(n), x[i]);
    }
    return p;
}

Polyhedron Polyhedron::interval(const Rat& lo, const Rat& hi) {
    Polyhedron p;
    p.ambient_dim = 1;
    p.add_inequality({Rat(1)}, lo);
    p.add_inequality({Rat(-1)}, -hi);
    return p;
}

Polyhedron Polyhedron::ray_from(const Rat& lo) {
    Polyhedron p;
    p.ambient_dim = 1;
    p.add_inequality({Rat(1)}, lo);
    return p;
}

void Polyhedron::add_inequality(QVec normal, Rat offset) {
    if (normal.size() != ambient_dim) throw KernelError("DIMENSION_MISMATCH", "add_inequality");
    inequalities.push_back({std::move(normal), std::move(offset)});
}

void Polyhedron::add_equality(QVec normal, Rat offset) {
    if (normal.size() != ambient_dim) throw KernelError("DIMENSION_MISMATCH", "add_equality");
    equalities.push_back({std::move(normal), std::move(offset)});
}

LpProblem lp_from_polyhedron(const Polyhedron& p) {
    LpProblem lp;
    lp.num_vars = p.ambient_dim;
    for (const auto& c : p.inequalities) lp.add_ineq(c.normal, c.offset);
    for (const auto& c : p.equalities) lp.add_eq(c.normal, c.offset);
    return lp;
}

namespace {

// Scales (normal, offset) so the normal is primitive integer. For
// inequalities only positive scaling is allowed; for equalities the leading
// nonzero coefficient is made positive. Returns false for a zero normal.
bool normalize_con(LinCon& c, bool equality) {
    Int denom = 1;
    for (const auto& q : c.normal) denom = lcm(denom, denominator(q));
    Int num_gcd = 0;
    for (const auto& q : c.normal) num_gcd = gcd(num_gcd, numerator(q) * (denom / denominator(q)));
    if (num_gcd == 0) return false;
    Rat scale(denom, num_gcd);
    if (equality) {
        for (const auto& q : c.normal)
            if (q != 0) {
                if (q < 0) scale = -scale;
                break;
            }
    }
    for (auto& q : c.normal) q *= scale;
    c.offset *= scale;
    return true;
}

// Reduce a constraint modulo RREF-style equality rows (pivot per row).
void reduce_mod_equalities(LinCon& c, const std::vector<LinCon>& eqs,
                           const std::vector<std::size_t>& pivots) {
    for (std::size_t r = 0; r < eqs.size(); ++r) {
        const Rat& coeff = c.normal[pivots[r]];
        if (coeff == 0) continue;
        Rat f = coeff / eqs[r].normal[pivots[r]];
        for (std::size_t j = 0; j < c.normal.size(); ++j) c.normal[j] -= f * eqs[r].normal[j];
        c.offset -= f * eqs[r].offset;
    }
}

struct EqBasis {
    std::vector<LinCon> rows;           // primitive, leading positive
    std::vector<std::size_t> pivots;    // pivot column per row
    bool infeasible = false;
};

EqBasis echelonize(const std::vector<LinCon>& eqs, std::size_t dim) {
    QMat m(eqs.size(), dim + 1);
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = eqs[i].normal[j];
        m.at(i, dim) = eqs[i].offset;
    }
    auto pivots = rref(m);
    EqBasis b;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == dim) {
            b.infeasible = true;
            return b;
        }
        LinCon c{QVec(m.a.begin() + r * (dim + 1), m.a.begin() + r * (dim + 1) + dim),
                 m.at(r, dim)};
        normalize_con(c, true);
        b.rows.push_back(std::move(c));
        b.pivots.push_back(pivots[r]);
    }
    return b;
}

bool lex_less(const LinCon& a, const LinCon& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
}

}  // namespace

bool is_empty(const Polyhedron& p) {
    for (const auto& c : p.inequalities)
        if (is_zero(c.normal) && c.offset > 0) return true;
    for (const auto& c : p.equalities)
        if (is_zero(c.normal) && c.offset != 0) return true;
    LpResult r = lp_minimize(lp_from_polyhedron(p), QVec(p.ambient_dim));
    return r.status == LpStatus::Infeasible;
}

bool contains_point(const Polyhedron& p, const QVec& x) {
    if (x.size() != p.ambient_dim) throw KernelError("DIMENSION_MISMATCH", "contains_point");
    for (const auto& c : p.inequalities)
        if (dot(c.normal, x) < c.offset) return false;
    for (const auto& c : p.equalities)
        if (dot(c.normal, x) != c.offset) return false;
    return true;
}

bool contains(const Polyhedron& outer, const Polyhedron& inner) {
    if (outer.ambient_dim != inner.ambient_dim)
        throw KernelError("DIMENSION_MISMATCH", "contains");
    if (is_empty(inner)) return true;
    LpProblem lp = lp_from_polyhedron(inner);
    for (const auto& c : outer.inequalities) {
        LpResult r = lp_minimize(lp, c.normal);
        if (r.status != LpStatus::Optimal || r.value < c.offset) return false;
    }
    for (const auto& c : outer.equalities) {
        LpResult lo = lp_minimize(lp, c.normal);
        if (lo.status != LpStatus::Optimal || lo.value != c.offset) return false;
        LpResult hi = lp_maximize(lp, c.normal);
        if (hi.status != LpStatus::Optimal || hi.value != c.offset) return false;
    }
    return true;
}

Polyhedron canonical(const Polyhedron& p) {
    const std::size_t dim = p.ambient_dim;

    // Gather constraints, primitive-scaled, zero rows resolved.
    std::vector<LinCon> ineqs, eqs;
    for (LinCon c : p.inequalities) {
        if (!normalize_con(c, false)) {
            if (c.offset > 0) return Polyhedron::empty(dim);
            continue;
        }
        ineqs.push_back(std::move(c));
    }
    for (LinCon c : p.equalities) {
        if (!normalize_con(c, true)) {
            if (c.offset != 0) return Polyhedron::empty(dim);
            continue;
        }
        eqs.push_back(std::move(c));
    }

    Polyhedron work;
    work.ambient_dim = dim;
    work.inequalities = ineqs;
    work.equalities = eqs;
    if (is_empty(work)) return Polyhedron::empty(dim);

    // Detect implicit equalities. First try a relative-interior LP: if some
    // point makes every inequality strict, none are implicit.
    LpProblem slack_lp;
    slack_lp.num_vars = dim + 1;
    for (const auto& c : ineqs) {
        QVec row = c.normal;
        row.push_back(Rat(-1));
        slack_lp.add_ineq(std::move(row), c.offset);
    }
    {
        QVec t_row(dim + 1);
        t_row[dim] = -1;
        slack_lp.add_ineq(std::move(t_row), Rat(-1));  // t <= 1
    }
    for (const auto& c : eqs) {
        QVec row = c.normal;
        row.push_back(Rat(0));
        slack_lp.add_eq(std::move(row), c.offset);
    }
    QVec obj(dim + 1);
    obj[dim] = 1;
    LpResult ri = lp_maximize(slack_lp, obj);
    if (ri.status != LpStatus::Optimal) throw KernelError("INTERNAL", "relint LP failed");

    std::vector<LinCon> kept;
    if (ri.value > 0) {
        kept = std::move(ineqs);
    } else {
        QVec x0(ri.point.begin(), ri.point.begin() + dim);
        LpProblem base = lp_from_polyhedron(work);
        for (auto& c : ineqs) {
            if (dot(c.normal, x0) > c.offset) {
                kept.push_back(std::move(c));
                continue;
            }
            LpResult mx = lp_maximize(base, c.normal);
            if (mx.status == LpStatus::Optimal && mx.value == c.offset)
                eqs.push_back(std::move(c));  // implicit equality
            else
                kept.push_back(std::move(c));
        }
    }

    EqBasis basis = echelonize(eqs, dim);
    if (basis.infeasible) return Polyhedron::empty(dim);  // unreachable: feasibility checked

    // Reduce inequalities modulo the affine hull, drop vacuous, dedupe.
    std::vector<LinCon> reduced;
    for (LinCon c : kept) {
        reduce_mod_equalities(c, basis.rows, basis.pivots);
        if (!normalize_con(c, false)) continue;  // vacuous on the hull
        reduced.push_back(std::move(c));
    }
    std::sort(reduced.begin(), reduced.end(), lex_less);
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

    // Strip redundant inequalities (exact LP against the remaining system).
    std::vector<bool> removed(reduced.size(), false);
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        LpProblem lp;
        lp.num_vars = dim;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i && !removed[j]) lp.add_ineq(reduced[j].normal, reduced[j].offset);
        for (const auto& c : basis.rows) lp.add_eq(c.normal, c.offset);
        LpResult r = lp_minimize(lp, reduced[i].normal);
        if (r.status == LpStatus::Optimal && r.value >= reduced[i].offset) removed[i] = true;
    }

    Polyhedron out;
    out.ambient_dim = dim;
    for (std::size_t i = 0; i < reduced.size(); ++i)
        if (!removed[i]) out.inequalities.push_back(std::move(reduced[i]));
    out.equalities = std::move(basis.rows);
    std::sort(out.equalities.begin(), out.equalities.end(), lex_less);
    return out;
}

bool equal_sets(const Polyhedron& p, const Polyhedron& q) {
    if (p.ambient_dim != q.ambient_dim) return false;
    return canonical(p) == canonical(q);
}

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
    if (p.ambient_dim != q.ambient_dim) throw KernelError("DIMENSION_MISMATCH", "intersect");
    Polyhedron r = p;
    r.inequalities.insert(r.inequalities.end(), q.inequalities.begin(), q.inequalities.end());
    r.equalities.insert(r.equalities.end(), q.equalities.begin(), q.equalities.end());
    return r;
}

namespace {

QVec padded(const QVec& v, std::size_t offset, std::size_t total) {
    QVec r(total);
    std::copy(v.begin(), v.end(), r.begin() + offset);
    return r;
}

}  // namespace

Polyhedron product(const Polyhedron& p, const Polyhedron& q) {
    Polyhedron r;
    r.ambient_dim = p.ambient_dim + q.ambient_dim;
    for (const auto& c : p.inequalities) r.inequalities.push_back({padded(c.normal, 0, r.ambient_dim), c.offset});
    for (const auto& c : p.equalities) r.equalities.push_back({padded(c.normal, 0, r.ambient_dim), c.offset});
    for (const auto& c : q.inequalities)
        r.inequalities.push_back({padded(c.normal, p.ambient_dim, r.ambient_dim), c.offset});
    for (const auto& c : q.equalities)
        r.equalities.push_back({padded(c.normal, p.ambient_dim, r.ambient_dim), c.offset});
    return r;
}

namespace {

// Drop constraints made redundant by the others (cheap trim used between
// elimination steps; exactness does not depend on it).
void trim_redundant(std::vector<LinCon>& ineqs, const std::vector<LinCon>& eqs,
                    std::size_t dim) {
    std::sort(ineqs.begin(), ineqs.end(), lex_less);
    ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());
    std::vector<bool> removed(ineqs.size(), false);
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
        LpProblem lp;
        lp.num_vars = dim;
        for (std::size_t j = 0; j < ineqs.size(); ++j)
            if (j != i && !removed[j]) lp.add_ineq(ineqs[j].normal, ineqs[j].offset);
        for (const auto& c : eqs) lp.add_eq(c.normal, c.offset);
        LpResult r = lp_minimize(lp, ineqs[i].normal);
        if (r.status == LpStatus::Optimal && r.value >= ineqs[i].offset) removed[i] = true;
    }
    std::vector<LinCon> kept;
    for (std::size_t i = 0; i < ineqs.size(); ++i)
        if (!removed[i]) kept.push_back(std::move(ineqs[i]));
    ineqs = std::move(kept);
}

}  // namespace

Polyhedron eliminate_coords(const Polyhedron& p, std::vector<std::size_t> coords) {
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    for (auto c : coords)
        if (c >= p.ambient_dim) throw KernelError("DIMENSION_MISMATCH", "eliminate_coords");

    std::vector<LinCon> ineqs = p.inequalities, eqs = p.equalities;
    const std::size_t dim = p.ambient_dim;

    for (std::size_t k : coords) {
        // Prefer an equality pivot.
        std::size_t pivot = eqs.size();
        for (std::size_t i = 0; i < eqs.size(); ++i)
            if (eqs[i].normal[k] != 0) {
                pivot = i;
                break;
            }
        if (pivot < eqs.size()) {
            LinCon pe = eqs[pivot];
            eqs.erase(eqs.begin() + pivot);
            auto substitute = [&](LinCon& c) {
                if (c.normal[k] == 0) return;
                Rat f = c.normal[k] / pe.normal[k];
                for (std::size_t j = 0; j < dim; ++j) c.normal[j] -= f * pe.normal[j];
                c.offset -= f * pe.offset;
            };
            for (auto& c : ineqs) substitute(c);
            for (auto& c : eqs) substitute(c);
        } else {
            std::vector<LinCon> pos, neg, zero;
            for (auto& c : ineqs) {
                if (c.normal[k] > 0)
                    pos.push_back(std::move(c));
                else if (c.normal[k] < 0)
                    neg.push_back(std::move(c));
                else
                    zero.push_back(std::move(c));
            }
            ineqs = std::move(zero);
            for (const auto& a : pos)
                for (const auto& b : neg) {
                    Rat ca = -b.normal[k], cb = a.normal[k];
                    LinCon c{QVec(dim), ca * a.offset + cb * b.offset};
                    for (std::size_t j = 0; j < dim; ++j)
                        c.normal[j] = ca * a.normal[j] + cb * b.normal[j];
                    if (normalize_con(c, false))
                        ineqs.push_back(std::move(c));
                    else if (c.offset > 0)
                        return Polyhedron::empty(dim - coords.size());
                }
        }
        // Normalize and trim between steps to keep the system small.
        std::vector<LinCon> cleaned;
        for (LinCon c : ineqs) {
            if (!normalize_con(c, false)) {
                if (c.offset > 0) return Polyhedron::empty(dim - coords.size());
                continue;
            }
            cleaned.push_back(std::move(c));
        }
        ineqs = std::move(cleaned);
        if (ineqs.size() > 2 * dim) trim_redundant(ineqs, eqs, dim);
    }

    // Drop the eliminated columns (their coefficients are all zero now).
    std::vector<bool> drop(dim, false);
    for (auto c : coords) drop[c] = true;
    auto shrink = [&](const LinCon& c) {
        LinCon r;
        r.offset = c.offset;
        for (std::size_t j = 0; j < dim; ++j)
            if (!drop[j]) r.normal.push_back(c.normal[j]);
        return r;
    };
    Polyhedron out;
    out.ambient_dim = dim - coords.size();
    for (const auto& c : ineqs) out.inequalities.push_back(shrink(c));
    for (const auto& c : eqs) out.equalities.push_back(shrink(c));
    return canonical(out);
}

std::optional<QVec> any_point(const Polyhedron& p) {
    LpResult r = lp_minimize(lp_from_polyhedron(p), QVec(p.ambient_dim));
    if (r.status != LpStatus::Optimal) return std::nullopt;
    return r.point;
}

std::optional<QVec> relative_interior_point(const Polyhedron& p) {
    Polyhedron c = canonical(p);
    if (!c.equalities.empty() && is_zero(c.equalities.front().normal)) return std::nullopt;
    LpProblem lp;
    lp.num_vars = c.ambient_dim + 1;
    for (const auto& con : c.inequalities) {
        QVec row = con.normal;
        row.push_back(Rat(-1));
        lp.add_ineq(std::move(row), con.offset);
    }
    QVec t_row(c.ambient_dim + 1);
    t_row[c.ambient_dim] = -1;
    lp.add_ineq(std::move(t_row), Rat(-1));
    for (const auto& con : c.equalities) {
        QVec row = con.normal;
        row.push_back(Rat(0));
        lp.add_eq(std::move(row), con.offset);
    }
    QVec obj(c.ambient_dim + 1);
    obj[c.ambient_dim] = 1;
    LpResult r = lp_maximize(lp, obj);
    if (r.status != LpStatus::Optimal || r.value <= 0)
        throw KernelError("INTERNAL", "no strict interior after canonicalization");
    return QVec(r.point.begin(), r.point.begin() + c.ambient_dim);
}

Polyhedron minimal_face_at(const Polyhedron& p, const QVec& x) {
    if (!contains_point(p, x)) throw KernelError("PRECONDITION", "minimal_face_at: point outside");
    Polyhedron c = canonical(p);
    Polyhedron out;
    out.ambient_dim = c.ambient_dim;
    out.equalities = c.equalities;
    for (const auto& con : c.inequalities) {
        if (dot(con.normal, x) == con.offset)
            out.equalities.push_back(con);
        else
            out.inequalities.push_back(con);
    }
    return canonical(out);
}

QMat direction_lattice(const Polyhedron& p) {
    Polyhedron c = canonical(p);
    if (!c.equalities.empty() && is_zero(c.equalities.front().normal))
        throw KernelError("PRECONDITION", "direction_lattice of empty polyhedron");
    QMat m(c.equalities.size(), c.ambient_dim);
    for (std::size_t i = 0; i < c.equalities.size(); ++i) m.set_row(i, c.equalities[i].normal);
    return integral_kernel_basis(m);
}

}  // namespace tropext
