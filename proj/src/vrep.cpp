#include "tropext/vrep.hpp"

#include <algorithm>

namespace tropext {

namespace {

// Double description state for a cone { y : a_i . y >= 0 (or = 0) } in R^d.
// Lines always lie in every processed hyperplane; rays carry the set of
// processed constraints they satisfy with equality (for the adjacency test).
struct RayRec {
    QVec v;
    std::vector<bool> tight;
};

struct DDState {
    std::size_t dim;
    std::vector<QVec> lines;
    std::vector<RayRec> rays;
    std::size_t processed = 0;

    void init(std::size_t d) {
        dim = d;
        for (std::size_t i = 0; i < d; ++i) {
            QVec e(d);
            e[i] = 1;
            lines.push_back(std::move(e));
        }
    }

    void add_constraint(const QVec& a, bool equality) {
        // Line pivot: a line leaving the hyperplane absorbs the constraint.
        std::size_t li = lines.size();
        for (std::size_t i = 0; i < lines.size(); ++i)
            if (dot(a, lines[i]) != 0) {
                li = i;
                break;
            }
        if (li < lines.size()) {
            QVec l = lines[li];
            Rat al = dot(a, l);
            if (al < 0) {
                for (auto& c : l) c = -c;
                al = -al;
            }
            lines.erase(lines.begin() + li);
            for (auto& m : lines) {
                Rat f = dot(a, m) / al;
                if (f != 0) m = vec_sub(m, vec_scale(f, l));
            }
            for (auto& r : rays) {
                Rat f = dot(a, r.v) / al;
                if (f != 0) r.v = vec_sub(r.v, vec_scale(f, l));
                r.tight.push_back(true);
            }
            if (!equality) {
                RayRec nr{primitive_scale(l), std::vector<bool>(processed, true)};
                nr.tight.push_back(false);
                rays.push_back(std::move(nr));
            }
            ++processed;
            return;
        }

        std::vector<std::size_t> pos, neg;
        std::vector<RayRec> next;
        std::vector<Rat> val(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            if (val[i] > 0)
                pos.push_back(i);
            else if (val[i] < 0)
                neg.push_back(i);
        }
        auto keep = [&](std::size_t i) {
            RayRec r = rays[i];
            r.tight.push_back(val[i] == 0);
            next.push_back(std::move(r));
        };
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] == 0) keep(i);
            else if (val[i] > 0 && !equality) keep(i);
        }
        // Combine adjacent positive/negative pairs onto the hyperplane.
        for (std::size_t p : pos)
            for (std::size_t n : neg) {
                std::vector<bool> common(processed);
                for (std::size_t k = 0; k < processed; ++k)
                    common[k] = rays[p].tight[k] && rays[n].tight[k];
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
                    if (o == p || o == n) continue;
                    bool superset = true;
                    for (std::size_t k = 0; k < processed && superset; ++k)
                        if (common[k] && !rays[o].tight[k]) superset = false;
                    if (superset) adjacent = false;
                }
                if (!adjacent) continue;
                QVec w = vec_sub(vec_scale(val[p], rays[n].v), vec_scale(val[n], rays[p].v));
                common.push_back(true);
                next.push_back({primitive_scale(w), std::move(common)});
            }
        rays = std::move(next);
        ++processed;
    }
};

bool lex_vec_less(const QVec& a, const QVec& b) { return a < b; }

// Reduce v modulo the row-echelon line basis so representatives are unique.
QVec reduce_mod_lines(QVec v, const QMat& lines_rref, const std::vector<std::size_t>& pivots) {
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Rat f = v[pivots[r]] / lines_rref.at(r, pivots[r]);
        if (f == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * lines_rref.at(r, j);
    }
    return v;
}

}  // namespace

VRep enumerate_vrep(const Polyhedron& p) {
    const std::size_t d = p.ambient_dim;
    VRep out;
    out.ambient_dim = d;

    // Homogenize: y = (t, x), inequality n.x >= b becomes (-b, n).y >= 0.
    DDState dd;
    dd.init(d + 1);
    {
        QVec t_pos(d + 1);
        t_pos[0] = 1;
        dd.add_constraint(t_pos, false);  // t >= 0
    }
    for (const auto& c : p.equalities) {
        QVec a(d + 1);
        a[0] = -c.offset;
        for (std::size_t j = 0; j < d; ++j) a[j + 1] = c.normal[j];
        dd.add_constraint(a, true);
    }
    for (const auto& c : p.inequalities) {
        QVec a(d + 1);
        a[0] = -c.offset;
        for (std::size_t j = 0; j < d; ++j) a[j + 1] = c.normal[j];
        dd.add_constraint(a, false);
    }

    // Lines all have t = 0 (the t >= 0 constraint holds with equality on them).
    QMat lmat(dd.lines.size(), d);
    for (std::size_t i = 0; i < dd.lines.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) lmat.at(i, j) = dd.lines[i][j + 1];
    auto lpivots = rref(lmat);
    for (std::size_t r = 0; r < lpivots.size(); ++r) {
        QVec row = lmat.row(r);
        row = primitive_scale(row);
        out.lines.push_back(std::move(row));
    }

    for (const auto& r : dd.rays) {
        QVec x(d);
        for (std::size_t j = 0; j < d; ++j) x[j] = r.v[j + 1];
        if (r.v[0] > 0) {
            for (auto& q : x) q /= r.v[0];
            out.vertices.push_back(reduce_mod_lines(std::move(x), lmat, lpivots));
        } else {
            x = primitive_scale(reduce_mod_lines(std::move(x), lmat, lpivots));
            if (!is_zero(x)) out.rays.push_back(std::move(x));
        }
    }

    if (out.vertices.empty()) return VRep{d, {}, {}, {}};  // empty polyhedron

    std::sort(out.vertices.begin(), out.vertices.end(), lex_vec_less);
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    std::sort(out.rays.begin(), out.rays.end(), lex_vec_less);
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    std::sort(out.lines.begin(), out.lines.end(), lex_vec_less);
    return out;
}

Polyhedron hull_from_vrep(const VRep& v) {
    const std::size_t d = v.ambient_dim;
    if (v.empty()) return Polyhedron::empty(d);
    const std::size_t nv = v.vertices.size(), nr = v.rays.size(), nl = v.lines.size();
    const std::size_t total = d + nv + nr + 2 * nl;  // lines split into two rays

    Polyhedron graph;
    graph.ambient_dim = total;
    // x = sum lambda_i v_i + sum mu_j r_j + sum (s_k - s'_k) l_k
    for (std::size_t c = 0; c < d; ++c) {
        QVec n(total);
        n[c] = 1;
        for (std::size_t i = 0; i < nv; ++i) n[d + i] = -v.vertices[i][c];
        for (std::size_t j = 0; j < nr; ++j) n[d + nv + j] = -v.rays[j][c];
        for (std::size_t k = 0; k < nl; ++k) {
            n[d + nv + nr + k] = -v.lines[k][c];
            n[d + nv + nr + nl + k] = v.lines[k][c];
        }
        graph.add_equality(std::move(n), Rat(0));
    }
    {
        QVec n(total);
        for (std::size_t i = 0; i < nv; ++i) n[d + i] = 1;
        graph.add_equality(std::move(n), Rat(1));
    }
    for (std::size_t i = 0; i < nv + nr + 2 * nl; ++i) {
        QVec n(total);
        n[d + i] = 1;
        graph.add_inequality(std::move(n), Rat(0));
    }
    std::vector<std::size_t> drop;
    for (std::size_t i = d; i < total; ++i) drop.push_back(i);
    return eliminate_coords(graph, drop);
}

}  // namespace tropext
