#include "tropext/extension.hpp"

namespace tropext {

namespace {

Polyhedron orthant2() { return Polyhedron::nonneg_orthant(2); }

AffineMap ab_sum() {
    QMat lin(1, 2);
    lin.at(0, 0) = 1;
    lin.at(0, 1) = 1;
    return AffineMap(std::move(lin), {Rat(0)});
}

AffineMap zero_map(std::size_t source_dim) { return AffineMap::constant(source_dim, {Rat(0)}); }

// Section of the node polyhedron over a base point: t -> (q, t, rho(q) - t).
AffineMap node_section(const QVec& q, const Rat& len) {
    std::size_t n = q.size();
    QMat lin(n + 2, 1);
    QVec tr(n + 2);
    for (std::size_t i = 0; i < n; ++i) tr[i] = q[i];
    lin.at(n, 0) = 1;
    lin.at(n + 1, 0) = -1;
    tr[n + 1] = len;
    return AffineMap(std::move(lin), std::move(tr));
}

AffineMap leg_section(const QVec& q) {
    std::size_t n = q.size();
    QMat lin(n + 1, 1);
    QVec tr(n + 1);
    for (std::size_t i = 0; i < n; ++i) tr[i] = q[i];
    lin.at(n, 0) = 1;
    return AffineMap(std::move(lin), std::move(tr));
}

}  // namespace

ValidationReport validate_extension(const CurveType& c, const ExtendedStructure& s) {
    ValidationReport r;
    if (s.vertex_data.size() != c.vertices.size() || s.edge_data.size() != c.edges.size() ||
        s.leg_data.size() != c.legs.size()) {
        r.record("shape", "", false, "object counts do not match the curve type");
        return r;
    }
    const std::size_t n = s.base.ambient_dim;
    bool base_ok = !is_empty(s.base) && s.basepoint.size() == n &&
                   contains_point(s.base, s.basepoint);
    r.record("base_and_basepoint", "", base_ok,
             base_ok ? "" : "base empty or basepoint outside base");
    if (!base_ok) return r;

    std::vector<AffineMap> iso_inv(c.vertices.size(), AffineMap());
    std::vector<bool> iso_ok(c.vertices.size(), false);

    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        const auto& vd = s.vertex_data[v];
        const auto& vert = c.vertices[v];
        auto cert = (vd.iso_to_base.source_dim == vd.poly.ambient_dim &&
                     vd.iso_to_base.target_dim == n)
                        ? is_iso_onto_face(vd.iso_to_base, vd.poly, s.base)
                        : std::nullopt;
        bool ok = cert && equal_sets(cert->face, s.base);
        r.record("vertex_iso_to_base", vert.id, ok,
                 ok ? "" : "iso_to_base is not an isomorphism onto the whole base");
        if (!ok) continue;
        iso_inv[v] = cert->inverse_on_face;
        iso_ok[v] = true;
        bool nat_ok = vd.nat.source_dim == vd.poly.ambient_dim &&
                      vd.nat.target_dim == vert.stratum.polytope.ambient_dim &&
                      vd.nat.integral() &&
                      contains(vert.stratum.polytope, image(vd.poly, vd.nat));
        r.record("vertex_nat_in_stratum", vert.id, nat_ok);
        QVec fiber_pt = iso_inv[v].apply(s.basepoint);
        bool pos_ok = nat_ok && vd.nat.apply(fiber_pt) == vert.position;
        r.record("basepoint_fiber_position", vert.id, pos_ok,
                 pos_ok ? "" : "fiber over the basepoint does not sit at the curve's position");
    }

    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        const auto& ed = s.edge_data[e];
        const auto& edge = c.edges[e];
        bool rho_ok = ed.rho.source_dim == n && ed.rho.target_dim == 1 && ed.rho.integral() &&
                      contains(Polyhedron::ray_from(Rat(0)), image(s.base, ed.rho));
        r.record("rho_nonnegative", edge.id, rho_ok);
        if (!rho_ok) continue;
        auto fp = fiber_product(s.base, ed.rho, orthant2(), ab_sum());
        bool node_ok = ed.node_poly.ambient_dim == n + 2 && equal_sets(ed.node_poly, fp.poly);
        r.record("node_is_fiber_product", edge.id, node_ok,
                 node_ok ? "" : "node polyhedron differs from the declared fiber product");
        if (!node_ok) continue;

        bool rho_len = ed.rho.apply(s.basepoint) == QVec{edge.length};
        r.record("basepoint_fiber_length", edge.id, rho_len,
                 rho_len ? "" : "rho at the basepoint is not the edge length");

        for (int k = 0; k < 2; ++k) {
            std::size_t v = c.vertex_index(edge.flags[k].vertex);
            if (!iso_ok[v]) continue;
            const auto& vd = s.vertex_data[v];
            const auto& fm = ed.flag_map[k];
            std::string obj = edge.id + "/flag" + std::to_string(k);
            if (fm.source_dim != vd.poly.ambient_dim || fm.target_dim != n + 2) {
                r.record("flag_map_form", obj, false, "dimension mismatch");
                continue;
            }
            AffineMap rho_iso = compose(ed.rho, vd.iso_to_base);
            AffineMap expect =
                k == 0 ? pair(vd.iso_to_base, pair(zero_map(fm.source_dim), rho_iso))
                       : pair(vd.iso_to_base, pair(rho_iso, zero_map(fm.source_dim)));
            bool form_ok = maps_agree_on(vd.poly, fm, expect);
            r.record("flag_map_form", obj, form_ok,
                     form_ok ? ""
                             : "flag map is not the canonical face section (flag 0 on {a=0}, "
                               "flag 1 on {b=0})");
            bool face_ok = form_ok && is_iso_onto_face(fm, vd.poly, ed.node_poly).has_value();
            r.record("flag_map_face_iso", obj, face_ok);
            bool nat_ok = ed.nat.source_dim == n + 2 &&
                          ed.nat.target_dim == edge.stratum.polytope.ambient_dim &&
                          ed.nat.integral() &&
                          maps_agree_on(vd.poly, compose(ed.nat, fm),
                                        compose(edge.flags[k].germ, vd.nat));
            r.record("edge_naturality", obj, nat_ok,
                     nat_ok ? "" : "nat does not commute with the germ through the flag map");
        }
        bool img_ok = ed.nat.source_dim == n + 2 &&
                      ed.nat.target_dim == edge.stratum.polytope.ambient_dim &&
                      ed.nat.integral() &&
                      contains(edge.stratum.polytope, image(ed.node_poly, ed.nat));
        r.record("edge_nat_in_stratum", edge.id, img_ok);
        if (img_ok && rho_len) {
            AffineMap sec = node_section(s.basepoint, edge.length);
            bool traj_ok = maps_agree_on(Polyhedron::interval(Rat(0), edge.length),
                                         compose(ed.nat, sec), edge.trajectory);
            r.record("basepoint_fiber_trajectory", edge.id, traj_ok,
                     traj_ok ? "" : "fiber trajectory over the basepoint differs from the curve");
        }
    }

    for (std::size_t l = 0; l < c.legs.size(); ++l) {
        const auto& ld = s.leg_data[l];
        const auto& leg = c.legs[l];
        bool poly_ok = ld.poly.ambient_dim == n + 1 &&
                       equal_sets(ld.poly, product(s.base, Polyhedron::ray_from(Rat(0))));
        r.record("leg_poly_product", leg.id, poly_ok,
                 poly_ok ? "" : "leg polyhedron is not base x [0,inf)");
        if (!poly_ok) continue;
        std::size_t v = c.vertex_index(leg.vertex);
        if (iso_ok[v]) {
            const auto& vd = s.vertex_data[v];
            AffineMap expect = pair(vd.iso_to_base, zero_map(vd.poly.ambient_dim));
            bool form_ok = ld.leg_map.source_dim == vd.poly.ambient_dim &&
                           ld.leg_map.target_dim == n + 1 &&
                           maps_agree_on(vd.poly, ld.leg_map, expect);
            r.record("leg_map_form", leg.id, form_ok,
                     form_ok ? "" : "leg map is not the zero section");
            bool nat_ok = ld.nat.source_dim == n + 1 &&
                          ld.nat.target_dim == leg.stratum.polytope.ambient_dim &&
                          ld.nat.integral() &&
                          maps_agree_on(vd.poly, compose(ld.nat, ld.leg_map),
                                        compose(leg.germ, vd.nat));
            r.record("leg_naturality", leg.id, nat_ok);
        }
        bool img_ok = ld.nat.source_dim == n + 1 &&
                      ld.nat.target_dim == leg.stratum.polytope.ambient_dim &&
                      ld.nat.integral() && contains(leg.stratum.polytope, image(ld.poly, ld.nat));
        r.record("leg_nat_in_stratum", leg.id, img_ok);
        if (img_ok) {
            bool traj_ok = maps_agree_on(Polyhedron::ray_from(Rat(0)),
                                         compose(ld.nat, leg_section(s.basepoint)),
                                         leg.trajectory);
            r.record("basepoint_fiber_trajectory", leg.id, traj_ok);
        }
    }

    return r;
}

ExtendedStructure trivial_extension(const CurveType& c) {
    ExtendedStructure s;
    s.base = Polyhedron::full(0);
    s.basepoint = {};
    for (const auto& v : c.vertices) {
        ExtendedStructure::VertexData vd;
        vd.poly = Polyhedron::full(0);
        vd.iso_to_base = AffineMap::identity(0);
        vd.nat = AffineMap::constant(0, v.position);
        s.vertex_data.push_back(std::move(vd));
    }
    for (const auto& e : c.edges) {
        ExtendedStructure::EdgeData ed;
        ed.rho = AffineMap::constant(0, {e.length});
        ed.node_poly = fiber_product(s.base, ed.rho, orthant2(), ab_sum()).poly;
        ed.flag_map[0] = AffineMap::constant(0, {Rat(0), e.length});
        ed.flag_map[1] = AffineMap::constant(0, {e.length, Rat(0)});
        // nat on {a + b = l}: interpolate from the fiber parametrization.
        AffineMap sec = node_section({}, e.length);
        ed.nat = affine_interpolate(
            {{sec, Polyhedron::interval(Rat(0), e.length), e.trajectory}}, ed.node_poly);
        s.edge_data.push_back(std::move(ed));
    }
    for (const auto& l : c.legs) {
        ExtendedStructure::LegData ld;
        ld.poly = Polyhedron::ray_from(Rat(0));
        ld.leg_map = AffineMap::constant(0, {Rat(0)});
        ld.nat = l.trajectory;
        s.leg_data.push_back(std::move(ld));
    }
    return s;
}

CurveType fiber_at(const CurveType& c, const ExtendedStructure& s, const QVec& q) {
    if (!contains_point(s.base, q)) throw KernelError("PRECONDITION", "fiber point outside base");
    std::string zero_edges;
    std::vector<Rat> lengths;
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        Rat len = s.edge_data[e].rho.apply(q)[0];
        if (len == 0) zero_edges += (zero_edges.empty() ? "" : ", ") + c.edges[e].id;
        lengths.push_back(std::move(len));
    }
    if (!zero_edges.empty()) throw KernelError("ZERO_LENGTH_EDGE", zero_edges);

    CurveType out = c;
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        auto cert = is_iso_onto_face(s.vertex_data[v].iso_to_base, s.vertex_data[v].poly, s.base);
        if (!cert) throw KernelError("PRECONDITION", "vertex iso not invertible");
        out.vertices[v].position =
            s.vertex_data[v].nat.apply(cert->inverse_on_face.apply(q));
    }
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        out.edges[e].length = lengths[e];
        out.edges[e].trajectory =
            compose(s.edge_data[e].nat, node_section(q, lengths[e]));
    }
    for (std::size_t l = 0; l < c.legs.size(); ++l)
        out.legs[l].trajectory = compose(s.leg_data[l].nat, leg_section(q));
    return out;
}

ExtendedStructure normalize_extension(ExtendedStructure s) {
    s.base = canonical(s.base);
    for (auto& v : s.vertex_data) v.poly = canonical(v.poly);
    for (auto& e : s.edge_data) e.node_poly = canonical(e.node_poly);
    for (auto& l : s.leg_data) l.poly = canonical(l.poly);
    return s;
}

bool equivalent_extensions(const CurveType& c, const ExtendedStructure& a,
                           const ExtendedStructure& b) {
    if (a.vertex_data.size() != b.vertex_data.size() ||
        a.edge_data.size() != b.edge_data.size() || a.leg_data.size() != b.leg_data.size())
        return false;
    if (!equal_sets(a.base, b.base) || a.basepoint != b.basepoint) return false;
    for (std::size_t v = 0; v < a.vertex_data.size(); ++v) {
        const auto& x = a.vertex_data[v];
        const auto& y = b.vertex_data[v];
        if (!equal_sets(x.poly, y.poly)) return false;
        if (!maps_agree_on(x.poly, x.iso_to_base, y.iso_to_base)) return false;
        if (!maps_agree_on(x.poly, x.nat, y.nat)) return false;
    }
    for (std::size_t e = 0; e < a.edge_data.size(); ++e) {
        const auto& x = a.edge_data[e];
        const auto& y = b.edge_data[e];
        if (!maps_agree_on(a.base, x.rho, y.rho)) return false;
        if (!equal_sets(x.node_poly, y.node_poly)) return false;
        for (int k = 0; k < 2; ++k) {
            const auto& vp = a.vertex_data[c.vertex_index(c.edges[e].flags[k].vertex)].poly;
            if (!maps_agree_on(vp, x.flag_map[k], y.flag_map[k])) return false;
        }
        if (!maps_agree_on(x.node_poly, x.nat, y.nat)) return false;
    }
    for (std::size_t l = 0; l < a.leg_data.size(); ++l) {
        const auto& x = a.leg_data[l];
        const auto& y = b.leg_data[l];
        if (!equal_sets(x.poly, y.poly)) return false;
        const auto& vp = a.vertex_data[c.vertex_index(c.legs[l].vertex)].poly;
        if (!maps_agree_on(vp, x.leg_map, y.leg_map)) return false;
        if (!maps_agree_on(x.poly, x.nat, y.nat)) return false;
    }
    return true;
}

}  // namespace tropext
