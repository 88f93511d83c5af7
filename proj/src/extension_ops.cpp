#include "tropext/extension_ops.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropext {

namespace {

Polyhedron orthant2() { return Polyhedron::nonneg_orthant(2); }

AffineMap ab_sum() {
    QMat lin(1, 2);
    lin.at(0, 0) = 1;
    lin.at(0, 1) = 1;
    return AffineMap(std::move(lin), {Rat(0)});
}

AffineMap iso_inverse(const AffineMap& iso, const Polyhedron& src, const Polyhedron& dst) {
    auto cert = is_iso_onto_face(iso, src, dst);
    if (!cert || !equal_sets(cert->face, dst))
        throw KernelError("PRECONDITION", "map is not an isomorphism onto the base");
    return cert->inverse_on_face;
}

AffineMap germ_inverse(const Flag& fl, const Polyhedron& vertex_poly,
                       const Polyhedron& edge_poly) {
    auto cert = is_iso_onto_face(fl.germ, vertex_poly, edge_poly);
    if (!cert) throw KernelError("PRECONDITION", "germ is not an isomorphism onto a face");
    return cert->inverse_on_face;
}

}  // namespace

ExtendedStructure pullback_extension(const CurveType& c, const ExtendedStructure& s,
                                     const AffineMap& m, const Polyhedron& new_base,
                                     const QVec& new_basepoint) {
    if (m.source_dim != new_base.ambient_dim || m.target_dim != s.base.ambient_dim)
        throw KernelError("DIMENSION_MISMATCH", "pullback_extension");
    if (!m.integral()) throw KernelError("NON_INTEGRAL", "pullback map");
    if (is_empty(new_base)) throw KernelError("PRECONDITION", "empty pullback base");
    if (!contains(s.base, image(new_base, m)))
        throw KernelError("PRECONDITION", "pullback map leaves the base");
    if (!contains_point(new_base, new_basepoint) || m.apply(new_basepoint) != s.basepoint)
        throw KernelError("BASEPOINT_MISMATCH", "new basepoint does not map to the basepoint");

    const std::size_t n = new_base.ambient_dim;
    ExtendedStructure out;
    out.base = canonical(new_base);
    out.basepoint = new_basepoint;
    AffineMap id = AffineMap::identity(n);

    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        const auto& vd = s.vertex_data[v];
        AffineMap inv = iso_inverse(vd.iso_to_base, vd.poly, s.base);
        ExtendedStructure::VertexData nd;
        nd.poly = out.base;
        nd.iso_to_base = id;
        nd.nat = compose(vd.nat, compose(inv, m));
        out.vertex_data.push_back(std::move(nd));
    }
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        const auto& ed = s.edge_data[e];
        ExtendedStructure::EdgeData nd;
        nd.rho = compose(ed.rho, m);
        nd.node_poly = fiber_product(out.base, nd.rho, orthant2(), ab_sum()).poly;
        nd.flag_map[0] = pair(id, pair(AffineMap::constant(n, {Rat(0)}), nd.rho));
        nd.flag_map[1] = pair(id, pair(nd.rho, AffineMap::constant(n, {Rat(0)})));
        nd.nat = compose(ed.nat, direct_sum(m, AffineMap::identity(2)));
        out.edge_data.push_back(std::move(nd));
    }
    for (std::size_t l = 0; l < c.legs.size(); ++l) {
        const auto& ld = s.leg_data[l];
        ExtendedStructure::LegData nd;
        nd.poly = product(out.base, Polyhedron::ray_from(Rat(0)));
        nd.leg_map = pair(id, AffineMap::constant(n, {Rat(0)}));
        nd.nat = compose(ld.nat, direct_sum(m, AffineMap::identity(1)));
        out.leg_data.push_back(std::move(nd));
    }
    return out;
}

ClassifyingMap classify(const CurveType& c, const UniversalExtension& u,
                        const ExtendedStructure& s) {
    // The map is forced: vertex components are the transported basepoint
    // positions, edge components the rho's.
    AffineMap joint = AffineMap::constant(s.base.ambient_dim, {});
    bool first = true;
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        const auto& vd = s.vertex_data[v];
        AffineMap inv = iso_inverse(vd.iso_to_base, vd.poly, s.base);
        AffineMap comp = compose(vd.nat, inv);
        joint = first ? comp : pair(joint, comp);
        first = false;
    }
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        joint = first ? s.edge_data[e].rho : pair(joint, s.edge_data[e].rho);
        first = false;
    }

    ClassifyingMap out;
    out.map = joint;
    if (joint.apply(s.basepoint) != u.basepoint)
        throw KernelError("NOT_AN_EXTENSION", "basepoint does not map to q_f");
    if (!contains(u.pu, image(s.base, joint)))
        throw KernelError("NOT_AN_EXTENSION", "classifying image leaves P_u");
    ExtendedStructure pb = pullback_extension(c, u.structure, joint, s.base, s.basepoint);
    bool cert = equivalent_extensions(c, pb, s);
    out.certificate.record("pullback_reproduces_input", "", cert);
    if (!cert)
        throw KernelError("NOT_AN_EXTENSION", "pullback along the classifying map differs");
    return out;
}

FaceRestriction face_restrict(const UniversalExtension& u, const CurveType& c,
                              const std::vector<std::string>& smoothed) {
    FaceRestriction fr;
    fr.smoothed_edges = smoothed;
    std::sort(fr.smoothed_edges.begin(), fr.smoothed_edges.end());
    fr.smoothed_edges.erase(std::unique(fr.smoothed_edges.begin(), fr.smoothed_edges.end()),
                            fr.smoothed_edges.end());

    std::vector<bool> in_s(c.edges.size(), false);
    for (const auto& id : fr.smoothed_edges) in_s[c.edge_index(id)] = true;

    // Forest check on the smoothed set.
    std::vector<std::size_t> root(c.vertices.size());
    for (std::size_t i = 0; i < root.size(); ++i) root[i] = i;
    auto find = [&](std::size_t i) {
        while (root[i] != i) i = root[i] = root[root[i]];
        return i;
    };
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        if (!in_s[e]) continue;
        std::size_t a = find(c.vertex_index(c.edges[e].flags[0].vertex));
        std::size_t b = find(c.vertex_index(c.edges[e].flags[1].vertex));
        if (a == b)
            throw KernelError("NEW_CYCLE",
                              "smoothing " + c.edges[e].id + " contracts a cycle");
        root[a] = b;
    }

    Polyhedron face = u.pu;
    for (std::size_t e = 0; e < c.edges.size(); ++e)
        if (in_s[e]) {
            QVec n(u.q.dim());
            n[u.q.edge_coord(e)] = 1;
            face.add_equality(std::move(n), Rat(0));
        }
    fr.face = canonical(face);
    auto w_opt = relative_interior_point(fr.face);
    if (!w_opt) throw KernelError("EMPTY_FACE", "no curve with the requested edges smoothed");
    fr.witness = *w_opt;
    for (std::size_t e = 0; e < c.edges.size(); ++e)
        if (!in_s[e] && fr.witness[u.q.edge_coord(e)] == 0)
            throw KernelError("NO_INTERIOR_WITNESS",
                              "every point of the face also kills edge " + c.edges[e].id);

    // Group vertices into contracted classes, ordered by smallest member.
    std::map<std::size_t, std::vector<std::size_t>> classes;
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        std::size_t r = find(v);
        auto& members = classes[r];
        members.push_back(v);
    }
    std::vector<std::vector<std::size_t>> class_list;
    std::vector<std::size_t> class_min;
    for (auto& [r, members] : classes) {
        std::sort(members.begin(), members.end());
        class_min.push_back(members.front());
        class_list.push_back(members);
    }
    // order classes by smallest original index
    std::vector<std::size_t> order(class_list.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return class_min[a] < class_min[b]; });

    fr.vertex_class.assign(c.vertices.size(), 0);
    fr.vertex_transport.assign(c.vertices.size(), AffineMap());

    auto pos_at = [&](std::size_t v) {
        QVec p(fr.witness.begin() + u.q.vertex_offset[v],
               fr.witness.begin() + u.q.vertex_offset[v] + u.q.vertex_dim[v]);
        return p;
    };

    CurveType out;
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const auto& members = class_list[order[oi]];
        for (std::size_t v : members) fr.vertex_class[v] = oi;

        if (members.size() == 1) {
            std::size_t v = members.front();
            Vertex nv = c.vertices[v];
            nv.position = pos_at(v);
            out.vertices.push_back(std::move(nv));
            fr.vertex_transport[v] =
                AffineMap::identity(c.vertices[v].stratum.polytope.ambient_dim);
            continue;
        }

        // Contracted tree: pick the smallest smoothed edge inside the class.
        std::size_t estar = c.edges.size();
        for (std::size_t e = 0; e < c.edges.size(); ++e)
            if (in_s[e] &&
                std::find(members.begin(), members.end(),
                          c.vertex_index(c.edges[e].flags[0].vertex)) != members.end()) {
                estar = e;
                break;
            }
        const Edge& es = c.edges[estar];
        std::size_t bstar = c.vertex_index(es.flags[0].vertex);

        // BFS over the contracted tree computing transports to/from b*'s stratum.
        std::size_t m = c.vertices.size();
        std::vector<bool> seen(m, false);
        // to_b[v]: stratum(v) -> stratum(b*);  from_b[v]: stratum(b*) -> stratum(v)
        std::vector<AffineMap> to_b(m), from_b(m);
        to_b[bstar] = AffineMap::identity(c.vertices[bstar].stratum.polytope.ambient_dim);
        from_b[bstar] = to_b[bstar];
        seen[bstar] = true;
        std::vector<std::size_t> queue = {bstar};
        while (!queue.empty()) {
            std::size_t cur = queue.back();
            queue.pop_back();
            for (std::size_t e = 0; e < c.edges.size(); ++e) {
                if (!in_s[e]) continue;
                for (int side = 0; side < 2; ++side) {
                    std::size_t a = c.vertex_index(c.edges[e].flags[side].vertex);
                    std::size_t b = c.vertex_index(c.edges[e].flags[1 - side].vertex);
                    if (a != cur || seen[b]) continue;
                    const Polyhedron& pa = c.vertices[a].stratum.polytope;
                    const Polyhedron& pb = c.vertices[b].stratum.polytope;
                    const Polyhedron& pe = c.edges[e].stratum.polytope;
                    AffineMap inv_a = germ_inverse(c.edges[e].flags[side], pa, pe);
                    AffineMap inv_b = germ_inverse(c.edges[e].flags[1 - side], pb, pe);
                    // step b -> a is inv_a . germ_b; step a -> b is inv_b . germ_a
                    to_b[b] = compose(to_b[a], compose(inv_a, c.edges[e].flags[1 - side].germ));
                    from_b[b] =
                        compose(compose(inv_b, c.edges[e].flags[side].germ), from_b[a]);
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }

        AffineMap inv_estar = germ_inverse(es.flags[0], c.vertices[bstar].stratum.polytope,
                                           es.stratum.polytope);
        QVec p = es.flags[0].germ.apply(pos_at(bstar));
        Polyhedron f_poly = minimal_face_at(es.stratum.polytope, p);

        Vertex merged;
        merged.id = c.vertices[members.front()].id;
        merged.stratum = {es.stratum.id + "@" + es.id, f_poly};
        merged.position = p;
        for (std::size_t v : members) {
            // R_v: merged stratum ambient -> stratum(v) ambient
            AffineMap r_v = compose(from_b[v], inv_estar);
            fr.vertex_transport[v] = r_v;
            AffineMap d_v = compose(es.flags[0].germ, to_b[v]);
            for (const auto& g : c.vertices[v].monodromy)
                merged.monodromy.push_back(compose(d_v, compose(g, r_v)));
        }
        out.vertices.push_back(std::move(merged));
    }

    // Kept edges.
    fr.edge_map.assign(c.edges.size(), std::size_t(-1));
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        if (in_s[e]) continue;
        const auto& ed = u.structure.edge_data[e];
        Edge ne = c.edges[e];
        Rat len = fr.witness[u.q.edge_coord(e)];
        ne.length = len;
        // Fiber trajectory over the witness: t -> nat(w, t, len - t).
        {
            std::size_t n = u.q.dim();
            QMat lin(n + 2, 1);
            QVec tr(n + 2);
            for (std::size_t i = 0; i < n; ++i) tr[i] = fr.witness[i];
            lin.at(n, 0) = 1;
            lin.at(n + 1, 0) = -1;
            tr[n + 1] = len;
            ne.trajectory = compose(ed.nat, AffineMap(std::move(lin), std::move(tr)));
        }
        for (int k = 0; k < 2; ++k) {
            std::size_t v = c.vertex_index(c.edges[e].flags[k].vertex);
            ne.flags[k].vertex = out.vertices[fr.vertex_class[v]].id;
            ne.flags[k].germ = compose(c.edges[e].flags[k].germ, fr.vertex_transport[v]);
        }
        fr.edge_map[e] = out.edges.size();
        out.edges.push_back(std::move(ne));
    }

    for (std::size_t l = 0; l < c.legs.size(); ++l) {
        const auto& ld = u.structure.leg_data[l];
        Leg nl = c.legs[l];
        std::size_t v = c.vertex_index(c.legs[l].vertex);
        nl.vertex = out.vertices[fr.vertex_class[v]].id;
        nl.germ = compose(c.legs[l].germ, fr.vertex_transport[v]);
        {
            std::size_t n = u.q.dim();
            QMat lin(n + 1, 1);
            QVec tr(n + 1);
            for (std::size_t i = 0; i < n; ++i) tr[i] = fr.witness[i];
            lin.at(n, 0) = 1;
            nl.trajectory = compose(ld.nat, AffineMap(std::move(lin), std::move(tr)));
        }
        out.legs.push_back(std::move(nl));
    }

    fr.contracted_curve = std::move(out);
    auto rep = validate_curve_type(fr.contracted_curve);
    if (!rep.passed()) {
        std::string why;
        for (const auto& en : rep.entries)
            if (!en.pass) {
                why = en.check + " (" + en.object + "): " + en.detail;
                break;
            }
        throw KernelError("INTERNAL", "contracted curve failed validation: " + why);
    }
    return fr;
}

ValidationReport check_open_universality(const UniversalExtension& u, const CurveType& c,
                                         const std::vector<std::string>& smoothed) {
    ValidationReport r;
    FaceRestriction fr = face_restrict(u, c, smoothed);
    r.record("face_restrict", "", true);

    UniversalExtension u2 = build_Pu(fr.contracted_curve);
    r.record("contracted_build_Pu", "", true);

    // Scaffold embedding E: Q' -> Q. Vertex blocks go through the stratum
    // transports; kept length coordinates map identically; smoothed ones to 0.
    const std::size_t d = u.q.dim(), d2 = u2.q.dim();
    QMat lin(d, d2);
    QVec tr(d);
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        const AffineMap& t = fr.vertex_transport[v];
        std::size_t nb = fr.vertex_class[v];
        for (std::size_t i = 0; i < u.q.vertex_dim[v]; ++i) {
            for (std::size_t j = 0; j < u2.q.vertex_dim[nb]; ++j)
                lin.at(u.q.vertex_offset[v] + i, u2.q.vertex_offset[nb] + j) =
                    t.linear.at(i, j);
            tr[u.q.vertex_offset[v] + i] = t.translate[i];
        }
    }
    for (std::size_t e = 0; e < c.edges.size(); ++e)
        if (fr.edge_map[e] != std::size_t(-1))
            lin.at(u.q.edge_coord(e), u2.q.edge_coord(fr.edge_map[e])) = 1;
    AffineMap embed(std::move(lin), std::move(tr));

    bool bp_ok = embed.apply(u2.basepoint) == fr.witness;
    r.record("embedding_basepoint", "", bp_ok,
             bp_ok ? "" : "embedding does not send the contracted basepoint to the witness");

    auto cert = is_iso_onto_face(embed, u2.pu, u.pu);
    r.record("embedding_iso_onto_face", "", cert.has_value(),
             cert ? "" : "embedding is not an isomorphism onto a face of P_u");
    if (cert) {
        bool match = equal_sets(cert->face, fr.face);
        r.record("face_matches_smoothing", "", match,
                 match ? "" : "embedded image differs from P_u cap {rho_S = 0}");
    }
    return r;
}

}  // namespace tropext
