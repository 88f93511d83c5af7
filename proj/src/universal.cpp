#include "tropext/universal.hpp"

namespace tropext {

namespace {

Polyhedron orthant2() { return Polyhedron::nonneg_orthant(2); }

AffineMap ab_sum() {
    QMat lin(1, 2);
    lin.at(0, 0) = 1;
    lin.at(0, 1) = 1;
    return AffineMap(std::move(lin), {Rat(0)});
}

// Collapse map Q(e) -> Q: (.., a, b, ..) -> (.., a + b, ..).
AffineMap collapse_ab(std::size_t q_dim, std::size_t k) {
    QMat lin(q_dim, q_dim + 1);
    for (std::size_t i = 0; i < q_dim; ++i) {
        if (i < k)
            lin.at(i, i) = 1;
        else if (i == k) {
            lin.at(i, k) = 1;
            lin.at(i, k + 1) = 1;
        } else
            lin.at(i, i + 1) = 1;
    }
    return AffineMap(std::move(lin), QVec(q_dim));
}

// Node-polyhedron coordinates (x in Q, a, b) -> Q(e) coordinates: route (a, b)
// into the expanded slot and drop the length coordinate x_k (= a + b there).
AffineMap node_to_scaffold(std::size_t q_dim, std::size_t k) {
    QMat lin(q_dim + 1, q_dim + 2);
    for (std::size_t i = 0; i <= q_dim; ++i) {
        if (i < k)
            lin.at(i, i) = 1;
        else if (i == k)
            lin.at(i, q_dim) = 1;  // a
        else if (i == k + 1)
            lin.at(i, q_dim + 1) = 1;  // b
        else
            lin.at(i, i - 1) = 1;
    }
    return AffineMap(std::move(lin), QVec(q_dim + 1));
}

}  // namespace

ScaffoldQ build_Q(const CurveType& c) {
    ScaffoldQ q;
    q.poly = Polyhedron::full(0);
    for (const auto& v : c.vertices) {
        q.vertex_offset.push_back(q.poly.ambient_dim);
        q.vertex_dim.push_back(v.stratum.polytope.ambient_dim);
        q.poly = product(q.poly, v.stratum.polytope);
        q.basepoint.insert(q.basepoint.end(), v.position.begin(), v.position.end());
    }
    q.edge_offset = q.poly.ambient_dim;
    for (const auto& e : c.edges) {
        q.poly = product(q.poly, Polyhedron::ray_from(Rat(0)));
        q.basepoint.push_back(e.length);
    }
    return q;
}

Polyhedron build_Q1(const CurveType& c, const ScaffoldQ& q) {
    Polyhedron q1 = Polyhedron::full(0);
    for (std::size_t v = 0; v < c.vertices.size(); ++v)
        q1 = product(q1, fixed_locus(c.vertices[v].stratum.polytope, c.vertices[v].monodromy));
    for (std::size_t e = 0; e < c.edges.size(); ++e)
        q1 = product(q1, Polyhedron::ray_from(Rat(0)));
    (void)q;
    return canonical(q1);
}

NodeScaffold build_node_scaffold(const CurveType& c, const ScaffoldQ& q, std::size_t e) {
    const std::size_t d = q.dim();
    const std::size_t k = q.edge_coord(e);
    NodeScaffold ns;
    Polyhedron pre = preimage(q.poly, collapse_ab(d, k));
    pre.add_inequality([&] {
        QVec n(d + 1);
        n[k] = 1;
        return n;
    }(), Rat(0));
    pre.add_inequality([&] {
        QVec n(d + 1);
        n[k + 1] = 1;
        return n;
    }(), Rat(0));
    ns.poly = canonical(pre);

    for (int fl = 0; fl < 2; ++fl) {
        QMat lin(d + 1, d);
        for (std::size_t i = 0; i <= d; ++i) {
            if (i < k)
                lin.at(i, i) = 1;
            else if (i == k) {
                if (fl == 1) lin.at(i, k) = 1;  // a = length, flag-1 side
            } else if (i == k + 1) {
                if (fl == 0) lin.at(i, k) = 1;  // b = length, flag-0 side
            } else
                lin.at(i, i - 1) = 1;
        }
        ns.incl[fl] = AffineMap(std::move(lin), QVec(d + 1));
    }

    QMat lin(d + 1, 1);
    QVec tr(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        if (i < k)
            tr[i] = q.basepoint[i];
        else if (i == k)
            lin.at(i, 0) = 1;  // a = t
        else if (i == k + 1) {
            lin.at(i, 0) = -1;  // b = l - t
            tr[i] = c.edges[e].length;
        } else
            tr[i] = q.basepoint[i - 1];
    }
    ns.fiber_embed = AffineMap(std::move(lin), std::move(tr));
    return ns;
}

AffineMap build_interpolant(const CurveType& c, const ScaffoldQ& q, std::size_t e, int flag) {
    NodeScaffold ns = build_node_scaffold(c, q, e);
    const Edge& edge = c.edges[e];
    std::size_t v = c.vertex_index(edge.flags[flag].vertex);
    std::vector<InterpolateConstraint> cons;
    cons.push_back({ns.incl[flag], q.poly,
                    compose(edge.flags[flag].germ, q.vertex_projection(v))});
    cons.push_back(
        {ns.fiber_embed, Polyhedron::interval(Rat(0), edge.length), edge.trajectory});
    return affine_interpolate(cons, ns.poly);
}

UniversalExtension build_Pu(const CurveType& c) {
    UniversalExtension u;
    u.q = build_Q(c);
    u.q1 = build_Q1(c, u.q);
    u.basepoint = u.q.basepoint;
    const std::size_t d = u.q.dim();

    Polyhedron cut = u.q1;
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        NodeScaffold ns = build_node_scaffold(c, u.q, e);
        std::array<AffineMap, 2> a = {build_interpolant(c, u.q, e, 0),
                                      build_interpolant(c, u.q, e, 1)};
        for (int fl = 0; fl < 2; ++fl) {
            int opp = 1 - fl;
            std::size_t v_opp = c.vertex_index(c.edges[e].flags[opp].vertex);
            cut = equalizer(cut, compose(a[fl], ns.incl[opp]),
                            compose(c.edges[e].flags[opp].germ, u.q.vertex_projection(v_opp)));
        }
        u.interpolants.push_back(std::move(a));
    }
    u.pu = canonical(cut);
    if (!contains_point(u.pu, u.basepoint))
        throw KernelError("INTERNAL", "basepoint fell out of P_u: inconsistent input");

    for (std::size_t e = 0; e < c.edges.size(); ++e) u.rho.push_back(u.q.edge_projection(e));
    for (std::size_t v = 0; v < c.vertices.size(); ++v)
        u.positions.push_back(u.q.vertex_projection(v));

    // Assemble the extended-structure functor over P_u.
    ExtendedStructure s;
    s.base = u.pu;
    s.basepoint = u.basepoint;
    AffineMap id = AffineMap::identity(d);
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        ExtendedStructure::VertexData vd;
        vd.poly = u.pu;
        vd.iso_to_base = id;
        vd.nat = u.positions[v];
        if (!contains(c.vertices[v].stratum.polytope, image(u.pu, vd.nat)))
            throw KernelError("IMAGE_ESCAPE", "vertex " + c.vertices[v].id);
        s.vertex_data.push_back(std::move(vd));
    }
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        ExtendedStructure::EdgeData ed;
        ed.rho = u.rho[e];
        ed.node_poly = fiber_product(u.pu, ed.rho, orthant2(), ab_sum()).poly;
        ed.flag_map[0] = pair(id, pair(AffineMap::constant(d, {Rat(0)}), ed.rho));
        ed.flag_map[1] = pair(id, pair(ed.rho, AffineMap::constant(d, {Rat(0)})));
        AffineMap to_scaffold = node_to_scaffold(d, u.q.edge_coord(e));
        ed.nat = compose(u.interpolants[e][0], to_scaffold);
        // The two interpolants must agree on the node polyhedron: this is the
        // defining property of P_u.
        if (!maps_agree_on(ed.node_poly, ed.nat,
                           compose(u.interpolants[e][1], to_scaffold)))
            throw KernelError("INTERNAL", "interpolants disagree on the node polyhedron");
        if (!contains(c.edges[e].stratum.polytope, image(ed.node_poly, ed.nat)))
            throw KernelError("IMAGE_ESCAPE", "edge " + c.edges[e].id);
        s.edge_data.push_back(std::move(ed));
    }
    for (std::size_t l = 0; l < c.legs.size(); ++l) {
        const Leg& leg = c.legs[l];
        std::size_t v = c.vertex_index(leg.vertex);
        ExtendedStructure::LegData ld;
        ld.poly = product(u.pu, Polyhedron::ray_from(Rat(0)));
        ld.leg_map = pair(id, AffineMap::constant(d, {Rat(0)}));
        // Section t -> (q_f, t) of the leg polyhedron over the basepoint.
        QMat sec_lin(d + 1, 1);
        sec_lin.at(d, 0) = 1;
        QVec sec_tr = u.basepoint;
        sec_tr.push_back(Rat(0));
        AffineMap sec(std::move(sec_lin), std::move(sec_tr));
        std::vector<InterpolateConstraint> cons;
        cons.push_back({ld.leg_map, u.pu, compose(leg.germ, u.positions[v])});
        cons.push_back({sec, Polyhedron::ray_from(Rat(0)), leg.trajectory});
        ld.nat = affine_interpolate(cons, ld.poly);
        if (!contains(leg.stratum.polytope, image(ld.poly, ld.nat)))
            throw KernelError("IMAGE_ESCAPE", "leg " + leg.id);
        s.leg_data.push_back(std::move(ld));
    }
    u.structure = std::move(s);
    return u;
}

EmbeddingReport embedding_report(const UniversalExtension& u) {
    EmbeddingReport r;
    const std::size_t d = u.q.dim();

    // Joint map (rho_e..., A_x...): exact injectivity on P_u's affine hull.
    AffineMap joint = AffineMap::constant(d, {});
    joint.target_dim = 0;  // empty stack start
    bool first = true;
    for (const auto& m : u.rho) {
        joint = first ? m : pair(joint, m);
        first = false;
    }
    for (const auto& m : u.positions) {
        joint = first ? m : pair(joint, m);
        first = false;
    }
    QMat dirs = direction_lattice(u.pu);
    r.injective = first || rank(mat_mul(joint.linear, dirs)) == dirs.cols;
    r.lines.push_back(std::string("joint (rho, A_x) map injective on P_u: ") +
                      (r.injective ? "yes" : "NO"));

    Polyhedron cq = canonical(u.q.poly);
    Polyhedron cpu = u.pu;  // already canonical
    for (const auto& eq : cpu.equalities) {
        bool in_q = false;
        for (const auto& qeq : cq.equalities)
            if (qeq == eq) in_q = true;
        if (!in_q) r.cutting_equalities.push_back(eq);
    }
    r.lines.push_back("cutting equalities beyond Q: " +
                      std::to_string(r.cutting_equalities.size()));
    return r;
}

}  // namespace tropext
