#include "tropext/pushout.hpp"

#include <algorithm>

#include "tropext/affine_ops.hpp"

namespace tropext {

namespace {

Polyhedron orthant2() { return Polyhedron::nonneg_orthant(2); }

AffineMap ab_sum() {
    QMat lin(1, 2);
    lin.at(0, 0) = 1;
    lin.at(0, 1) = 1;
    return AffineMap(std::move(lin), {Rat(0)});
}

// Shift of a trajectory parameter: t -> t + s.
AffineMap param_shift(const Rat& s) {
    QMat lin(1, 1);
    lin.at(0, 0) = 1;
    return AffineMap(std::move(lin), {s});
}

// Node-to-node chain embedding (x, a, b) -> (x, pre(x) + a, post(x) + b).
AffineMap chain_node_embed(const AffineMap& pre, const AffineMap& post) {
    std::size_t n = pre.source_dim;
    QMat lin(n + 2, n + 2);
    QVec tr(n + 2);
    for (std::size_t i = 0; i < n; ++i) lin.at(i, i) = 1;
    for (std::size_t j = 0; j < n; ++j) {
        lin.at(n, j) = pre.linear.at(0, j);
        lin.at(n + 1, j) = post.linear.at(0, j);
    }
    lin.at(n, n) = 1;
    lin.at(n + 1, n + 1) = 1;
    tr[n] = pre.translate[0];
    tr[n + 1] = post.translate[0];
    return AffineMap(std::move(lin), std::move(tr));
}

// Node-to-leg chain embedding (x, a, b) -> (x, pre(x) + a).
AffineMap chain_leg_embed_edge(const AffineMap& pre) {
    std::size_t n = pre.source_dim;
    QMat lin(n + 1, n + 2);
    QVec tr(n + 1);
    for (std::size_t i = 0; i < n; ++i) lin.at(i, i) = 1;
    for (std::size_t j = 0; j < n; ++j) lin.at(n, j) = pre.linear.at(0, j);
    lin.at(n, n) = 1;
    tr[n] = pre.translate[0];
    return AffineMap(std::move(lin), std::move(tr));
}

// Leg-to-leg embedding (x, t) -> (x, pre(x) + t).
AffineMap chain_leg_embed_leg(const AffineMap& pre) {
    std::size_t n = pre.source_dim;
    QMat lin(n + 1, n + 1);
    QVec tr(n + 1);
    for (std::size_t i = 0; i < n; ++i) lin.at(i, i) = 1;
    for (std::size_t j = 0; j < n; ++j) lin.at(n, j) = pre.linear.at(0, j);
    lin.at(n, n) = 1;
    tr[n] = pre.translate[0];
    return AffineMap(std::move(lin), std::move(tr));
}

// Attachment section x -> (x, pre(x), post(x)) into a node polyhedron.
AffineMap node_attach(const AffineMap& pre, const AffineMap& post) {
    return pair(AffineMap::identity(pre.source_dim), pair(pre, post));
}

AffineMap leg_attach(const AffineMap& pre) {
    return pair(AffineMap::identity(pre.source_dim), pre);
}

}  // namespace

ValidationReport validate_degree_one(const DegreeOneMap& d) {
    ValidationReport r;
    const CurveType& src = d.source;
    const CurveType& tgt = d.target;

    auto tgt_has = [&](DegreeOneMap::VertexImage::Kind k, const std::string& id) {
        using K = DegreeOneMap::VertexImage::Kind;
        if (k == K::Vertex) {
            for (const auto& v : tgt.vertices)
                if (v.id == id) return true;
        } else if (k == K::Edge) {
            for (const auto& e : tgt.edges)
                if (e.id == id) return true;
        } else {
            for (const auto& l : tgt.legs)
                if (l.id == id) return true;
        }
        return false;
    };

    bool assign_ok = true;
    for (const auto& v : src.vertices) {
        auto it = d.vertex_assignment.find(v.id);
        if (it == d.vertex_assignment.end() || !tgt_has(it->second.kind, it->second.id)) {
            r.record("vertex_assignment", v.id, false, "missing or dangling assignment");
            assign_ok = false;
        }
    }
    if (assign_ok) r.record("vertex_assignment", "", true);
    if (!assign_ok) return r;

    // Each source edge belongs to exactly one chain or is contracted.
    std::map<std::string, int> edge_uses;
    for (const auto& e : src.edges) edge_uses[e.id] = 0;
    for (const auto& [te, chain] : d.edge_chains)
        for (const auto& se : chain) {
            if (!edge_uses.count(se)) {
                r.record("chain_edges_exist", te, false, "unknown source edge " + se);
                return r;
            }
            ++edge_uses[se];
        }
    for (const auto& [tl, chain] : d.leg_chains)
        for (const auto& se : chain.edges) {
            if (!edge_uses.count(se)) {
                r.record("chain_edges_exist", tl, false, "unknown source edge " + se);
                return r;
            }
            ++edge_uses[se];
        }
    std::map<std::string, bool> contracted;
    for (const auto& e : src.edges) {
        if (edge_uses[e.id] > 1) {
            r.record("chains_disjoint", e.id, false, "edge used by several chains");
            return r;
        }
        contracted[e.id] = edge_uses[e.id] == 0;
        if (contracted[e.id]) {
            const auto& a = d.vertex_assignment.at(e.flags[0].vertex);
            const auto& b = d.vertex_assignment.at(e.flags[1].vertex);
            bool same = a.kind == b.kind && a.id == b.id;
            r.record("contracted_edge_one_image", e.id, same,
                     same ? "" : "endpoints of a contracted edge map to different objects");
            if (!same) return r;
        }
    }

    // Every target edge has a chain; every target leg has a leg chain; every
    // source leg ends exactly one leg chain.
    for (const auto& e : tgt.edges)
        if (!d.edge_chains.count(e.id) || d.edge_chains.at(e.id).empty()) {
            r.record("target_edge_covered", e.id, false, "no chain over this edge");
            return r;
        }
    {
        std::map<std::string, int> leg_uses;
        for (const auto& l : src.legs) leg_uses[l.id] = 0;
        for (const auto& ltgt : tgt.legs) {
            if (!d.leg_chains.count(ltgt.id)) {
                r.record("target_leg_covered", ltgt.id, false, "no chain over this leg");
                return r;
            }
            const auto& lc = d.leg_chains.at(ltgt.id);
            if (!leg_uses.count(lc.leg)) {
                r.record("target_leg_covered", ltgt.id, false, "unknown source leg " + lc.leg);
                return r;
            }
            ++leg_uses[lc.leg];
        }
        for (const auto& [id, n] : leg_uses)
            if (n != 1) {
                r.record("source_leg_once", id, false, "source leg used " + std::to_string(n) + " times");
                return r;
            }
    }

    // Chain shape and trajectory concatenation per target edge.
    std::map<std::string, bool> on_chain;  // source vertices interior to chains
    for (const auto& te : tgt.edges) {
        const auto& chain = d.edge_chains.at(te.id);
        Rat offset = 0;
        bool ok = true;
        std::string why;
        for (std::size_t i = 0; i < chain.size() && ok; ++i) {
            const Edge& se = src.edges[src.edge_index(chain[i])];
            if (i + 1 < chain.size()) {
                const Edge& nxt = src.edges[src.edge_index(chain[i + 1])];
                if (se.flags[1].vertex != nxt.flags[0].vertex) {
                    ok = false;
                    why = "chain is not a consecutively oriented path";
                    break;
                }
                on_chain[se.flags[1].vertex] = true;
                const auto& img = d.vertex_assignment.at(se.flags[1].vertex);
                if (img.kind != DegreeOneMap::VertexImage::Kind::Edge || img.id != te.id) {
                    ok = false;
                    why = "interior chain vertex " + se.flags[1].vertex +
                          " is not assigned to the target edge";
                    break;
                }
            }
            if (se.stratum.polytope.ambient_dim != te.stratum.polytope.ambient_dim ||
                !equal_sets(se.stratum.polytope, te.stratum.polytope)) {
                ok = false;
                why = "chain edge stratum differs from the target edge stratum";
                break;
            }
            if (!maps_agree_on(Polyhedron::interval(Rat(0), se.length), se.trajectory,
                               compose(te.trajectory, param_shift(offset)))) {
                ok = false;
                why = "trajectory of " + se.id + " is not the restriction of the target's";
                break;
            }
            offset += se.length;
        }
        if (ok && offset != te.length) {
            ok = false;
            why = "chain lengths sum to " + offset.str() + ", target has " + te.length.str();
        }
        if (ok) {
            const Edge& first = src.edges[src.edge_index(chain.front())];
            const Edge& last = src.edges[src.edge_index(chain.back())];
            const auto& a = d.vertex_assignment.at(first.flags[0].vertex);
            const auto& b = d.vertex_assignment.at(last.flags[1].vertex);
            if (a.kind != DegreeOneMap::VertexImage::Kind::Vertex ||
                a.id != te.flags[0].vertex ||
                b.kind != DegreeOneMap::VertexImage::Kind::Vertex ||
                b.id != te.flags[1].vertex) {
                ok = false;
                why = "chain ends do not map to the target edge's endpoints";
            }
        }
        r.record("chain_shape", te.id, ok, why);
        if (!ok) return r;
    }
    for (const auto& tl : tgt.legs) {
        const auto& lc = d.leg_chains.at(tl.id);
        Rat offset = 0;
        bool ok = true;
        std::string why;
        std::string prev_src;
        for (std::size_t i = 0; i < lc.edges.size() && ok; ++i) {
            const Edge& se = src.edges[src.edge_index(lc.edges[i])];
            if (i == 0) {
                const auto& a = d.vertex_assignment.at(se.flags[0].vertex);
                if (a.kind != DegreeOneMap::VertexImage::Kind::Vertex || a.id != tl.vertex) {
                    ok = false;
                    why = "chain start does not map to the leg's vertex";
                    break;
                }
            } else if (se.flags[0].vertex != prev_src) {
                ok = false;
                why = "chain is not a consecutively oriented path";
                break;
            }
            if (i > 0) {
                const auto& img = d.vertex_assignment.at(se.flags[0].vertex);
                if (img.kind != DegreeOneMap::VertexImage::Kind::Leg || img.id != tl.id) {
                    ok = false;
                    why = "interior chain vertex is not assigned to the target leg";
                    break;
                }
                on_chain[se.flags[0].vertex] = true;
            }
            if (se.stratum.polytope.ambient_dim != tl.stratum.polytope.ambient_dim ||
                !equal_sets(se.stratum.polytope, tl.stratum.polytope) ||
                !maps_agree_on(Polyhedron::interval(Rat(0), se.length), se.trajectory,
                               compose(tl.trajectory, param_shift(offset)))) {
                ok = false;
                why = "chain edge " + se.id + " does not restrict the leg trajectory";
                break;
            }
            offset += se.length;
            prev_src = se.flags[1].vertex;
        }
        if (ok) {
            std::size_t sli = 0;
            while (sli < src.legs.size() && src.legs[sli].id != lc.leg) ++sli;
            const Leg& sl = src.legs[sli];
            if (!lc.edges.empty()) {
                const Edge& last = src.edges[src.edge_index(lc.edges.back())];
                if (sl.vertex != last.flags[1].vertex) {
                    ok = false;
                    why = "final leg does not start at the chain's end";
                } else {
                    const auto& img = d.vertex_assignment.at(sl.vertex);
                    if (img.kind != DegreeOneMap::VertexImage::Kind::Leg || img.id != tl.id) {
                        ok = false;
                        why = "final chain vertex is not assigned to the target leg";
                    } else {
                        on_chain[sl.vertex] = true;
                    }
                }
            } else {
                const auto& a = d.vertex_assignment.at(sl.vertex);
                if (a.kind != DegreeOneMap::VertexImage::Kind::Vertex || a.id != tl.vertex) {
                    ok = false;
                    why = "source leg vertex does not map to the leg's vertex";
                }
            }
            if (ok && (sl.stratum.polytope.ambient_dim != tl.stratum.polytope.ambient_dim ||
                       !equal_sets(sl.stratum.polytope, tl.stratum.polytope) ||
                       !maps_agree_on(Polyhedron::ray_from(Rat(0)), sl.trajectory,
                                      compose(tl.trajectory, param_shift(offset))))) {
                ok = false;
                why = "source leg trajectory does not restrict the target's";
            }
        }
        r.record("leg_chain_shape", tl.id, ok, why);
        if (!ok) return r;
    }

    // Connected, acyclic preimages: contracted edges form a forest and every
    // source vertex is reachable within its image object.
    {
        std::map<std::string, std::size_t> vidx;
        for (std::size_t i = 0; i < src.vertices.size(); ++i) vidx[src.vertices[i].id] = i;
        std::vector<std::size_t> root(src.vertices.size());
        for (std::size_t i = 0; i < root.size(); ++i) root[i] = i;
        auto find = [&](std::size_t i) {
            while (root[i] != i) i = root[i] = root[root[i]];
            return i;
        };
        bool forest = true;
        for (const auto& e : src.edges) {
            if (!contracted[e.id]) continue;
            std::size_t a = find(vidx[e.flags[0].vertex]);
            std::size_t b = find(vidx[e.flags[1].vertex]);
            if (a == b) {
                forest = false;
                r.record("contracted_forest", e.id, false, "contracted edges contain a cycle");
                break;
            }
            root[a] = b;
        }
        if (forest) r.record("contracted_forest", "", true);
        if (!forest) return r;

        // Reachability: a component of contracted edges mapping into a target
        // edge/leg interior must contain an on-chain vertex; one mapping to a
        // target vertex must contain a vertex with that target's stratum.
        bool reach_ok = true;
        for (const auto& v : src.vertices) {
            const auto& img = d.vertex_assignment.at(v.id);
            if (img.kind == DegreeOneMap::VertexImage::Kind::Vertex) continue;
            if (on_chain.count(v.id)) continue;
            // must be connected to an on-chain vertex via contracted edges
            std::size_t comp = find(vidx[v.id]);
            bool anchored = false;
            for (const auto& [ocid, flag] : on_chain)
                if (flag && find(vidx[ocid]) == comp) anchored = true;
            if (!anchored) {
                r.record("preimage_connected", v.id, false,
                         "vertex over an edge/leg interior is not attached to its chain");
                reach_ok = false;
                break;
            }
        }
        if (reach_ok) r.record("preimage_connected", "", true);
        if (!reach_ok) return r;
    }

    return r;
}

PushoutResult pushout_extension(const ExtendedStructure& p0, const DegreeOneMap& d) {
    auto pre_rep = validate_degree_one(d);
    if (!pre_rep.passed()) {
        std::string why;
        for (const auto& en : pre_rep.entries)
            if (!en.pass) {
                why = en.check + " (" + en.object + ")";
                break;
            }
        throw KernelError("PRECONDITION", "invalid degree-1 map: " + why);
    }
    const CurveType& src = d.source;
    const CurveType& tgt = d.target;
    const std::size_t n = p0.base.ambient_dim;
    AffineMap id = AffineMap::identity(n);
    AffineMap zero1 = AffineMap::constant(n, {Rat(0)});

    auto iso_inv = [&](std::size_t v) {
        auto cert =
            is_iso_onto_face(p0.vertex_data[v].iso_to_base, p0.vertex_data[v].poly, p0.base);
        if (!cert || !equal_sets(cert->face, p0.base))
            throw KernelError("PRECONDITION", "vertex iso not invertible");
        return cert->inverse_on_face;
    };

    PushoutResult out;
    out.structure.base = p0.base;
    out.structure.basepoint = p0.basepoint;
    out.eta_vertex.resize(src.vertices.size());
    out.eta_edge.resize(src.edges.size());
    out.eta_leg.resize(src.legs.size());

    // Target vertices: polyhedron P with identity iso; nat from any preimage
    // vertex carrying the same stratum.
    for (const auto& tv : tgt.vertices) {
        ExtendedStructure::VertexData vd;
        vd.poly = p0.base;
        vd.iso_to_base = id;
        bool found = false;
        for (std::size_t v = 0; v < src.vertices.size() && !found; ++v) {
            const auto& img = d.vertex_assignment.at(src.vertices[v].id);
            if (img.kind != DegreeOneMap::VertexImage::Kind::Vertex || img.id != tv.id)
                continue;
            if (src.vertices[v].stratum.polytope.ambient_dim !=
                    tv.stratum.polytope.ambient_dim ||
                !equal_sets(src.vertices[v].stratum.polytope, tv.stratum.polytope))
                continue;
            vd.nat = compose(p0.vertex_data[v].nat, iso_inv(v));
            found = true;
        }
        if (!found)
            throw KernelError("PRECONDITION",
                              "no source vertex carries the stratum of " + tv.id);
        out.structure.vertex_data.push_back(std::move(vd));
    }

    // Prefix sums of rho along each chain; attachment offsets for interior and
    // hanging vertices.
    std::map<std::string, AffineMap> attach_pre, attach_post;  // source vertex id -> offsets
    std::map<std::string, std::string> attach_obj;             // source vertex id -> target id

    for (std::size_t te = 0; te < tgt.edges.size(); ++te) {
        const auto& chain = d.edge_chains.at(tgt.edges[te].id);
        std::vector<std::size_t> idx;
        for (const auto& id_ : chain) idx.push_back(src.edge_index(id_));

        AffineMap total = AffineMap::constant(n, {Rat(0)});
        for (std::size_t i : idx) total = map_add(total, p0.edge_data[i].rho);

        ExtendedStructure::EdgeData ed;
        ed.rho = total;
        ed.node_poly = fiber_product(p0.base, ed.rho, orthant2(), ab_sum()).poly;
        ed.flag_map[0] = pair(id, pair(zero1, ed.rho));
        ed.flag_map[1] = pair(id, pair(ed.rho, zero1));

        std::vector<InterpolateConstraint> cons;
        AffineMap pre = AffineMap::constant(n, {Rat(0)});
        for (std::size_t i = 0; i < idx.size(); ++i) {
            AffineMap post = AffineMap::constant(n, {Rat(0)});
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                post = map_add(post, p0.edge_data[idx[j]].rho);
            AffineMap eta = chain_node_embed(pre, post);
            out.eta_edge[idx[i]] = eta;
            cons.push_back({eta, p0.edge_data[idx[i]].node_poly, p0.edge_data[idx[i]].nat});
            pre = map_add(pre, p0.edge_data[idx[i]].rho);
            if (i + 1 < idx.size()) {
                const std::string& vtx = src.edges[idx[i]].flags[1].vertex;
                AffineMap post2 = AffineMap::constant(n, {Rat(0)});
                for (std::size_t j = i + 1; j < idx.size(); ++j)
                    post2 = map_add(post2, p0.edge_data[idx[j]].rho);
                attach_pre[vtx] = pre;
                attach_post[vtx] = post2;
                attach_obj[vtx] = tgt.edges[te].id;
            }
        }
        try {
            ed.nat = affine_interpolate(cons, ed.node_poly);
        } catch (const KernelError& err) {
            if (err.code() == "INCONSISTENT")
                throw KernelError("INCONSISTENT_CHAIN", tgt.edges[te].id);
            throw;
        }
        out.structure.edge_data.push_back(std::move(ed));
    }

    for (std::size_t tl = 0; tl < tgt.legs.size(); ++tl) {
        const auto& lc = d.leg_chains.at(tgt.legs[tl].id);
        std::vector<std::size_t> idx;
        for (const auto& id_ : lc.edges) idx.push_back(src.edge_index(id_));
        std::size_t sl = [&] {
            for (std::size_t i = 0; i < src.legs.size(); ++i)
                if (src.legs[i].id == lc.leg) return i;
            throw KernelError("UNKNOWN_ID", lc.leg);
        }();

        ExtendedStructure::LegData ld;
        ld.poly = product(p0.base, Polyhedron::ray_from(Rat(0)));
        ld.leg_map = pair(id, zero1);

        std::vector<InterpolateConstraint> cons;
        AffineMap pre = AffineMap::constant(n, {Rat(0)});
        for (std::size_t i = 0; i < idx.size(); ++i) {
            AffineMap eta = chain_leg_embed_edge(pre);
            out.eta_edge[idx[i]] = eta;
            cons.push_back({eta, p0.edge_data[idx[i]].node_poly, p0.edge_data[idx[i]].nat});
            pre = map_add(pre, p0.edge_data[idx[i]].rho);
            const std::string& vtx = src.edges[idx[i]].flags[1].vertex;
            attach_pre[vtx] = pre;
            attach_obj[vtx] = tgt.legs[tl].id;
        }
        {
            AffineMap eta = chain_leg_embed_leg(pre);
            out.eta_leg[sl] = eta;
            cons.push_back({eta, p0.leg_data[sl].poly, p0.leg_data[sl].nat});
        }
        try {
            ld.nat = affine_interpolate(cons, ld.poly);
        } catch (const KernelError& err) {
            if (err.code() == "INCONSISTENT")
                throw KernelError("INCONSISTENT_CHAIN", tgt.legs[tl].id);
            throw;
        }
        out.structure.leg_data.push_back(std::move(ld));
    }

    // Spread attachment offsets through contracted components.
    std::map<std::string, bool> contracted;
    {
        std::map<std::string, int> uses;
        for (const auto& e : src.edges) uses[e.id] = 0;
        for (const auto& [te, chain] : d.edge_chains)
            for (const auto& se : chain) ++uses[se];
        for (const auto& [tlg, chain] : d.leg_chains)
            for (const auto& se : chain.edges) ++uses[se];
        for (const auto& e : src.edges) contracted[e.id] = uses[e.id] == 0;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : src.edges) {
            if (!contracted[e.id]) continue;
            for (int s = 0; s < 2; ++s) {
                const std::string& a = e.flags[s].vertex;
                const std::string& b = e.flags[1 - s].vertex;
                if (attach_pre.count(a) && !attach_pre.count(b)) {
                    attach_pre[b] = attach_pre[a];
                    if (attach_post.count(a)) attach_post[b] = attach_post[a];
                    attach_obj[b] = attach_obj[a];
                    changed = true;
                }
            }
        }
    }

    // Eta for source vertices and contracted edges.
    for (std::size_t v = 0; v < src.vertices.size(); ++v) {
        const auto& img = d.vertex_assignment.at(src.vertices[v].id);
        using K = DegreeOneMap::VertexImage::Kind;
        if (img.kind == K::Vertex) {
            out.eta_vertex[v] = p0.vertex_data[v].iso_to_base;
        } else if (img.kind == K::Edge) {
            const AffineMap& pre = attach_pre.at(src.vertices[v].id);
            const AffineMap& post = attach_post.at(src.vertices[v].id);
            out.eta_vertex[v] =
                compose(node_attach(pre, post), p0.vertex_data[v].iso_to_base);
        } else {
            const AffineMap& pre = attach_pre.at(src.vertices[v].id);
            out.eta_vertex[v] = compose(leg_attach(pre), p0.vertex_data[v].iso_to_base);
        }
    }
    for (std::size_t e = 0; e < src.edges.size(); ++e) {
        if (!contracted[src.edges[e].id]) continue;
        // Contracted node: project to the base, then attach.
        AffineMap base_proj = AffineMap::coordinate_projection(n + 2, 0, n);
        const auto& img = d.vertex_assignment.at(src.edges[e].flags[0].vertex);
        using K = DegreeOneMap::VertexImage::Kind;
        if (img.kind == K::Vertex) {
            out.eta_edge[e] = base_proj;
        } else if (img.kind == K::Edge) {
            const std::string& vtx = src.edges[e].flags[0].vertex;
            out.eta_edge[e] =
                compose(node_attach(attach_pre.at(vtx), attach_post.at(vtx)), base_proj);
        } else {
            const std::string& vtx = src.edges[e].flags[0].vertex;
            out.eta_edge[e] = compose(leg_attach(attach_pre.at(vtx)), base_proj);
        }
    }

    return out;
}

ValidationReport verify_pushout_uniqueness(const std::vector<PushoutSquare>& squares,
                                           const std::vector<AffineMap>& candidates) {
    ValidationReport r;
    for (std::size_t i = 0; i < squares.size(); ++i) {
        const auto& sq = squares[i];
        std::size_t hits = 0, last = 0;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            const auto& h = candidates[k];
            if (h.source_dim != sq.eta.target_dim || h.target_dim != sq.value.target_dim)
                continue;
            if (maps_agree_on(sq.source_poly, compose(h, sq.eta), sq.value)) {
                ++hits;
                last = k;
            }
        }
        std::string obj = "square " + std::to_string(i);
        if (hits == 1)
            r.record("unique_completion", obj, true, "candidate " + std::to_string(last));
        else if (hits == 0)
            r.record("unique_completion", obj, false, "no candidate completes the square");
        else
            r.record("unique_completion", obj, false,
                     std::to_string(hits) + " candidates complete the square");
    }
    return r;
}

}  // namespace tropext
