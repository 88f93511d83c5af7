#include "tropext/curve.hpp"

#include <set>

namespace tropext {

std::size_t CurveType::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return i;
    throw KernelError("UNKNOWN_ID", "vertex " + id);
}

std::size_t CurveType::edge_index(const std::string& id) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == id) return i;
    throw KernelError("UNKNOWN_ID", "edge " + id);
}

namespace {

std::string point_str(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

void check_germ(ValidationReport& r, const std::string& object, const AffineMap& germ,
                const Polyhedron& src, const Polyhedron& dst) {
    bool ok = false;
    std::string detail;
    if (germ.source_dim != src.ambient_dim || germ.target_dim != dst.ambient_dim) {
        detail = "germ dimensions do not match the strata";
    } else if (!germ.integral()) {
        detail = "germ has a non-integral linear part";
    } else if (!is_iso_onto_face(germ, src, dst)) {
        detail = "germ is not an isomorphism onto a face of the target stratum";
    } else {
        ok = true;
    }
    r.record("germ_face_iso", object, ok, detail);
}

}  // namespace

ValidationReport validate_curve_type(const CurveType& c) {
    ValidationReport r;

    r.record("has_vertex", "", !c.vertices.empty(),
             c.vertices.empty() ? "a curve type needs at least one vertex" : "");
    if (c.vertices.empty()) return r;

    {
        std::set<std::string> ids;
        bool unique = true;
        for (const auto& v : c.vertices) unique &= ids.insert("v:" + v.id).second;
        for (const auto& e : c.edges) unique &= ids.insert("e:" + e.id).second;
        for (const auto& l : c.legs) unique &= ids.insert("l:" + l.id).second;
        r.record("unique_ids", "", unique, unique ? "" : "duplicate object id");
    }

    // References resolve.
    auto known_vertex = [&](const std::string& id) {
        for (const auto& v : c.vertices)
            if (v.id == id) return true;
        return false;
    };
    for (const auto& e : c.edges)
        for (int k = 0; k < 2; ++k)
            if (!known_vertex(e.flags[k].vertex)) {
                r.record("references", e.id, false,
                         "flag " + std::to_string(k) + " names unknown vertex " + e.flags[k].vertex);
                return r;
            }
    for (const auto& l : c.legs)
        if (!known_vertex(l.vertex)) {
            r.record("references", l.id, false, "unknown vertex " + l.vertex);
            return r;
        }

    // Connectivity of the dual graph.
    {
        std::vector<std::size_t> comp(c.vertices.size());
        for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
        auto find = [&](std::size_t i) {
            while (comp[i] != i) i = comp[i] = comp[comp[i]];
            return i;
        };
        for (const auto& e : c.edges)
            comp[find(c.vertex_index(e.flags[0].vertex))] =
                find(c.vertex_index(e.flags[1].vertex));
        bool connected = true;
        for (std::size_t i = 0; i < comp.size(); ++i) connected &= find(i) == find(0);
        r.record("connected", "", connected, connected ? "" : "dual graph is disconnected");
    }

    for (const auto& v : c.vertices) {
        bool nonempty = !is_empty(v.stratum.polytope);
        r.record("stratum_nonempty", v.id, nonempty);
        bool pos_ok = nonempty && v.position.size() == v.stratum.polytope.ambient_dim &&
                      contains_point(v.stratum.polytope, v.position);
        r.record("position_in_stratum", v.id, pos_ok,
                 pos_ok ? "" : "position " + point_str(v.position) + " outside stratum");
        for (std::size_t g = 0; g < v.monodromy.size(); ++g) {
            const auto& m = v.monodromy[g];
            std::string obj = v.id + "/monodromy" + std::to_string(g);
            bool dims = m.source_dim == v.stratum.polytope.ambient_dim &&
                        m.target_dim == m.source_dim;
            bool endo = dims && m.integral() &&
                        contains(v.stratum.polytope, image(v.stratum.polytope, m));
            r.record("monodromy_endomorphism", obj, endo,
                     endo ? "" : "generator does not map the stratum polytope into itself");
            // The basepoint must be monodromy invariant: transporting f around
            // the loop returns the same tropical position.
            bool fixes = endo && m.apply(v.position) == v.position;
            r.record("monodromy_fixes_position", obj, fixes,
                     fixes ? "" : "generator moves the vertex position");
        }
    }

    for (const auto& e : c.edges) {
        r.record("positive_length", e.id, e.length > 0,
                 e.length > 0 ? "" : "edge length " + e.length.str());
        bool nonempty = !is_empty(e.stratum.polytope);
        r.record("stratum_nonempty", e.id, nonempty);
        if (!nonempty) continue;
        Polyhedron dom = Polyhedron::interval(Rat(0), e.length);
        bool traj_ok = e.trajectory.source_dim == 1 &&
                       e.trajectory.target_dim == e.stratum.polytope.ambient_dim &&
                       e.trajectory.integral() &&
                       contains(e.stratum.polytope, image(dom, e.trajectory));
        r.record("trajectory_in_stratum", e.id, traj_ok,
                 traj_ok ? "" : "trajectory leaves the edge stratum polytope");
        for (int k = 0; k < 2; ++k) {
            const Flag& fl = e.flags[k];
            const Vertex& v = c.vertex(fl.vertex);
            check_germ(r, e.id + "/flag" + std::to_string(k), fl.germ, v.stratum.polytope,
                       e.stratum.polytope);
            if (!traj_ok || fl.germ.source_dim != v.stratum.polytope.ambient_dim ||
                fl.germ.target_dim != e.stratum.polytope.ambient_dim)
                continue;
            QVec end = e.trajectory.apply({k == 0 ? Rat(0) : e.length});
            QVec via = fl.germ.apply(v.position);
            r.record("endpoint_match", e.id + "/flag" + std::to_string(k), via == end,
                     via == end ? ""
                                : "germ sends the position to " + point_str(via) +
                                      " but the trajectory endpoint is " + point_str(end));
        }
    }

    for (const auto& l : c.legs) {
        bool nonempty = !is_empty(l.stratum.polytope);
        r.record("stratum_nonempty", l.id, nonempty);
        if (!nonempty) continue;
        Polyhedron dom = Polyhedron::ray_from(Rat(0));
        bool traj_ok = l.trajectory.source_dim == 1 &&
                       l.trajectory.target_dim == l.stratum.polytope.ambient_dim &&
                       l.trajectory.integral() &&
                       contains(l.stratum.polytope, image(dom, l.trajectory));
        r.record("trajectory_in_stratum", l.id, traj_ok,
                 traj_ok ? "" : "trajectory leaves the leg stratum polytope");
        const Vertex& v = c.vertex(l.vertex);
        check_germ(r, l.id, l.germ, v.stratum.polytope, l.stratum.polytope);
        if (traj_ok && l.germ.source_dim == v.stratum.polytope.ambient_dim &&
            l.germ.target_dim == l.stratum.polytope.ambient_dim) {
            QVec end = l.trajectory.apply({Rat(0)});
            QVec via = l.germ.apply(v.position);
            r.record("endpoint_match", l.id, via == end,
                     via == end ? ""
                                : "germ sends the position to " + point_str(via) +
                                      " but the trajectory starts at " + point_str(end));
        }
    }

    return r;
}

}  // namespace tropext
