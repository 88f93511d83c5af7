#include "tropext/io.hpp"

#include <cstdint>
#include <cstdio>

#include "tropext/vrep.hpp"

namespace tropext {

namespace {

[[noreturn]] void bad(const std::string& why) { throw KernelError("PARSE", why); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field ") + name);
    return j.at(name);
}

std::string str_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_string()) bad(std::string(name) + " must be a string");
    return f.get<std::string>();
}

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) bad("rationals must be \"p/q\" strings");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const KernelError& e) {
        bad(e.what());
    }
}

struct StrataTable {
    std::map<std::string, Polyhedron> polys;

    TargetStratum resolve(const std::string& id) const {
        auto it = polys.find(id);
        if (it == polys.end()) bad("unknown stratum " + id);
        return {id, it->second};
    }
};

CurveType curve_from_json(const Json& j, const StrataTable& strata) {
    CurveType c;
    for (const Json& vj : field(j, "vertices")) {
        Vertex v;
        v.id = str_field(vj, "id");
        v.stratum = strata.resolve(str_field(vj, "stratum"));
        v.position = rat_vec_from_json(field(vj, "position"));
        if (vj.contains("monodromy"))
            for (const Json& mj : vj.at("monodromy"))
                v.monodromy.push_back(affine_map_from_json(mj));
        c.vertices.push_back(std::move(v));
    }
    if (j.contains("edges"))
        for (const Json& ej : j.at("edges")) {
            Edge e;
            e.id = str_field(ej, "id");
            e.length = rat_from_json(field(ej, "length"));
            e.stratum = strata.resolve(str_field(ej, "stratum"));
            e.trajectory = affine_map_from_json(field(ej, "trajectory"));
            const Json& fl = field(ej, "flags");
            if (!fl.is_array() || fl.size() != 2) bad("edge needs exactly two flags");
            for (int s = 0; s < 2; ++s)
                e.flags[s] = {str_field(fl.at(s), "vertex"),
                              affine_map_from_json(field(fl.at(s), "germ"))};
            c.edges.push_back(std::move(e));
        }
    if (j.contains("legs"))
        for (const Json& lj : j.at("legs")) {
            Leg l;
            l.id = str_field(lj, "id");
            l.vertex = str_field(lj, "vertex");
            l.stratum = strata.resolve(str_field(lj, "stratum"));
            l.trajectory = affine_map_from_json(field(lj, "trajectory"));
            l.germ = affine_map_from_json(field(lj, "germ"));
            c.legs.push_back(std::move(l));
        }
    return c;
}

ExtendedStructure extension_from_json(const Json& j) {
    ExtendedStructure s;
    s.base = polyhedron_from_json(field(j, "base"));
    s.basepoint = rat_vec_from_json(field(j, "basepoint"));
    for (const Json& vj : field(j, "vertices")) {
        ExtendedStructure::VertexData vd;
        vd.poly = polyhedron_from_json(field(vj, "poly"));
        vd.iso_to_base = affine_map_from_json(field(vj, "iso_to_base"));
        vd.nat = affine_map_from_json(field(vj, "nat"));
        s.vertex_data.push_back(std::move(vd));
    }
    if (j.contains("edges"))
        for (const Json& ej : j.at("edges")) {
            ExtendedStructure::EdgeData ed;
            ed.rho = affine_map_from_json(field(ej, "rho"));
            ed.node_poly = polyhedron_from_json(field(ej, "node_poly"));
            const Json& fm = field(ej, "flag_maps");
            if (!fm.is_array() || fm.size() != 2) bad("edge needs exactly two flag maps");
            ed.flag_map[0] = affine_map_from_json(fm.at(0));
            ed.flag_map[1] = affine_map_from_json(fm.at(1));
            ed.nat = affine_map_from_json(field(ej, "nat"));
            s.edge_data.push_back(std::move(ed));
        }
    if (j.contains("legs"))
        for (const Json& lj : j.at("legs")) {
            ExtendedStructure::LegData ld;
            ld.poly = polyhedron_from_json(field(lj, "poly"));
            ld.leg_map = affine_map_from_json(field(lj, "leg_map"));
            ld.nat = affine_map_from_json(field(lj, "nat"));
            s.leg_data.push_back(std::move(ld));
        }
    return s;
}

DegreeOneMap degree_one_from_json(const Json& j, const CurveType& source,
                                  const StrataTable& strata) {
    DegreeOneMap d;
    d.source = source;
    d.target = curve_from_json(field(j, "target"), strata);
    for (const auto& [vid, ij] : field(j, "vertex_assignment").items()) {
        DegreeOneMap::VertexImage img;
        std::string kind = str_field(ij, "kind");
        if (kind == "vertex")
            img.kind = DegreeOneMap::VertexImage::Kind::Vertex;
        else if (kind == "edge")
            img.kind = DegreeOneMap::VertexImage::Kind::Edge;
        else if (kind == "leg")
            img.kind = DegreeOneMap::VertexImage::Kind::Leg;
        else
            bad("vertex image kind must be vertex|edge|leg");
        img.id = str_field(ij, "id");
        d.vertex_assignment[vid] = std::move(img);
    }
    if (j.contains("edge_chains"))
        for (const auto& [eid, cj] : j.at("edge_chains").items()) {
            std::vector<std::string> chain;
            for (const Json& sj : cj) chain.push_back(sj.get<std::string>());
            d.edge_chains[eid] = std::move(chain);
        }
    if (j.contains("leg_chains"))
        for (const auto& [lid, cj] : j.at("leg_chains").items()) {
            DegreeOneMap::LegChain lc;
            if (cj.contains("edges"))
                for (const Json& sj : cj.at("edges")) lc.edges.push_back(sj.get<std::string>());
            lc.leg = str_field(cj, "leg");
            d.leg_chains[lid] = std::move(lc);
        }
    return d;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        bad(e.what());
    }
    ProblemFile pf;
    pf.version = str_field(j, "version");

    StrataTable strata;
    for (const auto& [id, pj] : field(j, "strata").items())
        strata.polys.emplace(id, polyhedron_from_json(pj));
    pf.curve = curve_from_json(field(j, "curve"), strata);

    if (j.contains("extension")) pf.extension = extension_from_json(j.at("extension"));
    if (j.contains("degree_one_map"))
        pf.degree_one = degree_one_from_json(j.at("degree_one_map"), pf.curve, strata);
    if (j.contains("params")) {
        const Json& p = j.at("params");
        if (p.contains("smooth_edges"))
            for (const Json& sj : p.at("smooth_edges"))
                pf.smooth_edges.push_back(sj.get<std::string>());
        if (p.contains("pullback")) {
            const Json& pb = p.at("pullback");
            pf.pullback = ProblemFile::PullbackParams{
                affine_map_from_json(field(pb, "map")),
                polyhedron_from_json(field(pb, "base")),
                rat_vec_from_json(field(pb, "basepoint"))};
        }
    }
    return pf;
}

std::string input_digest(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json rat_vec_json(const QVec& v) {
    Json out = Json::array();
    for (const Rat& q : v) out.push_back(format_rat(q));
    return out;
}

QVec rat_vec_from_json(const Json& j) {
    if (!j.is_array()) bad("expected an array of rationals");
    QVec v;
    for (const Json& qj : j) v.push_back(rat_from_json(qj));
    return v;
}

Json polyhedron_json(const Polyhedron& p, bool with_vrep) {
    Json out;
    out["ambient_dim"] = p.ambient_dim;
    Json ineqs = Json::array(), eqs = Json::array();
    for (const auto& con : p.inequalities)
        ineqs.push_back({{"normal", rat_vec_json(con.normal)}, {"offset", format_rat(con.offset)}});
    for (const auto& con : p.equalities)
        eqs.push_back({{"normal", rat_vec_json(con.normal)}, {"offset", format_rat(con.offset)}});
    out["inequalities"] = std::move(ineqs);
    out["equalities"] = std::move(eqs);
    if (with_vrep) {
        VRep v = enumerate_vrep(p);
        Json vj = Json::array(), rj = Json::array(), lj = Json::array();
        for (const auto& x : v.vertices) vj.push_back(rat_vec_json(x));
        for (const auto& x : v.rays) rj.push_back(rat_vec_json(x));
        for (const auto& x : v.lines) lj.push_back(rat_vec_json(x));
        out["vertices"] = std::move(vj);
        out["rays"] = std::move(rj);
        out["lines"] = std::move(lj);
    }
    return out;
}

Polyhedron polyhedron_from_json(const Json& j) {
    Polyhedron p;
    const Json& dj = field(j, "ambient_dim");
    if (!dj.is_number_unsigned()) bad("ambient_dim must be a nonnegative integer");
    p.ambient_dim = dj.get<std::size_t>();
    auto read = [&](const char* name, std::vector<LinCon>& out) {
        if (!j.contains(name)) return;
        for (const Json& cj : j.at(name)) {
            LinCon con{rat_vec_from_json(field(cj, "normal")), rat_from_json(field(cj, "offset"))};
            if (con.normal.size() != p.ambient_dim) bad("constraint normal has wrong length");
            out.push_back(std::move(con));
        }
    };
    read("inequalities", p.inequalities);
    read("equalities", p.equalities);
    return p;
}

Json affine_map_json(const AffineMap& a) {
    Json out;
    out["source_dim"] = a.source_dim;
    out["target_dim"] = a.target_dim;
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.target_dim; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < a.source_dim; ++k) row.push_back(format_rat(a.linear.at(i, k)));
        rows.push_back(std::move(row));
    }
    out["linear"] = std::move(rows);
    out["translate"] = rat_vec_json(a.translate);
    return out;
}

AffineMap affine_map_from_json(const Json& j) {
    const Json& sj = field(j, "source_dim");
    const Json& tj = field(j, "target_dim");
    if (!sj.is_number_unsigned() || !tj.is_number_unsigned()) bad("map dims must be integers");
    std::size_t n = sj.get<std::size_t>(), m = tj.get<std::size_t>();
    QMat lin(m, n);
    const Json& rows = field(j, "linear");
    if (!rows.is_array() || rows.size() != m) bad("linear must have target_dim rows");
    for (std::size_t i = 0; i < m; ++i) {
        QVec row = rat_vec_from_json(rows.at(i));
        if (row.size() != n) bad("linear row has wrong length");
        for (std::size_t k = 0; k < n; ++k) lin.at(i, k) = row[k];
    }
    QVec tr = rat_vec_from_json(field(j, "translate"));
    if (tr.size() != m) bad("translate has wrong length");
    try {
        return AffineMap(std::move(lin), std::move(tr));
    } catch (const KernelError& e) {
        bad(e.what());
    }
}

Json report_json(const ValidationReport& r) {
    Json out = Json::array();
    for (const auto& e : r.entries)
        out.push_back({{"check", e.check},
                       {"object", e.object},
                       {"pass", e.pass},
                       {"detail", e.detail}});
    return out;
}

Json curve_json(const CurveType& c, Json& strata) {
    auto put_stratum = [&](const TargetStratum& s) {
        if (!strata.contains(s.id)) strata[s.id] = polyhedron_json(s.polytope);
        return s.id;
    };
    Json out;
    Json vs = Json::array();
    for (const auto& v : c.vertices) {
        Json vj;
        vj["id"] = v.id;
        vj["stratum"] = put_stratum(v.stratum);
        vj["position"] = rat_vec_json(v.position);
        Json mj = Json::array();
        for (const auto& m : v.monodromy) mj.push_back(affine_map_json(m));
        vj["monodromy"] = std::move(mj);
        vs.push_back(std::move(vj));
    }
    out["vertices"] = std::move(vs);
    Json es = Json::array();
    for (const auto& e : c.edges) {
        Json ej;
        ej["id"] = e.id;
        ej["length"] = format_rat(e.length);
        ej["stratum"] = put_stratum(e.stratum);
        ej["trajectory"] = affine_map_json(e.trajectory);
        Json fl = Json::array();
        for (int s = 0; s < 2; ++s)
            fl.push_back({{"vertex", e.flags[s].vertex}, {"germ", affine_map_json(e.flags[s].germ)}});
        ej["flags"] = std::move(fl);
        es.push_back(std::move(ej));
    }
    out["edges"] = std::move(es);
    Json ls = Json::array();
    for (const auto& l : c.legs) {
        Json lj;
        lj["id"] = l.id;
        lj["vertex"] = l.vertex;
        lj["stratum"] = put_stratum(l.stratum);
        lj["trajectory"] = affine_map_json(l.trajectory);
        lj["germ"] = affine_map_json(l.germ);
        ls.push_back(std::move(lj));
    }
    out["legs"] = std::move(ls);
    return out;
}

Json extension_json(const ExtendedStructure& s) {
    Json out;
    out["base"] = polyhedron_json(s.base);
    out["basepoint"] = rat_vec_json(s.basepoint);
    Json vs = Json::array();
    for (const auto& vd : s.vertex_data)
        vs.push_back({{"poly", polyhedron_json(vd.poly)},
                      {"iso_to_base", affine_map_json(vd.iso_to_base)},
                      {"nat", affine_map_json(vd.nat)}});
    out["vertices"] = std::move(vs);
    Json es = Json::array();
    for (const auto& ed : s.edge_data)
        es.push_back({{"rho", affine_map_json(ed.rho)},
                      {"node_poly", polyhedron_json(ed.node_poly)},
                      {"flag_maps",
                       Json::array({affine_map_json(ed.flag_map[0]),
                                    affine_map_json(ed.flag_map[1])})},
                      {"nat", affine_map_json(ed.nat)}});
    out["edges"] = std::move(es);
    Json ls = Json::array();
    for (const auto& ld : s.leg_data)
        ls.push_back({{"poly", polyhedron_json(ld.poly)},
                      {"leg_map", affine_map_json(ld.leg_map)},
                      {"nat", affine_map_json(ld.nat)}});
    out["legs"] = std::move(ls);
    return out;
}

Json degree_one_json(const DegreeOneMap& d, Json& strata) {
    Json out;
    out["target"] = curve_json(d.target, strata);
    Json va;
    for (const auto& [vid, img] : d.vertex_assignment) {
        const char* kind = img.kind == DegreeOneMap::VertexImage::Kind::Vertex ? "vertex"
                           : img.kind == DegreeOneMap::VertexImage::Kind::Edge ? "edge"
                                                                               : "leg";
        va[vid] = {{"kind", kind}, {"id", img.id}};
    }
    out["vertex_assignment"] = std::move(va);
    Json ec;
    for (const auto& [eid, chain] : d.edge_chains) ec[eid] = chain;
    out["edge_chains"] = std::move(ec);
    Json lc;
    for (const auto& [lid, chain] : d.leg_chains)
        lc[lid] = {{"edges", chain.edges}, {"leg", chain.leg}};
    out["leg_chains"] = std::move(lc);
    return out;
}

}  // namespace tropext
