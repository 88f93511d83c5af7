// Writes the golden problem files used by the test suite. Run with the
// destination directory as the only argument; output is deterministic.
#include <fstream>
#include <iostream>

#include "tropext/extension_ops.hpp"
#include "tropext/io.hpp"
#include "tropext/random_instances.hpp"

using namespace tropext;

namespace {

TargetStratum point_stratum() { return {"pt", Polyhedron::point({Rat(0)})}; }
TargetStratum ray_stratum() { return {"ray", Polyhedron::nonneg_orthant(1)}; }

AffineMap slope1(const Rat& start) {
    QMat lin(1, 1);
    lin.at(0, 0) = 1;
    return AffineMap(std::move(lin), {start});
}

CurveType two_vertex_smooth() {
    CurveType c;
    c.vertices.push_back({"v0", point_stratum(), {Rat(0)}, {}});
    c.vertices.push_back({"v1", point_stratum(), {Rat(0)}, {}});
    c.vertices.push_back({"v2", point_stratum(), {Rat(0)}, {}});
    for (int i = 0; i < 2; ++i) {
        Edge e;
        e.id = "e" + std::to_string(i);
        e.length = i == 0 ? Rat(2) : Rat(3, 2);
        e.stratum = point_stratum();
        e.trajectory = AffineMap::constant(1, {Rat(0)});
        e.flags[0] = {"v" + std::to_string(i), AffineMap::identity(1)};
        e.flags[1] = {"v" + std::to_string(i + 1), AffineMap::identity(1)};
        c.edges.push_back(std::move(e));
    }
    return c;
}

CurveType ray_target() {
    CurveType c;
    c.vertices.push_back({"v0", ray_stratum(), {Rat(0)}, {}});
    c.vertices.push_back({"v1", ray_stratum(), {Rat(3)}, {}});
    Edge e;
    e.id = "E";
    e.length = 3;
    e.stratum = ray_stratum();
    e.trajectory = slope1(Rat(0));
    e.flags[0] = {"v0", AffineMap::identity(1)};
    e.flags[1] = {"v1", AffineMap::identity(1)};
    c.edges.push_back(std::move(e));
    return c;
}

// The ray-target curve subdivided into `pieces` slope-1 edges of total length 3.
CurveType ray_subdivided(int pieces) {
    CurveType c;
    QVec cuts;
    cuts.push_back(Rat(0));
    if (pieces == 2) {
        cuts.push_back(Rat(1));
    } else {
        cuts.push_back(Rat(1, 2));
        cuts.push_back(Rat(2));
    }
    cuts.push_back(Rat(3));
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        std::string id = i == 0 ? "v0" : i + 1 == cuts.size() ? "v1" : "m" + std::to_string(i);
        c.vertices.push_back({id, ray_stratum(), {cuts[i]}, {}});
    }
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Edge e;
        e.id = "e" + std::to_string(i + 1);
        e.length = cuts[i + 1] - cuts[i];
        e.stratum = ray_stratum();
        e.trajectory = slope1(cuts[i]);
        e.flags[0] = {c.vertices[i].id, AffineMap::identity(1)};
        e.flags[1] = {c.vertices[i + 1].id, AffineMap::identity(1)};
        c.edges.push_back(std::move(e));
    }
    return c;
}

CurveType ray_with_hanging_edge() {
    CurveType c = ray_target();
    c.vertices.push_back({"w", ray_stratum(), {Rat(0)}, {}});
    Edge h;
    h.id = "h";
    h.length = 5;
    h.stratum = ray_stratum();
    h.trajectory = AffineMap::constant(1, {Rat(0)});
    h.flags[0] = {"v0", AffineMap::identity(1)};
    h.flags[1] = {"w", AffineMap::identity(1)};
    c.edges.push_back(std::move(h));
    return c;
}

CurveType monodromy_curve() {
    TargetStratum orth{"orth2", Polyhedron::nonneg_orthant(2)};
    QMat perm(2, 2);
    perm.at(0, 1) = perm.at(1, 0) = 1;
    AffineMap swap(std::move(perm), QVec(2));

    QMat diag(2, 1);
    diag.at(0, 0) = diag.at(1, 0) = 1;

    CurveType c;
    c.vertices.push_back({"v0", orth, {Rat(1), Rat(1)}, {swap}});
    c.vertices.push_back({"v1", orth, {Rat(3), Rat(3)}, {swap}});
    Edge e;
    e.id = "e0";
    e.length = 2;
    e.stratum = orth;
    e.trajectory = AffineMap(QMat(diag), {Rat(1), Rat(1)});
    e.flags[0] = {"v0", AffineMap::identity(2)};
    e.flags[1] = {"v1", AffineMap::identity(2)};
    c.edges.push_back(std::move(e));
    Leg l;
    l.id = "y0";
    l.vertex = "v1";
    l.stratum = orth;
    l.trajectory = AffineMap(QMat(diag), {Rat(3), Rat(3)});
    l.germ = AffineMap::identity(2);
    c.legs.push_back(std::move(l));
    return c;
}

DegreeOneMap subdivision_map(const CurveType& src, const CurveType& tgt) {
    DegreeOneMap d;
    d.source = src;
    d.target = tgt;
    using K = DegreeOneMap::VertexImage::Kind;
    for (const auto& v : src.vertices)
        d.vertex_assignment[v.id] = v.id == "v0" || v.id == "v1"
                                        ? DegreeOneMap::VertexImage{K::Vertex, v.id}
                                        : DegreeOneMap::VertexImage{K::Edge, "E"};
    std::vector<std::string> chain;
    for (const auto& e : src.edges) chain.push_back(e.id);
    d.edge_chains["E"] = std::move(chain);
    return d;
}

DegreeOneMap contraction_map(const CurveType& src, const CurveType& tgt) {
    DegreeOneMap d;
    d.source = src;
    d.target = tgt;
    using K = DegreeOneMap::VertexImage::Kind;
    d.vertex_assignment["v0"] = {K::Vertex, "v0"};
    d.vertex_assignment["v1"] = {K::Vertex, "v1"};
    d.vertex_assignment["w"] = {K::Vertex, "v0"};
    d.edge_chains["E"] = {"E"};
    return d;
}

void write_file(const std::string& dir, const std::string& name, const Json& j) {
    std::ofstream out(dir + "/" + name, std::ios::binary);
    out << j.dump(2) << "\n";
    std::cout << name << "\n";
}

Json problem_base(const CurveType& c) {
    Json strata = Json::object();
    Json cj = curve_json(c, strata);
    Json out;
    out["version"] = "1";
    out["strata"] = std::move(strata);
    out["curve"] = std::move(cj);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_fixtures <dir>\n";
        return 2;
    }
    std::string dir = argv[1];

    write_file(dir, "two_vertex_smooth.json", problem_base(two_vertex_smooth()));
    write_file(dir, "ray_target.json", problem_base(ray_target()));

    {
        CurveType c;
        c.vertices.push_back({"v0", point_stratum(), {Rat(0)}, {}});
        write_file(dir, "edgeless_point.json", problem_base(c));
    }

    for (int pieces : {2, 3}) {
        CurveType src = ray_subdivided(pieces);
        Json out = problem_base(src);
        DegreeOneMap d = subdivision_map(src, ray_target());
        out["degree_one_map"] = degree_one_json(d, out["strata"]);
        write_file(dir, "split_edge_" + std::to_string(pieces) + ".json", out);
    }

    {
        CurveType src = ray_with_hanging_edge();
        Json out = problem_base(src);
        DegreeOneMap d = contraction_map(src, ray_target());
        out["degree_one_map"] = degree_one_json(d, out["strata"]);
        write_file(dir, "contracted_subtree.json", out);
    }

    {
        CurveType c = ray_target();
        UniversalExtension u = build_Pu(c);
        QMat dirs = direction_lattice(u.pu);
        QMat coeff(dirs.cols, 1);
        for (std::size_t r = 0; r < dirs.cols; ++r) coeff.at(r, 0) = 1;
        AffineMap m(mat_mul(dirs, coeff), u.basepoint);
        Polyhedron base = canonical(preimage(u.pu, m));
        QVec bp(1);
        ExtendedStructure s = pullback_extension(c, u.structure, m, base, bp);
        Json out = problem_base(c);
        out["extension"] = extension_json(s);
        // A further pullback of the stored extension along t -> 2t.
        QMat dbl(1, 1);
        dbl.at(0, 0) = 2;
        AffineMap m2(std::move(dbl), {Rat(0)});
        Polyhedron base2 = canonical(preimage(base, m2));
        Json pb;
        pb["map"] = affine_map_json(m2);
        pb["base"] = polyhedron_json(base2);
        pb["basepoint"] = rat_vec_json(QVec(1));
        out["params"] = Json{{"pullback", std::move(pb)}};
        write_file(dir, "classify_roundtrip.json", out);
    }

    write_file(dir, "monodromy.json", problem_base(monodromy_curve()));
    return 0;
}
