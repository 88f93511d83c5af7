#include <doctest.h>

#include "tropext/pushout.hpp"
#include "tropext/universal.hpp"

using namespace tropext;

namespace {

TargetStratum ray_stratum() { return {"ray", Polyhedron::nonneg_orthant(1)}; }

AffineMap slope1(const Rat& start) {
    QMat lin(1, 1);
    lin.at(0, 0) = 1;
    return AffineMap(std::move(lin), {start});
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

CurveType split_source() {
    CurveType c;
    c.vertices.push_back({"v0", ray_stratum(), {Rat(0)}, {}});
    c.vertices.push_back({"m", ray_stratum(), {Rat(1)}, {}});
    c.vertices.push_back({"v1", ray_stratum(), {Rat(3)}, {}});
    Edge e1;
    e1.id = "e1";
    e1.length = 1;
    e1.stratum = ray_stratum();
    e1.trajectory = slope1(Rat(0));
    e1.flags[0] = {"v0", AffineMap::identity(1)};
    e1.flags[1] = {"m", AffineMap::identity(1)};
    Edge e2;
    e2.id = "e2";
    e2.length = 2;
    e2.stratum = ray_stratum();
    e2.trajectory = slope1(Rat(1));
    e2.flags[0] = {"m", AffineMap::identity(1)};
    e2.flags[1] = {"v1", AffineMap::identity(1)};
    c.edges.push_back(std::move(e1));
    c.edges.push_back(std::move(e2));
    return c;
}

DegreeOneMap split_map() {
    DegreeOneMap d;
    d.source = split_source();
    d.target = ray_target();
    using K = DegreeOneMap::VertexImage::Kind;
    d.vertex_assignment["v0"] = {K::Vertex, "v0"};
    d.vertex_assignment["m"] = {K::Edge, "E"};
    d.vertex_assignment["v1"] = {K::Vertex, "v1"};
    d.edge_chains["E"] = {"e1", "e2"};
    return d;
}

}  // namespace

TEST_CASE("validate_degree_one") {
    CurveType t = ray_target();
    DegreeOneMap ident;
    ident.source = t;
    ident.target = t;
    using K = DegreeOneMap::VertexImage::Kind;
    ident.vertex_assignment["v0"] = {K::Vertex, "v0"};
    ident.vertex_assignment["v1"] = {K::Vertex, "v1"};
    ident.edge_chains["E"] = {"E"};
    CHECK(validate_degree_one(ident).passed());

    CHECK(validate_degree_one(split_map()).passed());

    DegreeOneMap bad = split_map();
    bad.edge_chains["E"] = {"e2", "e1"};
    CHECK(!validate_degree_one(bad).passed());
}

TEST_CASE("pushout identity") {
    CurveType t = ray_target();
    DegreeOneMap ident;
    ident.source = t;
    ident.target = t;
    using K = DegreeOneMap::VertexImage::Kind;
    ident.vertex_assignment["v0"] = {K::Vertex, "v0"};
    ident.vertex_assignment["v1"] = {K::Vertex, "v1"};
    ident.edge_chains["E"] = {"E"};

    UniversalExtension u = build_Pu(t);
    PushoutResult pr = pushout_extension(u.structure, ident);
    CHECK(validate_extension(t, pr.structure).passed());
    CHECK(equivalent_extensions(t, pr.structure, u.structure));
    CHECK(pr.eta_vertex[0] == AffineMap::identity(u.pu.ambient_dim));
}

TEST_CASE("pushout split edge") {
    DegreeOneMap d = split_map();
    UniversalExtension u = build_Pu(d.source);
    PushoutResult pr = pushout_extension(u.structure, d);
    CHECK(validate_extension(d.target, pr.structure).passed());

    // Sum rule.
    AffineMap sum = map_add(u.structure.edge_data[0].rho, u.structure.edge_data[1].rho);
    CHECK(maps_agree_on(pr.structure.base, pr.structure.edge_data[0].rho, sum));

    // The target node polyhedron is the fiber product over the summed rho.
    FiberProduct fp = fiber_product(pr.structure.base, sum, Polyhedron::nonneg_orthant(2),
                                    [] {
                                        QMat lin(1, 2);
                                        lin.at(0, 0) = lin.at(0, 1) = 1;
                                        return AffineMap(std::move(lin), QVec{Rat(0)});
                                    }());
    CHECK(equal_sets(pr.structure.edge_data[0].node_poly, fp.poly));

    // Eta naturality on every source object.
    for (std::size_t v = 0; v < d.source.vertices.size(); ++v) {
        const auto& img = d.vertex_assignment.at(d.source.vertices[v].id);
        AffineMap downstream =
            img.kind == DegreeOneMap::VertexImage::Kind::Vertex
                ? pr.structure.vertex_data[d.target.vertex_index(img.id)].nat
                : pr.structure.edge_data[0].nat;
        CHECK(maps_agree_on(u.structure.vertex_data[v].poly,
                            compose(downstream, pr.eta_vertex[v]),
                            u.structure.vertex_data[v].nat));
    }
    for (std::size_t e = 0; e < 2; ++e)
        CHECK(maps_agree_on(u.structure.edge_data[e].node_poly,
                            compose(pr.structure.edge_data[0].nat, pr.eta_edge[e]),
                            u.structure.edge_data[e].nat));
}

TEST_CASE("pushout contracted subtree") {
    CurveType src = ray_target();
    src.vertices.push_back({"w", ray_stratum(), {Rat(0)}, {}});
    Edge h;
    h.id = "h";
    h.length = 5;
    h.stratum = ray_stratum();
    h.trajectory = AffineMap::constant(1, {Rat(0)});
    h.flags[0] = {"v0", AffineMap::identity(1)};
    h.flags[1] = {"w", AffineMap::identity(1)};
    src.edges.push_back(std::move(h));
    REQUIRE(validate_curve_type(src).passed());

    DegreeOneMap d;
    d.source = src;
    d.target = ray_target();
    using K = DegreeOneMap::VertexImage::Kind;
    d.vertex_assignment["v0"] = {K::Vertex, "v0"};
    d.vertex_assignment["v1"] = {K::Vertex, "v1"};
    d.vertex_assignment["w"] = {K::Vertex, "v0"};
    d.edge_chains["E"] = {"E"};
    REQUIRE(validate_degree_one(d).passed());

    UniversalExtension u = build_Pu(src);
    PushoutResult pr = pushout_extension(u.structure, d);
    CHECK(validate_extension(d.target, pr.structure).passed());

    // Eta on the contracted node is the base projection.
    std::size_t hidx = src.edge_index("h");
    CHECK(pr.eta_edge[hidx] ==
          AffineMap::coordinate_projection(u.pu.ambient_dim + 2, 0, u.pu.ambient_dim));
    CHECK(maps_agree_on(u.structure.edge_data[hidx].node_poly,
                        compose(pr.structure.vertex_data[0].nat, pr.eta_edge[hidx]),
                        u.structure.edge_data[hidx].nat));
}

TEST_CASE("pushout leg chain") {
    // Target: one vertex with one leg; source subdivides the leg by an edge.
    CurveType tgt;
    tgt.vertices.push_back({"v0", ray_stratum(), {Rat(0)}, {}});
    Leg L;
    L.id = "L";
    L.vertex = "v0";
    L.stratum = ray_stratum();
    L.trajectory = slope1(Rat(0));
    L.germ = AffineMap::identity(1);
    tgt.legs.push_back(std::move(L));
    REQUIRE(validate_curve_type(tgt).passed());

    CurveType src;
    src.vertices.push_back({"v0", ray_stratum(), {Rat(0)}, {}});
    src.vertices.push_back({"m", ray_stratum(), {Rat(1)}, {}});
    Edge e1;
    e1.id = "e1";
    e1.length = 1;
    e1.stratum = ray_stratum();
    e1.trajectory = slope1(Rat(0));
    e1.flags[0] = {"v0", AffineMap::identity(1)};
    e1.flags[1] = {"m", AffineMap::identity(1)};
    src.edges.push_back(std::move(e1));
    Leg y;
    y.id = "y";
    y.vertex = "m";
    y.stratum = ray_stratum();
    y.trajectory = slope1(Rat(1));
    y.germ = AffineMap::identity(1);
    src.legs.push_back(std::move(y));
    REQUIRE(validate_curve_type(src).passed());

    DegreeOneMap d;
    d.source = src;
    d.target = tgt;
    using K = DegreeOneMap::VertexImage::Kind;
    d.vertex_assignment["v0"] = {K::Vertex, "v0"};
    d.vertex_assignment["m"] = {K::Leg, "L"};
    d.leg_chains["L"] = {{"e1"}, "y"};
    REQUIRE(validate_degree_one(d).passed());

    UniversalExtension u = build_Pu(src);
    PushoutResult pr = pushout_extension(u.structure, d);
    CHECK(validate_extension(tgt, pr.structure).passed());

    CHECK(maps_agree_on(u.structure.edge_data[0].node_poly,
                        compose(pr.structure.leg_data[0].nat, pr.eta_edge[0]),
                        u.structure.edge_data[0].nat));
    CHECK(maps_agree_on(u.structure.leg_data[0].poly,
                        compose(pr.structure.leg_data[0].nat, pr.eta_leg[0]),
                        u.structure.leg_data[0].nat));
}

TEST_CASE("verify_pushout_uniqueness") {
    DegreeOneMap d = split_map();
    UniversalExtension u = build_Pu(d.source);
    PushoutResult pr = pushout_extension(u.structure, d);

    PushoutSquare sq{u.structure.edge_data[0].node_poly, pr.eta_edge[0],
                     u.structure.edge_data[0].nat};
    AffineMap perturbed = pr.structure.edge_data[0].nat;
    perturbed.translate[0] += 1;
    CHECK(verify_pushout_uniqueness({sq}, {pr.structure.edge_data[0].nat, perturbed}).passed());

    // Target a point: only the matching constant completes the square.
    PushoutSquare pt{u.structure.vertex_data[0].poly, pr.eta_vertex[0],
                     AffineMap::constant(u.pu.ambient_dim, {Rat(4)})};
    AffineMap c4 = AffineMap::constant(pr.eta_vertex[0].target_dim, {Rat(4)});
    AffineMap c5 = AffineMap::constant(pr.eta_vertex[0].target_dim, {Rat(5)});
    CHECK(verify_pushout_uniqueness({pt}, {c4, c5}).passed());

    // Empty candidate list reports the missing completion.
    ValidationReport none = verify_pushout_uniqueness({sq}, {});
    CHECK(!none.passed());
    CHECK(none.entries.at(0).detail == "no candidate completes the square");
}
