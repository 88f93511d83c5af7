#include <doctest.h>

#include "tropext/io.hpp"
#include "tropext/universal.hpp"

using namespace tropext;

namespace {

CurveType ray_curve() {
    TargetStratum ray{"ray", Polyhedron::nonneg_orthant(1)};
    CurveType c;
    c.vertices.push_back({"v0", ray, {Rat(0)}, {}});
    c.vertices.push_back({"v1", ray, {Rat(3)}, {}});
    Edge e;
    e.id = "E";
    e.length = 3;
    e.stratum = ray;
    QMat lin(1, 1);
    lin.at(0, 0) = 1;
    e.trajectory = AffineMap(std::move(lin), {Rat(0)});
    e.flags[0] = {"v0", AffineMap::identity(1)};
    e.flags[1] = {"v1", AffineMap::identity(1)};
    c.edges.push_back(std::move(e));
    return c;
}

}  // namespace

TEST_CASE("rational serialization") {
    CHECK(format_rat(parse_rat("6/4")) == "3/2");
    CHECK(format_rat(parse_rat("-7")) == "-7/1");
    CHECK_THROWS_AS(parse_rat("1/0"), KernelError);
    CHECK_THROWS_AS(parse_rat("x"), KernelError);
}

TEST_CASE("polyhedron and map round trips") {
    Polyhedron p = Polyhedron::nonneg_orthant(2);
    p.add_equality({Rat(1), Rat(-1)}, Rat(1, 2));
    Polyhedron cp = canonical(p);
    CHECK(polyhedron_from_json(polyhedron_json(cp)) == cp);

    QMat lin(2, 3);
    lin.at(0, 0) = 2;
    lin.at(1, 2) = -5;
    AffineMap a(std::move(lin), {Rat(1, 3), Rat(0)});
    CHECK(affine_map_from_json(affine_map_json(a)) == a);
}

TEST_CASE("problem round trip") {
    CurveType c = ray_curve();
    Json strata = Json::object();
    Json cj = curve_json(c, strata);
    Json problem;
    problem["version"] = "1";
    problem["strata"] = strata;
    problem["curve"] = cj;

    ProblemFile pf = parse_problem(problem.dump());
    CHECK(pf.version == "1");
    REQUIRE(pf.curve.vertices.size() == 2);
    REQUIRE(pf.curve.edges.size() == 1);
    CHECK(pf.curve.edges[0].length == Rat(3));
    CHECK(pf.curve.edges[0].trajectory == c.edges[0].trajectory);
    CHECK(pf.curve.vertices[1].position == c.vertices[1].position);
    CHECK(equal_sets(pf.curve.edges[0].stratum.polytope, c.edges[0].stratum.polytope));

    // Serialize -> parse -> serialize is a fixed point.
    Json strata2 = Json::object();
    Json cj2 = curve_json(pf.curve, strata2);
    CHECK(cj2 == cj);
    CHECK(strata2 == strata);
}

TEST_CASE("extension round trip") {
    CurveType c = ray_curve();
    UniversalExtension u = build_Pu(c);
    Json ej = extension_json(u.structure);
    Json problem;
    problem["version"] = "1";
    Json strata = Json::object();
    problem["strata"] = strata;
    problem["curve"] = curve_json(c, problem["strata"]);
    problem["extension"] = ej;
    ProblemFile pf = parse_problem(problem.dump());
    REQUIRE(pf.extension);
    CHECK(validate_extension(pf.curve, *pf.extension).passed());
    CHECK(extension_json(*pf.extension) == ej);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_WITH_AS(parse_problem("not json"), doctest::Contains("PARSE"), KernelError);
    CHECK_THROWS_WITH_AS(parse_problem(R"({"version":"1"})"), doctest::Contains("PARSE"),
                         KernelError);
    // Zero denominator inside the file.
    std::string bad = R"({"version":"1","strata":{},"curve":{"vertices":[
      {"id":"v","stratum":"s","position":["1/0"]}]}})";
    CHECK_THROWS_WITH_AS(parse_problem(bad), doctest::Contains("PARSE"), KernelError);
}

TEST_CASE("digest") {
    CHECK(input_digest("") == "cbf29ce484222325");
    CHECK(input_digest("abc") == input_digest("abc"));
    CHECK(input_digest("abc") != input_digest("abd"));
}
