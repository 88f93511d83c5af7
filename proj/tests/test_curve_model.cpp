#include <doctest.h>

#include "tropext/extension.hpp"
#include "tropext/universal.hpp"

using namespace tropext;

namespace {

TargetStratum point_stratum() { return {"pt", Polyhedron::point({Rat(0)})}; }
TargetStratum ray_stratum() { return {"ray", Polyhedron::nonneg_orthant(1)}; }

CurveType smooth_two_vertex() {
    CurveType c;
    c.vertices.push_back({"v0", point_stratum(), {Rat(0)}, {}});
    c.vertices.push_back({"v1", point_stratum(), {Rat(0)}, {}});
    Edge e;
    e.id = "e0";
    e.length = 2;
    e.stratum = point_stratum();
    e.trajectory = AffineMap::constant(1, {Rat(0)});
    e.flags[0] = {"v0", AffineMap::identity(1)};
    e.flags[1] = {"v1", AffineMap::identity(1)};
    c.edges.push_back(std::move(e));
    return c;
}

CurveType ray_curve() {
    CurveType c;
    c.vertices.push_back({"v0", ray_stratum(), {Rat(0)}, {}});
    c.vertices.push_back({"v1", ray_stratum(), {Rat(3)}, {}});
    Edge e;
    e.id = "E";
    e.length = 3;
    e.stratum = ray_stratum();
    QMat lin(1, 1);
    lin.at(0, 0) = 1;
    e.trajectory = AffineMap(std::move(lin), {Rat(0)});
    e.flags[0] = {"v0", AffineMap::identity(1)};
    e.flags[1] = {"v1", AffineMap::identity(1)};
    c.edges.push_back(std::move(e));
    return c;
}

bool has_failure(const ValidationReport& r, const std::string& check) {
    for (const auto& e : r.entries)
        if (e.check == check && !e.pass) return true;
    return false;
}

}  // namespace

TEST_CASE("validate_curve_type") {
    CHECK(validate_curve_type(smooth_two_vertex()).passed());

    // Non-injective germ.
    CurveType c = ray_curve();
    c.edges[0].flags[0].germ = AffineMap::constant(1, {Rat(0)});
    ValidationReport r = validate_curve_type(c);
    CHECK(!r.passed());
    CHECK(has_failure(r, "germ_face_iso"));

    // Flag-0 endpoint mismatch: germ(position) != trajectory(0).
    CurveType c2 = ray_curve();
    c2.vertices[0].position = {Rat(1)};
    ValidationReport r2 = validate_curve_type(c2);
    CHECK(!r2.passed());
    CHECK(has_failure(r2, "endpoint_match"));
}

TEST_CASE("validate_extension") {
    CurveType c = smooth_two_vertex();
    ExtendedStructure triv = trivial_extension(c);
    CHECK(validate_extension(c, triv).passed());

    CurveType rc = ray_curve();
    CHECK(validate_extension(rc, trivial_extension(rc)).passed());

    UniversalExtension u = build_Pu(rc);
    CHECK(validate_extension(rc, u.structure).passed());

    // Node polyhedron replaced by base x [0,inf)^2 breaks condition (2b).
    ExtendedStructure bad = u.structure;
    bad.edge_data[0].node_poly = product(bad.base, Polyhedron::nonneg_orthant(2));
    ValidationReport r = validate_extension(rc, bad);
    CHECK(!r.passed());
    CHECK(has_failure(r, "node_is_fiber_product"));
}

TEST_CASE("fiber_at") {
    CurveType c = smooth_two_vertex();
    UniversalExtension u = build_Pu(c);

    CurveType back = fiber_at(c, u.structure, u.basepoint);
    REQUIRE(back.edges.size() == 1);
    CHECK(back.edges[0].length == Rat(2));
    CHECK(back.vertices[0].position == c.vertices[0].position);
    CHECK(back.edges[0].trajectory == c.edges[0].trajectory);
    CHECK(validate_curve_type(back).passed());

    // Another fiber: same curve with a different length.
    QVec q = u.basepoint;
    q[u.q.edge_coord(0)] = Rat(7, 2);
    CurveType other = fiber_at(c, u.structure, q);
    CHECK(other.edges[0].length == Rat(7, 2));
    CHECK(validate_curve_type(other).passed());

    // Zero length is a combinatorial degeneration, not a fiber.
    QVec z = u.basepoint;
    z[u.q.edge_coord(0)] = 0;
    CHECK_THROWS_WITH_AS(fiber_at(c, u.structure, z), doctest::Contains("ZERO_LENGTH_EDGE"),
                         KernelError);
}

TEST_CASE("monodromy closure") {
    QMat sw(2, 2);
    sw.at(0, 1) = sw.at(1, 0) = 1;
    AffineMap swap(std::move(sw), QVec(2));
    QMat dbl(2, 2);
    dbl.at(0, 0) = 2;
    dbl.at(1, 1) = 1;
    AffineMap stretch(std::move(dbl), QVec(2));
    Polyhedron orth2 = Polyhedron::nonneg_orthant(2);
    for (const AffineMap& g : {compose(swap, stretch), compose(stretch, swap)}) {
        CHECK(g.integral());
        CHECK(contains(orth2, image(orth2, g)));
    }
}
