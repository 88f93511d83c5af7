#include <doctest.h>

#include <random>

#include "tropext/extension_ops.hpp"
#include "tropext/random_instances.hpp"

using namespace tropext;

namespace {

TargetStratum point_stratum() { return {"pt", Polyhedron::point({Rat(0)})}; }
TargetStratum ray_stratum() { return {"ray", Polyhedron::nonneg_orthant(1)}; }

CurveType smooth_chain(std::size_t edges) {
    CurveType c;
    for (std::size_t v = 0; v <= edges; ++v)
        c.vertices.push_back({"v" + std::to_string(v), point_stratum(), {Rat(0)}, {}});
    for (std::size_t i = 0; i < edges; ++i) {
        Edge e;
        e.id = "e" + std::to_string(i);
        e.length = Rat(static_cast<int>(i) + 1);
        e.stratum = point_stratum();
        e.trajectory = AffineMap::constant(1, {Rat(0)});
        e.flags[0] = {"v" + std::to_string(i), AffineMap::identity(1)};
        e.flags[1] = {"v" + std::to_string(i + 1), AffineMap::identity(1)};
        c.edges.push_back(std::move(e));
    }
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

// Two vertices joined by a double edge: contracting either edge closes a cycle.
CurveType double_edge_curve() {
    CurveType c = smooth_chain(1);
    Edge e = c.edges[0];
    e.id = "e1";
    c.edges.push_back(std::move(e));
    return c;
}

}  // namespace

TEST_CASE("pullback_extension") {
    CurveType c = ray_curve();
    UniversalExtension u = build_Pu(c);
    std::size_t d = u.pu.ambient_dim;

    ExtendedStructure same =
        pullback_extension(c, u.structure, AffineMap::identity(d), u.pu, u.basepoint);
    CHECK(validate_extension(c, same).passed());
    CHECK(equivalent_extensions(c, same, u.structure));

    // Pullback along the basepoint inclusion gives the trivial extension.
    AffineMap pt_incl = AffineMap::constant(0, u.basepoint);
    ExtendedStructure at_point =
        pullback_extension(c, u.structure, pt_incl, Polyhedron::full(0), {});
    CHECK(validate_extension(c, at_point).passed());
    CHECK(equivalent_extensions(c, at_point, trivial_extension(c)));

    // New rho is rho composed with the map; node polyhedra are fiber products.
    std::mt19937_64 rng(99);
    ClassifyInstance inst = random_classify_instance(u, rng);
    ExtendedStructure s =
        pullback_extension(c, u.structure, inst.map, inst.base, inst.basepoint);
    CHECK(validate_extension(c, s).passed());
    CHECK(s.edge_data[0].rho == compose(u.structure.edge_data[0].rho, inst.map));

    QVec wrong = inst.basepoint;
    wrong[0] += 1;
    CHECK_THROWS_WITH_AS(pullback_extension(c, u.structure, inst.map, inst.base, wrong),
                         doctest::Contains("BASEPOINT_MISMATCH"), KernelError);

    // Functoriality: pulling back twice equals pulling back the composite.
    std::size_t sd = inst.map.source_dim;
    QMat dbl(sd, sd);
    for (std::size_t i = 0; i < sd; ++i) dbl.at(i, i) = 2;
    AffineMap m2(std::move(dbl), QVec(sd));
    Polyhedron base2 = canonical(preimage(inst.base, m2));
    ExtendedStructure twice = pullback_extension(c, s, m2, base2, QVec(sd));
    ExtendedStructure once =
        pullback_extension(c, u.structure, compose(inst.map, m2), base2, QVec(sd));
    CHECK(equivalent_extensions(c, twice, once));
}

TEST_CASE("classify") {
    CurveType c = ray_curve();
    UniversalExtension u = build_Pu(c);
    std::size_t d = u.pu.ambient_dim;

    ClassifyingMap self = classify(c, u, u.structure);
    CHECK(self.certificate.passed());
    CHECK(maps_agree_on(u.pu, self.map, AffineMap::identity(d)));

    ClassifyingMap triv = classify(c, u, trivial_extension(c));
    CHECK(triv.certificate.passed());
    CHECK(triv.map == AffineMap::constant(0, u.basepoint));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        ClassifyInstance inst = random_classify_instance(u, rng);
        ExtendedStructure s =
            pullback_extension(c, u.structure, inst.map, inst.base, inst.basepoint);
        ClassifyingMap cm = classify(c, u, s);
        CHECK(cm.certificate.passed());
        CHECK(cm.map == inst.map);
    }

    // A perturbed structure is not an extension.
    ExtendedStructure bad = u.structure;
    bad.vertex_data[0].nat.translate[0] += 1;
    CHECK_THROWS_WITH_AS(classify(c, u, bad), doctest::Contains("NOT_AN_EXTENSION"),
                         KernelError);
}

TEST_CASE("face_restrict") {
    CurveType c = smooth_chain(2);
    UniversalExtension u = build_Pu(c);

    FaceRestriction none = face_restrict(u, c, {});
    CHECK(equal_sets(none.face, u.pu));
    CHECK(none.contracted_curve.edges.size() == 2);
    CHECK(validate_curve_type(none.contracted_curve).passed());

    FaceRestriction fr = face_restrict(u, c, {"e0"});
    // Coordinates: three pinned vertex blocks, then the two edge lengths.
    Polyhedron expect = canonical(u.pu);
    expect.add_equality({Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)}, Rat(0));
    CHECK(equal_sets(fr.face, canonical(expect)));
    CHECK(fr.contracted_curve.edges.size() == 1);
    CHECK(fr.contracted_curve.vertices.size() == 2);
    CHECK(validate_curve_type(fr.contracted_curve).passed());

    // Ray-target worked example: the face is {l = 0, x2 = x1}.
    CurveType rc = ray_curve();
    UniversalExtension ur = build_Pu(rc);
    FaceRestriction rfr = face_restrict(ur, rc, {"E"});
    Polyhedron rexpect = Polyhedron::nonneg_orthant(3);
    rexpect.add_equality({Rat(1), Rat(-1), Rat(0)}, Rat(0));
    rexpect.add_equality({Rat(0), Rat(0), Rat(1)}, Rat(0));
    CHECK(equal_sets(rfr.face, rexpect));
    CHECK(rfr.contracted_curve.vertices.size() == 1);
    CHECK(validate_curve_type(rfr.contracted_curve).passed());

    CHECK_THROWS_WITH_AS(face_restrict(build_Pu(double_edge_curve()), double_edge_curve(),
                                       {"e0", "e1"}),
                         doctest::Contains("NEW_CYCLE"), KernelError);
}

TEST_CASE("check_open_universality") {
    CurveType c = smooth_chain(2);
    UniversalExtension u = build_Pu(c);
    CHECK(check_open_universality(u, c, {}).passed());
    CHECK(check_open_universality(u, c, {"e0"}).passed());
    CHECK(check_open_universality(u, c, {"e1"}).passed());
    CHECK(check_open_universality(u, c, {"e0", "e1"}).passed());

    CurveType rc = ray_curve();
    CHECK(check_open_universality(build_Pu(rc), rc, {"E"}).passed());
}
