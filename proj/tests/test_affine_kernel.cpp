#include <doctest.h>

#include <random>

#include "tropext/affine_ops.hpp"
#include "tropext/random_instances.hpp"
#include "tropext/vrep.hpp"

using namespace tropext;

namespace {

AffineMap sum2() {
    QMat lin(1, 2);
    lin.at(0, 0) = lin.at(0, 1) = 1;
    return AffineMap(std::move(lin), {Rat(0)});
}

AffineMap coord(std::size_t n, std::size_t i) {
    return AffineMap::coordinate_projection(n, i, 1);
}

AffineMap sum_n(std::size_t n) {
    QMat lin(1, n);
    for (std::size_t i = 0; i < n; ++i) lin.at(0, i) = 1;
    return AffineMap(std::move(lin), {Rat(0)});
}

AffineMap diag_embed2() {
    QMat lin(2, 1);
    lin.at(0, 0) = lin.at(1, 0) = 1;
    return AffineMap(std::move(lin), QVec(2));
}

}  // namespace

TEST_CASE("image") {
    Polyhedron orth2 = Polyhedron::nonneg_orthant(2);
    CHECK(equal_sets(image(orth2, sum2()), Polyhedron::ray_from(Rat(0))));
    CHECK(image(orth2, AffineMap::identity(2)) == canonical(orth2));

    Polyhedron simplex = orth2;
    simplex.add_equality({Rat(1), Rat(1)}, Rat(1));
    CHECK(equal_sets(image(simplex, coord(2, 0)), Polyhedron::interval(Rat(0), Rat(1))));
}

TEST_CASE("preimage") {
    Polyhedron one = Polyhedron::point({Rat(1)});
    Polyhedron line = Polyhedron::full(2);
    line.add_equality({Rat(1), Rat(1)}, Rat(1));
    CHECK(equal_sets(preimage(one, sum2()), line));

    Polyhedron ray = Polyhedron::ray_from(Rat(0));
    CHECK(preimage(ray, AffineMap::identity(1)) == canonical(ray));

    QMat dbl(1, 1);
    dbl.at(0, 0) = 2;
    AffineMap two(std::move(dbl), {Rat(0)});
    CHECK(equal_sets(preimage(Polyhedron::interval(Rat(0), Rat(3)), two),
                     Polyhedron::interval(Rat(0), Rat(3, 2))));
}

TEST_CASE("fiber_product") {
    Polyhedron ray = Polyhedron::ray_from(Rat(0));
    Polyhedron orth2 = Polyhedron::nonneg_orthant(2);
    FiberProduct fp = fiber_product(ray, AffineMap::identity(1), orth2, sum2());
    Polyhedron expect = Polyhedron::full(3);
    expect.add_inequality({Rat(0), Rat(1), Rat(0)}, Rat(0));
    expect.add_inequality({Rat(0), Rat(0), Rat(1)}, Rat(0));
    expect.add_equality({Rat(1), Rat(-1), Rat(-1)}, Rat(0));
    CHECK(equal_sets(fp.poly, expect));

    // Pullback along the identity is the graph; proj1 is iso onto it.
    FiberProduct graph = fiber_product(ray, diag_embed2(), orth2, AffineMap::identity(2));
    CHECK(equal_sets(image(graph.poly, graph.proj1), ray));

    // Point {3} against a+b: the segment with vertices (3,0), (0,3).
    FiberProduct seg = fiber_product(Polyhedron::point({Rat(3)}),
                                     AffineMap::identity(1), orth2, sum2());
    VRep v = enumerate_vrep(image(seg.poly, seg.proj2));
    REQUIRE(v.vertices.size() == 2);
    CHECK(v.rays.empty());
    CHECK(((v.vertices[0] == QVec{Rat(0), Rat(3)} && v.vertices[1] == QVec{Rat(3), Rat(0)}) ||
           (v.vertices[1] == QVec{Rat(0), Rat(3)} && v.vertices[0] == QVec{Rat(3), Rat(0)})));
}

TEST_CASE("is_iso_onto_face") {
    Polyhedron ray = Polyhedron::ray_from(Rat(0));
    Polyhedron orth2 = Polyhedron::nonneg_orthant(2);
    QMat emb(2, 1);
    emb.at(1, 0) = 1;
    AffineMap second(std::move(emb), QVec(2));
    auto cert = is_iso_onto_face(second, ray, orth2);
    REQUIRE(cert);
    Polyhedron face = orth2;
    face.add_equality({Rat(1), Rat(0)}, Rat(0));
    CHECK(equal_sets(cert->face, face));
    // Inverse soundness on generators.
    CHECK(maps_agree_on(ray, compose(cert->inverse_on_face, second), AffineMap::identity(1)));

    auto self_cert = is_iso_onto_face(AffineMap::identity(2), orth2, orth2);
    REQUIRE(self_cert);
    CHECK(equal_sets(self_cert->face, orth2));

    CHECK(!is_iso_onto_face(sum2(), orth2, Polyhedron::ray_from(Rat(0))));
}

TEST_CASE("affine_interpolate") {
    Polyhedron orth2 = Polyhedron::nonneg_orthant(2);
    Rat l(2);
    // Face {(0, b)} must go to 0; the segment {a+b = l} must go to a.
    QMat emb(2, 1);
    emb.at(1, 0) = 1;
    AffineMap face_embed(std::move(emb), QVec(2));
    QMat seg(2, 1);
    seg.at(0, 0) = 1;
    seg.at(1, 0) = -1;
    AffineMap seg_embed(std::move(seg), {Rat(0), l});  // t -> (t, l - t)
    std::vector<InterpolateConstraint> cons;
    cons.push_back({face_embed, Polyhedron::ray_from(Rat(0)), AffineMap::constant(1, {Rat(0)})});
    cons.push_back({seg_embed, Polyhedron::interval(Rat(0), l), AffineMap::identity(1)});
    AffineMap a = affine_interpolate(cons, orth2);
    CHECK(maps_agree_on(orth2, a, coord(2, 0)));

    // Single covering constraint returns the value map.
    std::vector<InterpolateConstraint> single;
    single.push_back({AffineMap::identity(2), orth2, sum2()});
    CHECK(maps_agree_on(orth2, affine_interpolate(single, orth2), sum2()));

    // Conflicting constants on overlapping sets.
    std::vector<InterpolateConstraint> conflict;
    conflict.push_back({AffineMap::identity(2), orth2, AffineMap::constant(2, {Rat(0)})});
    conflict.push_back({AffineMap::identity(2), orth2, AffineMap::constant(2, {Rat(1)})});
    CHECK_THROWS_WITH_AS(affine_interpolate(conflict, orth2), doctest::Contains("INCONSISTENT"),
                         KernelError);
}

TEST_CASE("equalizer") {
    Polyhedron orth2 = Polyhedron::nonneg_orthant(2);
    CHECK(equalizer(orth2, sum2(), sum2()) == canonical(orth2));

    Polyhedron diag = equalizer(orth2, coord(2, 0), coord(2, 1));
    Polyhedron expect = Polyhedron::nonneg_orthant(2);
    expect.add_equality({Rat(1), Rat(-1)}, Rat(0));
    CHECK(equal_sets(diag, expect));

    Polyhedron orth3 = Polyhedron::nonneg_orthant(3);
    QMat sum13(1, 3);
    sum13.at(0, 0) = sum13.at(0, 2) = 1;
    Polyhedron cut = equalizer(orth3, coord(3, 1), AffineMap(std::move(sum13), {Rat(0)}));
    // Oracle: the cone generated by (1,1,0), (0,1,1).
    VRep v = enumerate_vrep(cut);
    REQUIRE(v.vertices.size() == 1);
    CHECK(v.vertices[0] == QVec(3));
    REQUIRE(v.rays.size() == 2);
    CHECK(((v.rays[0] == QVec{Rat(0), Rat(1), Rat(1)} && v.rays[1] == QVec{Rat(1), Rat(1), Rat(0)}) ||
           (v.rays[1] == QVec{Rat(0), Rat(1), Rat(1)} && v.rays[0] == QVec{Rat(1), Rat(1), Rat(0)})));
}

TEST_CASE("fixed_locus") {
    Polyhedron orth2 = Polyhedron::nonneg_orthant(2);
    CHECK(fixed_locus(orth2, {}) == canonical(orth2));

    QMat sw(2, 2);
    sw.at(0, 1) = sw.at(1, 0) = 1;
    AffineMap swap(std::move(sw), QVec(2));
    Polyhedron diag = Polyhedron::nonneg_orthant(2);
    diag.add_equality({Rat(1), Rat(-1)}, Rat(0));
    CHECK(equal_sets(fixed_locus(orth2, {swap}), diag));

    QMat cy(3, 3);
    cy.at(0, 1) = cy.at(1, 2) = cy.at(2, 0) = 1;
    AffineMap cyc(std::move(cy), QVec(3));
    Polyhedron diag3 = Polyhedron::nonneg_orthant(3);
    diag3.add_equality({Rat(1), Rat(-1), Rat(0)}, Rat(0));
    diag3.add_equality({Rat(0), Rat(1), Rat(-1)}, Rat(0));
    CHECK(equal_sets(fixed_locus(Polyhedron::nonneg_orthant(3), {cyc}), diag3));
}

TEST_CASE("kernel invariants on random polyhedra") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 60; ++i) {
        Polyhedron p = random_polyhedron(rng, 4, 8);
        Polyhedron cp = canonical(p);
        CHECK(image(p, AffineMap::identity(p.ambient_dim)) == cp);

        // Double description round trip.
        CHECK(canonical(hull_from_vrep(enumerate_vrep(p))) == cp);

        // Functoriality through a random integral map.
        std::size_t m = 1 + static_cast<std::size_t>(i % 3);
        QMat lin(m, p.ambient_dim);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < p.ambient_dim; ++c)
                lin.at(r, c) = static_cast<int>((i * 7 + r * 3 + c) % 5) - 2;
        AffineMap a(std::move(lin), QVec(m));
        AffineMap b = sum_n(m);
        CHECK(image(image(p, a), b) == image(p, compose(b, a)));

        // Equalizer containment and pointwise agreement on generators.
        if (p.ambient_dim >= 2) {
            AffineMap a1 = AffineMap::coordinate_projection(p.ambient_dim, 0, 1);
            AffineMap a2 = AffineMap::coordinate_projection(p.ambient_dim, 1, 1);
            Polyhedron eq = equalizer(p, a1, a2);
            CHECK(contains(canonical(p), eq));
            if (!is_empty(eq)) CHECK(maps_agree_on(eq, a1, a2));
        }
    }
}
