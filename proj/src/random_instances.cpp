#include "tropext/random_instances.hpp"

#include "tropext/affine_ops.hpp"

namespace tropext {

namespace {

int ri(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rat positive_rat(std::mt19937_64& rng) { return Rat(ri(rng, 1, 8), ri(rng, 1, 4)); }

TargetStratum point_stratum() { return {"pt", Polyhedron::point({Rat(0)})}; }

AffineMap const_zero1() { return AffineMap::constant(1, {Rat(0)}); }

}  // namespace

CurveType random_smooth_curve(std::mt19937_64& rng, std::size_t max_edges) {
    CurveType c;
    std::size_t nv = static_cast<std::size_t>(ri(rng, 2, 5));
    if (nv > max_edges + 1) nv = max_edges + 1;
    for (std::size_t v = 0; v < nv; ++v)
        c.vertices.push_back({"v" + std::to_string(v), point_stratum(), {Rat(0)}, {}});

    auto add_edge = [&](std::size_t a, std::size_t b) {
        Edge e;
        e.id = "e" + std::to_string(c.edges.size());
        e.length = positive_rat(rng);
        e.stratum = point_stratum();
        e.trajectory = const_zero1();
        e.flags[0] = {c.vertices[a].id, AffineMap::identity(1)};
        e.flags[1] = {c.vertices[b].id, AffineMap::identity(1)};
        c.edges.push_back(std::move(e));
    };
    for (std::size_t v = 1; v < nv; ++v)
        add_edge(static_cast<std::size_t>(ri(rng, 0, static_cast<int>(v) - 1)), v);
    std::size_t extra_budget = max_edges - std::min(max_edges, nv - 1);
    std::size_t extras = extra_budget ? static_cast<std::size_t>(
                                            ri(rng, 0, static_cast<int>(extra_budget)))
                                      : 0;
    for (std::size_t i = 0; i < extras; ++i) {
        std::size_t a = static_cast<std::size_t>(ri(rng, 0, static_cast<int>(nv) - 1));
        std::size_t b = static_cast<std::size_t>(ri(rng, 0, static_cast<int>(nv) - 1));
        if (a == b) continue;  // loops would not validate
        add_edge(a, b);
    }
    if (ri(rng, 0, 1)) {
        Leg l;
        l.id = "y0";
        l.vertex = c.vertices[0].id;
        l.stratum = point_stratum();
        l.trajectory = const_zero1();
        l.germ = AffineMap::identity(1);
        c.legs.push_back(std::move(l));
    }
    return c;
}

CurveType random_monodromy_curve(std::mt19937_64& rng) {
    std::size_t k = static_cast<std::size_t>(ri(rng, 2, 3));
    TargetStratum orth{"orth", Polyhedron::nonneg_orthant(k)};

    // Transposition of two coordinates as a monodromy generator.
    std::size_t i = static_cast<std::size_t>(ri(rng, 0, static_cast<int>(k) - 1));
    std::size_t j = (i + 1) % k;
    QMat perm(k, k);
    for (std::size_t r = 0; r < k; ++r) perm.at(r, r) = 1;
    perm.at(i, i) = perm.at(j, j) = 0;
    perm.at(i, j) = perm.at(j, i) = 1;
    AffineMap gen(std::move(perm), QVec(k));

    Rat c0(ri(rng, 0, 2));
    QVec pos0(k, c0);
    Rat len = positive_rat(rng);
    QVec pos1(k, c0 + len);

    // Trajectory along the diagonal, which every permutation fixes.
    QMat tl(k, 1);
    for (std::size_t r = 0; r < k; ++r) tl.at(r, 0) = 1;
    AffineMap traj(std::move(tl), pos0);

    CurveType c;
    c.vertices.push_back({"v0", orth, pos0, {gen}});
    c.vertices.push_back({"v1", orth, pos1, ri(rng, 0, 1) ? std::vector<AffineMap>{gen}
                                                          : std::vector<AffineMap>{}});
    Edge e;
    e.id = "e0";
    e.length = len;
    e.stratum = orth;
    e.trajectory = traj;
    e.flags[0] = {"v0", AffineMap::identity(k)};
    e.flags[1] = {"v1", AffineMap::identity(k)};
    c.edges.push_back(std::move(e));
    if (ri(rng, 0, 1)) {
        Leg l;
        l.id = "y0";
        l.vertex = "v1";
        l.stratum = orth;
        QMat ll(k, 1);
        for (std::size_t r = 0; r < k; ++r) ll.at(r, 0) = 1;
        l.trajectory = AffineMap(std::move(ll), pos1);
        l.germ = AffineMap::identity(k);
        c.legs.push_back(std::move(l));
    }
    return c;
}

Polyhedron random_polyhedron(std::mt19937_64& rng, std::size_t max_dim,
                             std::size_t max_cons) {
    std::size_t d = static_cast<std::size_t>(ri(rng, 1, static_cast<int>(max_dim)));
    Polyhedron p = Polyhedron::full(d);
    std::size_t ncons = static_cast<std::size_t>(ri(rng, 1, static_cast<int>(max_cons)));
    for (std::size_t c = 0; c < ncons; ++c) {
        QVec n(d);
        bool nonzero = false;
        for (auto& x : n) {
            x = ri(rng, -3, 3);
            if (x != 0) nonzero = true;
        }
        if (!nonzero) n[static_cast<std::size_t>(ri(rng, 0, static_cast<int>(d) - 1))] = 1;
        Rat off(ri(rng, -4, 4), ri(rng, 1, 2));
        if (ri(rng, 0, 9) == 0)
            p.add_equality(std::move(n), std::move(off));
        else
            p.add_inequality(std::move(n), std::move(off));
    }
    return p;
}

ClassifyInstance random_classify_instance(const UniversalExtension& u,
                                          std::mt19937_64& rng) {
    QMat dirs = direction_lattice(u.pu);
    std::size_t sd = static_cast<std::size_t>(ri(rng, 1, 3));
    QMat coeff(dirs.cols, sd);
    for (std::size_t r = 0; r < dirs.cols; ++r)
        for (std::size_t c = 0; c < sd; ++c) coeff.at(r, c) = ri(rng, -2, 2);
    AffineMap m(mat_mul(dirs, coeff), u.basepoint);
    ClassifyInstance inst;
    inst.base = canonical(preimage(u.pu, m));
    inst.basepoint = QVec(sd);
    inst.map = std::move(m);
    return inst;
}

}  // namespace tropext
