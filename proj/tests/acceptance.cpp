// Acceptance gate: one line per criterion, exact (zero-tolerance) checks.
// Usage: acceptance <cli-binary> <fixture-dir>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "tropext/extension_ops.hpp"
#include "tropext/io.hpp"
#include "tropext/random_instances.hpp"
#include "tropext/vrep.hpp"

using namespace tropext;

namespace {

std::string g_cli;
std::string g_fixtures;
int g_failures = 0;

void report(int n, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << n << " (" << name << "): " << (pass ? "PASS" : "FAIL");
    if (!pass && !detail.empty()) std::cout << " — " << detail;
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw KernelError("IO", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ProblemFile fixture(const std::string& name) {
    return parse_problem(slurp(g_fixtures + "/" + name + ".json"));
}

const std::vector<std::string> kFixtures = {
    "two_vertex_smooth", "ray_target",        "edgeless_point",     "split_edge_2",
    "split_edge_3",      "contracted_subtree", "classify_roundtrip", "monodromy"};

bool curves_equal(const CurveType& a, const CurveType& b) {
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() ||
        a.legs.size() != b.legs.size())
        return false;
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        const Vertex& x = a.vertices[i];
        const Vertex& y = b.vertices[i];
        if (x.id != y.id || x.position != y.position || x.monodromy != y.monodromy ||
            !equal_sets(x.stratum.polytope, y.stratum.polytope))
            return false;
    }
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        const Edge& x = a.edges[i];
        const Edge& y = b.edges[i];
        if (x.id != y.id || x.length != y.length ||
            !equal_sets(x.stratum.polytope, y.stratum.polytope))
            return false;
        if (!maps_agree_on(Polyhedron::interval(Rat(0), x.length), x.trajectory, y.trajectory))
            return false;
        for (int s = 0; s < 2; ++s) {
            if (x.flags[s].vertex != y.flags[s].vertex) return false;
            const Polyhedron& vs = a.vertices[a.vertex_index(x.flags[s].vertex)].stratum.polytope;
            if (!maps_agree_on(vs, x.flags[s].germ, y.flags[s].germ)) return false;
        }
    }
    for (std::size_t i = 0; i < a.legs.size(); ++i) {
        const Leg& x = a.legs[i];
        const Leg& y = b.legs[i];
        if (x.id != y.id || x.vertex != y.vertex ||
            !equal_sets(x.stratum.polytope, y.stratum.polytope))
            return false;
        if (!maps_agree_on(Polyhedron::ray_from(Rat(0)), x.trajectory, y.trajectory))
            return false;
        const Polyhedron& vs = a.vertices[a.vertex_index(x.vertex)].stratum.polytope;
        if (!maps_agree_on(vs, x.germ, y.germ)) return false;
    }
    return true;
}

void criterion1() {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 200; ++i) {
        CurveType c = random_smooth_curve(rng, 8);
        UniversalExtension u = build_Pu(c);
        AffineMap joint = u.rho.at(0);
        for (std::size_t e = 1; e < u.rho.size(); ++e) joint = pair(joint, u.rho[e]);
        Polyhedron orth = Polyhedron::nonneg_orthant(u.rho.size());
        auto cert = is_iso_onto_face(joint, u.pu, orth);
        if (!cert || !equal_sets(cert->face, orth)) {
            report(1, "smooth-target law", false, "instance " + std::to_string(i));
            return;
        }
    }
    report(1, "smooth-target law", true);
}

void criterion2() {
    std::mt19937_64 rng(202);
    auto check_one = [&](const CurveType& c) {
        UniversalExtension u = build_Pu(c);
        if (!contains_point(u.pu, u.basepoint)) return false;
        return curves_equal(fiber_at(c, u.structure, u.basepoint), c);
    };
    for (const auto& f : kFixtures)
        if (!check_one(fixture(f).curve)) {
            report(2, "distinguished point", false, "fixture " + f);
            return;
        }
    for (int i = 0; i < 50; ++i) {
        CurveType c = i % 2 ? random_smooth_curve(rng, 6) : random_monodromy_curve(rng);
        if (!check_one(c)) {
            report(2, "distinguished point", false, "random instance " + std::to_string(i));
            return;
        }
    }
    report(2, "distinguished point", true);
}

void criterion3() {
    std::mt19937_64 rng(303);
    int done = 0;
    for (const auto& f : {"ray_target", "two_vertex_smooth", "monodromy"}) {
        CurveType c = fixture(f).curve;
        UniversalExtension u = build_Pu(c);
        for (int i = 0; i < 34 && done < 100; ++i, ++done) {
            ClassifyInstance inst = random_classify_instance(u, rng);
            ExtendedStructure s =
                pullback_extension(c, u.structure, inst.map, inst.base, inst.basepoint);
            ClassifyingMap cm = classify(c, u, s);
            if (!cm.certificate.passed() || cm.map != inst.map) {
                report(3, "classification round trip", false,
                       std::string(f) + " instance " + std::to_string(i));
                return;
            }
        }
    }
    report(3, "classification round trip", true);
}

void criterion4() {
    CurveType c = fixture("ray_target").curve;
    UniversalExtension u = build_Pu(c);
    Polyhedron expect =
        polyhedron_from_json(Json::parse(slurp(g_fixtures + "/ray_target_pu_expected.json")));
    report(4, "worked example", u.pu == canonical(expect) && u.pu == expect,
           "computed P_u differs from the golden H-representation");
}

bool forest_subsets_pass(const CurveType& c, std::string& why) {
    UniversalExtension u = build_Pu(c);
    std::size_t n = c.edges.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        // Forest test on the subset.
        std::vector<std::size_t> root(c.vertices.size());
        for (std::size_t i = 0; i < root.size(); ++i) root[i] = i;
        auto find = [&](std::size_t i) {
            while (root[i] != i) i = root[i] = root[root[i]];
            return i;
        };
        bool forest = true;
        std::vector<std::string> s;
        for (std::size_t e = 0; e < n; ++e) {
            if (!(mask >> e & 1)) continue;
            s.push_back(c.edges[e].id);
            std::size_t a = find(c.vertex_index(c.edges[e].flags[0].vertex));
            std::size_t b = find(c.vertex_index(c.edges[e].flags[1].vertex));
            if (a == b) forest = false;
            root[a] = b;
        }
        if (!forest) continue;
        if (!check_open_universality(u, c, s).passed()) {
            why = "subset mask " + std::to_string(mask);
            return false;
        }
    }
    return true;
}

void criterion5() {
    std::string why;
    for (const auto& f : kFixtures) {
        CurveType c = fixture(f).curve;
        if (!forest_subsets_pass(c, why)) {
            report(5, "open universality", false, "fixture " + f + ", " + why);
            return;
        }
    }
    std::mt19937_64 rng(505);
    for (int i = 0; i < 20; ++i) {
        CurveType c = random_smooth_curve(rng, 4);
        if (!forest_subsets_pass(c, why)) {
            report(5, "open universality", false,
                   "random instance " + std::to_string(i) + ", " + why);
            return;
        }
    }
    report(5, "open universality", true);
}

void criterion6() {
    for (const auto& f : {"split_edge_2", "split_edge_3", "contracted_subtree"}) {
        ProblemFile pf = fixture(f);
        const DegreeOneMap& d = *pf.degree_one;
        UniversalExtension u = build_Pu(d.source);
        PushoutResult pr = pushout_extension(u.structure, d);
        if (!validate_extension(d.target, pr.structure).passed()) {
            report(6, "pushout sum rule and naturality", false,
                   std::string(f) + ": output fails validate_extension");
            return;
        }
        // Sum rule per target edge.
        for (std::size_t te = 0; te < d.target.edges.size(); ++te) {
            AffineMap sum = AffineMap::constant(u.pu.ambient_dim, {Rat(0)});
            for (const auto& se : d.edge_chains.at(d.target.edges[te].id))
                sum = map_add(sum, u.structure.edge_data[d.source.edge_index(se)].rho);
            if (!maps_agree_on(pr.structure.base, pr.structure.edge_data[te].rho, sum)) {
                report(6, "pushout sum rule and naturality", false,
                       std::string(f) + ": sum rule fails on " + d.target.edges[te].id);
                return;
            }
        }
        // Naturality of eta against the natural transformations.
        auto nat_of_image = [&](const DegreeOneMap::VertexImage& img) {
            using K = DegreeOneMap::VertexImage::Kind;
            if (img.kind == K::Vertex)
                return pr.structure.vertex_data[d.target.vertex_index(img.id)].nat;
            if (img.kind == K::Edge)
                return pr.structure.edge_data[d.target.edge_index(img.id)].nat;
            for (std::size_t l = 0; l < d.target.legs.size(); ++l)
                if (d.target.legs[l].id == img.id) return pr.structure.leg_data[l].nat;
            throw KernelError("INTERNAL", "unresolved image");
        };
        bool ok = true;
        for (std::size_t v = 0; v < d.source.vertices.size() && ok; ++v)
            ok = maps_agree_on(
                u.structure.vertex_data[v].poly,
                compose(nat_of_image(d.vertex_assignment.at(d.source.vertices[v].id)),
                        pr.eta_vertex[v]),
                u.structure.vertex_data[v].nat);
        for (std::size_t e = 0; e < d.source.edges.size() && ok; ++e) {
            // Image object of the edge: its chain's target edge, or the image
            // of its (shared) endpoints when contracted.
            AffineMap down = [&]() -> AffineMap {
                for (std::size_t te = 0; te < d.target.edges.size(); ++te)
                    for (const auto& se : d.edge_chains.at(d.target.edges[te].id))
                        if (se == d.source.edges[e].id)
                            return pr.structure.edge_data[te].nat;
                for (std::size_t tl = 0; tl < d.target.legs.size(); ++tl)
                    for (const auto& se : d.leg_chains.at(d.target.legs[tl].id).edges)
                        if (se == d.source.edges[e].id) return pr.structure.leg_data[tl].nat;
                return nat_of_image(
                    d.vertex_assignment.at(d.source.edges[e].flags[0].vertex));
            }();
            ok = maps_agree_on(u.structure.edge_data[e].node_poly,
                               compose(down, pr.eta_edge[e]), u.structure.edge_data[e].nat);
        }
        if (!ok) {
            report(6, "pushout sum rule and naturality", false,
                   std::string(f) + ": an eta square fails");
            return;
        }
    }
    report(6, "pushout sum rule and naturality", true);
}

void criterion7() {
    std::mt19937_64 rng(707);
    for (int i = 0; i < 500; ++i) {
        Polyhedron p = random_polyhedron(rng, 4, 8);
        Polyhedron cp = canonical(p);
        VRep v = enumerate_vrep(p);
        if (canonical(hull_from_vrep(v)) != cp) {
            report(7, "kernel oracle equivalence", false,
                   "double description round trip, instance " + std::to_string(i));
            return;
        }
        // Image under a random integral map vs the generator oracle.
        std::size_t m = 1 + static_cast<std::size_t>(i % 3);
        QMat lin(m, p.ambient_dim);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < p.ambient_dim; ++c)
                lin.at(r, c) = static_cast<int>((i * 13 + r * 5 + c * 3) % 7) - 3;
        AffineMap a(std::move(lin), QVec(m));
        Polyhedron fm = image(p, a);
        VRep mapped;
        mapped.ambient_dim = m;
        for (const auto& x : v.vertices) mapped.vertices.push_back(a.apply(x));
        for (const auto& x : v.rays) mapped.rays.push_back(mat_vec(a.linear, x));
        for (const auto& x : v.lines) mapped.lines.push_back(mat_vec(a.linear, x));
        if (canonical(hull_from_vrep(mapped)) != fm) {
            report(7, "kernel oracle equivalence", false,
                   "image oracle, instance " + std::to_string(i));
            return;
        }
        // Equalizer containment and pointwise agreement on its generators.
        if (p.ambient_dim >= 2) {
            AffineMap a1 = AffineMap::coordinate_projection(p.ambient_dim, 0, 1);
            AffineMap a2 = AffineMap::coordinate_projection(p.ambient_dim, 1, 1);
            Polyhedron eq = equalizer(p, a1, a2);
            bool ok = contains(cp, eq) && (is_empty(eq) || maps_agree_on(eq, a1, a2));
            if (!ok) {
                report(7, "kernel oracle equivalence", false,
                       "equalizer oracle, instance " + std::to_string(i));
                return;
            }
        }
    }
    report(7, "kernel oracle equivalence", true);
}

void criterion8() {
    std::mt19937_64 rng(808);
    for (int i = 0; i < 50; ++i) {
        CurveType c = random_monodromy_curve(rng);
        if (!validate_curve_type(c).passed()) {
            report(8, "class-independence", false, "instance invalid " + std::to_string(i));
            return;
        }
        UniversalExtension u = build_Pu(c);
        CurveType c2 = c;
        for (auto& e : c2.edges)
            for (auto& fl : e.flags) {
                const Vertex& v = c2.vertex(fl.vertex);
                if (!v.monodromy.empty()) fl.germ = compose(fl.germ, v.monodromy[0]);
            }
        if (u.pu != build_Pu(c2).pu) {
            report(8, "class-independence", false, "instance " + std::to_string(i));
            return;
        }
    }
    report(8, "class-independence", true);
}

void criterion9() {
    const std::vector<std::pair<std::string, std::string>> runs = {
        {"two_vertex_smooth", "validate"}, {"two_vertex_smooth", "universal"},
        {"two_vertex_smooth", "facecheck"}, {"ray_target", "validate"},
        {"ray_target", "universal"},        {"ray_target", "facecheck"},
        {"edgeless_point", "validate"},     {"edgeless_point", "universal"},
        {"split_edge_2", "validate"},       {"split_edge_2", "pushout"},
        {"split_edge_3", "validate"},       {"split_edge_3", "pushout"},
        {"contracted_subtree", "validate"}, {"contracted_subtree", "pushout"},
        {"classify_roundtrip", "validate"}, {"classify_roundtrip", "classify"},
        {"classify_roundtrip", "pullback"}, {"monodromy", "validate"},
        {"monodromy", "universal"},         {"monodromy", "facecheck"}};
    for (const auto& [fix, cmd] : runs) {
        std::string extra;
        if (cmd == "facecheck" && fix == "two_vertex_smooth") extra = " --smooth-edges e0";
        std::vector<std::string> outputs;
        for (int rep = 0; rep < 3; ++rep) {
            std::string tmp = std::string("acceptance_out_") + std::to_string(rep) + ".json";
            std::string command = g_cli + " --command " + cmd + " --input " + g_fixtures +
                                  "/" + fix + ".json --output " + tmp + extra +
                                  " 2>/dev/null";
            int rc = std::system(command.c_str());
            if (rc != 0) {
                report(9, "determinism", false, fix + " " + cmd + " exited nonzero");
                return;
            }
            outputs.push_back(slurp(tmp));
        }
        if (outputs[0] != outputs[1] || outputs[0] != outputs[2] || outputs[0].empty()) {
            report(9, "determinism", false, fix + " " + cmd + " output differs across runs");
            return;
        }
    }
    report(9, "determinism", true);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <cli-binary> <fixture-dir>\n";
        return 2;
    }
    g_cli = argv[1];
    g_fixtures = argv[2];
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
        criterion9();
    } catch (const std::exception& e) {
        std::cerr << "acceptance aborted: " << e.what() << "\n";
        return 1;
    }
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 9 acceptance criteria passed\n";
    return 0;
}
