#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tropext/extension_ops.hpp"
#include "tropext/io.hpp"
#include "tropext/random_instances.hpp"
#include "tropext/vrep.hpp"

using namespace tropext;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;

struct Options {
    std::string input;
    std::string output;
    std::string command;
    std::string smooth_edges;
    std::uint64_t seed = 0;
};

void emit(const Options& opt, const Json& sol) {
    std::string text = sol.dump(2);
    text.push_back('\n');
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output, std::ios::binary);
        out << text;
    }
}

int fail_with(const Options& opt, Json sol, const std::string& code,
              const std::string& detail) {
    sol["errors"] = Json::array({{{"code", code}, {"detail", detail}}});
    emit(opt, sol);
    return kExitFail;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int run_selftest(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    struct Row {
        std::string name;
        int run = 0, pass = 0;
    };
    std::vector<Row> rows;

    {
        Row r{"smooth_target_iso"};
        for (int i = 0; i < 20; ++i) {
            ++r.run;
            CurveType c = random_smooth_curve(rng, 6);
            UniversalExtension u = build_Pu(c);
            AffineMap joint = u.rho[0];
            for (std::size_t e = 1; e < u.rho.size(); ++e) joint = pair(joint, u.rho[e]);
            auto cert = is_iso_onto_face(joint, u.pu, Polyhedron::nonneg_orthant(u.rho.size()));
            if (cert && equal_sets(cert->face, Polyhedron::nonneg_orthant(u.rho.size())))
                ++r.pass;
        }
        rows.push_back(r);
    }
    {
        Row r{"distinguished_point"};
        for (int i = 0; i < 10; ++i) {
            ++r.run;
            CurveType c = random_smooth_curve(rng, 5);
            UniversalExtension u = build_Pu(c);
            CurveType f = fiber_at(c, u.structure, u.basepoint);
            if (validate_curve_type(f).passed() && f.edges.size() == c.edges.size()) ++r.pass;
        }
        rows.push_back(r);
    }
    {
        Row r{"classify_round_trip"};
        CurveType c = random_smooth_curve(rng, 4);
        UniversalExtension u = build_Pu(c);
        for (int i = 0; i < 10; ++i) {
            ++r.run;
            ClassifyInstance inst = random_classify_instance(u, rng);
            try {
                ExtendedStructure s = pullback_extension(c, u.structure, inst.map,
                                                         inst.base, inst.basepoint);
                ClassifyingMap cm = classify(c, u, s);
                if (cm.certificate.passed() && maps_agree_on(inst.base, cm.map, inst.map))
                    ++r.pass;
            } catch (const KernelError&) {
            }
        }
        rows.push_back(r);
    }
    {
        Row r{"kernel_oracle"};
        for (int i = 0; i < 50; ++i) {
            ++r.run;
            Polyhedron p = random_polyhedron(rng, 4, 8);
            Polyhedron c1 = canonical(p);
            VRep v = enumerate_vrep(p);
            Polyhedron c2 = canonical(hull_from_vrep(v));
            if (c1 == c2) ++r.pass;
        }
        rows.push_back(r);
    }
    {
        Row r{"monodromy_invariance"};
        for (int i = 0; i < 5; ++i) {
            ++r.run;
            CurveType c = random_monodromy_curve(rng);
            if (!validate_curve_type(c).passed()) continue;
            UniversalExtension u = build_Pu(c);
            CurveType c2 = c;
            for (auto& e : c2.edges)
                for (auto& fl : e.flags) {
                    const Vertex& v = c2.vertex(fl.vertex);
                    if (!v.monodromy.empty()) fl.germ = compose(fl.germ, v.monodromy[0]);
                }
            UniversalExtension u2 = build_Pu(c2);
            if (u.pu == u2.pu) ++r.pass;
        }
        rows.push_back(r);
    }

    bool ok = true;
    std::cout << "suite                     run  pass\n";
    for (const auto& r : rows) {
        std::cout << r.name;
        for (std::size_t i = r.name.size(); i < 26; ++i) std::cout << ' ';
        std::cout << r.run << "    " << r.pass << "\n";
        if (r.pass != r.run) ok = false;
    }
    std::cout << (ok ? "selftest OK" : "selftest FAILED") << "\n";
    return ok ? kExitOk : kExitFail;
}

int dispatch(const Options& opt) {
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open " << opt.input << "\n";
        return kExitParse;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    Json sol;
    sol["version"] = "1";
    sol["input_digest"] = input_digest(text);
    sol["command"] = opt.command;

    ProblemFile pf;
    try {
        pf = parse_problem(text);
    } catch (const KernelError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }

    std::vector<std::string> smooth = pf.smooth_edges;
    if (!opt.smooth_edges.empty()) smooth = split_csv(opt.smooth_edges);

    try {
        ValidationReport curve_rep = validate_curve_type(pf.curve);
        if (opt.command == "validate") {
            sol["curve_report"] = report_json(curve_rep);
            bool ok = curve_rep.passed();
            if (pf.extension) {
                ValidationReport ext_rep = validate_extension(pf.curve, *pf.extension);
                sol["extension_report"] = report_json(ext_rep);
                ok = ok && ext_rep.passed();
            }
            emit(opt, sol);
            return ok ? kExitOk : kExitFail;
        }

        if (!curve_rep.passed()) {
            sol["curve_report"] = report_json(curve_rep);
            return fail_with(opt, sol, "INVALID_CURVE", "validate_curve_type failed");
        }

        if (opt.command == "universal") {
            UniversalExtension u = build_Pu(pf.curve);
            EmbeddingReport er = embedding_report(u);
            sol["q"] = polyhedron_json(canonical(u.q.poly));
            sol["q1"] = polyhedron_json(u.q1);
            sol["p_u"] = polyhedron_json(u.pu, true);
            sol["basepoint"] = rat_vec_json(u.basepoint);
            Json rho = Json::array(), pos = Json::array();
            for (const auto& m : u.rho) rho.push_back(affine_map_json(m));
            for (const auto& m : u.positions) pos.push_back(affine_map_json(m));
            sol["rho"] = std::move(rho);
            sol["positions"] = std::move(pos);
            Json emb;
            emb["injective"] = er.injective;
            Json cuts = Json::array();
            for (const auto& con : er.cutting_equalities)
                cuts.push_back(
                    {{"normal", rat_vec_json(con.normal)}, {"offset", format_rat(con.offset)}});
            emb["cutting_equalities"] = std::move(cuts);
            emb["notes"] = er.lines;
            sol["embedding"] = std::move(emb);
            sol["extension"] = extension_json(u.structure);
            emit(opt, sol);
            return kExitOk;
        }

        if (opt.command == "classify") {
            if (!pf.extension) {
                std::cerr << "classify needs an extension section\n";
                return kExitParse;
            }
            UniversalExtension u = build_Pu(pf.curve);
            ClassifyingMap cm = classify(pf.curve, u, *pf.extension);
            sol["map"] = affine_map_json(cm.map);
            sol["certificate"] = report_json(cm.certificate);
            emit(opt, sol);
            return kExitOk;
        }

        if (opt.command == "pullback") {
            if (!pf.pullback) {
                std::cerr << "pullback needs params.pullback\n";
                return kExitParse;
            }
            ExtendedStructure base_ext =
                pf.extension ? *pf.extension : build_Pu(pf.curve).structure;
            ExtendedStructure s =
                pullback_extension(pf.curve, base_ext, pf.pullback->map, pf.pullback->base,
                                   pf.pullback->basepoint);
            ValidationReport rep = validate_extension(pf.curve, s);
            sol["extension"] = extension_json(s);
            sol["report"] = report_json(rep);
            emit(opt, sol);
            return rep.passed() ? kExitOk : kExitFail;
        }

        if (opt.command == "pushout") {
            if (!pf.degree_one) {
                std::cerr << "pushout needs a degree_one_map section\n";
                return kExitParse;
            }
            ValidationReport d1 = validate_degree_one(*pf.degree_one);
            sol["degree_one_report"] = report_json(d1);
            if (!d1.passed())
                return fail_with(opt, sol, "INVALID_DEGREE_ONE", "validate_degree_one failed");
            ExtendedStructure p0 = pf.extension ? *pf.extension : build_Pu(pf.curve).structure;
            PushoutResult pr = pushout_extension(p0, *pf.degree_one);
            ValidationReport rep = validate_extension(pf.degree_one->target, pr.structure);
            sol["extension"] = extension_json(pr.structure);
            Json ev = Json::array(), ee = Json::array(), el = Json::array();
            for (const auto& m : pr.eta_vertex) ev.push_back(affine_map_json(m));
            for (const auto& m : pr.eta_edge) ee.push_back(affine_map_json(m));
            for (const auto& m : pr.eta_leg) el.push_back(affine_map_json(m));
            sol["eta_vertex"] = std::move(ev);
            sol["eta_edge"] = std::move(ee);
            sol["eta_leg"] = std::move(el);
            sol["report"] = report_json(rep);
            emit(opt, sol);
            return rep.passed() ? kExitOk : kExitFail;
        }

        if (opt.command == "facecheck") {
            UniversalExtension u = build_Pu(pf.curve);
            FaceRestriction fr = face_restrict(u, pf.curve, smooth);
            ValidationReport rep = check_open_universality(u, pf.curve, smooth);
            sol["smoothed_edges"] = fr.smoothed_edges;
            sol["face"] = polyhedron_json(fr.face, true);
            sol["witness"] = rat_vec_json(fr.witness);
            Json strata = Json::object();
            Json cj = curve_json(fr.contracted_curve, strata);
            sol["contracted_strata"] = std::move(strata);
            sol["contracted_curve"] = std::move(cj);
            sol["universality"] = report_json(rep);
            if (smooth.empty()) sol["note"] = "identity";
            emit(opt, sol);
            return rep.passed() ? kExitOk : kExitFail;
        }

        std::cerr << "unknown command " << opt.command << "\n";
        return kExitParse;
    } catch (const KernelError& e) {
        return fail_with(opt, sol, e.code(), e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal tropical extensions: exact polyhedral computations"};
    Options opt;
    app.add_option("--input", opt.input, "problem file (JSON)");
    app.add_option("--output", opt.output, "solution file (default: stdout)");
    app.add_option("--command", opt.command,
                   "validate|universal|classify|pullback|pushout|facecheck|selftest")
        ->required();
    app.add_option("--smooth-edges", opt.smooth_edges, "comma-separated edge ids for facecheck");
    app.add_option("--seed", opt.seed, "seed for selftest");
    CLI11_PARSE(app, argc, argv);

    auto t0 = std::chrono::steady_clock::now();
    int rc;
    if (opt.command == "selftest") {
        rc = run_selftest(opt.seed);
    } else {
        if (opt.input.empty()) {
            std::cerr << "--input is required\n";
            return kExitParse;
        }
        rc = dispatch(opt);
    }
    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "elapsed_ms "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << "\n";
    return rc;
}
