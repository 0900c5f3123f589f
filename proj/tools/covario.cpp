#include "covario/concavity.hpp"
#include "covario/io.hpp"
#include "covario/optimizer.hpp"
#include "covario/scenarios.hpp"
#include "covario/selftest.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;
using namespace covario;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("COVARIO_SEED")) return std::strtoull(env, nullptr, 10);
    return 42;
}

struct VerifyArgs {
    int theorem = 2;
    std::string scenario, k_path, l_path, a_csv, w_csv, csv_path;
    int samples = 33;
    double box = 0.0;
};

TruncationBox auto_box(const ConvexBody& K, const ConvexBody& L, const SegmentProbe& probe) {
    double reach = 0.0;
    for (const ConvexBody* b : {&K, &L})
        for (const Vec& v : b->vertices()) reach = std::max(reach, v.norm());
    const double hw =
        reach + probe.a.norm() + probe.w.norm() + 8.0 * (K.diameter() + L.diameter());
    return make_truncation_box(K.dim(), hw);
}

int run_verify(const VerifyArgs& args) {
    ConvexBody K, L;
    SegmentProbe probe;
    TruncationBox box;
    if (!args.scenario.empty()) {
        ScenarioSpec spec;
        spec.name = scenario_from_string(args.scenario);
        const Scenario sc = build(spec);
        K = sc.K;
        L = sc.L;
        probe = sc.probes.front();
        box = sc.box;
    } else {
        if (args.k_path.empty() || args.l_path.empty() || args.a_csv.empty() || args.w_csv.empty())
            throw std::invalid_argument("verify needs --scenario or all of --k --l --a --w");
        K = load_body(args.k_path);
        L = load_body(args.l_path);
        probe = {parse_vec(args.a_csv, K.dim()), parse_vec(args.w_csv, K.dim()), args.samples};
        box = args.box > 0.0 ? make_truncation_box(K.dim(), args.box) : auto_box(K, L, probe);
    }

    SegmentProfile profile = eval_segment(K, L, probe);
    const ConcavityReport rep = classify_segment(profile);
    if (args.theorem == 3 && rep.slope_beta < 0.0) profile = profile.reversed();
    const HomothetyWitness witness = recover_witness(profile);
    const ReconstructionReport rec =
        args.theorem == 2 ? verify_constant_case(K, L, profile.probe, witness, box)
                          : verify_affine_case(K, L, profile.probe, witness, box);

    json out = to_json(rec);
    out["classification"] = to_string(rep.classification);
    out["witness"] = to_json(witness);
    std::cout << out.dump(2) << "\n";

    if (!args.csv_path.empty()) {
        std::ofstream csv(args.csv_path);
        csv.precision(17);
        csv << "t,symdiff\n";
        for (const auto& [t, sd] : rec.per_t_symdiff) csv << t << "," << sd << "\n";
    }

    const double limit = 1e-8 * volume(witness.reference);
    if (rec.max_symdiff > limit)
        throw std::runtime_error("reconstruction symmetric difference " +
                                 std::to_string(rec.max_symdiff) + " exceeds " +
                                 std::to_string(limit));
    return 0;
}

int run_scenario(const std::string& name, const std::string& emit, double box_hw,
                 std::uint64_t seed) {
    ScenarioSpec spec;
    spec.name = scenario_from_string(name);
    spec.seed = seed;
    if (box_hw > 0.0) spec.box_half_width = box_hw;
    const Scenario sc = build(spec);

    json probes = json::array();
    for (size_t i = 0; i < sc.probes.size(); ++i) {
        json p = {{"a", json::array()}, {"w", json::array()}, {"samples", sc.probes[i].samples},
                  {"expected", to_string(sc.expected[i])}};
        for (int d = 0; d < sc.K.dim(); ++d) {
            p["a"].push_back(sc.probes[i].a[d]);
            p["w"].push_back(sc.probes[i].w[d]);
        }
        probes.push_back(p);
    }
    json manifest = {{"name", name},
                     {"k", "K.json"},
                     {"l", "L.json"},
                     {"box_half_width", sc.box.half_widths[0]},
                     {"probes", probes}};

    if (emit.empty()) {
        manifest["k"] = body_to_json(sc.K);
        manifest["l"] = body_to_json(sc.L);
        std::cout << manifest.dump(2) << "\n";
        return 0;
    }
    std::filesystem::create_directories(emit);
    const std::filesystem::path dir(emit);
    save_body(sc.K, (dir / "K.json").string());
    save_body(sc.L, (dir / "L.json").string());
    std::ofstream((dir / "probes.json").string()) << manifest.dump(2) << "\n";
    std::cout << "wrote K.json, L.json, probes.json to " << emit << "\n";
    return 0;
}

int run_selftest(std::uint64_t seed, int only, double tol) {
    if (tol <= 0.0) throw CLI::ValidationError("--tol must be positive");
    const std::vector<CriterionResult> results = run_acceptance(seed, only);
    bool all = true;
    for (const CriterionResult& r : results) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name
                  << " -- " << r.detail << "\n";
    }
    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES present")
              << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cross covariogram toolkit: evaluation, concavity classification, "
                 "cylinder/cone reconstruction, and maximization"};
    app.require_subcommand(1);
    const std::uint64_t env_seed = default_seed();

    std::string k_path, l_path, x_csv, a_csv, w_csv;
    int samples = 33;
    double tol = -1.0;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate g_{K,L}(x) = |K ∩ (L + x)|");
    eval_cmd->add_option("--k", k_path, "body JSON for K")->required();
    eval_cmd->add_option("--l", l_path, "body JSON for L")->required();
    eval_cmd->add_option("--x", x_csv, "translation, e.g. \"0.5,0.5\"")->required();

    auto* seg_cmd = app.add_subcommand("segment", "sample g along a probe segment (CSV)");
    auto* cls_cmd = app.add_subcommand("classify", "classify concavity along a probe segment");
    for (CLI::App* c : {seg_cmd, cls_cmd}) {
        c->add_option("--k", k_path, "body JSON for K")->required();
        c->add_option("--l", l_path, "body JSON for L")->required();
        c->add_option("--a", a_csv, "probe center")->required();
        c->add_option("--w", w_csv, "probe half-direction")->required();
        c->add_option("--samples", samples, "odd sample count (>= 5)");
    }
    cls_cmd->add_option("--tol", tol, "second-difference tolerance (default adaptive)");

    VerifyArgs vargs;
    auto* ver_cmd = app.add_subcommand("verify", "reconstruct cylinders/cones along a probe");
    ver_cmd->add_option("--theorem", vargs.theorem, "2 (constant) or 3 (affine)")
        ->check(CLI::IsMember({2, 3}))
        ->required();
    ver_cmd->add_option("--scenario", vargs.scenario, "built-in scenario name");
    ver_cmd->add_option("--k", vargs.k_path, "body JSON for K");
    ver_cmd->add_option("--l", vargs.l_path, "body JSON for L");
    ver_cmd->add_option("--a", vargs.a_csv, "probe center");
    ver_cmd->add_option("--w", vargs.w_csv, "probe half-direction");
    ver_cmd->add_option("--samples", vargs.samples, "odd sample count (>= 5)");
    ver_cmd->add_option("--box", vargs.box, "truncation box half-width (default auto)");
    ver_cmd->add_option("--csv", vargs.csv_path, "write per-t symmetric differences to a file");

    int restarts = 8;
    std::uint64_t seed = env_seed;
    auto* max_cmd = app.add_subcommand("maximize", "maximize g over translations");
    max_cmd->add_option("--k", k_path, "body JSON for K")->required();
    max_cmd->add_option("--l", l_path, "body JSON for L")->required();
    max_cmd->add_option("--restarts", restarts, "restart count");
    max_cmd->add_option("--seed", seed, "RNG seed (or COVARIO_SEED)");

    double level_h = 0.5;
    int chords = 100;
    auto* lev_cmd = app.add_subcommand("levelset", "probe level-set strict convexity");
    lev_cmd->set_help_flag("--help", "print help");  // frees -h/--h for the level value
    lev_cmd->add_option("--k", k_path, "body JSON for K")->required();
    lev_cmd->add_option("--l", l_path, "body JSON for L")->required();
    lev_cmd->add_option("--h", level_h, "level (absolute)")->required();
    lev_cmd->add_option("--chords", chords, "number of random chords");
    lev_cmd->add_option("--seed", seed, "RNG seed (or COVARIO_SEED)");

    std::string scen_name, emit_dir;
    double box_hw = 0.0;
    auto* scen_cmd = app.add_subcommand("scenario", "emit a built-in scenario");
    scen_cmd->add_option("--name", scen_name, "scenario name")->required();
    scen_cmd->add_option("--emit", emit_dir, "directory for K.json, L.json, probes.json");
    scen_cmd->add_option("--box", box_hw, "truncation box half-width override");
    scen_cmd->add_option("--seed", seed, "RNG seed (or COVARIO_SEED)");

    int only = 0;
    double self_tol = 1.0;
    auto* self_cmd = app.add_subcommand("selftest", "run the acceptance suite");
    self_cmd->add_option("--seed", seed, "RNG seed (or COVARIO_SEED)");
    self_cmd->add_option("--only", only, "run a single criterion (1..10)");
    self_cmd->add_option("--tol", self_tol, "tolerance scale, must be positive");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval_cmd) {
            const ConvexBody K = load_body(k_path);
            const ConvexBody L = load_body(l_path);
            std::cout << json{{"value", eval(K, L, parse_vec(x_csv, K.dim()))}}.dump(2) << "\n";
            return 0;
        }
        if (*seg_cmd || *cls_cmd) {
            const ConvexBody K = load_body(k_path);
            const ConvexBody L = load_body(l_path);
            const SegmentProbe probe{parse_vec(a_csv, K.dim()), parse_vec(w_csv, K.dim()),
                                     samples};
            if (*seg_cmd) {
                write_profile_csv(std::cout, eval_segment(K, L, probe, false));
            } else {
                const ConcavityReport rep =
                    classify_segment(eval_segment(K, L, probe, false), tol);
                std::cout << to_json(rep).dump(2) << "\n";
            }
            return 0;
        }
        if (*ver_cmd) return run_verify(vargs);
        if (*max_cmd) {
            const ConvexBody K = load_body(k_path);
            const ConvexBody L = load_body(l_path);
            std::cout << to_json(maximize(K, L, restarts, -1.0, seed)).dump(2) << "\n";
            return 0;
        }
        if (*lev_cmd) {
            const ConvexBody K = load_body(k_path);
            const ConvexBody L = load_body(l_path);
            std::cout << to_json(level_set_probe(K, L, level_h, chords, seed)).dump(2) << "\n";
            return 0;
        }
        if (*scen_cmd) return run_scenario(scen_name, emit_dir, box_hw, seed);
        if (*self_cmd) return run_selftest(seed, only, self_tol);
    } catch (const CLI::ValidationError& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}
