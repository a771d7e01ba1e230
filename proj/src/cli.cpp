#include <algorithm>
#include <iostream>
#include <memory>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "holes3d/cli.hpp"
#include "holes3d/errors.hpp"
#include "holes3d/obj_export.hpp"
#include "holes3d/voxel.hpp"
#include "holes3d/warmup.hpp"

namespace holes3d {

namespace {

/// Everything the main-family commands share: parameters, body, step, family.
struct BuiltFamily {
    ConstructionParams params;
    BodyBuild body_build;
    std::optional<EpsilonBudget> epsilon; // empty when eps was overridden
    Rat eps;
    TranslateFamily family;
};

/**
 * Builds the 3m-translate family. When the user pinned eps the validation
 * loop is skipped; otherwise choose_epsilon certifies the step. A derived
 * path_depth is retried at +1 and +2 before a construction failure is
 * surfaced, since a deeper side-path stack can only enlarge the front.
 */
BuiltFamily build_main_family(const RunConfig& cfg) {
    ConstructionParams params = cfg.to_params();
    std::optional<Rat> eps_override;
    if (cfg.eps) {
        eps_override = Rat::parse(*cfg.eps);
    }
    std::vector<int> depths = {params.path_depth};
    if (cfg.path_depth == 0) {
        depths.push_back(params.path_depth + 1);
        depths.push_back(params.path_depth + 2);
    }
    const int threads = cfg.effective_threads();
    for (std::size_t attempt = 0; attempt < depths.size(); ++attempt) {
        params.path_depth = depths[attempt];
        try {
            BuiltFamily out;
            out.params = params;
            out.body_build = build_body(params);
            if (eps_override) {
                out.eps = *eps_override;
            } else {
                out.epsilon = choose_epsilon(params, out.body_build.body, threads);
                out.eps = out.epsilon->eps;
            }
            out.family = build_family(params, out.body_build.body, out.eps);
            return out;
        } catch (const ConstructionError&) {
            if (attempt + 1 == depths.size()) {
                throw;
            }
        }
    }
    throw ConstructionError("build_main_family: unreachable");
}

Json epsilon_report(const BuiltFamily& built) {
    if (built.epsilon) {
        Json j = epsilon_json(*built.epsilon);
        j["override"] = false;
        return j;
    }
    Json j;
    j["eps"] = rat_json(built.eps);
    j["override"] = true;
    return j;
}

/// HoleReport assembled from an already computed nerve (so commands that
/// need the complex for other checks do not enumerate it twice).
HoleReport hole_report_from_nerve(const NerveResult& nerve, int n) {
    HoleReport rep;
    rep.n = n;
    for (int dim = 0; dim <= 3; ++dim) {
        rep.simplex_counts.push_back(nerve.complex.simplex_count(dim));
    }
    rep.betti2 = nerve.complex.betti(2);
    rep.holes = rep.betti2.betti + 1;
    rep.bound = static_cast<long long>(binomial(n, 3)) + 1;
    rep.bound_holds = rep.holes <= rep.bound;
    return rep;
}

Json diff_json(const NerveDiff& diff) {
    Json j;
    j["matches"] = diff.matches;
    j["extra"] = diff.extra;
    j["missing"] = diff.missing;
    return j;
}

unsigned long long uniform_below(std::mt19937_64& rng, unsigned long long n) {
    // Rejection keeps the draw exactly uniform and reproducible across
    // platforms, unlike std::uniform_int_distribution.
    const unsigned long long cutoff = (~0ull / n) * n;
    unsigned long long r = rng();
    while (r >= cutoff) {
        r = rng();
    }
    return r % n;
}

std::string join_path(const std::string& dir, const std::string& name) {
    if (dir.empty() || dir.back() == '/') {
        return dir + name;
    }
    return dir + "/" + name;
}

} // namespace

ConstructionParams RunConfig::to_params() const {
    ConstructionParams p;
    p.m = m;
    p.path_depth = path_depth > 0 ? path_depth : m + 1;
    p.gamma_length = gamma_length > 0 ? gamma_length : m + 2;
    p.t = Rat::parse(t);
    p.zeta2 = Rat::parse(zeta2);
    p.zeta3 = Rat::parse(zeta3);
    p.validate();
    return p;
}

int RunConfig::effective_threads() const {
    if (threads > 0) {
        return threads;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

CommandResult cmd_holes(const RunConfig& cfg) {
    const int threads = cfg.effective_threads();
    CommandResult result;
    result.report = report_shell("holes");
    result.report["meta"]["threads"] = threads;

    const BuiltFamily built = build_main_family(cfg);
    const int m = built.params.m;
    result.report["params"] = params_json(built.params);
    result.report["epsilon"] = epsilon_report(built);
    result.report["offsets"] = offsets_json(built.family);

    const NerveResult nerve = nerve_skeleton(built.family, 3, threads);
    HoleReport holes = hole_report_from_nerve(nerve, built.family.size());
    const FamilyFormulas formulas = predicted_counts(m);
    holes.predicted_holes = formulas.holes;
    result.report["holes"] = hole_json(holes);

    Json expected;
    expected["c2_count"] = tagged(formulas.c2_count, "formula");
    expected["c3_count"] = tagged(formulas.c3_count, "formula");
    expected["rank_d2"] = tagged(formulas.rank_d2, "formula");
    expected["rank_d3"] = tagged(formulas.rank_d3, "formula");
    expected["betti2"] = tagged(formulas.betti2, "formula");
    expected["holes"] = tagged(formulas.holes, "formula");
    result.report["expected"] = expected;

    const NerveDiff diff = verify_nerve_matches(nerve.complex, predicted_nerve(m));
    result.report["nerve_diff"] = diff_json(diff);
    const WitnessReport witnesses = verify_witnesses(built.params, built.family);
    result.report["witnesses"] = witness_json(witnesses);

    CheckList checks;
    checks.add("holes_equal_formula", holes.holes == formulas.holes);
    checks.add("two_simplex_count_equals_formula",
               holes.simplex_counts[2] == formulas.c2_count);
    checks.add("three_simplex_count_equals_formula",
               holes.simplex_counts[3] == formulas.c3_count);
    checks.add("rank_d2_equals_formula", holes.betti2.rank_d == formulas.rank_d2);
    checks.add("rank_d3_equals_formula", holes.betti2.rank_d_next == formulas.rank_d3);
    checks.add("betti2_equals_formula", holes.betti2.betti == formulas.betti2);
    checks.add("upper_bound_holds", upper_bound_holds(holes));
    checks.add("nerve_matches_prediction", diff.matches);
    checks.add("witness_claims_pass", witnesses.all_pass());
    result.report["checks"] = checks.json();
    result.report["all_checks_pass"] = checks.ok();
    result.csv = csv_header() + csv_row(m, holes);
    result.exit_code = checks.ok() ? 0 : 3;
    return result;
}

CommandResult cmd_warmup(const RunConfig& cfg) {
    const int threads = cfg.effective_threads();
    CommandResult result;
    result.report = report_shell("warmup");
    result.report["meta"]["threads"] = threads;

    const WarmupFamily wf = build_warmup_family(cfg.m);
    result.report["spec"] = warmup_spec_json(wf.spec);
    result.report["offsets"] = offsets_json(wf.family);

    const HoleReport holes = hole_count(wf.family, threads);
    result.report["holes"] = hole_json(holes);

    const Rat feature = wf.spec.ell / Rat(2 * wf.spec.m);
    const Rat resolution = cfg.resolution ? Rat::parse(*cfg.resolution)
                                          : default_oracle_resolution(wf.family, feature);
    const OracleReport oracle = oracle_hole_count(wf.family, resolution, 2000000000, threads);
    result.report["oracle"] = oracle_json(oracle);

    const long long grid_holes = static_cast<long long>(cfg.m) * (cfg.m - 1);
    CheckList checks;
    checks.add("holes_at_least_grid_count", holes.holes >= grid_holes);
    checks.add("upper_bound_holds", upper_bound_holds(holes));
    checks.add("oracle_stable", oracle.stable);
    checks.add("oracle_matches_homology", oracle.stable && oracle.count_h == holes.holes);
    result.report["checks"] = checks.json();
    result.report["all_checks_pass"] = checks.ok();
    result.csv = csv_header() + csv_row(cfg.m, holes);
    result.exit_code = checks.ok() ? 0 : 3;
    return result;
}

CommandResult cmd_random_bound(const RunConfig& cfg) {
    if (cfg.trials < 1) {
        throw InputError("random-bound: trials must be at least 1");
    }
    if (cfg.max_bodies < 1) {
        throw InputError("random-bound: the family size cap must be at least 1");
    }
    const int threads = cfg.effective_threads();
    CommandResult result;
    result.report = report_shell("random-bound");
    result.report["meta"]["threads"] = threads;
    result.report["seed"] = cfg.seed;
    result.report["trials"] = cfg.trials;
    result.report["max_bodies"] = cfg.max_bodies;

    std::mt19937_64 rng(cfg.seed);
    Json rows = Json::array();
    long long max_holes = 0;
    bool all_hold = true;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const int n = 1 + static_cast<int>(
                              uniform_below(rng, static_cast<unsigned long long>(cfg.max_bodies)));
        TranslateFamily family;
        for (int b = 0; b < n; ++b) {
            std::vector<Vec3> pts;
            for (int p = 0; p < 8; ++p) {
                // Quarter-integer coordinates in [0, 16].
                const Rat x(Int(static_cast<long long>(uniform_below(rng, 65))), Int(4));
                const Rat y(Int(static_cast<long long>(uniform_below(rng, 65))), Int(4));
                const Rat z(Int(static_cast<long long>(uniform_below(rng, 65))), Int(4));
                pts.push_back(Vec3(x, y, z));
            }
            auto body = std::make_shared<const ConvexBody>(
                convex_hull(pts, "G" + std::to_string(b + 1)));
            family.bodies.push_back(body);
            family.translates.push_back(
                Translate{body, Vec3(Rat(0), Rat(0), Rat(0)), 'G', b + 1});
        }
        const HoleReport holes = hole_count(family, threads);
        all_hold = all_hold && holes.bound_holds;
        max_holes = std::max(max_holes, holes.holes);
        Json row;
        row["trial"] = trial;
        row["n"] = n;
        row["holes"] = holes.holes;
        row["bound"] = holes.bound;
        row["bound_holds"] = holes.bound_holds;
        rows.push_back(std::move(row));
    }
    result.report["results"] = std::move(rows);
    result.report["max_holes"] = max_holes;
    CheckList checks;
    checks.add("all_bounds_hold", all_hold);
    result.report["checks"] = checks.json();
    result.report["all_checks_pass"] = checks.ok();
    result.exit_code = checks.ok() ? 0 : 3;
    return result;
}

CommandResult cmd_export(const RunConfig& cfg) {
    if (!cfg.out) {
        throw InputError("export: an output directory is required (--out)");
    }
    const BuiltFamily built = build_main_family(cfg);
    CommandResult result;
    result.report = report_shell("export");
    result.report["params"] = params_json(built.params);
    result.report["epsilon"] = epsilon_report(built);
    result.report["precision"] = cfg.precision;

    Json files = Json::array();
    const Vec3 zero(Rat(0), Rat(0), Rat(0));
    const std::string body_path = join_path(*cfg.out, "body.obj");
    write_text_file(body_path, to_obj(*built.body_build.body, zero, "K", cfg.precision));
    files.push_back(body_path);
    for (const Translate& t : built.family.translates) {
        const std::string path = join_path(*cfg.out, t.label() + ".obj");
        write_text_file(path, to_obj(*t.body, t.offset, t.label(), cfg.precision));
        files.push_back(path);
    }
    result.report["files"] = std::move(files);
    result.exit_code = 0;
    return result;
}

CommandResult cmd_oracle(const RunConfig& cfg) {
    const int threads = cfg.effective_threads();
    CommandResult result;
    result.report = report_shell("oracle");
    result.report["meta"]["threads"] = threads;

    TranslateFamily family;
    Rat feature;
    if (cfg.warmup) {
        const WarmupFamily wf = build_warmup_family(cfg.m);
        family = wf.family;
        feature = wf.spec.ell / Rat(2 * wf.spec.m);
        result.report["spec"] = warmup_spec_json(wf.spec);
    } else {
        const BuiltFamily built = build_main_family(cfg);
        family = built.family;
        feature = built.eps;
        result.report["params"] = params_json(built.params);
        result.report["epsilon"] = epsilon_report(built);
    }

    const Rat resolution = cfg.resolution ? Rat::parse(*cfg.resolution)
                                          : default_oracle_resolution(family, feature);
    result.report["resolution"] = rat_json(resolution);
    const HoleReport holes = hole_count(family, threads);
    result.report["holes"] = hole_json(holes);
    const OracleReport oracle = oracle_hole_count(family, resolution, 2000000000, threads);
    result.report["oracle"] = oracle_json(oracle);

    if (cfg.out) {
        const VoxelGrid grid = rasterize(family, resolution, 2000000000, threads);
        const std::string path = join_path(*cfg.out, "occupancy.rle");
        write_text_file(path, rle_dump(grid));
        result.report["occupancy_file"] = path;
    }

    CheckList checks;
    checks.add("oracle_stable", oracle.stable);
    checks.add("oracle_matches_homology", oracle.stable && oracle.count_h == holes.holes);
    result.report["checks"] = checks.json();
    result.report["all_checks_pass"] = checks.ok();
    result.exit_code = checks.ok() ? 0 : 3;
    return result;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"exact hole counting for unions of convex polytope translates"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--m", cfg.m, "family parameter m");
        sub->add_option("--depth", cfg.path_depth, "side path count J (0 = use m+1)");
        sub->add_option("--gamma-len", cfg.gamma_length,
                        "main path truncation M (0 = use m+2)");
        sub->add_option("--t", cfg.t, "back displacement t, rational p/q");
        sub->add_option("--zeta2", cfg.zeta2, "quadratic step-sum surrogate, rational p/q");
        sub->add_option("--zeta3", cfg.zeta3, "cubic step-sum surrogate, rational p/q");
        sub->add_option("--eps", cfg.eps,
                        "vertical step override p/q, skipping the validation loop");
        sub->add_option("--resolution", cfg.resolution, "oracle cell size p/q");
        sub->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--out", cfg.out, "output directory for reports and artifacts");
        sub->set_config("--config");
        return sub;
    };

    CLI::App* warmup = add_common(
        app.add_subcommand("warmup", "grid family of cones over one facet"));
    CLI::App* holes = add_common(
        app.add_subcommand("holes", "full pipeline on the 3m-translate family"));
    CLI::App* random_bound = add_common(
        app.add_subcommand("random-bound", "hole upper bound on random families"));
    random_bound->add_option("--n", cfg.max_bodies, "largest family size to draw");
    random_bound->add_option("--trials", cfg.trials, "number of random families");
    CLI::App* exporter =
        add_common(app.add_subcommand("export", "write OBJ meshes of the family"));
    exporter->add_option("--precision", cfg.precision, "decimal digits in OBJ output");
    CLI::App* oracle = add_common(
        app.add_subcommand("oracle", "voxel cross-check of the hole count"));
    oracle->add_flag("--warmup", cfg.warmup, "run on the warm-up family instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    std::string command = "";
    const auto fail = [&command](const std::string& type, const std::string& message) {
        Json j;
        j["schema"] = 1;
        j["command"] = command;
        j["error"] = Json::object();
        j["error"]["type"] = type;
        j["error"]["message"] = message;
        std::cout << j.dump(2) << std::endl;
        return 2;
    };

    try {
        CommandResult result;
        if (warmup->parsed()) {
            command = "warmup";
            result = cmd_warmup(cfg);
        } else if (holes->parsed()) {
            command = "holes";
            result = cmd_holes(cfg);
        } else if (random_bound->parsed()) {
            command = "random-bound";
            result = cmd_random_bound(cfg);
        } else if (exporter->parsed()) {
            command = "export";
            result = cmd_export(cfg);
        } else {
            command = "oracle";
            result = cmd_oracle(cfg);
        }
        std::cout << result.report.dump(2) << std::endl;
        if (cfg.out) {
            write_text_file(join_path(*cfg.out, "report.json"), result.report.dump(2) + "\n");
            if (!result.csv.empty()) {
                write_text_file(join_path(*cfg.out, command + ".csv"), result.csv);
            }
        }
        return result.exit_code;
    } catch (const InputError& e) {
        return fail("input", e.what());
    } catch (const ConstructionError& e) {
        return fail("construction", e.what());
    } catch (const ResourceError& e) {
        return fail("resource", e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what());
    }
}

} // namespace holes3d
