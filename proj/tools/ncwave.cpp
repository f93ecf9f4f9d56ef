// Command-line front end: runs one experiment described by a JSON config and
// reports results on stdout and, with --out, as report.csv / report.json.
//
// Exit codes: 0 success, 2 configuration or usage problem, 3 degenerate
// signal, 4 inequality violation.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "ncwave/errors.hpp"
#include "ncwave/experiment.hpp"
#include "ncwave/version.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON experiment description")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", args.out_dir, "directory for report.csv / report.json");
    cmd->add_option("--seed", args.seed, "override the config seed")
        ->each([&args](const std::string&) { args.seed_set = true; });
    cmd->add_flag("--quiet", args.quiet, "suppress stdout summary");
}

int run(ncwave::ExperimentKind kind, const CommonArgs& args) {
    ncwave::ExperimentConfig cfg = ncwave::load_config_file(args.config_path);
    if (cfg.experiment != kind)
        throw ncwave::ConfigError("config describes experiment '" +
                                  ncwave::experiment_name(cfg.experiment) +
                                  "' but the '" + ncwave::experiment_name(kind) +
                                  "' command was invoked");
    if (args.seed_set) {
        cfg.seed = args.seed;
        if (cfg.optimize) cfg.optimize->seed = args.seed;
    }
    ncwave::ExperimentResult result = ncwave::run_experiment(cfg);
    if (!args.quiet) {
        std::printf("experiment: %s\n", ncwave::experiment_name(cfg.experiment).c_str());
        std::printf("group: %s\n", ncwave::kind_name(cfg.group->kind()).c_str());
        std::printf("fingerprint: %s\n", cfg.fingerprint.c_str());
        for (const auto& r : result.records) {
            std::printf("[%s] grid=%s", r.experiment.c_str(), r.grid_shape.c_str());
            if (r.has_moments) std::printf(" a=%g b=%g", r.a, r.b);
            if (r.rel_error >= 0.0) std::printf(" rel_error=%.6e", r.rel_error);
            if (r.min_constant != 0.0) std::printf(" min_constant=%.12g", r.min_constant);
            if (r.divergence_flag) std::printf(" divergent_moment");
            std::printf("\n");
        }
        if (!result.best_params.empty()) {
            std::printf("best_params:");
            for (double p : result.best_params) std::printf(" %.12g", p);
            std::printf(" (%zu evaluations)\n", result.trace.size());
        }
        std::printf("status: %s\n", result.message.c_str());
    }
    if (!args.out_dir.empty()) ncwave::write_reports(args.out_dir, cfg, result);
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"group Fourier / Gabor transform experiments"};
    app.set_version_flag("--version", std::string("ncwave ") + ncwave::kVersion);
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
        ncwave::ExperimentKind kind;
    };
    const Sub subs[] = {
        {"plancherel", "check the Plancherel identity on a truncated dual",
         ncwave::ExperimentKind::Plancherel},
        {"isometry", "check the Gabor transform isometry", ncwave::ExperimentKind::Isometry},
        {"uncertainty", "evaluate the Fourier-side uncertainty inequality",
         ncwave::ExperimentKind::Uncertainty},
        {"gabor-uncertainty", "evaluate the Gabor-side uncertainty inequality",
         ncwave::ExperimentKind::GaborUncertainty},
        {"hoelder", "check the dual-side interpolation bound",
         ncwave::ExperimentKind::Hoelder},
        {"optimize-window", "minimize the uncertainty product over a window family",
         ncwave::ExperimentKind::OptimizeWindow},
        {"sweep", "cross-product sweep over moment orders and refinement levels",
         ncwave::ExperimentKind::Sweep},
    };

    CommonArgs args[std::size(subs)];
    CLI::App* cmds[std::size(subs)];
    for (std::size_t i = 0; i < std::size(subs); ++i) {
        cmds[i] = app.add_subcommand(subs[i].name, subs[i].help);
        add_common(cmds[i], args[i]);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        for (std::size_t i = 0; i < std::size(subs); ++i)
            if (cmds[i]->parsed()) return run(subs[i].kind, args[i]);
        return 2;
    } catch (const ncwave::DegenerateSignalError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const ncwave::InequalityViolation& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
