// comdet_main.cpp
//
// Command-line front end. Subcommands:
//   detect    load an edge list and run Louvain
//   pipeline  detect, then stabilize to a Nash equilibrium, then overlap
//   verify    randomized self-check of the reassignment measure
//
// Exit codes: 0 success, 2 input error, 3 verification failure,
// 4 internal invariant breach.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "comdet/report.hpp"
#include "comdet/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;
constexpr int kExitInvariant = 4;

struct CommonOptions {
    std::string input;
    std::string format = "unipartite";
    std::uint64_t seed = 0;
    std::string output;
};

comdet::InputFormat parse_format(const std::string& s) {
    if (s == "unipartite") return comdet::InputFormat::unipartite;
    if (s == "bipartite") return comdet::InputFormat::bipartite;
    throw comdet::InputError("unknown format '" + s + "' (use unipartite or bipartite)");
}

void emit_json(const nlohmann::json& j, const std::string& output) {
    if (output.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(output);
    if (!out) throw comdet::InputError("cannot write output file: " + output);
    out << j.dump(2) << "\n";
}

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--input", opt.input, "edge-list file")->required();
    cmd->add_option("--format", opt.format, "unipartite or bipartite")
        ->check(CLI::IsMember({"unipartite", "bipartite"}))
        ->capture_default_str();
    cmd->add_option("--seed", opt.seed, "vertex-order shuffling seed")
        ->envname("COMDET_SEED")
        ->capture_default_str();
    cmd->add_option("--output", opt.output, "report JSON path (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Community detection by modularity maximization with Nash-equilibrium "
                 "refinement and overlap analysis"};
    app.require_subcommand(1);

    CommonOptions detect_opt;
    auto* detect = app.add_subcommand("detect", "load an edge list and run Louvain");
    add_common(detect, detect_opt);

    CommonOptions pipe_opt;
    double epsilon = 1e-9;
    double alpha = 0.2;
    int max_moves = 100000;
    bool allow_empty_target = false;
    std::string dot_path;
    auto* pipeline =
        app.add_subcommand("pipeline", "detect, stabilize to a Nash equilibrium, report overlap");
    add_common(pipeline, pipe_opt);
    pipeline->add_option("--epsilon", epsilon, "positive-gain threshold for reassignment")
        ->capture_default_str();
    pipeline->add_option("--alpha", alpha, "legitimacy alpha-cut level")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    pipeline->add_option("--max-moves", max_moves, "safety cap on accepted reassignments")
        ->capture_default_str();
    pipeline->add_flag("--allow-empty-target", allow_empty_target,
                       "let a reassignment open a brand-new community");
    pipeline->add_option("--dot", dot_path, "write final communities as Graphviz DOT");

    std::uint64_t verify_seed = 0;
    int verify_trials = 100;
    int max_n = 30;
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "randomized reassignment-measure self-check");
    verify->add_option("--verify-trials", verify_trials, "number of random instances")
        ->capture_default_str();
    verify->add_option("--max-n", max_n, "largest random graph size")
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "base seed")
        ->envname("COMDET_SEED")
        ->capture_default_str();
    verify->add_flag("--inject-fault", inject_fault, "self-test: force one mismatch")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (detect->parsed()) {
            comdet::PipelineConfig cfg{.seed = detect_opt.seed};
            auto report = comdet::run_detect(detect_opt.input, parse_format(detect_opt.format),
                                             cfg, &std::cerr);
            emit_json(comdet::report_to_json(report), detect_opt.output);
        } else if (pipeline->parsed()) {
            comdet::PipelineConfig cfg{.seed = pipe_opt.seed,
                                       .epsilon = epsilon,
                                       .alpha = alpha,
                                       .max_moves = max_moves,
                                       .allow_empty_target = allow_empty_target};
            auto report = comdet::run_pipeline(pipe_opt.input, parse_format(pipe_opt.format),
                                               cfg, &std::cerr);
            emit_json(comdet::report_to_json(report), pipe_opt.output);
            if (!pipe_opt.output.empty()) {
                std::string csv_path = pipe_opt.output + ".legitimacy.csv";
                std::ofstream csv(csv_path);
                if (!csv) throw comdet::InputError("cannot write output file: " + csv_path);
                comdet::write_legitimacy_csv(*report.legitimacy, report.graph, csv);
            }
            if (!dot_path.empty()) {
                std::ofstream dot(dot_path);
                if (!dot) throw comdet::InputError("cannot write output file: " + dot_path);
                comdet::write_dot(report.graph, *report.stabilized, dot);
            }
        } else if (verify->parsed()) {
            comdet::VerifyConfig cfg{.seed = verify_seed,
                                     .trials = verify_trials,
                                     .max_n = max_n,
                                     .inject_fault = inject_fault};
            auto result = comdet::run_verification(cfg, &std::cerr);
            if (!result.ok) {
                std::cout << result.failing_instance.dump(2) << "\n";
                return kExitVerify;
            }
        }
    } catch (const comdet::InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const comdet::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}
