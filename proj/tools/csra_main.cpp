#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "csra/cli.hpp"

namespace {

void add_threshold_options(CLI::App* cmd, csra::RunConfig& cfg) {
    cmd->add_option("--page-stay", cfg.thresholds.page_stay_delta,
                    "max seconds between consecutive pages of one session")
        ->capture_default_str();
    cmd->add_option("--session-cap", cfg.thresholds.session_duration_cap,
                    "max elapsed seconds of one session")
        ->capture_default_str();
}

void add_format_option(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "log format")
        ->check(CLI::IsMember({"csv", "clf"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"link-based session reconstruction toolkit"};
    app.require_subcommand(1);

    csra::RunConfig cfg;
    std::string format = "csv";

    CLI::App* sessionize =
        app.add_subcommand("sessionize", "reconstruct sessions from a request log");
    sessionize->add_option("--log", cfg.log_path, "request log file")->required();
    sessionize->add_option("--topology", cfg.topology_path, "site link graph file")->required();
    sessionize->add_option("--out", cfg.out_path, "output file (stdout when absent)");
    sessionize->add_option("--algorithm", cfg.algorithm, "reconstruction method")
        ->check(CLI::IsMember({"csra", "time", "nav"}))
        ->capture_default_str();
    add_format_option(sessionize, format);
    add_threshold_options(sessionize, cfg);

    CLI::App* simulate =
        app.add_subcommand("simulate", "generate a synthetic site, request log, and ground truth");
    simulate->add_option("--log", cfg.log_path, "output request log")->required();
    simulate->add_option("--topology", cfg.topology_path, "output link graph")->required();
    simulate->add_option("--truth", cfg.truth_path, "output true paths")->required();
    simulate->add_option("--seed", cfg.sim.seed, "random seed")->capture_default_str();
    simulate->add_option("--pages", cfg.sim.page_count, "site size")->capture_default_str();
    simulate->add_option("--edges-per-page", cfg.sim.edges_per_page, "mean out-degree")
        ->capture_default_str();
    simulate->add_option("--users", cfg.sim.user_count, "number of visitors")
        ->capture_default_str();
    simulate->add_option("--sessions-per-user", cfg.sim.sessions_per_user, "sessions per visitor")
        ->capture_default_str();
    simulate->add_option("--path-min", cfg.sim.path_length_min, "min page visits per session")
        ->capture_default_str();
    simulate->add_option("--path-max", cfg.sim.path_length_max, "max page visits per session")
        ->capture_default_str();
    simulate->add_option("--branch-prob", cfg.sim.branch_probability,
                         "chance a step forks a new path")
        ->capture_default_str();
    simulate->add_option("--think-min", cfg.sim.think_time_min, "min seconds between clicks")
        ->capture_default_str();
    simulate->add_option("--think-max", cfg.sim.think_time_max, "max seconds between clicks")
        ->capture_default_str();
    simulate->add_option("--inter-session-gap", cfg.sim.inter_session_gap,
                         "seconds between a user's sessions")
        ->capture_default_str();

    CLI::App* evaluate =
        app.add_subcommand("evaluate", "score reconstruction methods against ground truth");
    evaluate->add_option("--log", cfg.log_path, "request log file")->required();
    evaluate->add_option("--topology", cfg.topology_path, "site link graph file")->required();
    evaluate->add_option("--truth", cfg.truth_path, "true paths file")->required();
    evaluate->add_option("--out", cfg.out_path,
                         "also write the report here and records to <out>.tsv");
    evaluate->add_option("--min-support", cfg.min_support, "pattern mining support threshold")
        ->capture_default_str();
    add_format_option(evaluate, format);
    add_threshold_options(evaluate, cfg);

    CLI::App* oracle =
        app.add_subcommand("oracle-check", "compare reconstructions against brute-force answers");
    oracle->add_option("--instances", cfg.oracle_instances, "number of random instances")
        ->capture_default_str();
    oracle->add_option("--seed", cfg.sim.seed, "random seed")->capture_default_str();
    oracle->add_option("--max-pages", cfg.oracle.max_pages, "largest random site")
        ->capture_default_str();
    oracle->add_option("--max-session", cfg.oracle.max_session_length, "longest random session")
        ->capture_default_str();
    oracle->add_flag("--inject-fault", cfg.inject_fault)->group(""); // testing hook, hidden

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.format = format == "clf" ? csra::LogFormat::clf : csra::LogFormat::csv;
        if (sessionize->parsed()) {
            return csra::cmd_sessionize(cfg, std::cout, std::cerr);
        }
        if (simulate->parsed()) {
            return csra::cmd_simulate(cfg, std::cout);
        }
        if (evaluate->parsed()) {
            return csra::cmd_evaluate(cfg, std::cout);
        }
        return csra::cmd_oracle_check(cfg, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
