#include "csra/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "csra/eval.hpp"

namespace csra {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path.string());
    }
    return out;
}

} // namespace

ReconstructionMethod parse_method(const std::string& name) {
    if (name == "csra") {
        return ReconstructionMethod::csra;
    }
    if (name == "time") {
        return ReconstructionMethod::time_oriented;
    }
    if (name == "nav") {
        return ReconstructionMethod::navigation_oriented;
    }
    throw std::invalid_argument("unknown algorithm '" + name + "' (expected csra, time, or nav)");
}

int cmd_sessionize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ReconstructionMethod method = parse_method(cfg.algorithm);
    cfg.thresholds.validate();

    const WebTopology topology = load_topology_file(cfg.topology_path);
    const ParsedLog log = parse_log_file(cfg.log_path, cfg.format, topology);
    for (const LineDiagnostic& diag : log.skipped) {
        err << diag.line << '\t' << diag.reason << '\n';
    }

    struct Line {
        std::string user;
        std::vector<std::string> urls;
    };
    std::vector<Line> lines;
    for (const UserRequestSequence& seq : group_by_user(log.requests)) {
        for (const std::vector<PageId>& path :
             reconstruct_paths(method, seq, topology, cfg.thresholds)) {
            Line line{seq.user, {}};
            line.urls.reserve(path.size());
            for (const PageId page : path) {
                line.urls.push_back(topology.url(page));
            }
            lines.push_back(std::move(line));
        }
    }
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return a.user != b.user ? a.user < b.user : a.urls < b.urls;
    });

    const auto write_lines = [&](std::ostream& sink) {
        for (const Line& line : lines) {
            sink << line.user << '\t';
            for (std::size_t i = 0; i < line.urls.size(); ++i) {
                if (i != 0) {
                    sink << ',';
                }
                sink << line.urls[i];
            }
            sink << '\n';
        }
    };
    if (cfg.out_path.empty()) {
        write_lines(out);
    } else {
        std::ofstream file = open_output(cfg.out_path);
        write_lines(file);
    }
    return 0;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    const SimOutput sim = simulate_logs(cfg.sim);

    save_topology_file(sim.topology, cfg.topology_path);
    std::ofstream log = open_output(cfg.log_path);
    write_csv_log(log, sim.log, sim.topology);
    std::ofstream truth = open_output(cfg.truth_path);
    write_ground_truth(truth, sim.truth, sim.topology);

    out << "wrote " << sim.log.size() << " requests for " << cfg.sim.user_count
        << " users over " << sim.topology.page_count() << " pages\n";
    return 0;
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out) {
    const WebTopology topology = load_topology_file(cfg.topology_path);
    const ParsedLog log = parse_log_file(cfg.log_path, cfg.format, topology);
    const GroundTruth truth = read_ground_truth_file(cfg.truth_path, topology);

    const EvalReport report =
        evaluate(log.requests, truth, topology, cfg.thresholds, cfg.min_support);
    write_report_text(out, report);
    if (!cfg.out_path.empty()) {
        std::ofstream text = open_output(cfg.out_path);
        write_report_text(text, report);
        std::filesystem::path records_path = cfg.out_path;
        records_path += ".tsv";
        std::ofstream records = open_output(records_path);
        write_report_records(records, report);
    }
    return 0;
}

int cmd_oracle_check(const RunConfig& cfg, std::ostream& out) {
    const std::size_t mismatches = run_oracle_check(cfg.oracle_instances, cfg.oracle,
                                                    cfg.sim.seed, cfg.inject_fault, out);
    if (mismatches != 0) {
        out << mismatches << " of " << cfg.oracle_instances << " instances disagree\n";
        return 1;
    }
    out << "checked " << cfg.oracle_instances << " instances: all reconstructions match\n";
    return 0;
}

} // namespace csra
