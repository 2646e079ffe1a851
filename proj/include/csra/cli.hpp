#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "csra/baselines.hpp"
#include "csra/log_ingest.hpp"
#include "csra/oracle.hpp"
#include "csra/phase1.hpp"
#include "csra/simulator.hpp"

namespace csra {

// Everything the command-line front end can set. Each command reads the
// fields it cares about; unrelated fields keep their defaults.
struct RunConfig {
    std::filesystem::path log_path;
    std::filesystem::path topology_path;
    std::filesystem::path truth_path;
    std::filesystem::path out_path; // empty: the command's stream argument
    std::string algorithm = "csra"; // csra | time | nav
    LogFormat format = LogFormat::csv;
    Thresholds thresholds;
    std::size_t min_support = 2;
    SimConfig sim; // also carries the seed for oracle-check
    std::size_t oracle_instances = 1000;
    InstanceGenConfig oracle;
    bool inject_fault = false;
};

// Maps "csra" / "time" / "nav"; throws std::invalid_argument otherwise.
ReconstructionMethod parse_method(const std::string& name);

// Reconstructs sessions from cfg.log_path over cfg.topology_path and writes
// one "user<TAB>url,url,..." line per path, sorted by user then page list.
// Skipped log lines go to err as "line<TAB>reason". Returns the exit code.
int cmd_sessionize(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Writes the synthetic topology, CSV log, and ground truth to the three
// configured paths and a one-line summary to out.
int cmd_simulate(const RunConfig& cfg, std::ostream& out);

// Scores all three reconstruction methods against the ground truth. The
// key=value report goes to out, and additionally to cfg.out_path plus
// a records file cfg.out_path + ".tsv" when an output path is set.
int cmd_evaluate(const RunConfig& cfg, std::ostream& out);

// Random-instance comparison against the declarative enumeration; returns 1
// on any mismatch.
int cmd_oracle_check(const RunConfig& cfg, std::ostream& out);

} // namespace csra
