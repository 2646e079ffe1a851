#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "csra/baselines.hpp"
#include "csra/log_ingest.hpp"
#include "csra/phase1.hpp"
#include "csra/simulator.hpp"
#include "csra/topology.hpp"

namespace csra {

// Quality of one reconstruction method. session_recall: fraction of true
// paths reproduced exactly; session_precision: fraction of reconstructed
// paths equal to some true path of the same user (both pooled over all
// users). next_page_accuracy: fraction of held-out prefix queries (test
// users only) answered with the true next page.
struct MethodMetrics {
    double next_page_accuracy = 0.0;
    double session_recall = 0.0;
    double session_precision = 0.0;
};

struct ImprovementDelta {
    double absolute = 0.0;
    double relative = 0.0; // absolute / baseline; +inf when baseline is 0 and gain > 0
};

struct MethodImprovements {
    ImprovementDelta next_page_accuracy;
    ImprovementDelta session_recall;
    ImprovementDelta session_precision;
};

struct EvalReport {
    std::size_t train_users = 0;
    std::size_t test_users = 0;
    std::size_t queries = 0;
    MethodMetrics csra;
    MethodMetrics time_oriented;
    MethodMetrics navigation_oriented;
    MethodImprovements csra_vs_time;
    MethodImprovements csra_vs_nav;
};

// FNV-1a, the 64-bit variant. Used to split users into train/test buckets so
// the split is stable across runs and platforms.
std::uint64_t fnv1a64(std::string_view text);

// Every fifth hash bucket is held out for evaluation.
bool is_test_user(std::string_view user);

// The per-user unit both metrics are computed over: the page-id lists the
// method reconstructs from this user's raw requests.
std::vector<std::vector<PageId>> reconstruct_paths(ReconstructionMethod method,
                                                   const UserRequestSequence& seq,
                                                   const WebTopology& topology,
                                                   const Thresholds& th);

// Full protocol: split users by hash, mine patterns per method from train
// users' reconstructions, answer next-page queries built from every proper
// prefix of test users' true paths, and score path overlap pooled over all
// users. Throws std::invalid_argument when the truth is empty or either user
// bucket comes out empty.
EvalReport evaluate(const std::vector<PageRequest>& log, const GroundTruth& truth,
                    const WebTopology& topology, const Thresholds& th,
                    std::size_t min_support);

// key=value lines, one metric per line, 6-decimal fixed point ("inf" for an
// infinite relative gain).
void write_report_text(std::ostream& out, const EvalReport& report);

// Tab-separated records: method, metric, value. Same formatting rules.
void write_report_records(std::ostream& out, const EvalReport& report);

} // namespace csra
