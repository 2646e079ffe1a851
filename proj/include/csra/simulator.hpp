#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "csra/log_ingest.hpp"
#include "csra/rng.hpp"
#include "csra/topology.hpp"
#include "csra/types.hpp"

namespace csra {

// Knobs for synthetic topology and traffic generation. think_time draws from
// [min, max); keep (path_length_max - 1) * think_time_max at or below the
// session duration cap and think_time_max below the page-stay delta so Phase
// 1 recovers the simulated session boundaries exactly. inter_session_gap must
// exceed the duration cap for the same reason. Zero users or zero sessions
// per user are allowed and produce an empty log.
struct SimConfig {
    std::size_t page_count = 100;
    double edges_per_page = 3.0;
    std::size_t user_count = 50;
    std::size_t sessions_per_user = 5;
    std::size_t path_length_min = 3; // page visits per session, inclusive range
    std::size_t path_length_max = 7;
    double branch_probability = 0.4;
    Duration think_time_min = 30;
    Duration think_time_max = 300;
    Duration inter_session_gap = 3600;
    std::uint64_t seed = 1;

    void validate() const;
};

// What each agent actually walked: per user, per session, the set of true
// navigation paths.
struct SessionTruth {
    std::vector<std::vector<PageId>> paths;
};

struct UserTruth {
    std::string user;
    std::vector<SessionTruth> sessions;
};

struct GroundTruth {
    std::vector<UserTruth> users;

    bool empty() const;
};

struct SimOutput {
    WebTopology topology;
    std::vector<PageRequest> log; // merged across users, time-sorted
    GroundTruth truth;
};

// Random site graph: pages "/p0".."/pN-1", per-page out-degree drawn
// Poisson(edges_per_page) and clamped to [1, page_count-1], no self-loops.
// Deterministic given cfg.seed.
WebTopology generate_topology(const SimConfig& cfg);
WebTopology generate_topology_with(const SimConfig& cfg, SplitMix64& rng);

// One agent session: starts at `start`, then repeatedly either extends the
// tail of one of its paths or (with branch_probability) forks a new path from
// a non-tail page of an existing path, always along topology edges and never
// revisiting a page. Stops at the drawn visit budget or when stuck.
struct AgentSession {
    std::vector<PageVisit> requests;        // in emission order
    std::vector<std::vector<PageId>> paths; // the true paths
};

AgentSession run_agent_session(const WebTopology& topology, const SimConfig& cfg,
                               SplitMix64& rng, PageId start, Timestamp start_time);

// Full run: topology first, then users in index order, one splitmix64 stream.
SimOutput simulate_logs(const SimConfig& cfg);

// File formats. The CSV log is exactly what parse_log(LogFormat::csv)
// expects; ground truth is one path per line: user<TAB>session<TAB>url,url,...
void write_csv_log(std::ostream& out, const std::vector<PageRequest>& log,
                   const WebTopology& topology);
void write_ground_truth(std::ostream& out, const GroundTruth& truth,
                        const WebTopology& topology);
GroundTruth read_ground_truth(std::istream& in, const WebTopology& topology);
GroundTruth read_ground_truth_file(const std::filesystem::path& path,
                                   const WebTopology& topology);

} // namespace csra
