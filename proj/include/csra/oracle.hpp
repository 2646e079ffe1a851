#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "csra/phase1.hpp"
#include "csra/rng.hpp"
#include "csra/topology.hpp"
#include "csra/types.hpp"

namespace csra {

// Guard against the oracle's exponential enumeration.
struct OracleLimits {
    std::size_t max_session_length = 16;
};

// Reference answer for Phase 2, computed the slow declarative way: enumerate
// every non-empty index subsequence of the session whose consecutive pages
// are linked and within delta of each other (the feasible set, singletons
// included), then keep the members that are not a proper contiguous substring
// of another feasible member. Returns page-id lists sorted lexicographically.
// Throws std::invalid_argument when the session exceeds the length limit.
std::vector<std::vector<PageId>> brute_force_maximal(const CandidateSession& session,
                                                     const WebTopology& topology,
                                                     Duration delta,
                                                     const OracleLimits& limits = {});

// Random (topology, session, delta) instances for oracle-vs-implementation
// comparison. Edge probability cycles through {0.2, 0.4, 0.6} by instance
// index; gaps mix short and long draws so that a fraction of linked page
// pairs fails the delta test.
struct InstanceGenConfig {
    std::size_t max_pages = 12;
    std::size_t max_session_length = 12;
    Duration delta = 600;
};

struct RandomInstance {
    WebTopology topology;
    CandidateSession session;
    Duration delta = 600;
};

RandomInstance make_random_instance(SplitMix64& rng, const InstanceGenConfig& cfg,
                                    std::size_t instance_index);

// Runs `instances` random instances through both the declarative enumeration
// and the production pipeline and returns how many disagreed, logging one
// line per mismatch. inject_fault corrupts the first expected answer to prove
// the comparison can fail. Throws std::invalid_argument when
// cfg.max_session_length exceeds 16.
std::size_t run_oracle_check(std::size_t instances, const InstanceGenConfig& cfg,
                             std::uint64_t seed, bool inject_fault, std::ostream& log);

} // namespace csra
