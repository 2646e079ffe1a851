#pragma once

#include <string>
#include <vector>

#include "csra/phase1.hpp"
#include "csra/topology.hpp"
#include "csra/types.hpp"

namespace csra {

enum class ReconstructionMethod { time_oriented, navigation_oriented, csra };

struct ReconstructedSession {
    std::string user;
    std::vector<PageId> pages;
    ReconstructionMethod method = ReconstructionMethod::time_oriented;
};

// Timestamps-only reconstruction: each Phase 1 candidate session, emitted
// whole. No topology is consulted.
std::vector<ReconstructedSession> time_oriented(const UserRequestSequence& seq,
                                                const Thresholds& th);

// Stack-based reconstruction that patches missing links with artificial
// backward movements. Within each candidate session a navigation stack is
// kept; a page linked from the stack top is pushed, otherwise pages are
// popped (each newly exposed page recorded as a backtrack visit) until a
// linking page surfaces. If the stack empties first, the session is closed
// and a new one starts at the current page. Output page lists may therefore
// repeat pages.
std::vector<ReconstructedSession> navigation_oriented(const UserRequestSequence& seq,
                                                      const WebTopology& topology,
                                                      const Thresholds& th);

} // namespace csra
