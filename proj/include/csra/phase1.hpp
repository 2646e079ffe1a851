#pragma once

#include <string>
#include <vector>

#include "csra/log_ingest.hpp"
#include "csra/types.hpp"

namespace csra {

// The two time bounds of session reconstruction: the page-stay limit (delta,
// maximum gap between consecutive requests of one session) and the cap on a
// session's total elapsed time.
struct Thresholds {
    Duration page_stay_delta = 600;
    Duration session_duration_cap = 1800;

    // Throws std::invalid_argument unless 0 < page_stay_delta <= session_duration_cap.
    void validate() const;
};

// Phase 1 output: a run of one user's requests that satisfies both time
// thresholds and repeats no page.
struct CandidateSession {
    std::string user;
    std::vector<PageVisit> entries;
};

// Splits a time-sorted request sequence into candidate sessions. A new
// session starts at the first request, after a gap >= page_stay_delta from
// the last kept request, or when a request would push the session past the
// duration cap. A request repeating a page already in the current session is
// a browser-cache artifact and is dropped entirely: it neither extends the
// session nor counts toward any gap or duration test. Throws
// std::invalid_argument if the input is not time-sorted.
std::vector<CandidateSession> build_candidate_sessions(const UserRequestSequence& seq,
                                                       const Thresholds& th);

} // namespace csra
