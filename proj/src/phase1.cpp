#include "csra/phase1.hpp"

#include <stdexcept>
#include <unordered_set>

namespace csra {

void Thresholds::validate() const {
    if (page_stay_delta <= 0 || session_duration_cap <= 0) {
        throw std::invalid_argument("thresholds must be strictly positive");
    }
    if (page_stay_delta > session_duration_cap) {
        throw std::invalid_argument("page_stay_delta must not exceed session_duration_cap");
    }
}

std::vector<CandidateSession> build_candidate_sessions(const UserRequestSequence& seq,
                                                       const Thresholds& th) {
    th.validate();
    std::vector<CandidateSession> sessions;
    std::unordered_set<PageId> seen;
    Timestamp previous_time = 0;
    bool have_previous = false;

    const auto open_session = [&](const PageRequest& request) {
        sessions.push_back({seq.user, {{request.page, request.time}}});
        seen.clear();
        seen.insert(request.page);
    };

    for (const PageRequest& request : seq.requests) {
        if (have_previous && request.time < previous_time) {
            throw std::invalid_argument("request sequence is not sorted by time");
        }
        previous_time = request.time;
        have_previous = true;

        if (sessions.empty()) {
            open_session(request);
            continue;
        }
        const CandidateSession& current = sessions.back();
        const Timestamp last_kept = current.entries.back().time;
        const Timestamp session_start = current.entries.front().time;
        if (request.time - last_kept >= th.page_stay_delta ||
            request.time - session_start > th.session_duration_cap) {
            open_session(request);
            continue;
        }
        if (seen.contains(request.page)) {
            continue; // repeat view, served by the browser cache
        }
        sessions.back().entries.push_back({request.page, request.time});
        seen.insert(request.page);
    }
    return sessions;
}

} // namespace csra
