#include "csra/baselines.hpp"

namespace csra {

std::vector<ReconstructedSession> time_oriented(const UserRequestSequence& seq,
                                                const Thresholds& th) {
    std::vector<ReconstructedSession> result;
    for (const CandidateSession& session : build_candidate_sessions(seq, th)) {
        ReconstructedSession out{session.user, {}, ReconstructionMethod::time_oriented};
        out.pages.reserve(session.entries.size());
        for (const PageVisit& visit : session.entries) {
            out.pages.push_back(visit.page);
        }
        result.push_back(std::move(out));
    }
    return result;
}

std::vector<ReconstructedSession> navigation_oriented(const UserRequestSequence& seq,
                                                      const WebTopology& topology,
                                                      const Thresholds& th) {
    std::vector<ReconstructedSession> result;
    for (const CandidateSession& session : build_candidate_sessions(seq, th)) {
        std::vector<PageId> stack;
        ReconstructedSession current{session.user, {}, ReconstructionMethod::navigation_oriented};

        const auto close_current = [&]() {
            if (!current.pages.empty()) {
                result.push_back(std::move(current));
                current = {session.user, {}, ReconstructionMethod::navigation_oriented};
            }
        };

        for (const PageVisit& visit : session.entries) {
            const PageId page = visit.page;
            while (!stack.empty() && !topology.has_link(stack.back(), page)) {
                stack.pop_back();
                if (!stack.empty()) {
                    current.pages.push_back(stack.back()); // backtrack visit
                }
            }
            if (stack.empty() && !current.pages.empty()) {
                close_current();
            }
            stack.push_back(page);
            current.pages.push_back(page);
        }
        close_current();
    }
    return result;
}

} // namespace csra
