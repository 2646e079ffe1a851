#include "csra/mpvs.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace csra {

std::vector<PageId> NavSequence::page_ids() const {
    std::vector<PageId> ids;
    ids.reserve(pages.size());
    for (const PageVisit& visit : pages) {
        ids.push_back(visit.page);
    }
    return ids;
}

bool nav_sequence_less(const NavSequence& a, const NavSequence& b) {
    const auto key = [](const NavSequence& s) {
        std::vector<std::pair<PageId, Timestamp>> k;
        k.reserve(s.pages.size());
        for (const PageVisit& visit : s.pages) {
            k.emplace_back(visit.page, visit.time);
        }
        return k;
    };
    const auto ka = key(a);
    const auto kb = key(b);
    return std::tie(ka, a.degree, a.maximal) < std::tie(kb, b.degree, b.maximal);
}

namespace {

// New sequences with degree zero are finished; the rest stay extendable.
void route_new_sequence(NavSequence seq, SessionPools& pools) {
    if (seq.degree == 0) {
        pools.final_set.push_back(std::move(seq));
    } else {
        pools.temp.push_back(std::move(seq));
    }
}

} // namespace

void new_seq_initialize(PageVisit page, const WebTopology& topology, SessionPools& pools) {
    NavSequence seq;
    seq.pages = {page};
    seq.degree = static_cast<int>(topology.out_degree(page.page));
    seq.maximal = true;
    route_new_sequence(std::move(seq), pools);
}

bool new_seq_extend(NavSequence& seq, PageVisit page, const WebTopology& topology,
                    Duration delta, SessionPools& pools) {
    const bool link_status = topology.has_link(seq.last_page(), page.page);
    const Duration time_diff = page.time - seq.last_time();
    if (!link_status || time_diff >= delta) {
        return false;
    }

    pools.flag = true;
    seq.degree -= 1;
    seq.maximal = false;

    NavSequence extended;
    extended.pages = seq.pages;
    extended.pages.push_back(page);
    extended.degree = static_cast<int>(topology.out_degree(page.page));
    extended.maximal = true;
    route_new_sequence(std::move(extended), pools);

    if (seq.degree == 0) {
        for (auto it = pools.temp.begin(); it != pools.temp.end(); ++it) {
            if (&*it == &seq) {
                pools.temp.erase(it);
                return true;
            }
        }
        throw std::invalid_argument("new_seq_extend: sequence is not a member of pools.temp");
    }
    return true;
}

std::vector<NavSequence> mpvs_process_session(const CandidateSession& session,
                                              const WebTopology& topology, Duration delta,
                                              std::vector<MpvsPageTrace>* trace) {
    SessionPools pools;
    std::vector<std::list<NavSequence>::iterator> snapshot;

    for (const PageVisit& page : session.entries) {
        pools.flag = false;

        MpvsPageTrace step;
        if (trace) {
            step.page = page;
            step.temp_before.assign(pools.temp.begin(), pools.temp.end());
        }

        // Only sequences present before this page are offered it; extensions
        // appended during the sweep are not revisited.
        snapshot.clear();
        for (auto it = pools.temp.begin(); it != pools.temp.end(); ++it) {
            snapshot.push_back(it);
        }
        for (auto it : snapshot) {
            const std::size_t final_before = pools.final_set.size();
            NavSequence pre = trace ? *it : NavSequence{};
            if (!new_seq_extend(*it, page, topology, delta, pools)) {
                continue;
            }
            if (trace) {
                pre.degree -= 1;
                pre.maximal = false;
                step.extended.push_back(std::move(pre));
                step.created.push_back(pools.final_set.size() > final_before
                                           ? pools.final_set.back()
                                           : pools.temp.back());
            }
        }
        if (!pools.flag) {
            const std::size_t final_before = pools.final_set.size();
            new_seq_initialize(page, topology, pools);
            if (trace) {
                step.created.push_back(pools.final_set.size() > final_before
                                           ? pools.final_set.back()
                                           : pools.temp.back());
            }
        }

        if (trace) {
            step.temp_after.assign(pools.temp.begin(), pools.temp.end());
            step.final_after = pools.final_set;
            trace->push_back(std::move(step));
        }
    }

    for (const NavSequence& seq : pools.temp) {
        if (seq.maximal) {
            pools.final_set.push_back(seq);
        }
    }
    return std::move(pools.final_set);
}

MaximalSessionSet csra_phase2(const std::vector<CandidateSession>& sessions,
                              const WebTopology& topology, Duration delta) {
    MaximalSessionSet result;
    for (const CandidateSession& session : sessions) {
        std::vector<NavSequence> finals = mpvs_process_session(session, topology, delta);
        result.sequences.insert(result.sequences.end(),
                                std::make_move_iterator(finals.begin()),
                                std::make_move_iterator(finals.end()));
    }
    std::sort(result.sequences.begin(), result.sequences.end(), nav_sequence_less);
    return result;
}

} // namespace csra
