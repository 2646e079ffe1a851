#pragma once

#include <list>
#include <vector>

#include "csra/phase1.hpp"
#include "csra/topology.hpp"
#include "csra/types.hpp"

namespace csra {

// A navigation path under construction. `degree` is the remaining extension
// budget: it starts at the out-degree of the last page and drops by one for
// each extension applied to this sequence. A sequence is maximal until the
// first time it is extended.
struct NavSequence {
    std::vector<PageVisit> pages;
    int degree = 0;
    bool maximal = true;

    PageId last_page() const { return pages.back().page; }
    Timestamp last_time() const { return pages.back().time; }
    std::vector<PageId> page_ids() const;

    friend bool operator==(const NavSequence&, const NavSequence&) = default;
};

// Orders by page-id list, then by timestamps, then (degree, maximal).
bool nav_sequence_less(const NavSequence& a, const NavSequence& b);

// Working sets for one candidate session: temp holds sequences that can still
// be extended (degree > 0), final_set holds finished maximal sequences. flag
// records whether the page currently being processed extended anything.
struct SessionPools {
    std::list<NavSequence> temp;
    std::vector<NavSequence> final_set;
    bool flag = false;
};

// Starts a singleton sequence [page] with degree = out_degree(page); it goes
// straight to final_set when the degree is zero, otherwise to temp. Call only
// when no extension succeeded for `page` (pools.flag is false).
void new_seq_initialize(PageVisit page, const WebTopology& topology, SessionPools& pools);

// Offers `page` to a sequence living in pools.temp. When the topology links
// the sequence's last page to `page` and the time gap is under delta, the
// extended copy seq+page is created (routed by its own degree), `seq` loses
// one degree and its maximality, and `seq` leaves temp if its degree hit
// zero. A failed guard changes nothing. Returns whether the extension
// happened.
bool new_seq_extend(NavSequence& seq, PageVisit page, const WebTopology& topology,
                    Duration delta, SessionPools& pools);

// Snapshot of one page's processing step, for tracing the pool evolution.
struct MpvsPageTrace {
    PageVisit page;
    std::vector<NavSequence> temp_before;   // temp when the page arrived
    std::vector<NavSequence> extended;      // sequences extended by this page, post-update
    std::vector<NavSequence> created;       // sequences created while processing this page
    std::vector<NavSequence> temp_after;
    std::vector<NavSequence> final_after;
};

// Phase 2 core for one candidate session: processes pages left to right,
// offering each page to a snapshot of temp (sequences created while
// processing a page are not offered that same page), initializing a singleton
// when nothing was extended, and finally sweeping still-maximal temp members
// into the final set. Returns the session's maximal navigation sequences.
std::vector<NavSequence> mpvs_process_session(const CandidateSession& session,
                                              const WebTopology& topology, Duration delta,
                                              std::vector<MpvsPageTrace>* trace = nullptr);

// All maximal navigation sequences of one run, sorted for deterministic
// serialization.
struct MaximalSessionSet {
    std::vector<NavSequence> sequences;
};

// Runs mpvs_process_session over every candidate session with fresh pools and
// collects the union, sorted by page-id list.
MaximalSessionSet csra_phase2(const std::vector<CandidateSession>& sessions,
                              const WebTopology& topology, Duration delta);

} // namespace csra
