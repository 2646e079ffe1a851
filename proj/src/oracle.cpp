#include "csra/oracle.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

#include "csra/mpvs.hpp"

namespace csra {

std::vector<std::vector<PageId>> brute_force_maximal(const CandidateSession& session,
                                                     const WebTopology& topology,
                                                     Duration delta,
                                                     const OracleLimits& limits) {
    const std::size_t n = session.entries.size();
    if (n > limits.max_session_length) {
        throw std::invalid_argument("session too long for brute-force oracle: " +
                                    std::to_string(n) + " > " +
                                    std::to_string(limits.max_session_length));
    }

    // Step 1: the feasible set.
    std::vector<std::vector<PageId>> feasible;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<PageId> pages;
        bool ok = true;
        std::size_t previous = 0;
        bool have_previous = false;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask & (1u << i))) {
                continue;
            }
            if (have_previous) {
                const PageVisit& a = session.entries[previous];
                const PageVisit& b = session.entries[i];
                ok = topology.has_link(a.page, b.page) && (b.time - a.time) < delta;
            }
            pages.push_back(session.entries[i].page);
            previous = i;
            have_previous = true;
        }
        if (ok) {
            feasible.push_back(std::move(pages));
        }
    }

    // Step 2: drop everything that occurs as a proper contiguous substring of
    // some feasible member.
    std::set<std::vector<PageId>> proper_substrings;
    for (const std::vector<PageId>& path : feasible) {
        for (std::size_t len = 1; len < path.size(); ++len) {
            for (std::size_t start = 0; start + len <= path.size(); ++start) {
                proper_substrings.insert(
                    std::vector<PageId>(path.begin() + static_cast<std::ptrdiff_t>(start),
                                        path.begin() + static_cast<std::ptrdiff_t>(start + len)));
            }
        }
    }
    std::vector<std::vector<PageId>> maximal;
    for (std::vector<PageId>& path : feasible) {
        if (!proper_substrings.contains(path)) {
            maximal.push_back(std::move(path));
        }
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

RandomInstance make_random_instance(SplitMix64& rng, const InstanceGenConfig& cfg,
                                    std::size_t instance_index) {
    static constexpr double kEdgeProbabilities[] = {0.2, 0.4, 0.6};
    const double edge_probability = kEdgeProbabilities[instance_index % 3];

    RandomInstance instance;
    instance.delta = cfg.delta;

    const std::size_t page_count = 1 + rng.below(cfg.max_pages);
    for (std::size_t p = 0; p < page_count; ++p) {
        instance.topology.add_page("/p" + std::to_string(p));
    }
    for (PageId from = 0; from < page_count; ++from) {
        for (PageId to = 0; to < page_count; ++to) {
            if (from != to && rng.bernoulli(edge_probability)) {
                instance.topology.add_edge(from, to);
            }
        }
    }

    const std::size_t session_length =
        1 + rng.below(std::min(cfg.max_session_length, page_count));
    std::vector<PageId> pages(page_count);
    for (PageId p = 0; p < page_count; ++p) {
        pages[p] = p;
    }
    for (std::size_t i = page_count; i > 1; --i) { // Fisher-Yates
        std::swap(pages[i - 1], pages[rng.below(i)]);
    }

    instance.session.user = "oracle";
    Timestamp t = 1000;
    for (std::size_t i = 0; i < session_length; ++i) {
        if (i > 0) {
            // Mostly short gaps with occasional long ones; consecutive gaps
            // stay under delta so the session is Phase-1 valid, while sums of
            // two or more gaps can exceed it.
            t += rng.bernoulli(0.8) ? rng.range(1, 100) : rng.range(350, 560);
        }
        instance.session.entries.push_back({pages[i], t});
    }
    return instance;
}

std::size_t run_oracle_check(std::size_t instances, const InstanceGenConfig& cfg,
                             std::uint64_t seed, bool inject_fault, std::ostream& log) {
    if (cfg.max_session_length > 16) {
        throw std::invalid_argument("oracle check: sessions longer than 16 are not supported");
    }
    const OracleLimits limits{cfg.max_session_length};

    SplitMix64 rng(seed);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < instances; ++i) {
        const RandomInstance instance = make_random_instance(rng, cfg, i);
        std::vector<std::vector<PageId>> expected =
            brute_force_maximal(instance.session, instance.topology, instance.delta, limits);
        if (inject_fault && i == 0) {
            if (expected.empty()) {
                expected.push_back({0});
            } else {
                expected.pop_back();
            }
        }

        std::vector<std::vector<PageId>> actual;
        for (const NavSequence& seq :
             mpvs_process_session(instance.session, instance.topology, instance.delta)) {
            actual.push_back(seq.page_ids());
        }
        std::sort(actual.begin(), actual.end());

        if (actual != expected) {
            ++mismatches;
            log << "instance " << i << " disagrees\n" << "  edges:";
            for (const auto& [from, to] : instance.topology.edges()) {
                log << ' ' << instance.topology.url(from) << "->" << instance.topology.url(to);
            }
            log << "\n  session:";
            for (const PageVisit& visit : instance.session.entries) {
                log << ' ' << instance.topology.url(visit.page) << '@' << visit.time;
            }
            log << "\n  delta: " << instance.delta << '\n';
            const auto dump = [&](const char* label, const std::vector<std::vector<PageId>>& set) {
                log << "  " << label << ':';
                for (const std::vector<PageId>& path : set) {
                    log << " [";
                    for (std::size_t p = 0; p < path.size(); ++p) {
                        log << (p ? "," : "") << instance.topology.url(path[p]);
                    }
                    log << ']';
                }
                log << '\n';
            };
            dump("expected", expected);
            dump("actual", actual);
        }
    }
    return mismatches;
}

} // namespace csra
