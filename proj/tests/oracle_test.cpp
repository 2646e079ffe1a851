#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "csra/oracle.hpp"
#include "test_support.hpp"

using namespace csra;

TEST_CASE("two converging edges give two maximal paths") {
    WebTopology t;
    const PageId a = t.add_page("A");
    const PageId b = t.add_page("B");
    const PageId c = t.add_page("C");
    t.add_edge(a, c);
    t.add_edge(b, c);
    const CandidateSession session{"u", {{a, 0}, {b, 100}, {c, 200}}};
    CHECK(brute_force_maximal(session, t, 600) ==
          std::vector<std::vector<PageId>>{{a, c}, {b, c}});
}

TEST_CASE("a link past the time bound is not feasible") {
    WebTopology t;
    const PageId a = t.add_page("A");
    const PageId b = t.add_page("B");
    t.add_edge(a, b);
    const CandidateSession session{"u", {{a, 0}, {b, 700}}};
    CHECK(brute_force_maximal(session, t, 600) ==
          std::vector<std::vector<PageId>>{{a}, {b}});
}

TEST_CASE("singletons survive only when nothing covers them") {
    const WebTopology t = testing::fixture_topology();
    const CandidateSession session = testing::fixture_session(t);
    const auto maximal = brute_force_maximal(session, t, 600);
    const std::vector<PageId> p1_p20_p23 = {*t.find_page("P1"), *t.find_page("P20"),
                                            *t.find_page("P23")};
    const std::vector<PageId> p1_p13_p34 = {*t.find_page("P1"), *t.find_page("P13"),
                                            *t.find_page("P34")};
    std::vector<std::vector<PageId>> expected = {p1_p20_p23, p1_p13_p34};
    std::sort(expected.begin(), expected.end());
    CHECK(maximal == expected);
}

TEST_CASE("overlong sessions are refused") {
    WebTopology t;
    const PageId a = t.add_page("A");
    CandidateSession session{"u", {}};
    for (int i = 0; i < 17; ++i) {
        session.entries.push_back({a, i * 10});
    }
    CHECK_THROWS_AS(brute_force_maximal(session, t, 600), std::invalid_argument);
}

TEST_CASE("instance generation is deterministic per seed") {
    const InstanceGenConfig cfg;
    SplitMix64 first(5);
    SplitMix64 second(5);
    for (std::size_t i = 0; i < 20; ++i) {
        const RandomInstance x = make_random_instance(first, cfg, i);
        const RandomInstance y = make_random_instance(second, cfg, i);
        CHECK(x.topology == y.topology);
        CHECK(x.session.entries == y.session.entries);
        CHECK(x.delta == y.delta);
    }
}

TEST_CASE("instances respect the configured bounds and stay phase-1 valid") {
    const InstanceGenConfig cfg;
    SplitMix64 rng(11);
    bool saw_infeasible_linked_pair = false;
    for (std::size_t i = 0; i < 300; ++i) {
        const RandomInstance inst = make_random_instance(rng, cfg, i);
        CHECK(inst.topology.page_count() <= cfg.max_pages);
        CHECK(inst.session.entries.size() <= cfg.max_session_length);
        CHECK(!inst.session.entries.empty());
        const auto& e = inst.session.entries;
        for (std::size_t k = 1; k < e.size(); ++k) {
            CHECK(e[k].time > e[k - 1].time);
            CHECK(e[k].time - e[k - 1].time < inst.delta); // consecutive gaps fit
        }
        for (std::size_t x = 0; x < e.size(); ++x) {
            for (std::size_t y = x + 1; y < e.size(); ++y) {
                CHECK(e[x].page != e[y].page); // no repeats
                if (inst.topology.has_link(e[x].page, e[y].page) &&
                    e[y].time - e[x].time >= inst.delta) {
                    saw_infeasible_linked_pair = true;
                }
            }
        }
    }
    // The gap mixture must actually exercise the time bound.
    CHECK(saw_infeasible_linked_pair);
}

TEST_CASE("the instance check harness accepts the real pipeline") {
    std::ostringstream log;
    CHECK(run_oracle_check(150, {}, 1, false, log) == 0);
    CHECK(log.str().empty());
}

TEST_CASE("the instance check harness catches an injected fault") {
    std::ostringstream log;
    CHECK(run_oracle_check(3, {}, 1, true, log) == 1);
    // The counterexample names the instance and shows both answer sets.
    CHECK(log.str().find("instance 0 disagrees") != std::string::npos);
    CHECK(log.str().find("expected:") != std::string::npos);
    CHECK(log.str().find("actual:") != std::string::npos);
}

TEST_CASE("overlong instance configs are refused") {
    InstanceGenConfig cfg;
    cfg.max_session_length = 17;
    std::ostringstream log;
    CHECK_THROWS_AS(run_oracle_check(1, cfg, 1, false, log), std::invalid_argument);
}
