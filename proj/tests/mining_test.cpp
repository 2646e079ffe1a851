#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "csra/mining.hpp"
#include "csra/rng.hpp"

using namespace csra;

namespace {

constexpr PageId A = 0, B = 1, C = 2, X = 3;

// Counts sequences containing `run` as a contiguous window, directly.
std::size_t brute_support(const std::vector<std::vector<PageId>>& sequences,
                          const std::vector<PageId>& run) {
    std::size_t count = 0;
    for (const std::vector<PageId>& seq : sequences) {
        const auto it = std::search(seq.begin(), seq.end(), run.begin(), run.end());
        if (it != seq.end()) {
            ++count;
        }
    }
    return count;
}

} // namespace

TEST_CASE("frequent runs are counted once per sequence") {
    const std::vector<std::vector<PageId>> sequences = {{A, B}, {A, B}, {A, C}};
    const std::vector<FrequentPattern> patterns = mine_frequent(sequences, 2);
    const std::vector<FrequentPattern> expected = {
        {{A, B}, 2},
        {{A}, 3},
        {{B}, 2},
    };
    CHECK(patterns == expected);
}

TEST_CASE("support one keeps every window") {
    const std::vector<FrequentPattern> patterns = mine_frequent({{A, B, A}}, 1);
    const std::vector<FrequentPattern> expected = {
        {{A, B, A}, 1},
        {{A, B}, 1},
        {{B, A}, 1},
        {{A}, 1},
        {{B}, 1},
    };
    CHECK(patterns == expected);
}

TEST_CASE("a threshold above the corpus size yields nothing") {
    CHECK(mine_frequent({{A, B}, {A, C}}, 3).empty());
    CHECK(mine_frequent({}, 1).empty());
}

TEST_CASE("a zero support threshold is refused") {
    CHECK_THROWS_AS(mine_frequent({{A}}, 0), std::invalid_argument);
}

TEST_CASE("every sub-run of a frequent run is at least as frequent") {
    SplitMix64 rng(77);
    std::vector<std::vector<PageId>> sequences;
    for (int s = 0; s < 40; ++s) {
        std::vector<PageId> seq(2 + rng.below(6));
        for (PageId& page : seq) {
            page = static_cast<PageId>(rng.below(4));
        }
        sequences.push_back(std::move(seq));
    }
    const std::vector<FrequentPattern> patterns = mine_frequent(sequences, 3);
    std::map<std::vector<PageId>, std::size_t> support;
    for (const FrequentPattern& p : patterns) {
        support[p.pages] = p.support;
    }
    for (const FrequentPattern& p : patterns) {
        CHECK(p.support == brute_support(sequences, p.pages));
        if (p.pages.size() > 1) {
            const std::vector<PageId> prefix(p.pages.begin(), p.pages.end() - 1);
            const std::vector<PageId> suffix(p.pages.begin() + 1, p.pages.end());
            REQUIRE(support.count(prefix) == 1);
            REQUIRE(support.count(suffix) == 1);
            CHECK(support[prefix] >= p.support);
            CHECK(support[suffix] >= p.support);
        }
    }
}

TEST_CASE("mining agrees with direct window counting on random corpora") {
    SplitMix64 rng(123);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::vector<PageId>> sequences;
        const std::size_t n = 3 + rng.below(8);
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<PageId> seq(1 + rng.below(5));
            for (PageId& page : seq) {
                page = static_cast<PageId>(rng.below(3));
            }
            sequences.push_back(std::move(seq));
        }
        const std::size_t min_support = 1 + rng.below(3);
        const std::vector<FrequentPattern> patterns = mine_frequent(sequences, min_support);

        // Direct enumeration of every distinct window.
        std::map<std::vector<PageId>, std::size_t> expected;
        for (const std::vector<PageId>& seq : sequences) {
            std::map<std::vector<PageId>, bool> seen;
            for (std::size_t i = 0; i < seq.size(); ++i) {
                for (std::size_t j = i + 1; j <= seq.size(); ++j) {
                    seen[{seq.begin() + i, seq.begin() + j}] = true;
                }
            }
            for (const auto& [run, _] : seen) {
                expected[run] += 1;
            }
        }
        std::erase_if(expected, [&](const auto& kv) { return kv.second < min_support; });

        REQUIRE(patterns.size() == expected.size());
        for (const FrequentPattern& p : patterns) {
            REQUIRE(expected.count(p.pages) == 1);
            CHECK(expected[p.pages] == p.support);
        }
    }
}

TEST_CASE("prediction extends the history by the best-supported page") {
    const std::vector<FrequentPattern> patterns = {
        {{A, B}, 5},
        {{A, C}, 3},
    };
    CHECK(predict_next(patterns, {A}) == B);
    CHECK(predict_next(patterns, {C}) == std::nullopt);
}

TEST_CASE("a longer matching suffix beats a better-supported short one") {
    const std::vector<FrequentPattern> patterns = {
        {{X, A, B}, 2},
        {{A, C}, 9},
    };
    CHECK(predict_next(patterns, {X, A}) == B);
    CHECK(predict_next(patterns, {A}) == C);
}

TEST_CASE("support ties break toward the smaller page id") {
    const std::vector<FrequentPattern> patterns = {
        {{A, C}, 4},
        {{A, B}, 4},
    };
    CHECK(predict_next(patterns, {A}) == B);
}

TEST_CASE("an empty history has no prediction") {
    const std::vector<FrequentPattern> patterns = {{{A, B}, 5}};
    CHECK(predict_next(patterns, {}) == std::nullopt);
    CHECK(predict_next({}, {A}) == std::nullopt);
}

TEST_CASE("only the history's suffix matters") {
    const std::vector<FrequentPattern> patterns = {{{B, C}, 2}};
    // No pattern starts with [A, B], but the suffix [B] matches.
    CHECK(predict_next(patterns, {A, B}) == C);
}
