#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "csra/types.hpp"

namespace csra {

// A contiguous page run together with the number of input sequences that
// contain it (at most one count per sequence).
struct FrequentPattern {
    std::vector<PageId> pages;
    std::size_t support = 0;

    friend bool operator==(const FrequentPattern&, const FrequentPattern&) = default;
};

// Level-wise mining of frequent contiguous runs. A length-k run is counted
// only when both its length-(k-1) prefix and suffix are already frequent,
// which prunes most of the window enumeration. Results are sorted by length
// descending, then support descending, then page list ascending. Throws
// std::invalid_argument when min_support is zero.
std::vector<FrequentPattern> mine_frequent(const std::vector<std::vector<PageId>>& sequences,
                                           std::size_t min_support);

// Next-page lookup: finds the longest non-empty suffix of `history` for which
// some pattern extends it by one page, and returns the extension with the
// highest support (ties broken toward the smallest PageId). Empty optional
// when no suffix matches.
std::optional<PageId> predict_next(const std::vector<FrequentPattern>& patterns,
                                   const std::vector<PageId>& history);

} // namespace csra
