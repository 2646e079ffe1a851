#include "csra/mining.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace csra {

std::vector<FrequentPattern> mine_frequent(const std::vector<std::vector<PageId>>& sequences,
                                           std::size_t min_support) {
    if (min_support == 0) {
        throw std::invalid_argument("mine_frequent: min_support must be at least 1");
    }

    std::vector<FrequentPattern> result;
    std::set<std::vector<PageId>> previous; // frequent runs of length k-1

    for (std::size_t length = 1;; ++length) {
        std::map<std::vector<PageId>, std::size_t> counts;
        std::vector<PageId> window;
        for (const std::vector<PageId>& seq : sequences) {
            if (seq.size() < length) {
                continue;
            }
            std::set<std::vector<PageId>> seen; // count once per sequence
            for (std::size_t i = 0; i + length <= seq.size(); ++i) {
                window.assign(seq.begin() + i, seq.begin() + i + length);
                if (length > 1) {
                    const std::vector<PageId> prefix(window.begin(), window.end() - 1);
                    const std::vector<PageId> suffix(window.begin() + 1, window.end());
                    if (!previous.contains(prefix) || !previous.contains(suffix)) {
                        continue;
                    }
                }
                if (seen.insert(window).second) {
                    ++counts[window];
                }
            }
        }

        previous.clear();
        for (auto& [pages, support] : counts) {
            if (support >= min_support) {
                previous.insert(pages);
                result.push_back({pages, support});
            }
        }
        if (previous.empty()) {
            break;
        }
    }

    std::sort(result.begin(), result.end(),
              [](const FrequentPattern& a, const FrequentPattern& b) {
                  if (a.pages.size() != b.pages.size()) {
                      return a.pages.size() > b.pages.size();
                  }
                  if (a.support != b.support) {
                      return a.support > b.support;
                  }
                  return a.pages < b.pages;
              });
    return result;
}

std::optional<PageId> predict_next(const std::vector<FrequentPattern>& patterns,
                                   const std::vector<PageId>& history) {
    for (std::size_t len = history.size(); len >= 1; --len) {
        const auto suffix_begin = history.end() - static_cast<std::ptrdiff_t>(len);
        std::optional<PageId> best;
        std::size_t best_support = 0;
        for (const FrequentPattern& pattern : patterns) {
            if (pattern.pages.size() != len + 1 ||
                !std::equal(suffix_begin, history.end(), pattern.pages.begin())) {
                continue;
            }
            const PageId candidate = pattern.pages.back();
            if (!best || pattern.support > best_support ||
                (pattern.support == best_support && candidate < *best)) {
                best = candidate;
                best_support = pattern.support;
            }
        }
        if (best) {
            return best;
        }
    }
    return std::nullopt;
}

} // namespace csra
