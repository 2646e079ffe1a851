#pragma once

#include <cstdint>

namespace csra {

// Dense page index interned from a URL by WebTopology.
using PageId = std::uint32_t;

// Whole seconds since the Unix epoch.
using Timestamp = std::int64_t;
using Duration = std::int64_t;

// One page view inside a session: which page, and when it was requested.
struct PageVisit {
    PageId page = 0;
    Timestamp time = 0;

    friend bool operator==(const PageVisit&, const PageVisit&) = default;
};

} // namespace csra
