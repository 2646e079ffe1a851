#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "csra/types.hpp"

namespace csra {

// Directed web-site graph. Pages are URL strings interned to dense PageIds in
// first-appearance order; adjacency lists are kept sorted and duplicate-free.
// Immutable once built, so it is safe to share across threads read-only.
class WebTopology {
public:
    // Interns a URL, returning the existing PageId if already present.
    PageId add_page(const std::string& url);

    // Adds an edge between two existing pages. Returns false if the edge was
    // already present. Self-loops are representable; the reconstruction
    // algorithms simply never traverse them.
    bool add_edge(PageId from, PageId to);

    std::size_t page_count() const { return urls_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::optional<PageId> find_page(std::string_view url) const;
    const std::string& url(PageId p) const;

    // Successors of p, sorted ascending.
    const std::vector<PageId>& out_neighbors(PageId p) const;
    std::size_t out_degree(PageId p) const;
    bool has_link(PageId from, PageId to) const;

    // All edges sorted by (from, to).
    std::vector<std::pair<PageId, PageId>> edges() const;

    // Edge-list text form: one "from-url to-url" line per edge, sorted by
    // (from, to). Pages with no incident edges are not representable.
    void save(std::ostream& out) const;

    friend bool operator==(const WebTopology& a, const WebTopology& b) {
        return a.urls_ == b.urls_ && a.out_ == b.out_;
    }

private:
    void require_valid(PageId p, const char* what) const;

    std::vector<std::string> urls_;
    std::unordered_map<std::string, PageId> index_;
    std::vector<std::vector<PageId>> out_;
    std::size_t edge_count_ = 0;
};

// Parses an edge-list stream: one edge per line, two whitespace-separated URL
// tokens. Blank lines and lines starting with '#' are ignored. Duplicate edge
// lines collapse to one edge. Throws ParseError for anything else.
WebTopology load_topology(std::istream& in);
WebTopology load_topology_file(const std::filesystem::path& path);

void save_topology_file(const WebTopology& t, const std::filesystem::path& path);

// Equality as a labeled graph: same URL set and same URL-pair edge set,
// regardless of PageId assignment.
bool same_graph(const WebTopology& a, const WebTopology& b);

} // namespace csra
