#include "csra/topology.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "csra/errors.hpp"

namespace csra {

PageId WebTopology::add_page(const std::string& url) {
    auto it = index_.find(url);
    if (it != index_.end()) {
        return it->second;
    }
    const PageId id = static_cast<PageId>(urls_.size());
    urls_.push_back(url);
    index_.emplace(url, id);
    out_.emplace_back();
    return id;
}

bool WebTopology::add_edge(PageId from, PageId to) {
    require_valid(from, "edge source");
    require_valid(to, "edge target");
    auto& succ = out_[from];
    auto pos = std::lower_bound(succ.begin(), succ.end(), to);
    if (pos != succ.end() && *pos == to) {
        return false;
    }
    succ.insert(pos, to);
    ++edge_count_;
    return true;
}

std::optional<PageId> WebTopology::find_page(std::string_view url) const {
    auto it = index_.find(std::string(url));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

const std::string& WebTopology::url(PageId p) const {
    require_valid(p, "page");
    return urls_[p];
}

const std::vector<PageId>& WebTopology::out_neighbors(PageId p) const {
    require_valid(p, "page");
    return out_[p];
}

std::size_t WebTopology::out_degree(PageId p) const {
    require_valid(p, "page");
    return out_[p].size();
}

bool WebTopology::has_link(PageId from, PageId to) const {
    require_valid(from, "link source");
    require_valid(to, "link target");
    const auto& succ = out_[from];
    return std::binary_search(succ.begin(), succ.end(), to);
}

std::vector<std::pair<PageId, PageId>> WebTopology::edges() const {
    std::vector<std::pair<PageId, PageId>> result;
    result.reserve(edge_count_);
    for (PageId from = 0; from < out_.size(); ++from) {
        for (PageId to : out_[from]) {
            result.emplace_back(from, to);
        }
    }
    return result;
}

void WebTopology::save(std::ostream& out) const {
    for (const auto& [from, to] : edges()) {
        out << urls_[from] << ' ' << urls_[to] << '\n';
    }
}

void WebTopology::require_valid(PageId p, const char* what) const {
    if (p >= urls_.size()) {
        throw std::invalid_argument(std::string("invalid PageId for ") + what +
                                    ": " + std::to_string(p) + " (page count " +
                                    std::to_string(urls_.size()) + ")");
    }
}

WebTopology load_topology(std::istream& in) {
    WebTopology t;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::istringstream fields(line);
        std::string from_url;
        std::string to_url;
        std::string extra;
        if (!(fields >> from_url)) {
            continue; // blank line
        }
        if (from_url.front() == '#') {
            continue;
        }
        if (!(fields >> to_url) || (fields >> extra)) {
            throw ParseError(line_number,
                             "expected exactly two whitespace-separated URLs");
        }
        const PageId from = t.add_page(from_url);
        const PageId to = t.add_page(to_url);
        t.add_edge(from, to);
    }
    return t;
}

WebTopology load_topology_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open topology file: " + path.string());
    }
    return load_topology(in);
}

void save_topology_file(const WebTopology& t, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write topology file: " + path.string());
    }
    t.save(out);
}

bool same_graph(const WebTopology& a, const WebTopology& b) {
    if (a.page_count() != b.page_count() || a.edge_count() != b.edge_count()) {
        return false;
    }
    std::set<std::string> urls_a;
    std::set<std::string> urls_b;
    for (PageId p = 0; p < a.page_count(); ++p) {
        urls_a.insert(a.url(p));
    }
    for (PageId p = 0; p < b.page_count(); ++p) {
        urls_b.insert(b.url(p));
    }
    if (urls_a != urls_b) {
        return false;
    }
    std::set<std::pair<std::string, std::string>> edges_a;
    std::set<std::pair<std::string, std::string>> edges_b;
    for (const auto& [from, to] : a.edges()) {
        edges_a.emplace(a.url(from), a.url(to));
    }
    for (const auto& [from, to] : b.edges()) {
        edges_b.emplace(b.url(from), b.url(to));
    }
    return edges_a == edges_b;
}

} // namespace csra
