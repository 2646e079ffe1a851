#include "csra/simulator.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "csra/errors.hpp"
#include "csra/phase1.hpp"

namespace csra {

namespace {

constexpr Timestamp kEpoch = 1'000'000'000; // simulation clock origin
constexpr Timestamp kUserStagger = 17;      // seconds between user start times

std::string page_url(std::size_t index) {
    return "/p" + std::to_string(index);
}

std::string user_name(std::size_t index) {
    return "u" + std::to_string(index);
}

} // namespace

void SimConfig::validate() const {
    if (page_count == 0) {
        throw std::invalid_argument("simulator: page_count must be at least 1");
    }
    if (edges_per_page <= 0.0) {
        throw std::invalid_argument("simulator: edges_per_page must be positive");
    }
    if (path_length_min == 0 || path_length_min > path_length_max) {
        throw std::invalid_argument("simulator: invalid path length range");
    }
    if (branch_probability < 0.0 || branch_probability > 1.0) {
        throw std::invalid_argument("simulator: branch_probability must be in [0,1]");
    }
    if (think_time_min <= 0 || think_time_min >= think_time_max) {
        throw std::invalid_argument("simulator: need 0 < think_time_min < think_time_max");
    }
    if (inter_session_gap <= Thresholds{}.session_duration_cap) {
        throw std::invalid_argument(
            "simulator: inter_session_gap must exceed the session duration cap");
    }
}

bool GroundTruth::empty() const {
    for (const UserTruth& user : users) {
        for (const SessionTruth& session : user.sessions) {
            if (!session.paths.empty()) {
                return false;
            }
        }
    }
    return true;
}

WebTopology generate_topology_with(const SimConfig& cfg, SplitMix64& rng) {
    WebTopology topology;
    for (std::size_t i = 0; i < cfg.page_count; ++i) {
        topology.add_page(page_url(i));
    }
    const std::size_t n = cfg.page_count;
    if (n < 2) {
        return topology; // no self-loops, so a one-page site has no edges
    }
    std::vector<PageId> candidates;
    candidates.reserve(n - 1);
    for (PageId from = 0; from < n; ++from) {
        std::uint64_t degree = rng.poisson(cfg.edges_per_page);
        degree = std::clamp<std::uint64_t>(degree, 1, n - 1);

        candidates.clear();
        for (PageId to = 0; to < n; ++to) {
            if (to != from) {
                candidates.push_back(to);
            }
        }
        // Partial Fisher-Yates: the first `degree` slots become the targets.
        for (std::uint64_t k = 0; k < degree; ++k) {
            const std::uint64_t j = k + rng.below(candidates.size() - k);
            std::swap(candidates[k], candidates[j]);
            topology.add_edge(from, candidates[k]);
        }
    }
    return topology;
}

WebTopology generate_topology(const SimConfig& cfg) {
    cfg.validate();
    SplitMix64 rng(cfg.seed);
    return generate_topology_with(cfg, rng);
}

namespace {

// A page of an existing path the agent could move from: either the tail
// (extends the path) or an interior page (forks a new one).
struct Move {
    std::size_t path;
    std::size_t position;
};

std::vector<PageId> unvisited_successors(const WebTopology& topology, PageId page,
                                         const std::unordered_set<PageId>& visited) {
    std::vector<PageId> out;
    for (PageId next : topology.out_neighbors(page)) {
        if (!visited.contains(next)) {
            out.push_back(next);
        }
    }
    return out;
}

} // namespace

AgentSession run_agent_session(const WebTopology& topology, const SimConfig& cfg,
                               SplitMix64& rng, PageId start, Timestamp start_time) {
    const std::size_t budget =
        cfg.path_length_min +
        static_cast<std::size_t>(rng.below(cfg.path_length_max - cfg.path_length_min + 1));

    AgentSession session;
    session.requests.push_back({start, start_time});
    session.paths.push_back({start});
    std::unordered_set<PageId> visited{start};

    Timestamp now = start_time;
    while (session.requests.size() < budget) {
        std::vector<Move> extends;
        std::vector<Move> forks;
        for (std::size_t p = 0; p < session.paths.size(); ++p) {
            const std::vector<PageId>& path = session.paths[p];
            for (std::size_t pos = 0; pos < path.size(); ++pos) {
                if (unvisited_successors(topology, path[pos], visited).empty()) {
                    continue;
                }
                if (pos + 1 == path.size()) {
                    extends.push_back({p, pos});
                } else {
                    forks.push_back({p, pos});
                }
            }
        }
        // One branching decision per step. A fork wish with nothing to fork
        // from falls back to extending; a stuck extend ends the session, so a
        // zero branch probability can never create a second path.
        const bool want_fork = rng.bernoulli(cfg.branch_probability);
        const std::vector<Move>& pool = (want_fork && !forks.empty()) ? forks : extends;
        if (pool.empty()) {
            break;
        }
        const Move move = pool[rng.below(pool.size())];

        const std::vector<PageId>& source = session.paths[move.path];
        const std::vector<PageId> choices =
            unvisited_successors(topology, source[move.position], visited);
        const PageId next = choices[rng.below(choices.size())];

        if (move.position + 1 == source.size()) {
            session.paths[move.path].push_back(next);
        } else {
            std::vector<PageId> branch(source.begin(),
                                       source.begin() + move.position + 1);
            branch.push_back(next);
            session.paths.push_back(std::move(branch));
        }
        visited.insert(next);
        now += cfg.think_time_min +
               static_cast<Duration>(
                   rng.below(static_cast<std::uint64_t>(cfg.think_time_max - cfg.think_time_min)));
        session.requests.push_back({next, now});
    }
    return session;
}

SimOutput simulate_logs(const SimConfig& cfg) {
    cfg.validate();
    SplitMix64 rng(cfg.seed);

    SimOutput out;
    out.topology = generate_topology_with(cfg, rng);

    for (std::size_t u = 0; u < cfg.user_count; ++u) {
        UserTruth user;
        user.user = user_name(u);
        Timestamp next_start = kEpoch + static_cast<Timestamp>(u) * kUserStagger;
        for (std::size_t s = 0; s < cfg.sessions_per_user; ++s) {
            const PageId start = static_cast<PageId>(rng.below(cfg.page_count));
            AgentSession session =
                run_agent_session(out.topology, cfg, rng, start, next_start);
            for (const PageVisit& visit : session.requests) {
                out.log.push_back({user.user, visit.page, visit.time});
            }
            next_start = session.requests.back().time + cfg.inter_session_gap;
            user.sessions.push_back({std::move(session.paths)});
        }
        out.truth.users.push_back(std::move(user));
    }

    std::stable_sort(out.log.begin(), out.log.end(),
                     [](const PageRequest& a, const PageRequest& b) {
                         return a.time < b.time;
                     });
    return out;
}

void write_csv_log(std::ostream& out, const std::vector<PageRequest>& log,
                   const WebTopology& topology) {
    for (const PageRequest& request : log) {
        out << request.user << ',' << topology.url(request.page) << ','
            << request.time << '\n';
    }
}

void write_ground_truth(std::ostream& out, const GroundTruth& truth,
                        const WebTopology& topology) {
    for (const UserTruth& user : truth.users) {
        for (std::size_t s = 0; s < user.sessions.size(); ++s) {
            for (const std::vector<PageId>& path : user.sessions[s].paths) {
                out << user.user << '\t' << s << '\t';
                for (std::size_t i = 0; i < path.size(); ++i) {
                    if (i != 0) {
                        out << ',';
                    }
                    out << topology.url(path[i]);
                }
                out << '\n';
            }
        }
    }
}

GroundTruth read_ground_truth(std::istream& in, const WebTopology& topology) {
    GroundTruth truth;
    std::unordered_map<std::string, std::size_t> user_index;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::size_t tab1 = line.find('\t');
        const std::size_t tab2 = tab1 == std::string::npos
                                     ? std::string::npos
                                     : line.find('\t', tab1 + 1);
        if (tab1 == std::string::npos || tab2 == std::string::npos) {
            throw ParseError(line_no, "expected user<TAB>session<TAB>pages");
        }
        const std::string user = line.substr(0, tab1);
        std::size_t session_index = 0;
        try {
            session_index = std::stoul(line.substr(tab1 + 1, tab2 - tab1 - 1));
        } catch (const std::exception&) {
            throw ParseError(line_no, "session index is not a number");
        }

        std::vector<PageId> path;
        std::stringstream pages(line.substr(tab2 + 1));
        std::string url;
        while (std::getline(pages, url, ',')) {
            const auto page = topology.find_page(url);
            if (!page) {
                throw ParseError(line_no, "unknown page '" + url + "'");
            }
            path.push_back(*page);
        }
        if (path.empty()) {
            throw ParseError(line_no, "empty path");
        }

        auto [it, inserted] = user_index.try_emplace(user, truth.users.size());
        if (inserted) {
            truth.users.push_back({user, {}});
        }
        UserTruth& entry = truth.users[it->second];
        if (entry.sessions.size() <= session_index) {
            entry.sessions.resize(session_index + 1);
        }
        entry.sessions[session_index].paths.push_back(std::move(path));
    }
    if (in.bad()) {
        throw std::runtime_error("ground truth: read error");
    }
    return truth;
}

GroundTruth read_ground_truth_file(const std::filesystem::path& path,
                                   const WebTopology& topology) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open ground truth file: " + path.string());
    }
    return read_ground_truth(in, topology);
}

} // namespace csra
