#include "csra/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "csra/mining.hpp"
#include "csra/mpvs.hpp"

namespace csra {

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 14695981039346656037ull;
    for (const char c : text) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    return hash;
}

bool is_test_user(std::string_view user) {
    return fnv1a64(user) % 5 == 0;
}

std::vector<std::vector<PageId>> reconstruct_paths(ReconstructionMethod method,
                                                   const UserRequestSequence& seq,
                                                   const WebTopology& topology,
                                                   const Thresholds& th) {
    std::vector<std::vector<PageId>> paths;
    switch (method) {
    case ReconstructionMethod::time_oriented:
        for (const ReconstructedSession& session : time_oriented(seq, th)) {
            paths.push_back(session.pages);
        }
        break;
    case ReconstructionMethod::navigation_oriented:
        for (const ReconstructedSession& session : navigation_oriented(seq, topology, th)) {
            paths.push_back(session.pages);
        }
        break;
    case ReconstructionMethod::csra: {
        const auto sessions = build_candidate_sessions(seq, th);
        for (const NavSequence& nav :
             csra_phase2(sessions, topology, th.page_stay_delta).sequences) {
            paths.push_back(nav.page_ids());
        }
        break;
    }
    }
    return paths;
}

namespace {

ImprovementDelta delta_against(double csra_value, double base_value) {
    ImprovementDelta delta;
    delta.absolute = csra_value - base_value;
    if (base_value == 0.0) {
        delta.relative = csra_value > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    } else {
        delta.relative = delta.absolute / base_value;
    }
    return delta;
}

MethodImprovements improvements(const MethodMetrics& csra_metrics,
                                const MethodMetrics& base) {
    MethodImprovements result;
    result.next_page_accuracy =
        delta_against(csra_metrics.next_page_accuracy, base.next_page_accuracy);
    result.session_recall = delta_against(csra_metrics.session_recall, base.session_recall);
    result.session_precision =
        delta_against(csra_metrics.session_precision, base.session_precision);
    return result;
}

std::string format_value(double value) {
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << value;
    return out.str();
}

} // namespace

EvalReport evaluate(const std::vector<PageRequest>& log, const GroundTruth& truth,
                    const WebTopology& topology, const Thresholds& th,
                    std::size_t min_support) {
    th.validate();
    if (truth.empty()) {
        throw std::invalid_argument("evaluate: ground truth has no paths");
    }

    std::unordered_map<std::string_view, const UserRequestSequence*> by_user;
    const std::vector<UserRequestSequence> sequences = group_by_user(log);
    for (const UserRequestSequence& seq : sequences) {
        by_user.emplace(seq.user, &seq);
    }

    std::vector<const UserTruth*> train_users;
    std::vector<const UserTruth*> test_users;
    for (const UserTruth& user : truth.users) {
        (is_test_user(user.user) ? test_users : train_users).push_back(&user);
    }
    if (train_users.empty() || test_users.empty()) {
        throw std::invalid_argument("evaluate: user hash split left a bucket empty");
    }

    EvalReport report;
    report.train_users = train_users.size();
    report.test_users = test_users.size();

    // Queries depend only on the truth: every proper prefix of a true path.
    struct Query {
        const std::vector<PageId>* path;
        std::size_t split;
    };
    std::vector<Query> queries;
    for (const UserTruth* user : test_users) {
        for (const SessionTruth& session : user->sessions) {
            for (const std::vector<PageId>& path : session.paths) {
                for (std::size_t split = 1; split < path.size(); ++split) {
                    queries.push_back({&path, split});
                }
            }
        }
    }
    report.queries = queries.size();

    static constexpr ReconstructionMethod kMethods[] = {
        ReconstructionMethod::csra,
        ReconstructionMethod::time_oriented,
        ReconstructionMethod::navigation_oriented,
    };
    const UserRequestSequence empty_sequence;

    for (const ReconstructionMethod method : kMethods) {
        std::vector<std::vector<PageId>> corpus;
        for (const UserTruth* user : train_users) {
            const auto it = by_user.find(user->user);
            const UserRequestSequence& seq =
                it == by_user.end() ? empty_sequence : *it->second;
            for (std::vector<PageId>& path : reconstruct_paths(method, seq, topology, th)) {
                corpus.push_back(std::move(path));
            }
        }
        const std::vector<FrequentPattern> patterns = mine_frequent(corpus, min_support);

        std::size_t correct = 0;
        for (const Query& query : queries) {
            const std::vector<PageId> prefix(query.path->begin(),
                                             query.path->begin() +
                                                 static_cast<std::ptrdiff_t>(query.split));
            const std::optional<PageId> predicted = predict_next(patterns, prefix);
            if (predicted && *predicted == (*query.path)[query.split]) {
                ++correct;
            }
        }

        // Path overlap is pooled over every user: recall counts true paths
        // reproduced exactly, precision counts reconstructions that equal
        // some true path of the same user.
        std::size_t truth_total = 0;
        std::size_t truth_hits = 0;
        std::size_t recon_total = 0;
        std::size_t recon_hits = 0;
        for (const UserTruth& user : truth.users) {
            std::set<std::vector<PageId>> truth_set;
            for (const SessionTruth& session : user.sessions) {
                truth_set.insert(session.paths.begin(), session.paths.end());
                truth_total += session.paths.size();
            }
            const auto it = by_user.find(user.user);
            const UserRequestSequence& seq =
                it == by_user.end() ? empty_sequence : *it->second;
            const std::vector<std::vector<PageId>> recon =
                reconstruct_paths(method, seq, topology, th);
            std::set<std::vector<PageId>> recon_set(recon.begin(), recon.end());
            for (const SessionTruth& session : user.sessions) {
                for (const std::vector<PageId>& path : session.paths) {
                    if (recon_set.contains(path)) {
                        ++truth_hits;
                    }
                }
            }
            recon_total += recon.size();
            for (const std::vector<PageId>& path : recon) {
                if (truth_set.contains(path)) {
                    ++recon_hits;
                }
            }
        }

        MethodMetrics metrics;
        metrics.next_page_accuracy =
            queries.empty() ? 0.0
                            : static_cast<double>(correct) / static_cast<double>(queries.size());
        metrics.session_recall =
            static_cast<double>(truth_hits) / static_cast<double>(truth_total);
        metrics.session_precision =
            recon_total == 0 ? 0.0
                             : static_cast<double>(recon_hits) / static_cast<double>(recon_total);

        switch (method) {
        case ReconstructionMethod::csra:
            report.csra = metrics;
            break;
        case ReconstructionMethod::time_oriented:
            report.time_oriented = metrics;
            break;
        case ReconstructionMethod::navigation_oriented:
            report.navigation_oriented = metrics;
            break;
        }
    }

    report.csra_vs_time = improvements(report.csra, report.time_oriented);
    report.csra_vs_nav = improvements(report.csra, report.navigation_oriented);
    return report;
}

namespace {

void write_method_lines(std::ostream& out, const char* name, const MethodMetrics& metrics) {
    out << name << ".next_page_accuracy=" << format_value(metrics.next_page_accuracy) << '\n'
        << name << ".session_recall=" << format_value(metrics.session_recall) << '\n'
        << name << ".session_precision=" << format_value(metrics.session_precision) << '\n';
}

void write_improvement_lines(std::ostream& out, const char* name,
                             const MethodImprovements& improvements) {
    const auto pair = [&](const char* metric, const ImprovementDelta& delta) {
        out << name << '.' << metric << "_absolute=" << format_value(delta.absolute) << '\n'
            << name << '.' << metric << "_relative=" << format_value(delta.relative) << '\n';
    };
    pair("next_page_accuracy", improvements.next_page_accuracy);
    pair("session_recall", improvements.session_recall);
    pair("session_precision", improvements.session_precision);
}

void write_method_records(std::ostream& out, const char* name, const MethodMetrics& metrics) {
    out << name << "\tnext_page_accuracy\t" << format_value(metrics.next_page_accuracy) << '\n'
        << name << "\tsession_recall\t" << format_value(metrics.session_recall) << '\n'
        << name << "\tsession_precision\t" << format_value(metrics.session_precision) << '\n';
}

void write_improvement_records(std::ostream& out, const char* name,
                               const MethodImprovements& improvements) {
    const auto pair = [&](const char* metric, const ImprovementDelta& delta) {
        out << name << '\t' << metric << "_absolute\t" << format_value(delta.absolute) << '\n'
            << name << '\t' << metric << "_relative\t" << format_value(delta.relative) << '\n';
    };
    pair("next_page_accuracy", improvements.next_page_accuracy);
    pair("session_recall", improvements.session_recall);
    pair("session_precision", improvements.session_precision);
}

} // namespace

void write_report_text(std::ostream& out, const EvalReport& report) {
    out << "train_users=" << report.train_users << '\n'
        << "test_users=" << report.test_users << '\n'
        << "queries=" << report.queries << '\n';
    write_method_lines(out, "csra", report.csra);
    write_method_lines(out, "time", report.time_oriented);
    write_method_lines(out, "nav", report.navigation_oriented);
    write_improvement_lines(out, "csra_vs_time", report.csra_vs_time);
    write_improvement_lines(out, "csra_vs_nav", report.csra_vs_nav);
}

void write_report_records(std::ostream& out, const EvalReport& report) {
    write_method_records(out, "csra", report.csra);
    write_method_records(out, "time", report.time_oriented);
    write_method_records(out, "nav", report.navigation_oriented);
    write_improvement_records(out, "csra_vs_time", report.csra_vs_time);
    write_improvement_records(out, "csra_vs_nav", report.csra_vs_nav);
}

} // namespace csra
