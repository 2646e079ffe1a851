#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "csra/topology.hpp"
#include "csra/types.hpp"

namespace csra {

// One raw log tuple <user, page, time>.
struct PageRequest {
    std::string user;
    PageId page = 0;
    Timestamp time = 0;

    friend bool operator==(const PageRequest&, const PageRequest&) = default;
};

// A single user's requests, sorted by time (stable on ties).
struct UserRequestSequence {
    std::string user;
    std::vector<PageRequest> requests;
};

enum class LogFormat { csv, clf };

// A skipped input line and why it was skipped.
struct LineDiagnostic {
    std::size_t line = 0;
    std::string reason;
};

struct ParsedLog {
    std::vector<PageRequest> requests;
    std::vector<LineDiagnostic> skipped;
};

// Parses a request log. CSV rows are "user,url,epoch_seconds"; CLF lines are
// the common log format subset
//   host ident authuser [date] "METHOD url PROTO" status bytes
// where only GET requests with 2xx/3xx status are kept. Requests for URLs not
// present in the topology are skipped with a diagnostic, as are malformed
// lines; skipping is never fatal. Throws std::runtime_error only if the
// stream itself fails mid-read.
ParsedLog parse_log(std::istream& in, LogFormat format, const WebTopology& topology);
ParsedLog parse_log_file(const std::filesystem::path& path, LogFormat format,
                         const WebTopology& topology);

// Buckets requests per user (users in first-appearance order) and sorts each
// bucket by time, keeping the original log order on ties.
std::vector<UserRequestSequence> group_by_user(const std::vector<PageRequest>& requests);

// Epoch seconds for a CLF timestamp body like "10/Oct/2000:13:55:36 -0700".
// Returns false if the text does not match that shape.
bool parse_clf_time(std::string_view text, Timestamp& out);

} // namespace csra
