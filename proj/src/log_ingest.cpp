#include "csra/log_ingest.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

namespace csra {

namespace {

bool parse_int64(std::string_view text, std::int64_t& out) {
    if (text.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
}

// Days since 1970-01-01 for a civil date (Howard Hinnant's algorithm).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

int month_number(std::string_view name) {
    static constexpr std::array<std::string_view, 12> names = {
        "Jan", "Feb", "Mar", "Apr", "May", "Jun",
        "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
    for (int i = 0; i < 12; ++i) {
        if (names[static_cast<std::size_t>(i)] == name) {
            return i + 1;
        }
    }
    return 0;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

struct CsvRow {
    std::string_view user;
    std::string_view url;
    std::string_view time;
};

bool split_csv(std::string_view line, CsvRow& row) {
    const std::size_t first = line.find(',');
    if (first == std::string_view::npos) {
        return false;
    }
    const std::size_t second = line.find(',', first + 1);
    if (second == std::string_view::npos ||
        line.find(',', second + 1) != std::string_view::npos) {
        return false;
    }
    row.user = line.substr(0, first);
    row.url = line.substr(first + 1, second - first - 1);
    row.time = line.substr(second + 1);
    return !row.user.empty() && !row.url.empty();
}

void parse_csv_line(std::string_view line, std::size_t line_number,
                    const WebTopology& topology, ParsedLog& out) {
    CsvRow row;
    if (!split_csv(line, row)) {
        out.skipped.push_back({line_number, "malformed csv row (expected user,url,epoch_seconds)"});
        return;
    }
    Timestamp time = 0;
    if (!parse_int64(row.time, time)) {
        out.skipped.push_back({line_number, "non-numeric timestamp"});
        return;
    }
    if (time < 0) {
        out.skipped.push_back({line_number, "negative timestamp"});
        return;
    }
    const auto page = topology.find_page(row.url);
    if (!page) {
        out.skipped.push_back({line_number, "url not in topology: " + std::string(row.url)});
        return;
    }
    out.requests.push_back({std::string(row.user), *page, time});
}

void parse_clf_line(std::string_view line, std::size_t line_number,
                    const WebTopology& topology, ParsedLog& out) {
    // host ident authuser [date] "METHOD url PROTO" status bytes
    const std::size_t host_end = line.find(' ');
    if (host_end == std::string_view::npos || host_end == 0) {
        out.skipped.push_back({line_number, "malformed clf line"});
        return;
    }
    const std::string_view host = line.substr(0, host_end);

    const std::size_t date_open = line.find('[');
    const std::size_t date_close = line.find(']', date_open + 1);
    if (date_open == std::string_view::npos || date_close == std::string_view::npos) {
        out.skipped.push_back({line_number, "missing [date] field"});
        return;
    }
    Timestamp time = 0;
    if (!parse_clf_time(line.substr(date_open + 1, date_close - date_open - 1), time)) {
        out.skipped.push_back({line_number, "unparseable date"});
        return;
    }
    if (time < 0) {
        out.skipped.push_back({line_number, "pre-epoch timestamp"});
        return;
    }

    const std::size_t req_open = line.find('"', date_close);
    const std::size_t req_close =
        req_open == std::string_view::npos ? std::string_view::npos
                                           : line.find('"', req_open + 1);
    if (req_close == std::string_view::npos) {
        out.skipped.push_back({line_number, "missing request field"});
        return;
    }
    const std::string_view request = line.substr(req_open + 1, req_close - req_open - 1);
    const std::size_t method_end = request.find(' ');
    if (method_end == std::string_view::npos) {
        out.skipped.push_back({line_number, "malformed request field"});
        return;
    }
    const std::string_view method = request.substr(0, method_end);
    if (method != "GET") {
        out.skipped.push_back({line_number, "non-GET request: " + std::string(method)});
        return;
    }
    std::string_view rest = request.substr(method_end + 1);
    const std::size_t url_end = rest.find(' ');
    const std::string_view url = url_end == std::string_view::npos ? rest : rest.substr(0, url_end);
    if (url.empty()) {
        out.skipped.push_back({line_number, "malformed request field"});
        return;
    }

    std::string_view tail = line.substr(req_close + 1);
    while (!tail.empty() && tail.front() == ' ') {
        tail.remove_prefix(1);
    }
    const std::size_t status_end = tail.find(' ');
    const std::string_view status =
        status_end == std::string_view::npos ? tail : tail.substr(0, status_end);
    if (!all_digits(status)) {
        out.skipped.push_back({line_number, "non-numeric status"});
        return;
    }
    if (status.front() != '2' && status.front() != '3') {
        out.skipped.push_back({line_number, "status not 2xx/3xx: " + std::string(status)});
        return;
    }

    const auto page = topology.find_page(url);
    if (!page) {
        out.skipped.push_back({line_number, "url not in topology: " + std::string(url)});
        return;
    }
    out.requests.push_back({std::string(host), *page, time});
}

} // namespace

bool parse_clf_time(std::string_view text, Timestamp& out) {
    // dd/Mon/yyyy:HH:MM:SS +ZZZZ
    if (text.size() < 26) {
        return false;
    }
    const auto digits = [&](std::size_t pos, std::size_t len, std::int64_t& value) {
        const std::string_view part = text.substr(pos, len);
        return part.size() == len && all_digits(part) && parse_int64(part, value);
    };
    std::int64_t day = 0;
    std::int64_t year = 0;
    std::int64_t hour = 0;
    std::int64_t minute = 0;
    std::int64_t second = 0;
    if (!digits(0, 2, day) || text[2] != '/' || text[6] != '/' || text[11] != ':' ||
        text[14] != ':' || text[17] != ':' || text[20] != ' ') {
        return false;
    }
    const int month = month_number(text.substr(3, 3));
    if (month == 0 || !digits(7, 4, year) || !digits(12, 2, hour) ||
        !digits(15, 2, minute) || !digits(18, 2, second)) {
        return false;
    }
    if (day < 1 || day > 31 || hour > 23 || minute > 59 || second > 60) {
        return false;
    }
    const char sign = text[21];
    std::int64_t zone_hours = 0;
    std::int64_t zone_minutes = 0;
    if ((sign != '+' && sign != '-') || !digits(22, 2, zone_hours) ||
        !digits(24, 2, zone_minutes)) {
        return false;
    }
    std::int64_t offset = zone_hours * 3600 + zone_minutes * 60;
    if (sign == '-') {
        offset = -offset;
    }
    out = days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day)) * 86400 +
          hour * 3600 + minute * 60 + second - offset;
    return true;
}

ParsedLog parse_log(std::istream& in, LogFormat format, const WebTopology& topology) {
    ParsedLog out;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (format == LogFormat::csv) {
            parse_csv_line(line, line_number, topology, out);
        } else {
            parse_clf_line(line, line_number, topology, out);
        }
    }
    if (in.bad()) {
        throw std::runtime_error("I/O error while reading log stream");
    }
    return out;
}

ParsedLog parse_log_file(const std::filesystem::path& path, LogFormat format,
                         const WebTopology& topology) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open log file: " + path.string());
    }
    return parse_log(in, format, topology);
}

std::vector<UserRequestSequence> group_by_user(const std::vector<PageRequest>& requests) {
    std::vector<UserRequestSequence> result;
    std::unordered_map<std::string, std::size_t> bucket_of;
    for (const PageRequest& request : requests) {
        auto [it, inserted] = bucket_of.try_emplace(request.user, result.size());
        if (inserted) {
            result.push_back({request.user, {}});
        }
        result[it->second].requests.push_back(request);
    }
    for (UserRequestSequence& seq : result) {
        std::stable_sort(seq.requests.begin(), seq.requests.end(),
                         [](const PageRequest& a, const PageRequest& b) {
                             return a.time < b.time;
                         });
    }
    return result;
}

} // namespace csra
