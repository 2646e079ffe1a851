#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "csra/log_ingest.hpp"
#include "csra/rng.hpp"
#include "csra/topology.hpp"

using namespace csra;

namespace {

WebTopology two_page_topology() {
    std::istringstream in("/a /b\n");
    return load_topology(in);
}

} // namespace

TEST_CASE("csv row becomes one request") {
    const WebTopology t = two_page_topology();
    std::istringstream in("u1,/a,100\n");
    const ParsedLog log = parse_log(in, LogFormat::csv, t);
    REQUIRE(log.requests.size() == 1);
    CHECK(log.requests[0] == PageRequest{"u1", *t.find_page("/a"), 100});
    CHECK(log.skipped.empty());
}

TEST_CASE("unknown url is skipped with a diagnostic") {
    const WebTopology t = two_page_topology();
    std::istringstream in("u1,/nope,100\n");
    const ParsedLog log = parse_log(in, LogFormat::csv, t);
    CHECK(log.requests.empty());
    REQUIRE(log.skipped.size() == 1);
    CHECK(log.skipped[0].line == 1);
}

TEST_CASE("malformed csv rows are diagnosed but never fatal") {
    const WebTopology t = two_page_topology();
    std::istringstream in(
        "u1,/a\n"             // two fields
        "u1,/a,1,extra\n"     // four fields
        "u1,/a,notanumber\n"  // bad timestamp
        "u1,/a,-5\n"          // negative timestamp
        "u2,/b,7\n");         // fine
    const ParsedLog log = parse_log(in, LogFormat::csv, t);
    REQUIRE(log.requests.size() == 1);
    CHECK(log.requests[0].user == "u2");
    REQUIRE(log.skipped.size() == 4);
    CHECK(log.skipped[0].line == 1);
    CHECK(log.skipped[3].line == 4);
}

TEST_CASE("clf GET line parses host, url, and epoch time") {
    WebTopology t;
    t.add_page("/apache_pb.gif");
    std::istringstream in(
        "127.0.0.1 - frank [10/Oct/2000:13:55:36 -0700] \"GET /apache_pb.gif HTTP/1.0\" 200 2326\n");
    const ParsedLog log = parse_log(in, LogFormat::clf, t);
    REQUIRE(log.requests.size() == 1);
    CHECK(log.requests[0].user == "127.0.0.1");
    CHECK(log.requests[0].page == *t.find_page("/apache_pb.gif"));
    CHECK(log.requests[0].time == 971211336);
    CHECK(log.skipped.empty());
}

TEST_CASE("clf keeps only GET with 2xx or 3xx status") {
    WebTopology t;
    t.add_page("/a");
    std::istringstream in(
        "h - - [10/Oct/2000:13:55:36 -0700] \"POST /a HTTP/1.0\" 200 10\n"
        "h - - [10/Oct/2000:13:55:37 -0700] \"GET /a HTTP/1.0\" 404 10\n"
        "h - - [10/Oct/2000:13:55:38 -0700] \"GET /a HTTP/1.0\" 304 10\n"
        "h - - [10/Oct/2000:13:55:39 -0700] \"GET /a HTTP/1.0\" 201 10\n");
    const ParsedLog log = parse_log(in, LogFormat::clf, t);
    CHECK(log.requests.size() == 2);
    REQUIRE(log.skipped.size() == 2);
    CHECK(log.skipped[0].line == 1);
    CHECK(log.skipped[1].line == 2);
}

TEST_CASE("clf timestamps convert with their zone offsets") {
    Timestamp out = 0;
    REQUIRE(parse_clf_time("10/Oct/2000:13:55:36 -0700", out));
    CHECK(out == 971211336);
    REQUIRE(parse_clf_time("26/Aug/2026:00:00:00 +0000", out));
    CHECK(out == 1787702400);
    REQUIRE(parse_clf_time("02/Jan/1970:03:04:05 +0530", out));
    CHECK(out == 77645);
}

TEST_CASE("bad timestamp shapes are rejected") {
    Timestamp out = 0;
    CHECK_FALSE(parse_clf_time("", out));
    CHECK_FALSE(parse_clf_time("10/Oct/2000:13:55:36", out));          // no zone
    CHECK_FALSE(parse_clf_time("10/Foo/2000:13:55:36 -0700", out));    // bad month
    CHECK_FALSE(parse_clf_time("1/Oct/2000:13:55:36 -0700", out));     // short day
    CHECK_FALSE(parse_clf_time("10-Oct-2000:13:55:36 -0700", out));    // separators
    CHECK_FALSE(parse_clf_time("10/Oct/2000:25:55:36 -0700", out));    // hour range
}

TEST_CASE("grouping keeps first-appearance user order") {
    WebTopology t;
    const PageId a = t.add_page("A");
    const PageId b = t.add_page("B");
    const PageId c = t.add_page("C");
    const std::vector<PageRequest> requests = {
        {"u1", a, 1}, {"u2", b, 2}, {"u1", c, 3}};
    const auto groups = group_by_user(requests);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0].user == "u1");
    CHECK(groups[0].requests == std::vector<PageRequest>{{"u1", a, 1}, {"u1", c, 3}});
    CHECK(groups[1].user == "u2");
    CHECK(groups[1].requests == std::vector<PageRequest>{{"u2", b, 2}});
}

TEST_CASE("grouping an empty log yields no sequences") {
    CHECK(group_by_user({}).empty());
}

TEST_CASE("shuffled records regroup into time-sorted sequences") {
    WebTopology t;
    for (int p = 0; p < 20; ++p) {
        t.add_page("/p" + std::to_string(p));
    }
    SplitMix64 rng(99);
    std::vector<PageRequest> requests;
    for (int i = 0; i < 1000; ++i) {
        requests.push_back({"user" + std::to_string(rng.below(10)),
                            static_cast<PageId>(rng.below(20)),
                            static_cast<Timestamp>(rng.below(100000))});
    }

    // Sort-then-scan reference: stable-sort a copy of the whole log by
    // (user-first-appearance, time) and cut it into runs.
    std::vector<std::string> order;
    for (const PageRequest& r : requests) {
        if (std::find(order.begin(), order.end(), r.user) == order.end()) {
            order.push_back(r.user);
        }
    }
    std::vector<PageRequest> reference = requests;
    std::stable_sort(reference.begin(), reference.end(),
                     [&](const PageRequest& x, const PageRequest& y) {
                         const auto ix = std::find(order.begin(), order.end(), x.user);
                         const auto iy = std::find(order.begin(), order.end(), y.user);
                         if (ix != iy) {
                             return ix < iy;
                         }
                         return x.time < y.time;
                     });

    const auto groups = group_by_user(requests);
    REQUIRE(groups.size() == 10);
    std::vector<PageRequest> flattened;
    for (const auto& seq : groups) {
        for (std::size_t i = 1; i < seq.requests.size(); ++i) {
            CHECK(seq.requests[i - 1].time <= seq.requests[i].time);
        }
        flattened.insert(flattened.end(), seq.requests.begin(), seq.requests.end());
    }
    CHECK(flattened.size() == 1000);
    CHECK(flattened == reference);
}

TEST_CASE("blank lines and trailing CR are ignored in logs") {
    const WebTopology t = two_page_topology();
    std::istringstream in("\nu1,/a,1\r\n\n");
    const ParsedLog log = parse_log(in, LogFormat::csv, t);
    CHECK(log.requests.size() == 1);
    CHECK(log.skipped.empty());
}
