#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "portload/ingest.hpp"
#include "portload/numeric.hpp"

using namespace portload;
using namespace std::chrono;

namespace {

ParseResult parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_port_calls(in);
}

std::string serialize(const std::vector<PortCall>& calls) {
  std::ostringstream out;
  serialize_port_calls(calls, out);
  return out.str();
}

PortCall make_call(std::string id, std::string cls, double length,
                   const char* when) {
  return {std::move(id), std::move(cls), length, *parse_timestamp(when)};
}

const std::string header_line{port_call_csv_header};

}  // namespace

TEST_CASE("parse_port_calls reads well-formed rows") {
  const auto result =
      parse_text(header_line + "\nV1,Yacht,12.5,2019-06-01T14:32:00Z\n");
  REQUIRE(result.calls.size() == 1);
  CHECK(result.errors.empty());
  const auto& call = result.calls.front();
  CHECK(call.vessel_id == "V1");
  CHECK(call.vessel_class == "Yacht");
  CHECK(call.length_m == 12.5);
  CHECK(format_timestamp(call.arrival_utc) == "2019-06-01T14:32:00Z");
}

TEST_CASE("empty body after a valid header is fine") {
  const auto result = parse_text(header_line + "\n");
  CHECK(result.calls.empty());
  CHECK(result.errors.empty());
}

TEST_CASE("CRLF and a UTF-8 BOM are tolerated") {
  const auto result = parse_text("\xEF\xBB\xBF" + header_line +
                                 "\r\nV1,Yacht,12.5,2019-06-01T14:32:00Z\r\n");
  CHECK(result.calls.size() == 1);
  CHECK(result.errors.empty());
}

TEST_CASE("missing or wrong header throws") {
  CHECK_THROWS_AS(parse_text(""), MissingHeaderError);
  CHECK_THROWS_AS(parse_text("id,type,len,when\nV1,Yacht,1,x\n"),
                  MissingHeaderError);
  // reordered columns are not silently accepted
  CHECK_THROWS_AS(parse_text("vessel_type,vessel_id,length_m,arrival_utc\n"),
                  MissingHeaderError);
}

TEST_CASE("malformed rows become RowErrors with their line numbers") {
  const auto result = parse_text(
      header_line + "\n" +
      "V2,Trawler,abc,2019-06-01T14:32:00Z\n" +       // line 2
      "V3,Trawler,12.0\n" +                           // line 3
      "V4,Trawler,12.0,2019-06-01T14:32:00Z,extra\n" + // line 4
      "V5,Trawler,12.0,2019-13-01T14:32:00Z\n" +      // line 5
      "V6,Trawler,-3,2019-06-01T14:32:00Z\n" +        // line 6
      ",Trawler,12.0,2019-06-01T14:32:00Z\n" +        // line 7
      "V8,Trawler,12.0,2019-06-01T14:32:00Z\n");      // good
  REQUIRE(result.errors.size() == 6);
  CHECK(result.calls.size() == 1);
  CHECK(result.errors[0].line == 2);
  CHECK(result.errors[0].kind == RowErrorKind::bad_length);
  CHECK(result.errors[1].line == 3);
  CHECK(result.errors[1].kind == RowErrorKind::column_count);
  CHECK(result.errors[2].line == 4);
  CHECK(result.errors[2].kind == RowErrorKind::column_count);
  CHECK(result.errors[3].line == 5);
  CHECK(result.errors[3].kind == RowErrorKind::bad_timestamp);
  CHECK(result.errors[4].line == 6);
  CHECK(result.errors[4].kind == RowErrorKind::bad_length);
  CHECK(result.errors[5].line == 7);
  CHECK(result.errors[5].kind == RowErrorKind::empty_field);
}

TEST_CASE("parse then serialize is a fixed point") {
  std::mt19937_64 rng(5);
  std::vector<PortCall> calls;
  const char* classes[] = {"Yacht", "Sailing ship", "Pusher/Tug"};
  for (int i = 0; i < 200; ++i) {
    const auto day = sys_days{year{2019} / 1 / 1} + days{rng() % 365};
    const auto when =
        day + hours{rng() % 24} + minutes{rng() % 60} + seconds{rng() % 60};
    calls.push_back(PortCall{"V" + std::to_string(i), classes[rng() % 3],
                             (1 + rng() % 5000) / 10.0, when});
  }
  const auto text = serialize(calls);
  const auto parsed = parse_text(text);
  REQUIRE(parsed.errors.empty());
  REQUIRE(parsed.calls.size() == calls.size());
  for (std::size_t i = 0; i < calls.size(); ++i) {
    CHECK(parsed.calls[i].vessel_id == calls[i].vessel_id);
    CHECK(parsed.calls[i].vessel_class == calls[i].vessel_class);
    CHECK(parsed.calls[i].length_m == calls[i].length_m);
    CHECK(parsed.calls[i].arrival_utc == calls[i].arrival_utc);
  }
  CHECK(serialize(parsed.calls) == text);
}

TEST_CASE("filter_calls applies window, length, then frequency") {
  std::vector<PortCall> calls;
  // 6 yachts in window, 1 outside; 2 trawlers in window; 1 oversize yacht
  for (int i = 0; i < 6; ++i) {
    calls.push_back(make_call("Y" + std::to_string(i), "Yacht", 10.0,
                              "2019-05-01T10:00:00Z"));
  }
  calls.push_back(make_call("Y6", "Yacht", 10.0, "2018-12-31T23:59:59Z"));
  calls.push_back(make_call("T0", "Trawler", 12.0, "2019-05-01T10:00:00Z"));
  calls.push_back(make_call("T1", "Trawler", 12.0, "2019-06-01T10:00:00Z"));
  calls.push_back(make_call("Y7", "Yacht", 30.0, "2019-05-01T10:00:00Z"));

  FilterConfig cfg;
  cfg.min_type_frequency = 3;

  const auto result = filter_calls(calls, cfg);
  CHECK(result.calls.size() == 6);
  for (const auto& call : result.calls) CHECK(call.vessel_class == "Yacht");
  REQUIRE(result.table.size() == 1);
  CHECK(result.table[0].vessel_class == "Yacht");
  CHECK(result.table[0].count == 6);
}

TEST_CASE("length cutoff is strict") {
  const std::vector<PortCall> calls = {
      make_call("A", "Yacht", 25.0, "2019-05-01T10:00:00Z"),
      make_call("B", "Yacht", 24.9, "2019-05-01T10:00:00Z"),
  };
  FilterConfig cfg;
  cfg.min_type_frequency = 0;
  const auto result = filter_calls(calls, cfg);
  REQUIRE(result.calls.size() == 1);
  CHECK(result.calls[0].vessel_id == "B");
}

TEST_CASE("window bounds are inclusive") {
  const std::vector<PortCall> calls = {
      make_call("A", "Yacht", 10.0, "2019-01-01T00:00:00Z"),
      make_call("B", "Yacht", 10.0, "2019-12-31T23:59:59Z"),
      make_call("C", "Yacht", 10.0, "2018-12-31T23:59:59Z"),
      make_call("D", "Yacht", 10.0, "2020-01-01T00:00:00Z"),
  };
  FilterConfig cfg;
  cfg.min_type_frequency = 0;
  const auto result = filter_calls(calls, cfg);
  REQUIRE(result.calls.size() == 2);
  CHECK(result.calls[0].vessel_id == "A");
  CHECK(result.calls[1].vessel_id == "B");
}

TEST_CASE("no-op config keeps everything and tabulates raw counts") {
  std::vector<PortCall> calls;
  for (int i = 0; i < 4; ++i) {
    calls.push_back(make_call("S" + std::to_string(i), "Skiff", 500.0,
                              "2019-07-01T01:00:00Z"));
  }
  calls.push_back(make_call("K", "Kayak", 2.0, "2019-07-02T01:00:00Z"));

  FilterConfig cfg;
  cfg.max_length_m = 1e9;
  cfg.min_type_frequency = 0;
  const auto result = filter_calls(calls, cfg);
  CHECK(result.calls.size() == calls.size());
  REQUIRE(result.table.size() == 2);
  CHECK(result.table[0].vessel_class == "Skiff");
  CHECK(result.table[0].count == 4);
  CHECK(result.table[1].vessel_class == "Kayak");
  CHECK(result.table[1].count == 1);
}

TEST_CASE("table breaks count ties by label") {
  const std::vector<PortCall> calls = {
      make_call("A", "Zodiac", 5.0, "2019-05-01T10:00:00Z"),
      make_call("B", "Barge", 5.0, "2019-05-01T11:00:00Z"),
  };
  FilterConfig cfg;
  cfg.min_type_frequency = 0;
  const auto result = filter_calls(calls, cfg);
  REQUIRE(result.table.size() == 2);
  CHECK(result.table[0].vessel_class == "Barge");
  CHECK(result.table[1].vessel_class == "Zodiac");
}

TEST_CASE("filtering is idempotent and monotone") {
  std::mt19937_64 rng(17);
  std::vector<PortCall> calls;
  const char* classes[] = {"Yacht", "Trawler", "Skiff", "Barge"};
  for (int i = 0; i < 400; ++i) {
    const auto day = sys_days{year{2018} / 7 / 1} + days{rng() % 730};
    calls.push_back(PortCall{"V" + std::to_string(i), classes[rng() % 4],
                             (rng() % 400) / 10.0 + 0.1,
                             sys_days{day} + hours{rng() % 24}});
  }
  FilterConfig cfg;
  cfg.min_type_frequency = 40;

  const auto once = filter_calls(calls, cfg);
  const auto twice = filter_calls(once.calls, cfg);
  CHECK(once.calls.size() == twice.calls.size());
  CHECK(serialize(once.calls) == serialize(twice.calls));
  REQUIRE(once.table.size() == twice.table.size());
  for (std::size_t i = 0; i < once.table.size(); ++i) {
    CHECK(once.table[i].vessel_class == twice.table[i].vessel_class);
    CHECK(once.table[i].count == twice.table[i].count);
  }

  // survivors are a subset in original order, and they satisfy the bounds
  std::size_t cursor = 0;
  std::size_t table_total = 0;
  for (const auto& row : once.table) {
    CHECK(row.count >= cfg.min_type_frequency);
    table_total += row.count;
  }
  CHECK(table_total == once.calls.size());
  for (const auto& call : once.calls) {
    while (cursor < calls.size() && calls[cursor].vessel_id != call.vessel_id) {
      ++cursor;
    }
    REQUIRE(cursor < calls.size());
    CHECK(call.length_m < cfg.max_length_m);
    const auto date = floor<days>(call.arrival_utc);
    CHECK(date >= sys_days{cfg.window.first});
    CHECK(date <= sys_days{cfg.window.last});
  }
}

TEST_CASE("filter_calls rejects invalid configs") {
  FilterConfig cfg;
  cfg.window = {year{2019} / 12 / 31, year{2019} / 1 / 1};
  CHECK_THROWS_AS(filter_calls({}, cfg), std::invalid_argument);
}
