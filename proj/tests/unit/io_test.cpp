#include <gtest/gtest.h>

#include <filesystem>
#include <regex>

#include "fixfactor/errors.hpp"
#include "fixfactor/io.hpp"
#include "fixfactor/stability.hpp"
#include "oracles.hpp"

namespace fixfactor::io {
namespace {

constexpr const char* swap_text = R"({"points": ["a", "b", "c"], "map": {"a": "b", "b": "a", "c": "c"}})";

ErrorCode code_of(std::string_view text) {
  try {
    (void)parse_system(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::usage;
}

TEST(ParseSystem, DocumentedExample) {
  const auto sys = parse_system(R"({"points": ["a","b"], "specializes": [["a","b"]], "map": {"a":"a","b":"a"}})");
  EXPECT_EQ(sys.size(), 2u);
  EXPECT_TRUE(sys.space.specializes(0, 1));
  EXPECT_EQ(sys.map(1), 0u);
}

TEST(ParseSystem, Errors) {
  EXPECT_EQ(code_of(R"({"points": ["a"], "map": {"a": "a"}, "extra": 1})"), ErrorCode::format);
  EXPECT_EQ(code_of(R"({"points": ["a"]})"), ErrorCode::format);
  EXPECT_EQ(code_of(R"({"points": [1], "map": {}})"), ErrorCode::format);
  EXPECT_EQ(code_of(R"({"points": ["a"], "specializes": [["a"]], "map": {"a": "a"}})"), ErrorCode::format);
  EXPECT_EQ(code_of(R"({"points": ["a"], "map": {"a": "z"}})"), ErrorCode::name);
  EXPECT_EQ(code_of(R"({"points": ["a", "a"], "map": {"a": "a"}})"), ErrorCode::name);
  EXPECT_EQ(code_of(R"({"points": ["a", "b"], "specializes": [["a", "b"]], "map": {"a": "b", "b": "a"}})"),
            ErrorCode::continuity);
  EXPECT_EQ(code_of("[1, 2]"), ErrorCode::format);
}

TEST(ParseSystem, SyntaxErrorsCarryLineAndColumn) {
  try {
    (void)parse_system("{\n  \"points\": [\"a\",\n  ]\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::format);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    (void)parse_system(R"({"points": ["a", 5], "map": {}})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("points[1]"), std::string::npos) << e.what();
  }
}

TEST(SystemJson, RoundTripsEveryCensusSystem) {
  for (const auto& sys : oracle::all_systems(3)) {
    EXPECT_EQ(parse_system(dump_system(sys)), sys);
    EXPECT_EQ(system_hash(parse_system(dump_system(sys))), system_hash(sys));
  }
}

TEST(SystemJson, EmitsCoveringPairsOnly) {
  const auto sys = parse_system(
      R"({"points": ["a","b","c"], "specializes": [["a","b"],["b","c"],["a","c"]], "map": {"a":"a","b":"b","c":"c"}})");
  const auto doc = system_to_json(sys);
  EXPECT_EQ(doc["specializes"].size(), 2u);
}

TEST(SystemHash, SixteenHexDigits) {
  const auto h = system_hash(parse_system(swap_text));
  EXPECT_TRUE(std::regex_match(h, std::regex("[0-9a-f]{16}"))) << h;
  EXPECT_NE(h, system_hash(parse_system(R"({"points": ["a", "b", "c"], "map": {"a": "a", "b": "b", "c": "c"}})")));
}

TEST(PointList, ParsesAndRejects) {
  const auto sys = parse_system(swap_text);
  EXPECT_EQ(parse_point_list(sys.space, "a,c").count(), 2u);
  EXPECT_TRUE(parse_point_list(sys.space, "").empty());
  try {
    (void)parse_point_list(sys.space, "a,q");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::name);
  }
}

TEST(Reports, DecompositionOfSwap) {
  const auto report = decomposition_report(parse_system(swap_text));
  EXPECT_EQ(report["dim_fix"], 2);
  EXPECT_EQ(report["ergodic"], false);
  EXPECT_EQ(report["stabilization_degree"], "0");
  EXPECT_EQ(report["classes"], json::parse(R"([["a","b"],["c"]])"));
}

TEST(Reports, StabilityOfFixedPoint) {
  const auto sys = parse_system(swap_text);
  const auto r = stability_report_to_json(sys.space, stability_report(sys, parse_point_list(sys.space, "c")));
  EXPECT_EQ(r["absolutely_stable"], true);
  EXPECT_EQ(r["set"], json::parse(R"(["c"])"));
}

TEST(Reports, QuotientRoundTrips) {
  const auto sys = parse_system(swap_text);
  const auto q = quotient(sys, stabilize(sys).stationary());
  const auto doc = quotient_to_json(sys, q);
  EXPECT_EQ(doc["discrete"], true);
  EXPECT_EQ(system_from_json(doc["quotient"]), q.quotient);
}

TEST(Dot, NodesAndEdges) {
  const auto sys = parse_system(
      R"({"points": ["a","b","c"], "specializes": [["a","b"],["b","c"]], "map": {"a":"a","b":"a","c":"a"}})");
  const auto dot = export_dot(sys, stabilize(sys).stationary());
  EXPECT_NE(dot.find("label=\"a|0\""), std::string::npos);
  EXPECT_NE(dot.find("\"c\" -> \"a\";"), std::string::npos);
  EXPECT_NE(dot.find("\"a\" -> \"b\" [style=dashed];"), std::string::npos);
  EXPECT_EQ(dot.find("\"a\" -> \"c\" [style=dashed];"), std::string::npos);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
}

TEST(Files, MissingFileIsIoError) {
  try {
    (void)read_system_file("/nonexistent/system.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::io);
  }
}

TEST(Files, FormatErrorsNameTheFile) {
  const auto path = std::filesystem::temp_directory_path() / "fixfactor_io_test_bad.json";
  write_text_file(path, "{");
  try {
    (void)read_system_file(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::format);
    EXPECT_NE(std::string(e.what()).find(path.string()), std::string::npos);
  }
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace fixfactor::io
