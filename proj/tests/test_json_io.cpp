#include <gtest/gtest.h>

#include "test_support.hpp"
#include "thetamirror/json_io.hpp"

using namespace thetamirror;
using testing_support::fixture;
using testing_support::load_pair;

namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST(JsonIo, Rationals) {
  EXPECT_EQ(io::rational_to_json(Rational(3)), io::json(3));
  EXPECT_EQ(io::rational_to_json(Rational(-1, 2)), io::json("-1/2"));
  EXPECT_EQ(io::rational_from_json(io::json("6/4")), Rational(3, 2));
  EXPECT_EQ(io::rational_from_json(io::json(-7)), Rational(-7));
}

TEST(JsonIo, Headers) {
  EXPECT_EQ(code_of([] { io::parse_json("{not json"); }), "malformed-json");
  auto j = io::header("walls");
  EXPECT_EQ(code_of([&] { io::check_header(j, "walls"); }), "");
  EXPECT_EQ(code_of([&] { io::check_header(j, "pair"); }), "malformed-json");
  j["schema_version"] = 2;
  EXPECT_EQ(code_of([&] { io::check_header(j, "walls"); }), "schema-version");
}

TEST(JsonIo, ClassesByName) {
  const std::vector<std::string> names{"C1", "C2", "C3"};
  auto j = io::class_to_json(ClassVector{1, 0, -2}, names);
  EXPECT_EQ(j, io::json::parse(R"({"C1": 1, "C3": -2})"));
  EXPECT_EQ(io::class_from_json(j, names), (ClassVector{1, 0, -2}));
  EXPECT_EQ(io::class_from_json(io::json::parse("[0, 1, 0]"), names), (ClassVector{0, 1, 0}));
  EXPECT_THROW(io::class_from_json(io::json::parse(R"({"C7": 1})"), names), Error);
}

TEST(JsonIo, FixturesRoundTrip) {
  for (const char* name : {"blowup.json", "p2_toric.json", "p1xp1.json", "i3_degeneration.json"}) {
    auto pair = load_pair(name);
    auto again = io::pair_from_json(io::to_json(pair));
    EXPECT_EQ(io::to_json(again), io::to_json(pair)) << name;
  }
  auto pair = load_pair("blowup.json");
  auto table = testing_support::load_table("blowup_N_full.json", pair);
  auto again = io::table_from_json(io::table_to_json(table, pair), pair);
  EXPECT_EQ(again.entries(), table.entries());
  for (const char* name : {"blowup_walls.json", "blowup_walls_two.json"}) {
    auto s = testing_support::load_walls(name, &pair);
    auto back = io::walls_from_json(io::walls_to_json(s), &pair);
    EXPECT_EQ(io::walls_to_json(back), io::walls_to_json(s)) << name;
  }
  auto gps = testing_support::load_walls("gps2.json");
  EXPECT_EQ(io::walls_to_json(io::walls_from_json(io::walls_to_json(gps))), io::walls_to_json(gps));
  for (const char* name : {"p2_line_generic.json", "p2_line_degenerate.json", "p2xa1_line.json"}) {
    auto t = io::trop_type_from_json(io::read_json(fixture(name)));
    auto back = io::trop_type_from_json(io::trop_type_to_json(t));
    EXPECT_EQ(io::trop_type_to_json(back), io::trop_type_to_json(t)) << name;
  }
}

TEST(JsonIo, TableRejectsBadEntries) {
  auto pair = load_pair("blowup.json");
  auto j = io::read_json(fixture("blowup_N.json"));
  j["entries"][0]["p"] = io::json::parse("[1, 0, 0]");
  EXPECT_THROW(io::table_from_json(j, pair), Error);
}

TEST(JsonIo, MissingFile) {
  EXPECT_THROW(io::read_json(fixture("does_not_exist.json")), Error);
}
