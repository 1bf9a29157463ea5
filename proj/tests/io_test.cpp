#include <sstream>

#include <gtest/gtest.h>

#include "heyting/constructors.hpp"
#include "heyting/io.hpp"
#include "heyting/isomorphism.hpp"

namespace heyting {
namespace {

TEST(Io, AlgebraRoundTrip) {
  for (const auto& e : default_enumeration()) {
    auto back = algebra_from_json(Json::parse(algebra_json(e.algebra).dump()));
    EXPECT_EQ(canonical_code(back), e.code);
  }
}

TEST(Io, NestedAndBooleanMatrices) {
  auto nested = Json::parse(R"({"size": 3, "leq": [[true,true,true],[false,true,true],[false,false,true]]})");
  EXPECT_TRUE(is_isomorphic(algebra_from_json(nested), chain(3)).has_value());
  // Labels need not be a linear extension on input.
  auto shuffled = Json::parse(R"({"size": 3, "leq": [1,0,0, 1,1,1, 1,0,1]})");
  EXPECT_TRUE(is_isomorphic(algebra_from_json(shuffled), chain(3)).has_value());
}

TEST(Io, RejectsBadInput) {
  EXPECT_THROW(algebra_from_json(Json::parse(R"({"size": 2})")), Error);
  EXPECT_THROW(algebra_from_json(Json::parse(R"({"size": 2, "leq": [1,1,0]})")), Error);
  EXPECT_THROW(algebra_from_json(Json::parse(R"({"size": 2, "leq": [1,2,0,1]})")), Error);
  // Not a lattice: two incomparable maxima.
  EXPECT_THROW(algebra_from_json(Json::parse(R"({"size": 3, "leq": [1,1,1, 0,1,0, 0,0,1]})")), Error);
}

TEST(Io, RationalAndTopology) {
  Rational r(-7, 12);
  EXPECT_EQ(rational_json(r).dump(), R"({"num":"-7","den":"12"})");
  EXPECT_EQ(rational_from_json(rational_json(r)), r);
  auto t = topology_from_json(Json::parse(R"({"points": 2, "opens": [3, 0, 1]})"));
  EXPECT_EQ(t.opens, (std::vector<std::uint32_t>{0, 1, 3}));
  EXPECT_EQ(topology_json(t).dump(), R"({"points":2,"opens":[0,1,3]})");
  EXPECT_THROW(topology_from_json(Json::parse(R"({"points": 2, "opens": [0, 1]})")), Error);
}

TEST(Io, EnumerationStream) {
  std::ostringstream out;
  write_enumeration_jsonl(out, enumerate_heyting({5, 4}));
  std::istringstream in(out.str());
  std::string line, last;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    last = line;
  }
  EXPECT_EQ(lines, 8u);  // 1 + 1 + 2 + 3 algebras, then the summary
  EXPECT_EQ(Json::parse(last)["summary"]["by_size"]["5"], 3);
}

}  // namespace
}  // namespace heyting
