#include <doctest.h>

#include <stdexcept>

#include "cst/position.hpp"

using cst::Position;
using cst::parse_position;

TEST_CASE("root position prints as epsilon") {
  Position root;
  CHECK(root.is_root());
  CHECK(root.depth() == 0);
  CHECK(root.to_string() == "ε");
  CHECK(root.to_identifier() == "e");
}

TEST_CASE("steps must be positive") {
  CHECK_THROWS_AS(Position({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Position(std::vector<int>{-2}), std::invalid_argument);
}

TEST_CASE("navigation") {
  Position p{1, 2, 1};
  CHECK(p.to_string() == "1.2.1");
  CHECK(p.to_identifier() == "1_2_1");
  CHECK(p.child(3) == Position{1, 2, 1, 3});
  CHECK(p.ancestor(0) == p);
  CHECK(p.ancestor(2) == Position{1});
  CHECK(p.ancestor(3).is_root());
  CHECK(p.prefixed(2) == Position{2, 1, 2, 1});
  CHECK(p.suffix(1) == Position{2, 1});
  CHECK(p.suffix(3).is_root());
  CHECK(Position{1}.concat(Position{1, 2}) == Position{1, 1, 2});
  CHECK(p.starts_with(Position{1, 2}));
  CHECK_FALSE(p.starts_with(Position{2}));
  CHECK(p.starts_with(Position{}));
  CHECK(p.common_prefix_length(Position{1, 2, 2}) == 2);
  CHECK(p.common_prefix_length(Position{2}) == 0);
}

TEST_CASE("lexicographic order is depth-first preorder") {
  CHECK(Position{} < Position{1});
  CHECK(Position{1} < Position{1, 1});
  CHECK(Position{1, 1} < Position{1, 2});
  CHECK(Position{1, 2, 5} < Position{2});
}

TEST_CASE("parse_position") {
  CHECK(parse_position("ε") == Position{});
  CHECK(parse_position("e") == Position{});
  CHECK(parse_position("2.1") == Position{2, 1});
  CHECK(parse_position("3") == Position{3});
  CHECK_FALSE(parse_position("1..2").has_value());
  CHECK_FALSE(parse_position("0").has_value());
  CHECK_FALSE(parse_position("").has_value());
  CHECK_FALSE(parse_position("1.x").has_value());
}

TEST_CASE("to_string and parse_position round-trip") {
  for (Position p : {Position{}, Position{1}, Position{2, 1, 3}, Position{10, 1}})
    CHECK(parse_position(p.to_string()) == p);
}
