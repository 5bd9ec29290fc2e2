#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cst {

/// A path from a node down into a tree: a sequence of 1-based child indices.
/// The empty position is the root (printed as "ε").
///
/// Positions order lexicographically, which is exactly depth-first preorder:
/// ε < 1 < 1.1 < 1.2 < 2.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<int> steps);
  explicit Position(std::vector<int> steps);

  bool is_root() const { return steps_.empty(); }
  std::size_t depth() const { return steps_.size(); }
  std::span<const int> steps() const { return steps_; }
  int operator[](std::size_t i) const { return steps_[i]; }

  /// p.i
  Position child(int index) const;
  /// p.q
  Position concat(const Position& suffix) const;
  /// Drops the last `count` steps. Requires count <= depth().
  Position ancestor(std::size_t count) const;
  /// i.p
  Position prefixed(int index) const;
  /// Steps from `from` onwards.
  Position suffix(std::size_t from) const;

  bool starts_with(const Position& prefix) const;
  std::size_t common_prefix_length(const Position& other) const;

  /// Dot-separated steps; the root prints as "ε".
  std::string to_string() const;
  /// Underscore-separated steps; the root prints as "e".
  std::string to_identifier() const;

  friend auto operator<=>(const Position&, const Position&) = default;
  friend bool operator==(const Position&, const Position&) = default;

 private:
  std::vector<int> steps_;
};

/// Parses "ε", "e" (root) or "1.2.1". Returns nullopt on malformed input or
/// non-positive steps.
std::optional<Position> parse_position(std::string_view text);

}  // namespace cst
