#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cst/position.hpp"

namespace cst {

enum class Direction { RightToLeft, LeftToRight, Symmetric, Unrestricted };

/// The type of a cyclic sharing term: the void shape, the pointer shape, or a
/// shape symbol applied to child shapes. Immutable; copies share structure.
class Shape {
 public:
  enum class Kind { Void, Ptr, Sym };

  /// Void.
  Shape();
  static Shape void_shape() { return Shape(); }
  static Shape ptr();
  static Shape sym(std::string symbol, std::vector<Shape> children = {});

  Kind kind() const;
  bool is_void() const { return kind() == Kind::Void; }
  bool is_ptr() const { return kind() == Kind::Ptr; }
  bool is_sym() const { return kind() == Kind::Sym; }

  /// Shape symbol name; empty unless is_sym().
  const std::string& symbol() const;
  const std::vector<Shape>& children() const;

  /// Sub-shape at `p`, or nullopt when the path leaves the shape.
  std::optional<Shape> at(const Position& p) const;

  friend bool operator==(const Shape& a, const Shape& b);

 private:
  struct Rep;
  explicit Shape(std::shared_ptr<const Rep> rep);
  std::shared_ptr<const Rep> rep_;
};

/// Pos(shape): the referable positions. Void is never referable; a pointer
/// shape is referable only when `indirect` is set.
std::set<Position> positions(const Shape& shape, bool indirect);

/// Membership test for positions(shape, indirect) without building the set.
bool is_referable(const Shape& shape, const Position& p, bool indirect);

/// The context entry used to type child `child_index` (1-based) of a node with
/// shape symbol `symbol` whose children have shapes `child_shapes`.
///
///   RightToLeft   masks children child_index..n
///   LeftToRight   masks children 1..child_index
///   Symmetric     masks child child_index only
///   Unrestricted  masks nothing
///
/// Throws std::out_of_range when child_index is not in 1..n.
Shape mask_context_entry(std::string_view symbol, const std::vector<Shape>& child_shapes,
                         int child_index, Direction direction);

/// Textual form: `E` (void), `P` (pointer), `name` or `name(s1,...,sn)`.
std::string to_string(const Shape& shape);

/// Inverse of to_string. Whitespace between tokens is ignored. Throws
/// std::invalid_argument with a column on malformed input.
Shape parse_shape(std::string_view text);

/// A typing context: a sequence of shapes where index 1 is the innermost
/// (nearest enclosing) node. Persistent: extend() shares the tail.
class Context {
 public:
  Context() = default;
  /// `entries` are given leftmost-first, i.e. entries[0] is index 1.
  explicit Context(const std::vector<Shape>& entries);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Entry at de Bruijn index i (1-based). Throws std::out_of_range.
  const Shape& at(std::size_t index) const;

  /// `entry, this`
  Context extend(Shape entry) const;

  /// Leftmost-first copy of the entries.
  std::vector<Shape> entries() const;

  friend bool operator==(const Context& a, const Context& b);

 private:
  struct Cell;
  std::shared_ptr<const Cell> head_;
  std::size_t size_ = 0;
};

}  // namespace cst
