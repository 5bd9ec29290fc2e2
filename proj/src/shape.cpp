#include "cst/shape.hpp"

#include <cctype>
#include <stdexcept>

namespace cst {

struct Shape::Rep {
  Kind kind;
  std::string symbol;
  std::vector<Shape> children;
};

Shape::Shape() {
  static const auto rep = std::make_shared<const Rep>(Rep{Kind::Void, {}, {}});
  rep_ = rep;
}
Shape::Shape(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

Shape Shape::ptr() {
  static const auto rep = std::make_shared<const Rep>(Rep{Kind::Ptr, {}, {}});
  return Shape(rep);
}

Shape Shape::sym(std::string symbol, std::vector<Shape> children) {
  return Shape(std::make_shared<const Rep>(Rep{Kind::Sym, std::move(symbol), std::move(children)}));
}

Shape::Kind Shape::kind() const { return rep_->kind; }
const std::string& Shape::symbol() const { return rep_->symbol; }
const std::vector<Shape>& Shape::children() const { return rep_->children; }

std::optional<Shape> Shape::at(const Position& p) const {
  const Shape* cur = this;
  for (int step : p.steps()) {
    if (!cur->is_sym() || step > static_cast<int>(cur->children().size())) return std::nullopt;
    cur = &cur->children()[static_cast<std::size_t>(step - 1)];
  }
  return *cur;
}

bool operator==(const Shape& a, const Shape& b) {
  if (a.rep_ == b.rep_) return true;
  return a.rep_->kind == b.rep_->kind && a.rep_->symbol == b.rep_->symbol &&
         a.rep_->children == b.rep_->children;
}

namespace {

void collect_positions(const Shape& shape, bool indirect, std::vector<int>& prefix,
                       std::set<Position>& out) {
  switch (shape.kind()) {
    case Shape::Kind::Void:
      return;
    case Shape::Kind::Ptr:
      if (indirect) out.insert(Position(prefix));
      return;
    case Shape::Kind::Sym:
      out.insert(Position(prefix));
      for (std::size_t i = 0; i < shape.children().size(); ++i) {
        prefix.push_back(static_cast<int>(i + 1));
        collect_positions(shape.children()[i], indirect, prefix, out);
        prefix.pop_back();
      }
      return;
  }
}

}  // namespace

std::set<Position> positions(const Shape& shape, bool indirect) {
  std::set<Position> out;
  std::vector<int> prefix;
  collect_positions(shape, indirect, prefix, out);
  return out;
}

bool is_referable(const Shape& shape, const Position& p, bool indirect) {
  auto target = shape.at(p);
  if (!target) return false;
  return target->is_sym() || (indirect && target->is_ptr());
}

Shape mask_context_entry(std::string_view symbol, const std::vector<Shape>& child_shapes,
                         int child_index, Direction direction) {
  const int n = static_cast<int>(child_shapes.size());
  if (child_index < 1 || child_index > n)
    throw std::out_of_range("child index " + std::to_string(child_index) + " not in 1.." +
                            std::to_string(n));
  std::vector<Shape> masked;
  masked.reserve(child_shapes.size());
  for (int j = 1; j <= n; ++j) {
    bool hide = false;
    switch (direction) {
      case Direction::RightToLeft: hide = j >= child_index; break;
      case Direction::LeftToRight: hide = j <= child_index; break;
      case Direction::Symmetric: hide = j == child_index; break;
      case Direction::Unrestricted: hide = false; break;
    }
    masked.push_back(hide ? Shape() : child_shapes[static_cast<std::size_t>(j - 1)]);
  }
  return Shape::sym(std::string(symbol), std::move(masked));
}

namespace {

void print(const Shape& shape, std::string& out) {
  switch (shape.kind()) {
    case Shape::Kind::Void: out += 'E'; return;
    case Shape::Kind::Ptr: out += 'P'; return;
    case Shape::Kind::Sym:
      out += shape.symbol();
      if (shape.children().empty()) return;
      out += '(';
      for (std::size_t i = 0; i < shape.children().size(); ++i) {
        if (i) out += ',';
        print(shape.children()[i], out);
      }
      out += ')';
      return;
  }
}

class ShapeParser {
 public:
  explicit ShapeParser(std::string_view text) : text_(text) {}

  Shape parse_all() {
    Shape s = parse();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("shape column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    auto ident_char = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    };
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a shape");
    return std::string(text_.substr(start, pos_ - start));
  }

  Shape parse() {
    std::string name = identifier();
    bool has_args = eat('(');
    if (name == "E" || name == "P") {
      if (has_args) fail("'" + name + "' takes no arguments");
      return name == "E" ? Shape() : Shape::ptr();
    }
    std::vector<Shape> children;
    if (has_args) {
      do children.push_back(parse());
      while (eat(','));
      if (!eat(')')) fail("expected ')'");
    }
    return Shape::sym(std::move(name), std::move(children));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Shape& shape) {
  std::string out;
  print(shape, out);
  return out;
}

Shape parse_shape(std::string_view text) { return ShapeParser(text).parse_all(); }

struct Context::Cell {
  Shape entry;
  std::shared_ptr<const Cell> rest;
};

Context::Context(const std::vector<Shape>& entries) {
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) *this = extend(*it);
}

const Shape& Context::at(std::size_t index) const {
  if (index < 1 || index > size_)
    throw std::out_of_range("context index " + std::to_string(index) + " not in 1.." +
                            std::to_string(size_));
  const Cell* cell = head_.get();
  for (std::size_t i = 1; i < index; ++i) cell = cell->rest.get();
  return cell->entry;
}

Context Context::extend(Shape entry) const {
  Context c;
  c.head_ = std::make_shared<const Cell>(Cell{std::move(entry), head_});
  c.size_ = size_ + 1;
  return c;
}

std::vector<Shape> Context::entries() const {
  std::vector<Shape> out;
  out.reserve(size_);
  for (const Cell* cell = head_.get(); cell; cell = cell->rest.get()) out.push_back(cell->entry);
  return out;
}

bool operator==(const Context& a, const Context& b) {
  if (a.size_ != b.size_) return false;
  const Context::Cell* x = a.head_.get();
  const Context::Cell* y = b.head_.get();
  for (; x && y; x = x->rest.get(), y = y->rest.get()) {
    if (x == y) return true;
    if (!(x->entry == y->entry)) return false;
  }
  return true;
}

}  // namespace cst
