#include "cst/position.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cst {

Position::Position(std::initializer_list<int> steps) : steps_(steps) {
  for (int s : steps_)
    if (s < 1) throw std::invalid_argument("position steps must be >= 1");
}

Position::Position(std::vector<int> steps) : steps_(std::move(steps)) {
  for (int s : steps_)
    if (s < 1) throw std::invalid_argument("position steps must be >= 1");
}

Position Position::child(int index) const {
  Position p = *this;
  p.steps_.push_back(index);
  return p;
}

Position Position::concat(const Position& suffix) const {
  Position p = *this;
  p.steps_.insert(p.steps_.end(), suffix.steps_.begin(), suffix.steps_.end());
  return p;
}

Position Position::ancestor(std::size_t count) const {
  if (count > steps_.size()) throw std::out_of_range("ancestor above the root");
  Position p;
  p.steps_.assign(steps_.begin(), steps_.end() - static_cast<std::ptrdiff_t>(count));
  return p;
}

Position Position::prefixed(int index) const {
  Position p;
  p.steps_.reserve(steps_.size() + 1);
  p.steps_.push_back(index);
  p.steps_.insert(p.steps_.end(), steps_.begin(), steps_.end());
  return p;
}

Position Position::suffix(std::size_t from) const {
  Position p;
  if (from < steps_.size())
    p.steps_.assign(steps_.begin() + static_cast<std::ptrdiff_t>(from), steps_.end());
  return p;
}

bool Position::starts_with(const Position& prefix) const {
  return prefix.steps_.size() <= steps_.size() &&
         std::equal(prefix.steps_.begin(), prefix.steps_.end(), steps_.begin());
}

std::size_t Position::common_prefix_length(const Position& other) const {
  auto [a, b] = std::mismatch(steps_.begin(), steps_.end(), other.steps_.begin(),
                              other.steps_.end());
  return static_cast<std::size_t>(a - steps_.begin());
}

std::string Position::to_string() const {
  if (steps_.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(steps_[i]);
  }
  return out;
}

std::string Position::to_identifier() const {
  if (steps_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out += '_';
    out += std::to_string(steps_[i]);
  }
  return out;
}

std::optional<Position> parse_position(std::string_view text) {
  if (text == "ε" || text == "e") return Position{};
  if (text.empty()) return std::nullopt;
  std::vector<int> steps;
  const char* p = text.data();
  const char* end = p + text.size();
  while (true) {
    int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || next == p || value < 1) return std::nullopt;
    steps.push_back(value);
    p = next;
    if (p == end) break;
    if (*p != '.') return std::nullopt;
    ++p;
  }
  return Position(std::move(steps));
}

}  // namespace cst
