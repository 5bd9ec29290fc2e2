#include "cst/unfold.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "cst/check.hpp"

namespace cst {

namespace {

struct Expander {
  const Term& root;
  std::map<Position, Position> target_of;

  // The function node a position stands for, following pointer chains.
  std::optional<Position> land(Position p) const {
    std::set<Position> seen;
    while (root.at(p)->is_ptr()) {
      if (!seen.insert(p).second) return std::nullopt;
      p = target_of.at(p);
    }
    return p;
  }

  Unfolded expand(const Position& at, int budget) const {
    if (budget <= 0) return Unfolded::cut();
    auto node_pos = land(at);
    if (!node_pos) return Unfolded::cut();
    const auto& f = root.at(*node_pos)->fun();
    Unfolded u{false, f.symbol, f.payload, {}};
    u.children.reserve(f.children.size());
    for (std::size_t i = 0; i < f.children.size(); ++i)
      u.children.push_back(expand(node_pos->child(static_cast<int>(i + 1)), budget - 1));
    return u;
  }
};

}  // namespace

Unfolded unfold(const Term& term, int max_depth, const Signature& sig) {
  auto resolved = resolve_pointers(term, sig);
  if (!resolved) throw std::invalid_argument("unfold: " + resolved.error().message());
  Expander ex{term, {}};
  for (const auto& r : *resolved)
    if (!r.inner) ex.target_of.emplace(r.source, r.target);
  return ex.expand(Position{}, max_depth);
}

bool is_prefix(const Unfolded& a, const Unfolded& b) {
  if (a.truncated) return true;
  if (b.truncated || a.symbol != b.symbol || a.payload != b.payload ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!is_prefix(a.children[i], b.children[i])) return false;
  return true;
}

namespace {

void print(const Unfolded& u, std::string& out) {
  if (u.truncated) {
    out += "Truncated";
    return;
  }
  out += u.symbol;
  if (u.payload) {
    out += "(" + std::to_string(*u.payload) + ")";
  } else if (!u.children.empty()) {
    out += '(';
    for (std::size_t i = 0; i < u.children.size(); ++i) {
      if (i) out += ',';
      print(u.children[i], out);
    }
    out += ')';
  }
}

}  // namespace

std::string to_string(const Unfolded& u) {
  std::string out;
  print(u, out);
  return out;
}

}  // namespace cst
