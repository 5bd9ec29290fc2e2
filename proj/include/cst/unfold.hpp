#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cst/signature.hpp"
#include "cst/term.hpp"

namespace cst {

/// A finite prefix of a term's infinite expansion: function nodes only, with
/// cut-off branches marked as truncated.
struct Unfolded {
  bool truncated = true;
  std::string symbol;
  std::optional<std::int64_t> payload;
  std::vector<Unfolded> children;

  static Unfolded cut() { return Unfolded{}; }

  friend bool operator==(const Unfolded&, const Unfolded&) = default;
};

/// Expands every pointer into the subterm it resolves to, cutting each branch
/// at `max_depth` (the root sits at depth 0, so depth 0 yields Truncated).
/// Targets are resolved once into absolute positions. A pointer whose chain
/// of indirect references never reaches a function node is printed as
/// Truncated.
///
/// Throws std::invalid_argument when the term does not resolve.
Unfolded unfold(const Term& term, int max_depth, const Signature& sig);

/// True when `a` agrees with `b` everywhere except below `a`'s cuts.
bool is_prefix(const Unfolded& a, const Unfolded& b);

/// `bin(bin(Truncated,Truncated),lf(9))`
std::string to_string(const Unfolded& u);

}  // namespace cst
