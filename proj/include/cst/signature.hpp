#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cst/shape.hpp"

namespace cst {

/// Which pointers a symbol's typing rule admits. `indirect` makes pointer nodes
/// referable; `inner` gives every node of the symbol one optional pointer slot.
struct PointerPolicy {
  Direction direction = Direction::RightToLeft;
  bool indirect = false;
  bool inner = false;

  friend bool operator==(const PointerPolicy&, const PointerPolicy&) = default;
};

struct SymbolInfo {
  std::string name;
  int arity = 0;
  /// Carries an integer payload. Only nullary symbols may be valued.
  bool valued = false;
  std::string shape_symbol;
  /// Unset means "use the signature's default policy".
  std::optional<PointerPolicy> policy;

  friend bool operator==(const SymbolInfo&, const SymbolInfo&) = default;
};

/// Raised by signature construction and loading. `field` names the offending
/// entry, e.g. "symbols[1].arity".
class SignatureError : public std::runtime_error {
 public:
  SignatureError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class Signature {
 public:
  /// Validates and builds. Throws SignatureError.
  Signature(std::vector<SymbolInfo> symbols, PointerPolicy default_policy = {});

  const std::vector<SymbolInfo>& symbols() const { return symbols_; }
  const PointerPolicy& default_policy() const { return default_policy_; }

  /// nullptr when undeclared.
  const SymbolInfo* find(std::string_view name) const;
  /// Throws std::out_of_range when undeclared.
  const SymbolInfo& at(std::string_view name) const;
  /// Lookup by shape symbol; nullptr when undeclared.
  const SymbolInfo* find_by_shape(std::string_view shape_symbol) const;

  /// Effective policy of a declared symbol.
  const PointerPolicy& policy(std::string_view name) const;

  int max_arity() const;

  /// Same symbols with a different default policy.
  Signature with_default_policy(PointerPolicy policy) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.symbols_ == b.symbols_ && a.default_policy_ == b.default_policy_;
  }

 private:
  std::vector<SymbolInfo> symbols_;
  PointerPolicy default_policy_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::map<std::string, std::size_t, std::less<>> by_shape_;
};

/// bin/2 with shape B, lf/0 valued with shape L, right-to-left pointers.
Signature builtin_bintree();

/// Checks that `shape` only uses declared shape symbols at their arities.
bool is_well_formed(const Shape& shape, const Signature& sig);

std::string to_string(Direction direction);
/// Accepts right-to-left|rtl, left-to-right|ltr, symmetric|sym,
/// unrestricted|unr. nullopt otherwise.
std::optional<Direction> parse_direction(std::string_view text);

/// Signature file (JSON):
///   {"default_policy": {"direction": "...", "indirect": b, "inner": b},
///    "symbols": [{"name", "arity", "valued"?, "shape"?, "policy"?}, ...]}
/// A symbol's "policy" is either a direction keyword or a policy object; omitted
/// object fields fall back to the default policy.
Signature load_signature(std::string_view source);
std::string print_signature(const Signature& sig);

}  // namespace cst
