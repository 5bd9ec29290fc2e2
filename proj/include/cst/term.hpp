#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cst/position.hpp"
#include "cst/signature.hpp"

namespace cst {

/// p↑i: go up `index` enclosing nodes, then down along `path`.
struct Pointer {
  Position path;
  int index = 1;

  friend auto operator<=>(const Pointer&, const Pointer&) = default;
  friend bool operator==(const Pointer&, const Pointer&) = default;
};

/// A cyclic sharing term in de Bruijn form. Immutable; copies share structure.
class Term {
 public:
  struct Fun {
    std::string symbol;
    std::optional<Pointer> inner;
    std::optional<std::int64_t> payload;
    std::vector<Term> children;
  };

  static Term ptr(int index, Position path = {});
  static Term ptr(Pointer pointer);
  static Term fun(std::string symbol, std::vector<Term> children = {},
                  std::optional<std::int64_t> payload = std::nullopt,
                  std::optional<Pointer> inner = std::nullopt);
  /// Valued nullary node, e.g. lf(5).
  static Term leaf(std::string symbol, std::int64_t payload);

  bool is_ptr() const { return std::holds_alternative<Pointer>(*node_); }
  bool is_fun() const { return std::holds_alternative<Fun>(*node_); }
  const Pointer& pointer() const { return std::get<Pointer>(*node_); }
  const Fun& fun() const { return std::get<Fun>(*node_); }

  /// FunNodes plus PtrNodes.
  std::size_t node_count() const;
  /// Subterm at `p`, or nullopt when `p` is not a node of this term.
  std::optional<Term> at(const Position& p) const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  using Node = std::variant<Pointer, Fun>;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class ErrorKind {
  DanglingIndex,
  InvalidPosition,
  ArityMismatch,
  PayloadMismatch,
  InnerPtrForbidden,
  ParseFailure,
};

std::string to_string(ErrorKind kind);

struct TypeError {
  /// Position of the offending subterm; ε for parse failures.
  Position path;
  ErrorKind kind = ErrorKind::ParseFailure;
  std::string detail;

  /// "<Kind> at <path>: <detail>"
  std::string message() const;
};

/// A value or the first TypeError.
template <class T>
class Checked {
 public:
  Checked(T value) : data_(std::move(value)) {}
  Checked(TypeError error) : data_(std::move(error)) {}

  bool ok() const { return data_.index() == 0; }
  explicit operator bool() const { return ok(); }
  const T& value() const& { return std::get<0>(data_); }
  T&& value() && { return std::get<0>(std::move(data_)); }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  const TypeError& error() const { return std::get<1>(data_); }

 private:
  std::variant<T, TypeError> data_;
};

/// Grammar:
///   term := SYM | SYM '(' args ')' | SYM '[' ptr ']' ['(' args ')'] | ptr
///   ptr  := 'ptr' '(' INT [',' POS] ')'
///   POS  := INT ('.' INT)* | 'ε'
/// Valued nullary symbols take their integer as sole argument: lf(5).
/// Structural errors (arity, payload) are reported with their term path; syntax
/// errors as ParseFailure with line and column in the detail.
Checked<Term> parse_term(std::string_view text, const Signature& sig);

/// Canonical text: no spaces, `ptr(i)` for ε paths, nullary symbols bare.
std::string print_term(const Term& term);

}  // namespace cst
