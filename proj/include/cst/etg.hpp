#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cst/position.hpp"
#include "cst/signature.hpp"
#include "cst/term.hpp"

namespace cst {

/// x = f(x1, ..., xn), or x = f(k) for valued symbols.
struct FunEq {
  std::string symbol;
  std::optional<std::int64_t> payload;
  std::vector<Position> args;

  friend auto operator<=>(const FunEq&, const FunEq&) = default;
  friend bool operator==(const FunEq&, const FunEq&) = default;
};

/// x = y
struct CrossEq {
  Position target;

  friend auto operator<=>(const CrossEq&, const CrossEq&) = default;
  friend bool operator==(const CrossEq&, const CrossEq&) = default;
};

/// x = p↑i, a pointer that is still free in an open sub-graph.
struct FreeEq {
  Pointer pointer;

  friend auto operator<=>(const FreeEq&, const FreeEq&) = default;
  friend bool operator==(const FreeEq&, const FreeEq&) = default;
};

using Equation = std::variant<FunEq, CrossEq, FreeEq>;

/// An equational term graph in α-normal form: every bound variable is the
/// position of its node in the whole term. The map orders equations in
/// depth-first position order.
struct Etg {
  Position root;
  std::map<Position, Equation> equations;

  bool closed() const;

  friend bool operator==(const Etg&, const Etg&) = default;
  friend auto operator<=>(const Etg& a, const Etg& b) {
    if (auto c = a.root <=> b.root; c != 0) return c;
    return a.equations <=> b.equations;
  }
};

/// shift_i: prefixes i to every bound variable; a free p↑x becomes p↑(x-1),
/// or the plain variable p once x reaches 1.
Etg shift(const Etg& g, int i);

/// Fold of the term with the ETG algebra: a pointer becomes {ε | ε = p↑i};
/// f(t1..tn) becomes {ε | ε = f(1..n), shift_1(G1), ..., shift_n(Gn)}.
///
/// Requires a closed, type-checked term without inner pointers; throws
/// std::invalid_argument otherwise.
Etg to_etg(const Term& term, const Signature& sig);

/// True iff to_etg maps distinct terms of `terms` to distinct graphs.
bool etg_injectivity_check(const std::vector<Term>& terms, const Signature& sig);

/// `letrec x_e = bin(x_1, x_2); ...; x_2 = lf(9) in x_e`. Variables are
/// x_<position> with ε written as e; cross equations are bare variables.
/// Throws std::invalid_argument on open graphs.
std::string emit_letrec(const Etg& g);

/// Reads emit_letrec output back. Throws std::invalid_argument.
Etg parse_letrec(std::string_view text);

/// Structured dump mirroring the graph file format, ids are position strings:
/// {"root": "ε", "nodes": [{"id", "symbol", "value"?, "children"} | {"id", "ref"}]}
std::string print_etg(const Etg& g);

}  // namespace cst
