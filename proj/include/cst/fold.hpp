#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cst/check.hpp"
#include "cst/shape.hpp"
#include "cst/signature.hpp"
#include "cst/term.hpp"

namespace cst {

/// What a function-node handler gets to see of its node.
struct FunLabel {
  std::string_view symbol;
  std::optional<std::int64_t> payload;
  std::optional<Pointer> inner;
};

/// Operations of an algebra with carrier R. Both handlers receive the
/// context the node is typed in. Handlers must be pure.
template <class R>
struct Algebra {
  std::function<R(const Context&, const Pointer&)> on_pointer;
  std::function<R(const Context&, const FunLabel&, std::vector<R>)> on_fun;
};

namespace detail {

template <class R>
R fold_rec(const Term& t, const Shape& shape, const Context& ctx, const Algebra<R>& alg,
           const Signature& sig) {
  if (t.is_ptr()) return alg.on_pointer(ctx, t.pointer());
  const auto& f = t.fun();
  const Direction dir = sig.policy(f.symbol).direction;
  std::vector<R> results;
  results.reserve(f.children.size());
  for (std::size_t i = 0; i < f.children.size(); ++i) {
    const int index = static_cast<int>(i + 1);
    results.push_back(fold_rec(f.children[i], shape.children()[i],
                               ctx.extend(mask_context_entry(shape.symbol(), shape.children(), index, dir)),
                               alg, sig));
  }
  return alg.on_fun(ctx, FunLabel{f.symbol, f.payload, f.inner}, std::move(results));
}

}  // namespace detail

/// The unique homomorphism out of the term algebra: child i of f is folded in
/// context γ_i,Γ and f's handler combines the results. Handlers run once per
/// node, children before parents, left to right.
///
/// Throws std::invalid_argument when `term` is structurally ill-formed.
template <class R>
R fold(const Term& term, const Context& ctx, const Algebra<R>& alg, const Signature& sig) {
  auto shape = skeleton_of(term, sig);
  if (!shape) throw std::invalid_argument("fold: " + shape.error().message());
  return detail::fold_rec(term, *shape, ctx, alg, sig);
}

Algebra<std::set<std::int64_t>> leaves_algebra();
Algebra<int> height_algebra();
Algebra<Shape> skeleton_algebra(const Signature& sig);
/// Rebuilds the term it folds; the identity homomorphism.
Algebra<Term> rebuild_algebra();

std::set<std::int64_t> leaves(const Term& term, const Signature& sig, const Context& ctx = {});
int height(const Term& term, const Signature& sig, const Context& ctx = {});
Shape skeleton(const Term& term, const Signature& sig, const Context& ctx = {});

}  // namespace cst
