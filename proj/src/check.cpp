#include "cst/check.hpp"

#include <optional>

namespace cst {

namespace {

std::optional<TypeError> skeleton_rec(const Term& t, const Signature& sig, Position& path,
                                      Shape& out) {
  if (t.is_ptr()) {
    out = Shape::ptr();
    return std::nullopt;
  }
  const auto& f = t.fun();
  std::vector<Shape> children(f.children.size());
  for (std::size_t i = 0; i < f.children.size(); ++i) {
    Position child = path.child(static_cast<int>(i + 1));
    if (auto err = skeleton_rec(f.children[i], sig, child, children[i])) return err;
  }
  const SymbolInfo* info = sig.find(f.symbol);
  if (!info) return TypeError{path, ErrorKind::ArityMismatch, "undeclared symbol '" + f.symbol + "'"};
  if (static_cast<int>(f.children.size()) != info->arity)
    return TypeError{path, ErrorKind::ArityMismatch,
                     "'" + f.symbol + "' expects " + std::to_string(info->arity) +
                         " children, got " + std::to_string(f.children.size())};
  if (f.payload.has_value() != info->valued)
    return TypeError{path, ErrorKind::PayloadMismatch,
                     info->valued ? "'" + f.symbol + "' requires a value"
                                  : "'" + f.symbol + "' does not carry a value"};
  out = Shape::sym(info->shape_symbol, std::move(children));
  return std::nullopt;
}

std::optional<TypeError> check_pointer(const Pointer& p, const Context& ctx, bool indirect,
                                       const Position& path) {
  if (p.index < 1 || static_cast<std::size_t>(p.index) > ctx.size())
    return TypeError{path, ErrorKind::DanglingIndex,
                     "index " + std::to_string(p.index) + " exceeds context of length " +
                         std::to_string(ctx.size())};
  const Shape& target = ctx.at(static_cast<std::size_t>(p.index));
  if (!is_referable(target, p.path, indirect))
    return TypeError{path, ErrorKind::InvalidPosition,
                     p.path.to_string() + " is not a referable position of " + to_string(target)};
  return std::nullopt;
}

std::optional<TypeError> pointers_rec(const Term& t, const Shape& shape, const Context& ctx,
                                      const Signature& sig, const PointerPolicy& governing,
                                      const Position& path) {
  if (t.is_ptr()) return check_pointer(t.pointer(), ctx, governing.indirect, path);
  const auto& f = t.fun();
  const PointerPolicy& policy = sig.policy(f.symbol);
  for (std::size_t i = 0; i < f.children.size(); ++i) {
    const int index = static_cast<int>(i + 1);
    Shape entry = mask_context_entry(shape.symbol(), shape.children(), index, policy.direction);
    if (auto err = pointers_rec(f.children[i], shape.children()[i], ctx.extend(std::move(entry)), sig,
                                policy, path.child(index)))
      return err;
  }
  if (f.inner) {
    if (!policy.inner || f.children.empty())
      return TypeError{path, ErrorKind::InnerPtrForbidden,
                       "'" + f.symbol + "' does not admit an inner pointer"};
    return check_pointer(*f.inner, ctx, policy.indirect, path);
  }
  return std::nullopt;
}

}  // namespace

Checked<Shape> skeleton_of(const Term& term, const Signature& sig) {
  Position root;
  Shape out;
  if (auto err = skeleton_rec(term, sig, root, out)) return std::move(*err);
  return out;
}

Checked<Shape> type_check(const Term& term, const Context& ctx, const Signature& sig) {
  auto skeleton = skeleton_of(term, sig);
  if (!skeleton) return skeleton;
  if (auto err = pointers_rec(term, *skeleton, ctx, sig, sig.default_policy(), Position{}))
    return std::move(*err);
  return skeleton;
}

namespace {

struct Resolver {
  const Term& root;
  const Signature& sig;
  std::vector<ResolvedPointer> out;

  std::optional<TypeError> resolve(const Pointer& p, const Position& source, bool inner,
                                   bool indirect) {
    if (p.index < 1 || static_cast<std::size_t>(p.index) > source.depth())
      return TypeError{source, ErrorKind::DanglingIndex, "pointer climbs above the root"};
    Position target = source.ancestor(static_cast<std::size_t>(p.index)).concat(p.path);
    auto node = root.at(target);
    if (!node)
      return TypeError{source, ErrorKind::InvalidPosition,
                       "target " + target.to_string() + " is not a node of the term"};
    if (node->is_ptr() && !indirect)
      return TypeError{source, ErrorKind::InvalidPosition,
                       "target " + target.to_string() + " is a pointer node"};
    out.push_back(ResolvedPointer{source, inner, std::move(target)});
    return std::nullopt;
  }

  std::optional<TypeError> walk(const Term& t, const Position& path, const PointerPolicy& governing) {
    if (t.is_ptr()) return resolve(t.pointer(), path, false, governing.indirect);
    const auto& f = t.fun();
    const SymbolInfo* info = sig.find(f.symbol);
    const PointerPolicy& policy = info ? sig.policy(f.symbol) : sig.default_policy();
    if (f.inner)
      if (auto err = resolve(*f.inner, path, true, policy.indirect)) return err;
    for (std::size_t i = 0; i < f.children.size(); ++i)
      if (auto err = walk(f.children[i], path.child(static_cast<int>(i + 1)), policy)) return err;
    return std::nullopt;
  }
};

}  // namespace

Checked<std::vector<ResolvedPointer>> resolve_pointers(const Term& term, const Signature& sig) {
  Resolver r{term, sig, {}};
  if (auto err = r.walk(term, Position{}, sig.default_policy())) return std::move(*err);
  return std::move(r.out);
}

}  // namespace cst
