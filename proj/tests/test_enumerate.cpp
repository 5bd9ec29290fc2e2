#include <doctest.h>

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cst/check.hpp"
#include "cst/enumerate.hpp"

using namespace cst;

namespace {

Signature with(Direction d, bool indirect = false, bool inner = false) {
  return builtin_bintree().with_default_policy(PointerPolicy{d, indirect, inner});
}

int shape_depth(const Shape& s) {
  int d = 0;
  if (s.is_sym())
    for (const auto& c : s.children()) d = std::max(d, 1 + shape_depth(c));
  return d;
}

std::vector<Position> all_paths(int max_step, int max_len) {
  std::vector<Position> out{Position{}};
  std::vector<Position> layer{Position{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Position> next;
    for (const auto& p : layer)
      for (int s = 1; s <= max_step; ++s) next.push_back(p.child(s));
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Generate-and-filter: every raw term of the bintree signature with pointer
// indices one past any legal bound, kept only if type_check accepts it.
std::set<std::string> oracle(const Signature& sig, const Context& ctx, int max_nodes) {
  // A binary tree of n nodes has no position deeper than (n - 1) / 2.
  int path_len = (max_nodes - 1) / 2;
  for (const auto& s : ctx.entries()) path_len = std::max(path_len, shape_depth(s));
  const auto paths = all_paths(sig.max_arity(), path_len);
  const bool inner = sig.default_policy().inner;

  auto pointers = [&](int depth) {
    std::vector<Pointer> out;
    for (int i = 1; i <= static_cast<int>(ctx.size()) + depth + 1; ++i)
      for (const auto& p : paths) out.push_back(Pointer{p, i});
    return out;
  };

  // Raw terms of exactly n nodes whose root sits below `depth` ancestors.
  std::function<std::vector<Term>(int, int)> raw = [&](int n, int depth) {
    std::vector<Term> out;
    if (n == 1) {
      for (const auto& p : pointers(depth)) out.push_back(Term::ptr(p));
      for (std::int64_t v : kEnumeratedPayloads) out.push_back(Term::leaf("lf", v));
      return out;
    }
    std::vector<std::optional<Pointer>> slots{std::nullopt};
    if (inner)
      for (const auto& p : pointers(depth)) slots.push_back(p);
    for (int left = 1; left <= n - 2; ++left)
      for (const Term& a : raw(left, depth + 1))
        for (const Term& b : raw(n - 1 - left, depth + 1))
          for (const auto& slot : slots) out.push_back(Term::fun("bin", {a, b}, std::nullopt, slot));
    return out;
  };

  std::set<std::string> kept;
  for (int n = 1; n <= max_nodes; ++n)
    for (const Term& t : raw(n, 0))
      if (type_check(t, ctx, sig).ok()) kept.insert(print_term(t));
  return kept;
}

std::set<std::string> enumerated(const Signature& sig, const Context& ctx, int max_nodes) {
  std::set<std::string> out;
  std::size_t count = 0;
  enumerate_terms(sig, ctx, max_nodes, [&](const Term& t, const Shape&) {
    out.insert(print_term(t));
    ++count;
  });
  CHECK(count == out.size());
  return out;
}

}  // namespace

TEST_CASE("one-node terms in the empty context are the leaves") {
  CHECK(enumerated(builtin_bintree(), {}, 1) == std::set<std::string>{"lf(0)", "lf(1)"});
  CHECK(enumerated(builtin_bintree(), {}, 2) == std::set<std::string>{"lf(0)", "lf(1)"});
}

TEST_CASE("one-node terms under a context include the context pointers") {
  const auto got = enumerated(builtin_bintree(), Context({parse_shape("B(L,L)")}), 1);
  CHECK(got == std::set<std::string>{"ptr(1)", "ptr(1,1)", "ptr(1,2)", "lf(0)", "lf(1)"});
}

TEST_CASE("terms are emitted by non-decreasing size and all type-check") {
  const Signature sig = with(Direction::Symmetric, true);
  const Context ctx({parse_shape("B(P,L)")});
  std::size_t last = 0;
  enumerate_terms(sig, ctx, 4, [&](const Term& t, const Shape& s) {
    CHECK(t.node_count() >= last);
    last = t.node_count();
    auto checked = type_check(t, ctx, sig);
    REQUIRE(checked.ok());
    CHECK(*checked == s);
  });
}

TEST_CASE("enumeration matches generate-and-filter for every policy") {
  const std::vector<Context> contexts{Context{}, Context({parse_shape("B(L,P)")})};
  for (auto d : {Direction::RightToLeft, Direction::LeftToRight, Direction::Symmetric, Direction::Unrestricted})
    for (bool indirect : {false, true})
      for (bool inner : {false, true})
        for (const auto& ctx : contexts) {
          const Signature sig = with(d, indirect, inner);
          CAPTURE(to_string(d));
          CAPTURE(indirect);
          CAPTURE(inner);
          CHECK(enumerated(sig, ctx, 3) == oracle(sig, ctx, 3));
        }
}

TEST_CASE("right-to-left enumeration matches generate-and-filter at five nodes") {
  const Signature sig = builtin_bintree();
  CHECK(enumerated(sig, {}, 5) == oracle(sig, {}, 5));
}

TEST_CASE("empty-context term counts are stable") {
  CHECK(enumerate_terms(builtin_bintree(), {}, 3).size() == 2 + 11);
}
