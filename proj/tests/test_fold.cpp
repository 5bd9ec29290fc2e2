#include <doctest.h>

#include <string>
#include <vector>

#include "cst/enumerate.hpp"
#include "cst/fold.hpp"

using namespace cst;

namespace {

const Signature kSig = builtin_bintree();

Term parse(const std::string& text, const Signature& sig = kSig) {
  auto t = parse_term(text, sig);
  REQUIRE_MESSAGE(t.ok(), t.error().message());
  return *t;
}

const char* kShared = "bin(bin(lf(5),lf(6)),bin(ptr(2,1.1),lf(7)))";

}  // namespace

TEST_CASE("counting algebra counts nodes") {
  Algebra<int> count{[](const Context&, const Pointer&) { return 1; },
                     [](const Context&, const FunLabel&, std::vector<int> rs) {
                       int n = 1;
                       for (int r : rs) n += r;
                       return n;
                     }};
  CHECK(fold(parse(kShared), {}, count, kSig) == 7);
}

TEST_CASE("leaves, height and skeleton of the sharing example") {
  const Term t = parse(kShared);
  CHECK(leaves(t, kSig) == std::set<std::int64_t>{5, 6, 7});
  CHECK(height(t, kSig) == 3);
  CHECK(to_string(skeleton(t, kSig)) == "B(B(L,L),B(P,L))");
  CHECK(height(parse("lf(3)"), kSig) == 1);
  CHECK(height(parse("bin(ptr(1),lf(0))"), kSig) == 2);
}

TEST_CASE("a pointer has no leaves and height one") {
  const Context ctx({parse_shape("B(L,L)")});
  const Term p = parse("ptr(1)");
  CHECK(leaves(p, kSig, ctx).empty());
  CHECK(height(p, kSig, ctx) == 1);
  CHECK(to_string(skeleton(p, kSig, ctx)) == "P");
}

TEST_CASE("handlers see the masked context of each node") {
  std::vector<std::string> seen;
  Algebra<int> probe{[&](const Context& ctx, const Pointer& p) {
                       std::string line = "ptr" + std::to_string(p.index) + ":";
                       for (const auto& s : ctx.entries()) line += " " + to_string(s);
                       seen.push_back(line);
                       return 0;
                     },
                     [&](const Context& ctx, const FunLabel& f, std::vector<int>) {
                       seen.push_back(std::string(f.symbol) + ":" + std::to_string(ctx.size()));
                       return 0;
                     }};
  fold(parse(kShared), {}, probe, kSig);
  CHECK(seen == std::vector<std::string>{"lf:2", "lf:2", "bin:1", "ptr2: B(E,E) B(B(L,L),E)", "lf:2", "bin:1",
                                         "bin:0"});
}

TEST_CASE("fold requires a well-formed skeleton") {
  CHECK_THROWS_AS(height(Term::fun("bin", {Term::leaf("lf", 1)}), kSig), std::invalid_argument);
}

TEST_CASE("skeleton equals the type on every enumerated term") {
  for (auto d : {Direction::RightToLeft, Direction::LeftToRight, Direction::Symmetric, Direction::Unrestricted}) {
    const Signature sig = kSig.with_default_policy({d, true, true});
    const Context ctx({parse_shape("B(L,P)")});
    enumerate_terms(sig, ctx, 5, [&](const Term& t, const Shape& s) {
      CHECK(skeleton(t, sig, ctx) == s);
      CHECK(fold(t, ctx, rebuild_algebra(), sig) == t);
    });
  }
}

TEST_CASE("rebuild keeps inner pointers") {
  const Signature sig = kSig.with_default_policy({Direction::RightToLeft, false, true});
  const Term t = parse("bin(lf(1),bin[ptr(1,1)](lf(2),lf(3)))", sig);
  CHECK(fold(t, {}, rebuild_algebra(), sig) == t);
}
