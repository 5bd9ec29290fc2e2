#include "cst/fold.hpp"

#include <algorithm>
#include <string>

namespace cst {

Algebra<std::set<std::int64_t>> leaves_algebra() {
  using Set = std::set<std::int64_t>;
  return {
      [](const Context&, const Pointer&) { return Set{}; },
      [](const Context&, const FunLabel& f, std::vector<Set> kids) {
        Set out;
        if (f.payload) out.insert(*f.payload);
        for (auto& k : kids) out.merge(k);
        return out;
      },
  };
}

Algebra<int> height_algebra() {
  return {
      [](const Context&, const Pointer&) { return 1; },
      [](const Context&, const FunLabel&, std::vector<int> kids) {
        int m = 0;
        for (int k : kids) m = std::max(m, k);
        return m + 1;
      },
  };
}

Algebra<Shape> skeleton_algebra(const Signature& sig) {
  return {
      [](const Context&, const Pointer&) { return Shape::ptr(); },
      [&sig](const Context&, const FunLabel& f, std::vector<Shape> kids) {
        return Shape::sym(sig.at(f.symbol).shape_symbol, std::move(kids));
      },
  };
}

Algebra<Term> rebuild_algebra() {
  return {
      [](const Context&, const Pointer& p) { return Term::ptr(p); },
      [](const Context&, const FunLabel& f, std::vector<Term> kids) {
        return Term::fun(std::string(f.symbol), std::move(kids), f.payload, f.inner);
      },
  };
}

std::set<std::int64_t> leaves(const Term& term, const Signature& sig, const Context& ctx) {
  return fold(term, ctx, leaves_algebra(), sig);
}

int height(const Term& term, const Signature& sig, const Context& ctx) {
  return fold(term, ctx, height_algebra(), sig);
}

Shape skeleton(const Term& term, const Signature& sig, const Context& ctx) {
  return fold(term, ctx, skeleton_algebra(sig), sig);
}

}  // namespace cst
