#include "cst/enumerate.hpp"

#include <map>

#include "cst/check.hpp"

namespace cst {

namespace {

// Placeholder for a pointer slot that is yet to be filled.
const Pointer kHole{Position{}, 0};

class SkeletonGenerator {
 public:
  explicit SkeletonGenerator(const Signature& sig) : sig_(sig) {}

  /// All skeletons with exactly `n` nodes.
  const std::vector<Term>& exact(int n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    std::vector<Term> out;
    if (n == 1) out.push_back(Term::ptr(kHole));
    for (const SymbolInfo& s : sig_.symbols()) {
      const bool inner = sig_.policy(s.name).inner && s.arity > 0;
      auto emit = [&](std::vector<Term> children, std::optional<std::int64_t> payload) {
        out.push_back(Term::fun(s.name, children, payload));
        if (inner) out.push_back(Term::fun(s.name, std::move(children), payload, kHole));
      };
      if (s.arity == 0) {
        if (n != 1) continue;
        if (s.valued) {
          for (std::int64_t v : kEnumeratedPayloads) emit({}, v);
        } else {
          emit({}, std::nullopt);
        }
        continue;
      }
      if (n - 1 < s.arity) continue;
      std::vector<Term> prefix;
      distribute(s.arity, n - 1, prefix, [&](const std::vector<Term>& children) {
        emit(children, std::nullopt);
      });
    }
    return memo_.emplace(n, std::move(out)).first->second;
  }

 private:
  // Every way of filling `slots` children whose sizes sum to `budget`.
  template <class F>
  void distribute(int slots, int budget, std::vector<Term>& prefix, const F& f) {
    if (slots == 0) {
      if (budget == 0) f(prefix);
      return;
    }
    for (int size = 1; size <= budget - (slots - 1); ++size) {
      for (const Term& t : exact(size)) {
        prefix.push_back(t);
        distribute(slots - 1, budget - size, prefix, f);
        prefix.pop_back();
      }
    }
  }

  const Signature& sig_;
  std::map<int, std::vector<Term>> memo_;
};

std::vector<Pointer> candidates(const Context& ctx, bool indirect) {
  std::vector<Pointer> out;
  for (std::size_t i = 1; i <= ctx.size(); ++i)
    for (const Position& p : positions(ctx.at(i), indirect))
      out.push_back(Pointer{p, static_cast<int>(i)});
  return out;
}

// Candidate lists of every hole in preorder (inner slot before children).
void collect_slots(const Term& t, const Shape& shape, const Context& ctx, const Signature& sig,
                   const PointerPolicy& governing, std::vector<std::vector<Pointer>>& slots) {
  if (t.is_ptr()) {
    slots.push_back(candidates(ctx, governing.indirect));
    return;
  }
  const auto& f = t.fun();
  const PointerPolicy& policy = sig.policy(f.symbol);
  if (f.inner) slots.push_back(candidates(ctx, policy.indirect));
  for (std::size_t i = 0; i < f.children.size(); ++i) {
    const int index = static_cast<int>(i + 1);
    collect_slots(f.children[i], shape.children()[i],
                  ctx.extend(mask_context_entry(shape.symbol(), shape.children(), index, policy.direction)),
                  sig, policy, slots);
  }
}

Term fill(const Term& t, const std::vector<std::vector<Pointer>>& slots,
          const std::vector<std::size_t>& choice, std::size_t& next) {
  if (t.is_ptr()) {
    const std::size_t k = next++;
    return Term::ptr(slots[k][choice[k]]);
  }
  const auto& f = t.fun();
  std::optional<Pointer> inner;
  if (f.inner) {
    const std::size_t k = next++;
    inner = slots[k][choice[k]];
  }
  std::vector<Term> children;
  children.reserve(f.children.size());
  for (const Term& c : f.children) children.push_back(fill(c, slots, choice, next));
  return Term::fun(f.symbol, std::move(children), f.payload, std::move(inner));
}

}  // namespace

void enumerate_terms(const Signature& sig, const Context& ctx, int max_nodes, const TermSink& sink) {
  SkeletonGenerator gen(sig);
  for (int n = 1; n <= max_nodes; ++n) {
    for (const Term& skel : gen.exact(n)) {
      auto shape = skeleton_of(skel, sig);
      std::vector<std::vector<Pointer>> slots;
      collect_slots(skel, *shape, ctx, sig, sig.default_policy(), slots);
      bool empty_slot = false;
      for (const auto& s : slots) empty_slot = empty_slot || s.empty();
      if (empty_slot) continue;

      std::vector<std::size_t> choice(slots.size(), 0);
      while (true) {
        std::size_t next = 0;
        sink(fill(skel, slots, choice, next), *shape);
        std::size_t k = 0;
        for (; k < choice.size(); ++k) {
          if (++choice[k] < slots[k].size()) break;
          choice[k] = 0;
        }
        if (k == choice.size()) break;
      }
    }
  }
}

std::vector<std::pair<Term, Shape>> enumerate_terms(const Signature& sig, const Context& ctx,
                                                    int max_nodes) {
  std::vector<std::pair<Term, Shape>> out;
  enumerate_terms(sig, ctx, max_nodes, [&](const Term& t, const Shape& s) { out.emplace_back(t, s); });
  return out;
}

}  // namespace cst
