#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cst/shape.hpp"
#include "cst/signature.hpp"
#include "cst/term.hpp"

namespace cst {

/// Payloads given to valued symbols during enumeration.
inline constexpr std::int64_t kEnumeratedPayloads[] = {0, 1};

using TermSink = std::function<void(const Term&, const Shape&)>;

/// Streams every term with at most `max_nodes` FunNodes+PtrNodes that
/// type-checks in `ctx` under `sig`, together with its shape. Each term is
/// produced exactly once.
///
/// Skeletons (terms with pointer placeholders) are generated first. Because
/// contexts depend only on the skeleton, every pointer slot then gets the
/// full list of (index, position) pairs its context admits, and slots are
/// combined by cartesian product.
void enumerate_terms(const Signature& sig, const Context& ctx, int max_nodes, const TermSink& sink);

/// Collecting convenience wrapper.
std::vector<std::pair<Term, Shape>> enumerate_terms(const Signature& sig, const Context& ctx,
                                                    int max_nodes);

}  // namespace cst
