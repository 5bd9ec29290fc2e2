#pragma once

#include <vector>

#include "cst/shape.hpp"
#include "cst/signature.hpp"
#include "cst/term.hpp"

namespace cst {

/// The purely syntactic shape of a term: pointers become P, each node f
/// becomes its shape symbol over the children's skeletons. Fails only on
/// structural errors (undeclared symbol, arity, payload).
Checked<Shape> skeleton_of(const Term& term, const Signature& sig);

/// Types `term` in `ctx`. The skeleton is computed first; a second pass then
/// threads contexts down the term, typing child i of f in
/// mask_context_entry(f, ..., i, policy(f)) consed onto the incoming context,
/// and checks every pointer p↑i against entry i.
///
/// A leaf pointer obeys the `indirect` flag of its parent's policy (the default
/// policy at the root). An inner pointer is checked against its node's incoming
/// context under that node's policy. Errors are reported in leftmost-innermost
/// order.
Checked<Shape> type_check(const Term& term, const Context& ctx, const Signature& sig);

struct ResolvedPointer {
  /// Position of the PtrNode, or of the node owning an inner pointer.
  Position source;
  bool inner = false;
  Position target;

  friend bool operator==(const ResolvedPointer&, const ResolvedPointer&) = default;
};

/// Absolute target of every pointer in a closed term: `source` with its last
/// `index` steps dropped, then `path` appended. Fails when a pointer climbs
/// above the root, lands outside the term, or lands on a pointer node without
/// indirect references enabled. Results are in leftmost order.
Checked<std::vector<ResolvedPointer>> resolve_pointers(const Term& term, const Signature& sig);

}  // namespace cst
