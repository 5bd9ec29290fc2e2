#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cst/signature.hpp"
#include "cst/term.hpp"

namespace cst {

struct GraphNode {
  std::string symbol;
  std::optional<std::int64_t> payload;
  /// Order is significant.
  std::vector<std::string> successors;

  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

/// A connected, rooted, edge-ordered graph with symbol-labelled nodes.
struct RootedGraph {
  std::map<std::string, GraphNode> nodes;
  std::string root;

  friend bool operator==(const RootedGraph&, const RootedGraph&) = default;
};

class GraphError : public std::runtime_error {
 public:
  enum class Kind { UndeclaredSymbol, ArityMismatch, PayloadMismatch, UnknownNode, Unreachable, Malformed };

  GraphError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string to_string(GraphError::Kind kind);

/// Throws GraphError when `g` breaks a RootedGraph invariant under `sig`.
void validate(const RootedGraph& g, const Signature& sig);

/// The unique right-to-left cyclic sharing term of `g`.
///
/// Depth-first search from the root in successor order. The first visit of a
/// node emits a function node. An edge from slot q to an already visited node
/// v emits p↑i, where q.ancestor(i) is the nearest ancestor of q whose subtree
/// holds v's tree position and p is v's position below it. Such edges are back
/// edges (p = ε) or cross edges to a finished node on the left.
///
/// Throws GraphError on invalid graphs.
Term encode(const RootedGraph& g, const Signature& sig);

/// Graph reading of a closed, type-checked term. Node ids are the tree
/// positions of function nodes ("ε", "1", "1.2", ...). Pointer slots become
/// edges to their resolved targets; with indirect references a chain of
/// pointers is followed to the function node it ends at.
///
/// Throws std::invalid_argument when the term does not resolve, has inner
/// pointers, or its pointers only reach other pointers.
RootedGraph decode(const Term& term, const Signature& sig);

/// Rooted, edge-ordered isomorphism via simultaneous DFS. Linear time: edge
/// order fixes the only candidate bijection.
bool graph_isomorphic(const RootedGraph& a, const RootedGraph& b);

/// {"root": id, "nodes": [{"id", "symbol", "value"?, "children": [...]}]}
RootedGraph load_graph(std::string_view source);
std::string print_graph(const RootedGraph& g);

/// Graphviz text. Tree edges of the encoder's DFS are solid; back and cross
/// edges are dashed.
std::string to_dot(const RootedGraph& g, const Signature& sig);

}  // namespace cst
