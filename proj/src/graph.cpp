#include "cst/graph.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "cst/check.hpp"

namespace cst {

std::string to_string(GraphError::Kind kind) {
  switch (kind) {
    case GraphError::Kind::UndeclaredSymbol: return "UndeclaredSymbol";
    case GraphError::Kind::ArityMismatch: return "ArityMismatch";
    case GraphError::Kind::PayloadMismatch: return "PayloadMismatch";
    case GraphError::Kind::UnknownNode: return "UnknownNode";
    case GraphError::Kind::Unreachable: return "Unreachable";
    case GraphError::Kind::Malformed: return "Malformed";
  }
  return "?";
}

void validate(const RootedGraph& g, const Signature& sig) {
  using K = GraphError::Kind;
  if (!g.nodes.count(g.root)) throw GraphError(K::UnknownNode, "root '" + g.root + "' is not a node");
  for (const auto& [id, node] : g.nodes) {
    const SymbolInfo* info = sig.find(node.symbol);
    if (!info) throw GraphError(K::UndeclaredSymbol, "node '" + id + "': undeclared symbol '" + node.symbol + "'");
    if (static_cast<int>(node.successors.size()) != info->arity)
      throw GraphError(K::ArityMismatch, "node '" + id + "': '" + node.symbol + "' expects " +
                                             std::to_string(info->arity) + " successors, got " +
                                             std::to_string(node.successors.size()));
    if (node.payload.has_value() != info->valued)
      throw GraphError(K::PayloadMismatch, "node '" + id + "': value presence does not match '" + node.symbol + "'");
    for (const auto& s : node.successors)
      if (!g.nodes.count(s)) throw GraphError(K::UnknownNode, "node '" + id + "': unknown successor '" + s + "'");
  }
  std::set<std::string> seen{g.root};
  std::vector<std::string> stack{g.root};
  while (!stack.empty()) {
    std::string id = std::move(stack.back());
    stack.pop_back();
    for (const auto& s : g.nodes.at(id).successors)
      if (seen.insert(s).second) stack.push_back(s);
  }
  if (seen.size() != g.nodes.size())
    for (const auto& [id, _] : g.nodes)
      if (!seen.count(id)) throw GraphError(K::Unreachable, "node '" + id + "' is not reachable from the root");
}

namespace {

// Depth-first traversal shared by encode() and to_dot().
class Encoder {
 public:
  Encoder(const RootedGraph& g) : g_(g) {}

  Term run() { return visit(g_.root, Position{}); }

  /// (node, slot) pairs whose edge became a tree edge.
  const std::set<std::pair<std::string, std::size_t>>& tree_edges() const { return tree_edges_; }
  /// Node ids in first-visit order.
  const std::vector<std::string>& visit_order() const { return order_; }

 private:
  Term visit(const std::string& id, const Position& here) {
    tree_pos_.emplace(id, here);
    order_.push_back(id);
    const GraphNode& node = g_.nodes.at(id);
    std::vector<Term> children;
    children.reserve(node.successors.size());
    for (std::size_t j = 0; j < node.successors.size(); ++j) {
      const std::string& succ = node.successors[j];
      Position slot = here.child(static_cast<int>(j + 1));
      if (auto it = tree_pos_.find(succ); it != tree_pos_.end()) {
        const Position& target = it->second;
        const std::size_t shared = slot.common_prefix_length(target);
        children.push_back(Term::ptr(static_cast<int>(slot.depth() - shared), target.suffix(shared)));
      } else {
        tree_edges_.emplace(id, j);
        children.push_back(visit(succ, slot));
      }
    }
    return Term::fun(node.symbol, std::move(children), node.payload);
  }

  const RootedGraph& g_;
  std::map<std::string, Position> tree_pos_;
  std::set<std::pair<std::string, std::size_t>> tree_edges_;
  std::vector<std::string> order_;
};

}  // namespace

Term encode(const RootedGraph& g, const Signature& sig) {
  validate(g, sig);
  return Encoder(g).run();
}

RootedGraph decode(const Term& term, const Signature& sig) {
  auto resolved = resolve_pointers(term, sig);
  if (!resolved) throw std::invalid_argument("decode: " + resolved.error().message());
  std::map<Position, Position> target_of;
  for (const auto& r : *resolved) {
    if (r.inner) throw std::invalid_argument("decode: inner pointers have no graph reading");
    target_of.emplace(r.source, r.target);
  }
  // Follows pointer-to-pointer chains (indirect references) to a function node.
  auto final_target = [&](Position p) {
    std::set<Position> seen;
    while (term.at(p)->is_ptr()) {
      if (!seen.insert(p).second)
        throw std::invalid_argument("decode: pointer cycle at " + p.to_string());
      p = target_of.at(p);
    }
    return p;
  };

  RootedGraph g;
  g.root = Position{}.to_string();
  if (term.is_ptr()) throw std::invalid_argument("decode: a closed term cannot be a pointer");
  std::vector<std::pair<Position, Term>> stack{{Position{}, term}};
  while (!stack.empty()) {
    auto [pos, t] = std::move(stack.back());
    stack.pop_back();
    const auto& f = t.fun();
    GraphNode node{f.symbol, f.payload, {}};
    for (std::size_t j = 0; j < f.children.size(); ++j) {
      Position child = pos.child(static_cast<int>(j + 1));
      if (f.children[j].is_ptr()) {
        node.successors.push_back(final_target(child).to_string());
      } else {
        node.successors.push_back(child.to_string());
        stack.emplace_back(child, f.children[j]);
      }
    }
    g.nodes.emplace(pos.to_string(), std::move(node));
  }
  return g;
}

bool graph_isomorphic(const RootedGraph& a, const RootedGraph& b) {
  if (a.nodes.size() != b.nodes.size()) return false;
  if (!a.nodes.count(a.root) || !b.nodes.count(b.root)) return false;
  std::map<std::string, std::string> fwd{{a.root, b.root}};
  std::map<std::string, std::string> bwd{{b.root, a.root}};
  std::vector<std::pair<std::string, std::string>> stack{{a.root, b.root}};
  while (!stack.empty()) {
    auto [x, y] = std::move(stack.back());
    stack.pop_back();
    const GraphNode& nx = a.nodes.at(x);
    const GraphNode& ny = b.nodes.at(y);
    if (nx.symbol != ny.symbol || nx.payload != ny.payload || nx.successors.size() != ny.successors.size())
      return false;
    for (std::size_t j = 0; j < nx.successors.size(); ++j) {
      const std::string& sx = nx.successors[j];
      const std::string& sy = ny.successors[j];
      if (!a.nodes.count(sx) || !b.nodes.count(sy)) return false;
      auto fx = fwd.find(sx);
      auto by = bwd.find(sy);
      if (fx != fwd.end() || by != bwd.end()) {
        if (fx == fwd.end() || by == bwd.end() || fx->second != sy) return false;
        continue;
      }
      fwd.emplace(sx, sy);
      bwd.emplace(sy, sx);
      stack.emplace_back(sx, sy);
    }
  }
  return fwd.size() == a.nodes.size();
}

RootedGraph load_graph(std::string_view source) {
  using nlohmann::json;
  using K = GraphError::Kind;
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::parse_error& e) {
    throw GraphError(K::Malformed, e.what());
  }
  try {
    RootedGraph g;
    g.root = doc.at("root").get<std::string>();
    for (const json& n : doc.at("nodes")) {
      GraphNode node;
      const std::string id = n.at("id").get<std::string>();
      node.symbol = n.at("symbol").get<std::string>();
      if (auto it = n.find("value"); it != n.end()) node.payload = it->get<std::int64_t>();
      if (auto it = n.find("children"); it != n.end())
        node.successors = it->get<std::vector<std::string>>();
      if (!g.nodes.emplace(id, std::move(node)).second)
        throw GraphError(K::Malformed, "duplicate node id '" + id + "'");
    }
    return g;
  } catch (const json::exception& e) {
    throw GraphError(K::Malformed, e.what());
  }
}

std::string print_graph(const RootedGraph& g) {
  using ojson = nlohmann::ordered_json;
  ojson doc;
  doc["root"] = g.root;
  doc["nodes"] = ojson::array();
  // Root first, then the remaining ids in order.
  auto emit = [&](const std::string& id, const GraphNode& n) {
    ojson j;
    j["id"] = id;
    j["symbol"] = n.symbol;
    if (n.payload) j["value"] = *n.payload;
    j["children"] = n.successors;
    doc["nodes"].push_back(std::move(j));
  };
  if (auto it = g.nodes.find(g.root); it != g.nodes.end()) emit(it->first, it->second);
  for (const auto& [id, n] : g.nodes)
    if (id != g.root) emit(id, n);
  return doc.dump(2) + "\n";
}

std::string to_dot(const RootedGraph& g, const Signature& sig) {
  validate(g, sig);
  Encoder enc(g);
  enc.run();
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + '"';
  };
  std::ostringstream os;
  os << "digraph G {\n  node [shape=record];\n";
  for (const auto& id : enc.visit_order()) {
    const GraphNode& n = g.nodes.at(id);
    std::string label = n.symbol;
    if (n.payload) label += "(" + std::to_string(*n.payload) + ")";
    os << "  " << quote(id) << " [label=" << quote(label) << "];\n";
  }
  for (const auto& id : enc.visit_order()) {
    const GraphNode& n = g.nodes.at(id);
    for (std::size_t j = 0; j < n.successors.size(); ++j) {
      os << "  " << quote(id) << " -> " << quote(n.successors[j]);
      if (!enc.tree_edges().count({id, j})) os << " [style=dashed]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace cst
