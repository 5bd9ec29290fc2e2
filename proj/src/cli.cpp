#include "cst/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "cst/check.hpp"
#include "cst/enumerate.hpp"
#include "cst/etg.hpp"
#include "cst/fold.hpp"
#include "cst/graph.hpp"
#include "cst/signature.hpp"
#include "cst/term.hpp"
#include "cst/unfold.hpp"

namespace cst::cli {

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Rejected {
  std::string message;
};

struct Config {
  std::string signature_path;
  std::string direction;
  bool indirect = false;
  bool inner = false;
  std::string output_path = "-";
  std::string input_path;
  std::string input;
  std::vector<std::string> ctx_shapes;
  int depth = -1;
  int max_nodes = 0;
  std::string algebra;
  bool dot = false;
};

std::string read_all(std::istream& is) {
  return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  return read_all(f);
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

class Session {
 public:
  Session(const Config& cfg, std::istream& in) : cfg_(cfg), in_(in), sig_(load()) {}

  const Signature& sig() const { return sig_; }

  std::string input_text() {
    if (!cfg_.input_path.empty() && !cfg_.input.empty())
      throw UsageError("give the input either as an argument or with --input, not both");
    if (!cfg_.input_path.empty()) return cfg_.input_path == "-" ? read_all(in_) : read_file(cfg_.input_path);
    if (cfg_.input.empty()) throw UsageError("missing input");
    return cfg_.input == "-" ? read_all(in_) : cfg_.input;
  }

  Context context() const {
    std::vector<Shape> entries;
    for (const auto& text : cfg_.ctx_shapes) {
      Shape s;
      try {
        s = parse_shape(text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--ctx: ") + e.what());
      }
      if (!is_well_formed(s, sig_)) throw UsageError("--ctx: '" + text + "' is not a shape of the signature");
      entries.push_back(std::move(s));
    }
    return Context(entries);
  }

  Term term() {
    auto parsed = parse_term(trim(input_text()), sig_);
    if (!parsed) throw Rejected{parsed.error().message()};
    return std::move(parsed).value();
  }

  /// A term that type-checks in the configured context.
  std::pair<Term, Shape> checked_term() {
    Term t = term();
    auto shape = type_check(t, context(), sig_);
    if (!shape) throw Rejected{shape.error().message()};
    return {std::move(t), *shape};
  }

 private:
  Signature load() const {
    Signature sig = cfg_.signature_path.empty() ? builtin_bintree() : load_signature(read_file(cfg_.signature_path));
    PointerPolicy p = sig.default_policy();
    if (!cfg_.direction.empty()) {
      auto d = parse_direction(cfg_.direction);
      if (!d) throw UsageError("--direction: unknown policy keyword '" + cfg_.direction + "'");
      p.direction = *d;
    }
    p.indirect = p.indirect || cfg_.indirect;
    p.inner = p.inner || cfg_.inner;
    return sig.with_default_policy(p);
  }

  const Config& cfg_;
  std::istream& in_;
  Signature sig_;
};

std::string render_leaves(const std::set<std::int64_t>& s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(v);
  }
  return out + "}";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Typed cyclic sharing terms: check, convert and fold rooted graphs", "cstool"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default(false);
  app.add_option("--sig", cfg.signature_path, "Signature file (default: builtin bin/lf)");
  app.add_option("--direction", cfg.direction, "Override the default pointer direction")
      ->check(CLI::IsMember({"right-to-left", "rtl", "left-to-right", "ltr", "symmetric", "sym",
                             "unrestricted", "unr"}));
  app.add_flag("--indirect", cfg.indirect, "Allow pointers to pointer nodes by default");
  app.add_flag("--inner", cfg.inner, "Allow inner pointer slots by default");
  app.add_option("-o,--output", cfg.output_path, "Output file, '-' for stdout");

  auto with_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("term", cfg.input, what);
    sub->add_option("-i,--input", cfg.input_path, "Read the input from a file, '-' for stdin");
  };
  auto with_ctx = [&](CLI::App* sub) {
    sub->add_option("--ctx", cfg.ctx_shapes, "Context shape, innermost first (repeatable)");
  };

  auto* check = app.add_subcommand("check", "Type-check a term and print its shape");
  with_input(check, "Term text, '-' for stdin");
  with_ctx(check);
  auto* encode = app.add_subcommand("encode", "Encode a graph file as its unique term");
  encode->add_option("graph", cfg.input_path, "Graph file, '-' for stdin")->required();
  auto* decode = app.add_subcommand("decode", "Print the graph of a closed term");
  with_input(decode, "Term text, '-' for stdin");
  decode->add_flag("--dot", cfg.dot, "Emit Graphviz instead of the graph file format");
  auto* etg = app.add_subcommand("etg", "Print the equational term graph of a closed term");
  with_input(etg, "Term text, '-' for stdin");
  auto* letrec = app.add_subcommand("letrec", "Print the letrec form of a closed term");
  with_input(letrec, "Term text, '-' for stdin");
  auto* unfold_cmd = app.add_subcommand("unfold", "Print the depth-bounded expansion of a closed term");
  with_input(unfold_cmd, "Term text, '-' for stdin");
  unfold_cmd->add_option("--depth", cfg.depth, "Cut-off depth")->required()->check(CLI::NonNegativeNumber);
  auto* fold_cmd = app.add_subcommand("fold", "Run one of the example folds");
  with_input(fold_cmd, "Term text, '-' for stdin");
  with_ctx(fold_cmd);
  fold_cmd->add_option("--alg", cfg.algebra, "leaves, height or skeleton")
      ->required()
      ->check(CLI::IsMember({"leaves", "height", "skeleton"}));
  auto* enumerate = app.add_subcommand("enumerate", "Stream all well-typed terms up to a size");
  enumerate->add_option("--max", cfg.max_nodes, "Maximum node count")->required()->check(CLI::PositiveNumber);
  with_ctx(enumerate);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ostringstream result;
  try {
    Session s(cfg, in);
    const Signature& sig = s.sig();
    if (*check) {
      Term t = s.term();
      auto shape = type_check(t, s.context(), sig);
      if (!shape) throw Rejected{shape.error().message()};
      result << to_string(*shape) << '\n';
    } else if (*encode) {
      RootedGraph g = load_graph(s.input_text());
      result << print_term(cst::encode(g, sig)) << '\n';
    } else if (*decode) {
      RootedGraph g = cst::decode(s.checked_term().first, sig);
      result << (cfg.dot ? to_dot(g, sig) : print_graph(g));
    } else if (*etg) {
      result << print_etg(to_etg(s.checked_term().first, sig));
    } else if (*letrec) {
      result << emit_letrec(to_etg(s.checked_term().first, sig)) << '\n';
    } else if (*unfold_cmd) {
      result << to_string(cst::unfold(s.checked_term().first, cfg.depth, sig)) << '\n';
    } else if (*fold_cmd) {
      Context ctx = s.context();
      Term t = s.checked_term().first;
      if (cfg.algebra == "leaves") result << render_leaves(leaves(t, sig, ctx)) << '\n';
      else if (cfg.algebra == "height") result << height(t, sig, ctx) << '\n';
      else result << to_string(skeleton(t, sig, ctx)) << '\n';
    } else if (*enumerate) {
      enumerate_terms(sig, s.context(), cfg.max_nodes, [&](const Term& t, const Shape& shape) {
        result << print_term(t) << '\t' << to_string(shape) << '\n';
      });
    }
  } catch (const Rejected& r) {
    err << "error: " << r.message << '\n';
    return kRejected;
  } catch (const GraphError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kRejected;
  } catch (const SignatureError& e) {
    err << "error: signature: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kRejected;
  }

  if (cfg.output_path == "-") {
    out << result.str();
  } else {
    std::ofstream f(cfg.output_path, std::ios::binary);
    if (!(f << result.str())) {
      err << "error: cannot write '" << cfg.output_path << "'\n";
      return kUsage;
    }
  }
  return kOk;
}

}  // namespace cst::cli
