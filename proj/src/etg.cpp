#include "cst/etg.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "cst/check.hpp"
#include "cst/fold.hpp"

namespace cst {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

bool Etg::closed() const {
  for (const auto& [_, eq] : equations) {
    if (std::holds_alternative<FreeEq>(eq)) return false;
    if (const auto* f = std::get_if<FunEq>(&eq))
      for (const auto& a : f->args)
        if (!equations.count(a)) return false;
    if (const auto* c = std::get_if<CrossEq>(&eq))
      if (!equations.count(c->target)) return false;
  }
  return equations.count(root) > 0;
}

Etg shift(const Etg& g, int i) {
  Etg out;
  out.root = g.root.prefixed(i);
  for (const auto& [var, eq] : g.equations) {
    Equation shifted = std::visit(
        overloaded{
            [&](const FunEq& f) -> Equation {
              FunEq r{f.symbol, f.payload, {}};
              r.args.reserve(f.args.size());
              for (const auto& a : f.args) r.args.push_back(a.prefixed(i));
              return r;
            },
            [&](const CrossEq& c) -> Equation { return CrossEq{c.target.prefixed(i)}; },
            [&](const FreeEq& p) -> Equation {
              if (p.pointer.index > 1) return FreeEq{Pointer{p.pointer.path, p.pointer.index - 1}};
              return CrossEq{p.pointer.path};
            },
        },
        eq);
    out.equations.emplace(var.prefixed(i), std::move(shifted));
  }
  return out;
}

namespace {

Algebra<Etg> etg_algebra() {
  return {
      [](const Context&, const Pointer& p) {
        Etg g;
        g.equations.emplace(Position{}, FreeEq{p});
        return g;
      },
      [](const Context&, const FunLabel& f, std::vector<Etg> kids) {
        Etg g;
        FunEq head{std::string(f.symbol), f.payload, {}};
        for (std::size_t i = 0; i < kids.size(); ++i) {
          const int index = static_cast<int>(i + 1);
          head.args.push_back(Position{index});
          g.equations.merge(shift(kids[i], index).equations);
        }
        g.equations.emplace(Position{}, std::move(head));
        return g;
      },
  };
}

bool has_inner_pointer(const Term& t) {
  if (t.is_ptr()) return false;
  if (t.fun().inner) return true;
  for (const auto& c : t.fun().children)
    if (has_inner_pointer(c)) return true;
  return false;
}

}  // namespace

Etg to_etg(const Term& term, const Signature& sig) {
  auto checked = type_check(term, Context{}, sig);
  if (!checked) throw std::invalid_argument("to_etg: " + checked.error().message());
  if (has_inner_pointer(term)) throw std::invalid_argument("to_etg: inner pointers are not translated");
  return fold(term, Context{}, etg_algebra(), sig);
}

bool etg_injectivity_check(const std::vector<Term>& terms, const Signature& sig) {
  std::map<Etg, Term> seen;
  for (const Term& t : terms) {
    auto [it, fresh] = seen.emplace(to_etg(t, sig), t);
    if (!fresh && !(it->second == t)) return false;
  }
  return true;
}

std::string emit_letrec(const Etg& g) {
  if (!g.closed()) throw std::invalid_argument("emit_letrec: graph is not closed");
  auto var = [](const Position& p) { return "x_" + p.to_identifier(); };
  std::string out = "letrec ";
  bool first = true;
  for (const auto& [lhs, eq] : g.equations) {
    if (!first) out += "; ";
    first = false;
    out += var(lhs) + " = ";
    if (const auto* c = std::get_if<CrossEq>(&eq)) {
      out += var(c->target);
      continue;
    }
    const auto& f = std::get<FunEq>(eq);
    out += f.symbol;
    if (f.payload) {
      out += "(" + std::to_string(*f.payload) + ")";
    } else if (!f.args.empty()) {
      out += '(';
      for (std::size_t i = 0; i < f.args.size(); ++i) {
        if (i) out += ", ";
        out += var(f.args[i]);
      }
      out += ')';
    }
  }
  out += " in " + var(g.root);
  return out;
}

namespace {

class LetrecReader {
 public:
  explicit LetrecReader(std::string_view text) : text_(text) {}

  Etg read() {
    keyword("letrec");
    Etg g;
    do {
      Position lhs = variable();
      expect('=');
      Equation eq = rhs();
      if (!g.equations.emplace(lhs, std::move(eq)).second)
        fail("duplicate equation for " + lhs.to_string());
    } while (eat(';'));
    keyword("in");
    g.root = variable();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    if (!g.closed()) fail("reference to an undefined variable");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("letrec column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_' || text_[pos_] == '\''))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void keyword(std::string_view kw) {
    if (word() != kw) fail("expected '" + std::string(kw) + "'");
  }

  static std::optional<Position> as_variable(std::string_view w) {
    if (!w.starts_with("x_")) return std::nullopt;
    std::string dotted(w.substr(2));
    for (char& c : dotted)
      if (c == '_') c = '.';
    return parse_position(dotted);
  }

  Position variable() {
    std::size_t at = pos_;
    auto p = as_variable(word());
    if (!p) {
      pos_ = at;
      fail("expected a variable");
    }
    return *p;
  }

  Equation rhs() {
    std::string w = word();
    if (w.empty()) fail("expected an expression");
    if (auto v = as_variable(w)) return CrossEq{*v};
    FunEq f{w, std::nullopt, {}};
    if (!eat('(')) return f;
    skip_ws();
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      std::int64_t value = 0;
      auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
      if (ec != std::errc{}) fail("expected an integer");
      pos_ = static_cast<std::size_t>(end - text_.data());
      f.payload = value;
    } else {
      do f.args.push_back(variable());
      while (eat(','));
    }
    expect(')');
    return f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Etg parse_letrec(std::string_view text) { return LetrecReader(text).read(); }

std::string print_etg(const Etg& g) {
  using ojson = nlohmann::ordered_json;
  ojson doc;
  doc["root"] = g.root.to_string();
  doc["nodes"] = ojson::array();
  for (const auto& [lhs, eq] : g.equations) {
    ojson j;
    j["id"] = lhs.to_string();
    std::visit(overloaded{
                   [&](const FunEq& f) {
                     j["symbol"] = f.symbol;
                     if (f.payload) j["value"] = *f.payload;
                     j["children"] = ojson::array();
                     for (const auto& a : f.args) j["children"].push_back(a.to_string());
                   },
                   [&](const CrossEq& c) { j["ref"] = c.target.to_string(); },
                   [&](const FreeEq& p) {
                     j["ptr"] = {{"index", p.pointer.index}, {"path", p.pointer.path.to_string()}};
                   },
               },
               eq);
    doc["nodes"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace cst
