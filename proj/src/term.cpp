#include "cst/term.hpp"

#include <cctype>
#include <charconv>

namespace cst {

Term Term::ptr(int index, Position path) { return ptr(Pointer{std::move(path), index}); }

Term Term::ptr(Pointer pointer) { return Term(std::make_shared<const Node>(std::move(pointer))); }

Term Term::fun(std::string symbol, std::vector<Term> children, std::optional<std::int64_t> payload,
               std::optional<Pointer> inner) {
  return Term(std::make_shared<const Node>(
      Fun{std::move(symbol), std::move(inner), payload, std::move(children)}));
}

Term Term::leaf(std::string symbol, std::int64_t payload) {
  return fun(std::move(symbol), {}, payload);
}

std::size_t Term::node_count() const {
  if (is_ptr()) return 1;
  std::size_t n = 1;
  for (const Term& c : fun().children) n += c.node_count();
  return n;
}

std::optional<Term> Term::at(const Position& p) const {
  const Term* cur = this;
  for (int step : p.steps()) {
    if (!cur->is_fun() || step > static_cast<int>(cur->fun().children.size())) return std::nullopt;
    cur = &cur->fun().children[static_cast<std::size_t>(step - 1)];
  }
  return *cur;
}

bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_ptr() != b.is_ptr()) return a.is_ptr() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_ptr()) return a.pointer() <=> b.pointer();
  const auto& x = a.fun();
  const auto& y = b.fun();
  if (auto c = x.symbol <=> y.symbol; c != 0) return c;
  if (auto c = x.payload <=> y.payload; c != 0) return c;
  if (auto c = x.inner <=> y.inner; c != 0) return c;
  return std::lexicographical_compare_three_way(x.children.begin(), x.children.end(),
                                                y.children.begin(), y.children.end());
}

std::string to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DanglingIndex: return "DanglingIndex";
    case ErrorKind::InvalidPosition: return "InvalidPosition";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::PayloadMismatch: return "PayloadMismatch";
    case ErrorKind::InnerPtrForbidden: return "InnerPtrForbidden";
    case ErrorKind::ParseFailure: return "ParseFailure";
  }
  return "?";
}

std::string TypeError::message() const {
  return to_string(kind) + " at " + path.to_string() + ": " + detail;
}

namespace {

void print_pointer(const Pointer& p, std::string& out) {
  out += "ptr(";
  out += std::to_string(p.index);
  if (!p.path.is_root()) {
    out += ',';
    out += p.path.to_string();
  }
  out += ')';
}

void print(const Term& t, std::string& out) {
  if (t.is_ptr()) {
    print_pointer(t.pointer(), out);
    return;
  }
  const auto& f = t.fun();
  out += f.symbol;
  if (f.inner) {
    out += '[';
    print_pointer(*f.inner, out);
    out += ']';
  }
  if (f.payload) {
    out += '(';
    out += std::to_string(*f.payload);
    out += ')';
  } else if (!f.children.empty()) {
    out += '(';
    for (std::size_t i = 0; i < f.children.size(); ++i) {
      if (i) out += ',';
      print(f.children[i], out);
    }
    out += ')';
  }
}

struct ParseAbort {
  TypeError error;
};

class TermParser {
 public:
  TermParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Term parse_all() {
    Position root;
    Term t = term(root);
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  // One argument slot of a symbol application: either a subterm or an integer.
  struct Arg {
    std::optional<Term> term;
    std::optional<std::int64_t> value;
  };

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
        ++column;
      }
    }
    throw ParseAbort{TypeError{Position{}, ErrorKind::ParseFailure,
                               "line " + std::to_string(line) + ", column " +
                                   std::to_string(column) + ": " + what}};
  }

  [[noreturn]] static void structural(const Position& at, ErrorKind kind, std::string detail) {
    throw ParseAbort{TypeError{at, kind, std::move(detail)}};
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_integer() {
    skip_ws();
    return pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            ((text_[pos_] == '-' || text_[pos_] == '+') && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))));
  }

  std::int64_t integer() {
    skip_ws();
    const char* begin = text_.data() + pos_;
    if (pos_ < text_.size() && text_[pos_] == '+') ++begin;
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_' || text_[pos_] == '\''))
        ++pos_;
    }
    if (start == pos_) fail("expected a symbol");
    return std::string(text_.substr(start, pos_ - start));
  }

  Position position() {
    skip_ws();
    if (text_.substr(pos_).starts_with("ε")) {
      pos_ += std::string_view("ε").size();
      return {};
    }
    if (pos_ < text_.size() && text_[pos_] == 'e') {
      ++pos_;
      return {};
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    auto p = parse_position(text_.substr(start, pos_ - start));
    if (!p) {
      pos_ = start;
      fail("expected a position");
    }
    return *p;
  }

  // After the 'ptr' keyword.
  Pointer pointer_body() {
    expect('(');
    std::size_t at = pos_;
    std::int64_t index = integer();
    if (index < 1 || index > 1'000'000) {
      pos_ = at;
      fail("pointer index must be a positive integer");
    }
    Position path;
    if (eat(',')) path = position();
    expect(')');
    return Pointer{std::move(path), static_cast<int>(index)};
  }

  Term term(const Position& here) {
    std::size_t start = pos_;
    std::string name = identifier();
    if (name == "ptr") return Term::ptr(pointer_body());

    const SymbolInfo* info = sig_.find(name);
    if (!info) {
      pos_ = start;
      skip_ws();
      fail("unknown symbol '" + name + "'");
    }

    std::optional<Pointer> inner;
    if (eat('[')) {
      std::string kw = identifier();
      if (kw != "ptr") fail("expected 'ptr' in pointer slot");
      inner = pointer_body();
      expect(']');
    }

    std::vector<Arg> args;
    if (eat('(')) {
      int index = 1;
      do {
        if (at_integer()) {
          args.push_back(Arg{std::nullopt, integer()});
        } else {
          args.push_back(Arg{term(here.child(index)), std::nullopt});
        }
        ++index;
      } while (eat(','));
      expect(')');
    }

    if (info->valued) {
      if (args.size() != 1 || !args[0].value)
        structural(here, ErrorKind::PayloadMismatch,
                   "'" + name + "' expects exactly one integer value");
      return Term::fun(name, {}, args[0].value, std::move(inner));
    }
    std::vector<Term> children;
    for (auto& a : args) {
      if (a.value)
        structural(here, ErrorKind::PayloadMismatch, "'" + name + "' does not carry a value");
      children.push_back(std::move(*a.term));
    }
    if (static_cast<int>(children.size()) != info->arity)
      structural(here, ErrorKind::ArityMismatch,
                 "'" + name + "' expects " + std::to_string(info->arity) + " children, got " +
                     std::to_string(children.size()));
    return Term::fun(name, std::move(children), std::nullopt, std::move(inner));
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Checked<Term> parse_term(std::string_view text, const Signature& sig) {
  try {
    return TermParser(text, sig).parse_all();
  } catch (ParseAbort& abort) {
    return std::move(abort.error);
  }
}

std::string print_term(const Term& term) {
  std::string out;
  print(term, out);
  return out;
}

}  // namespace cst
