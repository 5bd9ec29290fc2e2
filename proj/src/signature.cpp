#include "cst/signature.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace cst {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

Signature::Signature(std::vector<SymbolInfo> symbols, PointerPolicy default_policy)
    : symbols_(std::move(symbols)), default_policy_(default_policy) {
  if (symbols_.empty()) throw SignatureError("symbols", "at least one symbol is required");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    SymbolInfo& s = symbols_[i];
    const std::string at = "symbols[" + std::to_string(i) + "]";
    if (!is_identifier(s.name)) throw SignatureError(at + ".name", "invalid symbol name '" + s.name + "'");
    if (s.name == "ptr") throw SignatureError(at + ".name", "'ptr' is reserved");
    if (s.arity < 0) throw SignatureError(at + ".arity", "negative arity");
    if (s.valued && s.arity != 0)
      throw SignatureError(at + ".valued", "only nullary symbols may carry a value");
    if (s.shape_symbol.empty()) s.shape_symbol = upper(s.name);
    if (!is_identifier(s.shape_symbol) || s.shape_symbol == "E" || s.shape_symbol == "P")
      throw SignatureError(at + ".shape", "invalid shape symbol '" + s.shape_symbol + "'");
    if (!by_name_.emplace(s.name, i).second)
      throw SignatureError(at + ".name", "duplicate symbol '" + s.name + "'");
    if (!by_shape_.emplace(s.shape_symbol, i).second)
      throw SignatureError(at + ".shape", "duplicate shape symbol '" + s.shape_symbol + "'");
  }
}

const SymbolInfo* Signature::find(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &symbols_[it->second];
}

const SymbolInfo& Signature::at(std::string_view name) const {
  if (const SymbolInfo* s = find(name)) return *s;
  throw std::out_of_range("undeclared symbol '" + std::string(name) + "'");
}

const SymbolInfo* Signature::find_by_shape(std::string_view shape_symbol) const {
  auto it = by_shape_.find(shape_symbol);
  return it == by_shape_.end() ? nullptr : &symbols_[it->second];
}

const PointerPolicy& Signature::policy(std::string_view name) const {
  const SymbolInfo& s = at(name);
  return s.policy ? *s.policy : default_policy_;
}

int Signature::max_arity() const {
  int m = 0;
  for (const auto& s : symbols_) m = std::max(m, s.arity);
  return m;
}

Signature Signature::with_default_policy(PointerPolicy policy) const {
  return Signature(symbols_, policy);
}

Signature builtin_bintree() {
  return Signature({SymbolInfo{"bin", 2, false, "B", std::nullopt},
                    SymbolInfo{"lf", 0, true, "L", std::nullopt}},
                   PointerPolicy{});
}

bool is_well_formed(const Shape& shape, const Signature& sig) {
  if (!shape.is_sym()) return true;
  const SymbolInfo* s = sig.find_by_shape(shape.symbol());
  if (!s || s->arity != static_cast<int>(shape.children().size())) return false;
  return std::all_of(shape.children().begin(), shape.children().end(),
                     [&](const Shape& c) { return is_well_formed(c, sig); });
}

std::string to_string(Direction direction) {
  switch (direction) {
    case Direction::RightToLeft: return "right-to-left";
    case Direction::LeftToRight: return "left-to-right";
    case Direction::Symmetric: return "symmetric";
    case Direction::Unrestricted: return "unrestricted";
  }
  return "?";
}

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "right-to-left" || text == "rtl") return Direction::RightToLeft;
  if (text == "left-to-right" || text == "ltr") return Direction::LeftToRight;
  if (text == "symmetric" || text == "sym") return Direction::Symmetric;
  if (text == "unrestricted" || text == "unr") return Direction::Unrestricted;
  return std::nullopt;
}

namespace {

using nlohmann::json;

template <class T>
T field_as(const json& obj, const char* key, const std::string& at, T fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw SignatureError(at + "." + key, "wrong value type");
  }
}

PointerPolicy read_policy(const json& j, const std::string& at, PointerPolicy base) {
  auto direction_of = [&](const json& d, const std::string& where) {
    if (!d.is_string()) throw SignatureError(where, "direction must be a string");
    auto dir = parse_direction(d.get<std::string>());
    if (!dir) throw SignatureError(where, "unknown policy keyword '" + d.get<std::string>() + "'");
    return *dir;
  };
  if (j.is_string()) {
    base.direction = direction_of(j, at);
    return base;
  }
  if (!j.is_object()) throw SignatureError(at, "policy must be a keyword or an object");
  for (const auto& [key, _] : j.items())
    if (key != "direction" && key != "indirect" && key != "inner")
      throw SignatureError(at + "." + key, "unknown policy field");
  if (auto it = j.find("direction"); it != j.end()) base.direction = direction_of(*it, at + ".direction");
  base.indirect = field_as<bool>(j, "indirect", at, base.indirect);
  base.inner = field_as<bool>(j, "inner", at, base.inner);
  return base;
}

}  // namespace

Signature load_signature(std::string_view source) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::parse_error& e) {
    throw SignatureError("<document>", e.what());
  }
  if (!doc.is_object()) throw SignatureError("<document>", "expected an object");
  for (const auto& [key, _] : doc.items())
    if (key != "default_policy" && key != "symbols") throw SignatureError(key, "unknown field");

  PointerPolicy def;
  if (auto it = doc.find("default_policy"); it != doc.end())
    def = read_policy(*it, "default_policy", PointerPolicy{});

  auto syms = doc.find("symbols");
  if (syms == doc.end() || !syms->is_array()) throw SignatureError("symbols", "expected a list");
  std::vector<SymbolInfo> out;
  for (std::size_t i = 0; i < syms->size(); ++i) {
    const json& s = (*syms)[i];
    const std::string at = "symbols[" + std::to_string(i) + "]";
    if (!s.is_object()) throw SignatureError(at, "expected an object");
    for (const auto& [key, _] : s.items())
      if (key != "name" && key != "arity" && key != "valued" && key != "shape" && key != "policy")
        throw SignatureError(at + "." + key, "unknown field");
    if (!s.contains("name")) throw SignatureError(at + ".name", "missing");
    if (!s.contains("arity")) throw SignatureError(at + ".arity", "missing");
    SymbolInfo info;
    info.name = field_as<std::string>(s, "name", at, "");
    info.arity = field_as<int>(s, "arity", at, 0);
    info.valued = field_as<bool>(s, "valued", at, false);
    info.shape_symbol = field_as<std::string>(s, "shape", at, "");
    if (auto it = s.find("policy"); it != s.end()) info.policy = read_policy(*it, at + ".policy", def);
    out.push_back(std::move(info));
  }
  return Signature(std::move(out), def);
}

std::string print_signature(const Signature& sig) {
  using ojson = nlohmann::ordered_json;
  auto policy_json = [](const PointerPolicy& p) {
    ojson j;
    j["direction"] = to_string(p.direction);
    j["indirect"] = p.indirect;
    j["inner"] = p.inner;
    return j;
  };
  ojson doc;
  doc["default_policy"] = policy_json(sig.default_policy());
  doc["symbols"] = ojson::array();
  for (const auto& s : sig.symbols()) {
    ojson j;
    j["name"] = s.name;
    j["arity"] = s.arity;
    j["valued"] = s.valued;
    j["shape"] = s.shape_symbol;
    if (s.policy) j["policy"] = policy_json(*s.policy);
    doc["symbols"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace cst
