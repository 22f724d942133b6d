#include "gsp4/characters.hpp"

#include <stdexcept>

namespace gsp4 {

void CharacterGroup::declare_basis(const std::string& symbol, long order) {
  if (symbol.empty() || symbol == "1") throw std::invalid_argument("reserved character symbol");
  if (order < 0 || order == 1) throw std::invalid_argument("bad order for character " + symbol);
  if (order_.count(symbol) || named_.count(symbol))
    throw std::invalid_argument("character declared twice: " + symbol);
  order_[symbol] = order;
}

void CharacterGroup::define(const std::string& name, const std::map<std::string, long>& exps) {
  if (name.empty() || name == "1") throw std::invalid_argument("reserved character name");
  if (order_.count(name) || named_.count(name)) throw std::invalid_argument("character declared twice: " + name);
  named_[name] = make(exps);
}

bool CharacterGroup::has(const std::string& name) const {
  return name == "1" || order_.count(name) > 0 || named_.count(name) > 0;
}

Character CharacterGroup::get(const std::string& name) const {
  if (name == "1") return trivial();
  if (auto it = named_.find(name); it != named_.end()) return it->second;
  if (order_.count(name)) return make({{name, 1}});
  throw std::invalid_argument("undeclared character: " + name);
}

std::vector<std::string> CharacterGroup::classes() const {
  std::vector<std::string> out;
  for (const auto& [s, o] : order_)
    if (o == 2) out.push_back(s);
  return out;
}

Character CharacterGroup::make(const std::map<std::string, long>& exps) const {
  Character c;
  for (const auto& [s, e] : exps) {
    // allow defined names as factors too
    if (!order_.count(s)) {
      if (auto it = named_.find(s); it != named_.end()) {
        c = mul(c, pow(it->second, e));
        continue;
      }
      throw std::invalid_argument("undeclared character symbol: " + s);
    }
    long o = order_.at(s);
    long v = c.exps.count(s) ? c.exps[s] + e : e;
    if (o > 0) v = ((v % o) + o) % o;
    if (v == 0)
      c.exps.erase(s);
    else
      c.exps[s] = v;
  }
  return c;
}

Character CharacterGroup::mul(const Character& a, const Character& b) const {
  Character c = a;
  for (const auto& [s, e] : b.exps) {
    long o = order_.at(s);
    long v = (c.exps.count(s) ? c.exps[s] : 0) + e;
    if (o > 0) v %= o;
    if (v == 0)
      c.exps.erase(s);
    else
      c.exps[s] = v;
  }
  return c;
}

Character CharacterGroup::inv(const Character& a) const { return pow(a, -1); }

Character CharacterGroup::pow(const Character& a, long k) const {
  Character c;
  for (const auto& [s, e] : a.exps) {
    long o = order_.at(s);
    long v = e * k;
    if (o > 0) v = ((v % o) + o) % o;
    if (v != 0) c.exps[s] = v;
  }
  return c;
}

bool CharacterGroup::is_quadratic(const Character& a) const { return !is_trivial(a) && is_trivial(pow(a, 2)); }

bool CharacterGroup::has_square_root(const Character& a) const {
  for (const auto& [s, e] : a.exps) {
    long o = order_.at(s);
    if (o == 0) {
      if (e % 2 != 0) return false;
    } else if (o % 2 == 0) {
      // 2x = e mod o needs e even
      if (e % 2 != 0) return false;
    }
  }
  return true;
}

Character CharacterGroup::class_character(const std::string& token) const {
  if (token == "1") return trivial();
  Character c;
  std::size_t start = 0;
  while (start <= token.size()) {
    std::size_t star = token.find('*', start);
    std::string part = token.substr(start, star == std::string::npos ? std::string::npos : star - start);
    auto it = order_.find(part);
    if (it == order_.end() || it->second != 2) throw std::invalid_argument("undeclared square class: " + part);
    c = mul(c, make({{part, 1}}));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return c;
}

std::optional<std::string> CharacterGroup::class_token(const Character& a) const {
  if (is_trivial(a)) return "1";
  std::string out;
  for (const auto& [s, e] : a.exps) {
    if (order_.at(s) != 2) return std::nullopt;
    if (!out.empty()) out += '*';
    out += s;
  }
  return out;
}

std::string CharacterGroup::str(const Character& a) const {
  if (is_trivial(a)) return "1";
  std::string out;
  for (const auto& [s, e] : a.exps) {
    if (!out.empty()) out += '*';
    out += s;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace gsp4
