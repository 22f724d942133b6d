#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gsp4 {

// A Hecke character, recorded as exponents over the declared basis symbols.
struct Character {
  std::map<std::string, long> exps;  // normalised: no zero entries, reduced mod order
  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
};

// Finitely generated abelian group of symbolic characters. Basis symbols have an order
// (0 for infinite order). Square-class tokens are quadratic basis symbols; "1" is trivial.
class CharacterGroup {
 public:
  // Throws std::invalid_argument on a duplicate symbol or order 1 / negative order.
  void declare_basis(const std::string& symbol, long order);
  void declare_class(const std::string& token) { declare_basis(token, 2); }
  // Named handle for a product of basis symbols. Throws on unknown symbols or duplicate names.
  void define(const std::string& name, const std::map<std::string, long>& exps);

  bool has_basis(const std::string& symbol) const { return order_.count(symbol) > 0; }
  bool has(const std::string& name) const;
  Character get(const std::string& name) const;  // basis symbols and defined names
  std::vector<std::string> classes() const;      // quadratic basis symbols

  Character trivial() const { return {}; }
  Character make(const std::map<std::string, long>& exps) const;
  Character mul(const Character& a, const Character& b) const;
  Character inv(const Character& a) const;
  Character pow(const Character& a, long k) const;
  Character div(const Character& a, const Character& b) const { return mul(a, inv(b)); }

  bool is_trivial(const Character& a) const { return a.exps.empty(); }
  bool is_quadratic(const Character& a) const;  // order exactly 2
  bool has_square_root(const Character& a) const;
  // Character of the square class `token` ("1" gives the trivial character).
  Character class_character(const std::string& token) const;
  // Token naming a character of order <= 2 built from quadratic symbols, e.g. "a" or "a*b".
  std::optional<std::string> class_token(const Character& a) const;

  std::string str(const Character& a) const;

 private:
  std::map<std::string, long> order_;
  std::map<std::string, Character> named_;
};

}  // namespace gsp4
