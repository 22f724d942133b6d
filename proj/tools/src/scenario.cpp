#include "scenario.hpp"

#include <fstream>
#include <sstream>

namespace gsp4::cli {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

std::string require_string(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_string()) throw InputError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

long require_int(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number_integer()) throw InputError(where + ": field '" + key + "' must be an integer");
  return v.get<long>();
}

Rational parse_entry(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError("matrix entries must be integers or \"p/q\" strings");
}

void parse_characters(Scenario& s, const json& root) {
  if (root.contains("classes")) {
    for (const auto& c : root.at("classes")) {
      if (!c.is_string()) throw InputError("classes: entries must be strings");
      s.characters.declare_class(c.get<std::string>());
    }
  }
  if (!root.contains("characters")) return;
  for (const auto& c : root.at("characters")) {
    const std::string name = require_string(c, "name", "characters");
    const std::string where = "character " + name;
    if (c.contains("order")) {
      s.characters.declare_basis(name, require_int(c, "order", where));
    } else {
      Character v = parse_character(s.characters, require_string(c, "equals", where));
      s.characters.define(name, v.exps);
    }
  }
}

void parse_cuspidals(Scenario& s, const json& root) {
  if (!root.contains("cuspidals")) return;
  for (const auto& c : root.at("cuspidals")) {
    CuspidalHandle h;
    h.id = require_string(c, "id", "cuspidals");
    const std::string where = "cuspidal " + h.id;
    if (s.cuspidals.count(h.id)) throw InputError(where + ": duplicate id");
    h.N = static_cast<int>(require_int(c, "N", where));
    h.central = parse_character(s.characters, require_string(c, "central", where));
    h.chi = parse_character(s.characters, require_string(c, "chi", where));
    h.sign = static_cast<int>(require_int(c, "sign", where));
    if (c.contains("dihedral_from")) h.dihedral_from = require_string(c, "dihedral_from", where);
    if (c.contains("asai_origin")) h.asai_origin = require_string(c, "asai_origin", where);
    if (c.contains("tensor_origin")) {
      const json& t = c.at("tensor_origin");
      TensorOrigin o;
      o.first = require_string(t, "first", where);
      o.second = require_string(t, "second", where);
      for (const auto* id : {&o.first, &o.second})
        if (!s.cuspidals.count(*id)) throw InputError(where + ": tensor factor " + *id + " is not declared");
      o.omega_first = s.cuspidals.at(o.first).central;
      o.omega_second = s.cuspidals.at(o.second).central;
      h.tensor_origin = o;
    }
    try {
      validate_handle(s.characters, h);
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
    s.cuspidals.emplace(h.id, h);
  }
}

void parse_parameters(Scenario& s, const json& root) {
  if (!root.contains("parameters")) return;
  for (const auto& p : root.at("parameters")) {
    const std::string id = require_string(p, "id", "parameters");
    const std::string where = "parameter " + id;
    if (s.parameters.count(id)) throw InputError(where + ": duplicate id");
    FormalParameter psi;
    psi.chi = parse_character(s.characters, require_string(p, "chi", where));
    for (const auto& term : require(p, "summands", where)) {
      const std::string cid = require_string(term, "cuspidal", where);
      auto it = s.cuspidals.find(cid);
      if (it == s.cuspidals.end()) throw InputError(where + ": undeclared cuspidal " + cid);
      const long d = require_int(term, "d", where);
      if (d < 1) throw InputError(where + ": d must be positive");
      psi.summands.push_back({it->second, static_cast<int>(d)});
    }
    if (p.contains("root_number")) {
      const long r = require_int(p, "root_number", where);
      if (r != 1 && r != -1) throw InputError(where + ": root_number must be 1 or -1");
      psi.root_number_negative = r == -1;
    }
    s.parameters.emplace(id, std::move(psi));
  }
}

void parse_local_data(Scenario& s, const json& root) {
  if (!root.contains("local_data")) return;
  for (const auto& l : root.at("local_data")) {
    const std::string id = require_string(l, "id", "local_data");
    const std::string where = "local data " + id;
    LocalDataSet set;
    set.parameter = require_string(l, "parameter", where);
    if (!s.parameters.count(set.parameter)) throw InputError(where + ": undeclared parameter " + set.parameter);
    for (const auto& place : require(l, "places", where)) {
      std::map<std::string, int> signs;
      if (place.contains("signs")) {
        for (const auto& [label, v] : place.at("signs").items()) {
          if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1))
            throw InputError(where + ": signs must be 1 or -1");
          signs[label] = v.get<int>();
        }
      }
      set.places.emplace_back(require_string(place, "place", where), std::move(signs));
    }
    s.local_data.emplace(id, std::move(set));
  }
}

}  // namespace

Character parse_character(const CharacterGroup& cg, const std::string& expr) {
  Character out = cg.trivial();
  std::stringstream in(expr);
  std::string factor;
  try {
    while (std::getline(in, factor, '*')) {
      long k = 1;
      if (auto caret = factor.find('^'); caret != std::string::npos) {
        k = std::stol(factor.substr(caret + 1));
        factor = factor.substr(0, caret);
      }
      out = cg.mul(out, cg.pow(cg.get(factor), k));
    }
  } catch (const std::invalid_argument& e) {
    throw InputError("bad character expression '" + expr + "': " + e.what());
  }
  return out;
}

Matrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) throw InputError("matrix must be a list of rows");
  const std::size_t cols = j.front().size();
  Matrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InputError("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) {
      try {
        m(r, c) = parse_entry(j[r][c]);
      } catch (const std::invalid_argument& e) {
        throw InputError(std::string("matrix entry: ") + e.what());
      }
    }
  }
  return m;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Scenario parse_scenario(const std::string& text) {
  json root;
  try {
    root = json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw InputError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!root.is_object()) throw InputError("scenario must be an object");
  Scenario s;
  try {
    parse_characters(s, root);
    parse_cuspidals(s, root);
    parse_parameters(s, root);
    parse_local_data(s, root);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed scenario: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (root.contains("requests")) {
    if (!root.at("requests").is_array()) throw InputError("requests must be a list");
    s.requests = root.at("requests");
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Scenario load_scenario(const std::string& path) { return parse_scenario(read_file(path)); }

}  // namespace gsp4::cli
