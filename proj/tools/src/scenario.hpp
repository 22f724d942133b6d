#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsp4/characters.hpp"
#include "gsp4/params.hpp"

namespace gsp4::cli {

// Malformed or inconsistent user input; maps to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LocalDataSet {
  std::string parameter;
  // place -> sign per S_psi label; labels left out take +1
  std::vector<std::pair<std::string, std::map<std::string, int>>> places;
};

struct Scenario {
  CharacterGroup characters;
  std::map<std::string, CuspidalHandle> cuspidals;
  std::map<std::string, FormalParameter> parameters;
  std::map<std::string, LocalDataSet> local_data;
  nlohmann::json requests = nlohmann::json::array();
};

// Parses with // comments allowed. Throws InputError with the byte offset on a syntax
// error, or naming the offending id on a semantic error.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

// "mu^2*a", "chi", "1".
Character parse_character(const CharacterGroup& cg, const std::string& expr);
// Rows of "p/q" strings or integers.
Matrix parse_matrix(const nlohmann::json& j);
nlohmann::json matrix_json(const Matrix& m);

std::string read_file(const std::string& path);

}  // namespace gsp4::cli
