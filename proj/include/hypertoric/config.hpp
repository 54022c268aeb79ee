#ifndef HYPERTORIC_CONFIG_HPP
#define HYPERTORIC_CONFIG_HPP

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypertoric/lattice.hpp"

namespace hypertoric {

// Validation failure carrying every violated invariant, one per line.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::vector<std::string>& problems)
      : std::invalid_argument(join(problems)) {}

 private:
  static std::string join(const std::vector<std::string>& problems) {
    std::ostringstream os;
    os << "invalid config:";
    for (const auto& p : problems) os << "\n  - " << p;
    return os.str();
  }
};

struct TheoryConfig {
  DatumPtr datum;
  std::vector<int> alpha;       // defaults to all minus
  std::set<int> s;              // defaults to empty
  IntVec mu;                    // defaults to zero
  std::optional<IntVec> chi;    // optional; commands may require it
  Flavor flavor = Flavor::Small;

  ModuleSignature signature() const { return ModuleSignature(datum, alpha, s, mu, flavor); }
};

inline TheoryConfig config_from_json(const nlohmann::json& j) {
  std::vector<std::string> problems;
  auto need_int = [&](const char* key) -> std::optional<Int> {
    if (!j.contains(key)) {
      problems.push_back(std::string("missing key \"") + key + "\"");
      return std::nullopt;
    }
    if (!j[key].is_number_integer()) {
      problems.push_back(std::string("key \"") + key + "\" must be an integer");
      return std::nullopt;
    }
    return j[key].get<Int>();
  };

  const auto n_opt = need_int("n");
  const auto k_opt = need_int("k");
  int n = n_opt ? static_cast<int>(*n_opt) : 0;
  int k = k_opt ? static_cast<int>(*k_opt) : 0;
  if (n_opt && n < 1) problems.push_back("n must be positive");
  if (k_opt && (k < 0 || k > n)) problems.push_back("need 0 <= k <= n");

  std::vector<IntVec> iota;
  if (!j.contains("iota")) {
    problems.push_back("missing key \"iota\"");
  } else if (!j["iota"].is_array()) {
    problems.push_back("\"iota\" must be an n x k integer matrix");
  } else {
    for (const auto& row : j["iota"]) {
      IntVec r;
      if (!row.is_array()) {
        problems.push_back("\"iota\" rows must be arrays");
        break;
      }
      for (const auto& v : row) {
        if (!v.is_number_integer()) {
          problems.push_back("\"iota\" entries must be integers");
          break;
        }
        r.push_back(v.get<Int>());
      }
      iota.push_back(std::move(r));
    }
    if (n_opt && static_cast<int>(iota.size()) != n)
      problems.push_back("\"iota\" must have n rows");
    for (const auto& r : iota)
      if (k_opt && static_cast<int>(r.size()) != k) {
        problems.push_back("\"iota\" rows must have length k");
        break;
      }
  }

  TheoryConfig config;
  if (problems.empty()) {
    try {
      config.datum = make_datum(n, k, iota);
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
  }

  config.alpha.assign(static_cast<std::size_t>(std::max(n, 0)), -1);
  if (j.contains("alpha")) {
    if (!j["alpha"].is_string()) {
      problems.push_back("\"alpha\" must be a string of '+'/'-'");
    } else {
      const std::string a = j["alpha"].get<std::string>();
      if (static_cast<int>(a.size()) != n) {
        problems.push_back("\"alpha\" must have length n");
      } else {
        for (int i = 0; i < n; ++i) {
          if (a[static_cast<std::size_t>(i)] == '+')
            config.alpha[static_cast<std::size_t>(i)] = 1;
          else if (a[static_cast<std::size_t>(i)] == '-')
            config.alpha[static_cast<std::size_t>(i)] = -1;
          else
            problems.push_back("\"alpha\" entries must be '+' or '-'");
        }
      }
    }
  }

  if (j.contains("S")) {
    if (!j["S"].is_array()) {
      problems.push_back("\"S\" must be a list of 1-based indices");
    } else {
      for (const auto& v : j["S"]) {
        if (!v.is_number_integer()) {
          problems.push_back("\"S\" entries must be integers");
          break;
        }
        const Int i = v.get<Int>();
        if (i < 1 || i > n)
          problems.push_back("\"S\" entry " + std::to_string(i) + " out of range");
        else
          config.s.insert(static_cast<int>(i));
      }
    }
  }

  config.mu.assign(static_cast<std::size_t>(std::max(n, 0)), 0);
  if (j.contains("mu")) {
    if (!j["mu"].is_array() || static_cast<int>(j["mu"].size()) != n) {
      problems.push_back("\"mu\" must be an integer list of length n");
    } else {
      for (int i = 0; i < n; ++i) {
        if (!j["mu"][static_cast<std::size_t>(i)].is_number_integer()) {
          problems.push_back("\"mu\" entries must be integers");
          break;
        }
        config.mu[static_cast<std::size_t>(i)] = j["mu"][static_cast<std::size_t>(i)].get<Int>();
      }
    }
  }

  if (j.contains("chi")) {
    if (!j["chi"].is_array() || static_cast<int>(j["chi"].size()) != k) {
      problems.push_back("\"chi\" must be an integer list of length k");
    } else {
      IntVec chi;
      for (const auto& v : j["chi"]) {
        if (!v.is_number_integer()) {
          problems.push_back("\"chi\" entries must be integers");
          break;
        }
        chi.push_back(v.get<Int>());
      }
      if (static_cast<int>(chi.size()) == k) config.chi = std::move(chi);
    }
  }

  if (j.contains("flavor")) {
    const std::string f = j["flavor"].is_string() ? j["flavor"].get<std::string>() : "";
    if (f == "small")
      config.flavor = Flavor::Small;
    else if (f == "big")
      config.flavor = Flavor::Big;
    else
      problems.push_back("\"flavor\" must be \"small\" or \"big\"");
  }

  if (!problems.empty()) throw ConfigError(problems);
  return config;
}

inline TheoryConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open '" + path + "'"});
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError({std::string("JSON parse error: ") + e.what()});
  }
  return config_from_json(j);
}

}  // namespace hypertoric

#endif
