#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "kmhom/json_io.hpp"

namespace kmhom {

/// Schema violations are collected, not reported first-error-only.
class ProblemError : public std::runtime_error {
 public:
  explicit ProblemError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "problem file is invalid:";
    for (const auto& i : v) s += "\n  - " + i;
    return s;
  }
  std::vector<std::string> issues_;
};

/// Parsed problem file:
///   {
///     "cartan": [[2,-1],[-1,2]],          // integer matrix
///     "subset_S": [1],                    // 1-based indices, optional
///     "weights": {"lambda": {"labels": ["0","0"],
///                            "root_offset": ["0","0"]}},  // offset optional
///     "budgets": {"height":8,"orbit":10000,"slice_cap":5000,"iso_n_cap":4}
///   }
/// Rationals must be integer or p/q strings; unknown keys are rejected.
struct ProblemFile {
  std::vector<std::vector<long long>> matrix;
  CartanData cartan = CartanData::validate({{2}});
  SubsetS subset;
  std::map<std::string, Weight> weights;
  Budgets budgets;

  const Weight& weight(const std::string& name) const {
    auto it = weights.find(name);
    require(it != weights.end(), ErrorKind::InvalidArgument,
            "problem file does not define weight '" + name + "'");
    return it->second;
  }
  bool has_weight(const std::string& name) const { return weights.count(name) > 0; }
};

namespace detail {

inline void check_keys(const Json& obj, const std::vector<std::string>& allowed,
                       const std::string& where, std::vector<std::string>& issues) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const auto& k : allowed) ok = ok || it.key() == k;
    if (!ok) issues.push_back(where + ": unknown key '" + it.key() + "'");
  }
}

inline std::optional<std::vector<Rational>> parse_rational_array(
    const Json& j, const std::string& where, std::size_t expect,
    std::vector<std::string>& issues) {
  if (!j.is_array()) {
    issues.push_back(where + ": expected an array of rational strings");
    return std::nullopt;
  }
  if (j.size() != expect) {
    issues.push_back(where + ": expected " + std::to_string(expect) +
                     " entries, got " + std::to_string(j.size()));
    return std::nullopt;
  }
  std::vector<Rational> out;
  bool ok = true;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      issues.push_back(where + "[" + std::to_string(i) +
                       "]: rationals must be integer or p/q strings");
      ok = false;
      continue;
    }
    auto q = parse_rational(j[i].get<std::string>());
    if (!q) {
      issues.push_back(where + "[" + std::to_string(i) + "]: '" +
                       j[i].get<std::string>() +
                       "' is not an integer or p/q string");
      ok = false;
      continue;
    }
    out.push_back(std::move(*q));
  }
  if (!ok) return std::nullopt;
  return out;
}

inline std::optional<int> env_int(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  long x = std::strtol(v, &end, 10);
  if (end == nullptr || *end != '\0') return std::nullopt;
  return static_cast<int>(x);
}

}  // namespace detail

/// Budget defaults, overridden by KMHOM_BUDGET_* environment variables,
/// overridden in turn by the problem file's "budgets" object.
inline Budgets budgets_from_env() {
  Budgets b;
  if (auto v = detail::env_int("KMHOM_BUDGET_HEIGHT")) b.height = *v;
  if (auto v = detail::env_int("KMHOM_BUDGET_ORBIT")) b.orbit = *v;
  if (auto v = detail::env_int("KMHOM_BUDGET_SLICE_CAP")) b.slice_cap = *v;
  if (auto v = detail::env_int("KMHOM_BUDGET_ISO_N_CAP")) b.iso_n_cap = *v;
  return b;
}

inline ProblemFile parse_problem_json(const Json& root) {
  std::vector<std::string> issues;
  if (!root.is_object()) throw ProblemError({"top level must be a JSON object"});
  detail::check_keys(root, {"cartan", "subset_S", "weights", "budgets"}, "top level",
                     issues);

  ProblemFile p;
  p.budgets = budgets_from_env();

  // cartan
  bool cartan_ok = false;
  if (!root.contains("cartan")) {
    issues.push_back("missing required key 'cartan'");
  } else if (!root["cartan"].is_array() || root["cartan"].empty()) {
    issues.push_back("cartan: expected a nonempty integer matrix");
  } else {
    const Json& m = root["cartan"];
    bool shape_ok = true;
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != m.size()) {
        issues.push_back("cartan: matrix must be square");
        shape_ok = false;
        break;
      }
      for (const auto& e : row)
        if (!e.is_number_integer()) {
          issues.push_back("cartan: entries must be integers");
          shape_ok = false;
          break;
        }
      if (!shape_ok) break;
    }
    if (shape_ok) {
      for (const auto& row : m) {
        std::vector<long long> r;
        for (const auto& e : row) r.push_back(e.get<long long>());
        p.matrix.push_back(std::move(r));
      }
      try {
        p.cartan = CartanData::validate(p.matrix);
        cartan_ok = true;
      } catch (const Error& e) {
        issues.push_back(std::string("cartan: ") + e.what());
      }
    }
  }
  const int n = cartan_ok ? p.cartan.rank() : 0;

  // subset_S
  if (root.contains("subset_S")) {
    if (!root["subset_S"].is_array()) {
      issues.push_back("subset_S: expected an array of 1-based indices");
    } else {
      std::vector<int> members;
      for (const auto& e : root["subset_S"]) {
        if (!e.is_number_integer()) {
          issues.push_back("subset_S: entries must be integers");
          continue;
        }
        long long i = e.get<long long>();
        if (cartan_ok && (i < 1 || i > n)) {
          issues.push_back("subset_S: index " + std::to_string(i) +
                           " out of range 1.." + std::to_string(n));
          continue;
        }
        members.push_back(static_cast<int>(i) - 1);
      }
      p.subset = SubsetS(std::move(members));
    }
  }

  // weights
  if (root.contains("weights")) {
    if (!root["weights"].is_object()) {
      issues.push_back("weights: expected an object of named weights");
    } else if (cartan_ok) {
      for (auto it = root["weights"].begin(); it != root["weights"].end(); ++it) {
        const std::string where = "weights." + it.key();
        if (!it.value().is_object()) {
          issues.push_back(where + ": expected {labels, root_offset}");
          continue;
        }
        detail::check_keys(it.value(), {"labels", "root_offset"}, where, issues);
        if (!it.value().contains("labels")) {
          issues.push_back(where + ": missing 'labels'");
          continue;
        }
        auto lab = detail::parse_rational_array(it.value()["labels"],
                                                where + ".labels", n, issues);
        std::optional<std::vector<Rational>> off =
            std::vector<Rational>(n, Rational(0));
        if (it.value().contains("root_offset"))
          off = detail::parse_rational_array(it.value()["root_offset"],
                                             where + ".root_offset", n, issues);
        if (lab && off)
          p.weights.emplace(it.key(),
                            weight_from_labels_offset(p.cartan, *lab, *off));
      }
    }
  }

  // budgets
  if (root.contains("budgets")) {
    if (!root["budgets"].is_object()) {
      issues.push_back("budgets: expected an object");
    } else {
      detail::check_keys(root["budgets"],
                         {"height", "orbit", "slice_cap", "iso_n_cap"}, "budgets",
                         issues);
      auto grab = [&](const char* key, auto setter) {
        if (!root["budgets"].contains(key)) return;
        const Json& v = root["budgets"][key];
        if (!v.is_number_integer() || v.get<long long>() < 1) {
          issues.push_back(std::string("budgets.") + key +
                           ": expected a positive integer");
          return;
        }
        setter(v.get<long long>());
      };
      grab("height", [&](long long v) { p.budgets.height = static_cast<int>(v); });
      grab("orbit", [&](long long v) { p.budgets.orbit = static_cast<int>(v); });
      grab("slice_cap",
           [&](long long v) { p.budgets.slice_cap = static_cast<int>(v); });
      grab("iso_n_cap", [&](long long v) { p.budgets.iso_n_cap = v; });
    }
  }

  if (!issues.empty()) throw ProblemError(std::move(issues));
  return p;
}

inline ProblemFile parse_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemError({"cannot open '" + path + "'"});
  Json root;
  try {
    root = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ProblemError({std::string("JSON parse error: ") + e.what()});
  }
  return parse_problem_json(root);
}

}  // namespace kmhom
