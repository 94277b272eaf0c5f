#pragma once

#include <deque>
#include <set>
#include <vector>

#include "kmhom/budgets.hpp"
#include "kmhom/roots.hpp"

namespace kmhom {

/// One Kac-Kazhdan pair at lambda: a positive root beta with
/// 2(lambda + rho, beta) = n (beta, beta) for a positive integer n, or the
/// AllPositive marker (n absent) when beta is isotropic and
/// (lambda + rho, beta) = 0, in which case every positive n qualifies.
struct KKPair {
  RootVec beta;
  std::optional<long long> n;  // nullopt = AllPositive
};

inline std::vector<KKPair> kk_pairs(const CartanData& cd, const RootTable& table,
                                    const Weight& lambda) {
  std::vector<KKPair> out;
  Weight shifted = lambda + Weight::rho(cd.rank());
  for (const RootVec& beta : table.positive_roots()) {
    Rational nn = cd.norm(beta);
    Rational p = pair_weight_root(cd, shifted, beta);
    if (nn == 0) {
      if (p == 0) out.push_back(KKPair{beta, std::nullopt});
      continue;
    }
    Rational n = Rational(2) * p / nn;
    if (is_positive_integer(n)) out.push_back(KKPair{beta, rational_to_int64(n)});
  }
  return out;  // positive_roots() is already (height, lex) sorted
}

struct LinkageClass {
  Weight seed;
  std::vector<Weight> members;  // discovery order, seed first
  bool truncated = false;
  Budgets budgets;
  int depth_cap = 0;  // BFS depth budget (tied to the height budget)
};

/// Truncated equivalence class of lambda under the relation generated by
/// mu = nu - n beta with 2(nu + rho, beta) = n (beta, beta). BFS explores
/// both directions of each generating pair: downward moves come from
/// kk_pairs(nu); an upward move nu + n beta is taken whenever
/// 2(nu + n beta + rho, beta) = n (beta, beta), i.e. n = -2(nu+rho,beta)/(beta,beta).
/// Isotropic pairs contribute nu -+ n beta for n up to the configured cap.
/// The BFS depth is capped by the height budget, the class size by the orbit
/// budget; either binding sets the truncation flag.
inline LinkageClass linkage_class(const CartanData& cd, const RootTable& table,
                                  const Weight& lambda, const Budgets& budgets) {
  LinkageClass out;
  out.seed = lambda;
  out.budgets = budgets;
  out.depth_cap = budgets.height;
  out.truncated = !table.complete();

  std::vector<RootVec> roots = table.positive_roots();
  std::set<Weight> seen;
  std::deque<std::pair<Weight, int>> queue;
  seen.insert(lambda);
  out.members.push_back(lambda);
  queue.emplace_back(lambda, 0);
  int depth = 0;

  auto push = [&](const Weight& w) -> bool {
    if (!seen.insert(w).second) return true;
    if (static_cast<int>(out.members.size()) >= budgets.orbit) {
      out.truncated = true;
      return false;
    }
    out.members.push_back(w);
    queue.emplace_back(w, depth + 1);
    return true;
  };

  Weight rho = Weight::rho(cd.rank());
  while (!queue.empty()) {
    Weight nu = queue.front().first;
    depth = queue.front().second;
    queue.pop_front();
    if (depth >= out.depth_cap) {
      out.truncated = true;
      continue;
    }
    Weight shifted = nu + rho;
    for (const RootVec& beta : roots) {
      Rational nn = cd.norm(beta);
      Rational p = pair_weight_root(cd, shifted, beta);
      if (nn == 0) {
        if (p != 0) continue;
        long long cap = budgets.iso_cap_for(beta);
        for (long long n = 1; n <= cap; ++n) {
          if (!push(sub_root(nu, beta, Rational(n)))) return out;
          if (!push(sub_root(nu, beta, Rational(-n)))) return out;
        }
        continue;
      }
      Rational down = Rational(2) * p / nn;
      if (is_positive_integer(down)) {
        if (!push(sub_root(nu, beta, down))) return out;
      }
      Rational up = -down;
      if (is_positive_integer(up)) {
        if (!push(sub_root(nu, beta, -up))) return out;
      }
    }
  }
  return out;
}

/// Positive real roots beta with <lambda + rho, beta^vee> integral, each
/// paired with its reflection word; these generate (a truncation of) the
/// integral Weyl group of lambda. Since <rho, beta^vee> is an integer for
/// real beta, the rho-shift does not change the integrality notion.
inline std::vector<std::pair<RootVec, WeylWord>> integral_system(
    const CartanData& cd, const RootTable& table, const Weight& lambda) {
  std::vector<std::pair<RootVec, WeylWord>> out;
  Weight shifted = lambda + Weight::rho(cd.rank());
  for (const auto& e : table.real_entries()) {
    if (is_integer(pair_weight_coroot(cd, shifted, e.root)))
      out.emplace_back(e.root, reflection_for_root(cd, table, e.root));
  }
  return out;
}

struct CriticalityReport {
  bool critical = false;
  std::optional<RootVec> witness;
  int height_scanned = 0;
};

/// A class is critical when its integral root set meets the imaginary
/// roots: a witness is an imaginary beta with (beta,beta) = 0 and
/// (lambda+rho, beta) = 0, or (beta,beta) < 0 and 2(lambda+rho,beta)/(beta,beta)
/// integral. Negative witnesses are only valid up to the table height.
inline CriticalityReport is_critical(const CartanData& cd, const RootTable& table,
                                     const Weight& lambda) {
  CriticalityReport rep;
  rep.height_scanned = table.height_budget();
  Weight shifted = lambda + Weight::rho(cd.rank());
  for (const RootVec& beta : table.positive_roots()) {
    Rational nn = cd.norm(beta);
    if (nn > 0) continue;
    Rational p = pair_weight_root(cd, shifted, beta);
    bool hit = (nn == 0) ? (p == 0) : is_integer(Rational(2) * p / nn);
    if (hit) {
      rep.critical = true;
      rep.witness = beta;
      return rep;
    }
  }
  return rep;
}

enum class LevelSign { Positive, Negative, Undetermined };

inline const char* level_sign_name(LevelSign s) {
  switch (s) {
    case LevelSign::Positive: return "Positive";
    case LevelSign::Negative: return "Negative";
    case LevelSign::Undetermined: return "Undetermined";
  }
  return "?";
}

struct LevelReport {
  LevelSign sign = LevelSign::Undetermined;
  std::optional<Weight> witness;  // the dominant (resp. antidominant) weight
  bool both = false;              // some member is dominant and some antidominant
  bool truncated = false;
};

/// Classifies the class of lambda as positive level (contains a dominant
/// weight) or negative level (contains an antidominant weight) by scanning
/// the dot orbit under the integral Weyl group generators. Critical classes
/// are Undetermined by definition; at most one dominant and one antidominant
/// member may ever appear (asserted).
inline LevelReport level_sign(const CartanData& cd, const RootTable& table,
                              const Weight& lambda, const Budgets& budgets) {
  LevelReport rep;
  if (is_critical(cd, table, lambda).critical) return rep;
  std::vector<WeylWord> gens;
  for (auto& [beta, w] : integral_system(cd, table, lambda)) gens.push_back(w);
  DotOrbit orbit = dot_orbit(cd, lambda, gens, budgets.orbit);
  rep.truncated = orbit.truncated || !table.complete();
  std::optional<Weight> dom, antidom;
  for (const Weight& w : orbit.members) {
    DominanceReport d = dominance(cd, w, table);
    if (d.dominant) {
      require(!dom || *dom == w, ErrorKind::InvalidArgument,
              "two dominant weights in one orbit");
      if (!dom) dom = w;
    }
    if (d.antidominant) {
      require(!antidom || *antidom == w, ErrorKind::InvalidArgument,
              "two antidominant weights in one orbit");
      if (!antidom) antidom = w;
    }
  }
  rep.both = dom.has_value() && antidom.has_value();
  if (dom) {
    rep.sign = LevelSign::Positive;
    rep.witness = dom;
  } else if (antidom) {
    rep.sign = LevelSign::Negative;
    rep.witness = antidom;
  }
  return rep;
}

}  // namespace kmhom
