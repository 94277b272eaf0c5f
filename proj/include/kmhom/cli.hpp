#pragma once

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kmhom/homs.hpp"
#include "kmhom/problem.hpp"

namespace kmhom::cli {

inline std::string root_text(const RootVec& r) {
  std::string s = "(";
  for (int i = 0; i < r.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(r.k[i]);
  }
  return s + ")";
}

inline std::string weight_text(const CartanData& cd, const Weight& w) {
  std::string s = "labels(";
  auto lab = labels(cd, w);
  for (int i = 0; i < cd.rank(); ++i) {
    if (i) s += ",";
    s += rational_to_string(lab[i]);
  }
  s += ")";
  bool off = false;
  for (const auto& q : w.x) off = off || q != 0;
  if (off) {
    s += " offset(";
    for (int i = 0; i < cd.rank(); ++i) {
      if (i) s += ",";
      s += rational_to_string(w.x[i]);
    }
    s += ")";
  }
  return s;
}

struct Report {
  Json json;
  std::string text;
};

inline Report cmd_roots(const ProblemFile& p) {
  Report r;
  bool truncated = false;
  auto entries = real_roots_up_to(p.cartan, p.budgets.height, &truncated);
  r.json["command"] = "roots";
  r.json["height"] = p.budgets.height;
  r.json["complete"] = !truncated;
  Json rows = Json::array();
  r.text = "positive real roots up to height " +
           std::to_string(p.budgets.height) + (truncated ? " (truncated)" : "") +
           "\n";
  for (const auto& e : entries) {
    Json row;
    row["root"] = to_json(e.root);
    row["height"] = e.root.height();
    WeylWord w = e.word;
    row["word"] = to_json(w);
    row["base"] = e.base + 1;
    rows.push_back(std::move(row));
    r.text += "  " + root_text(e.root) + " ht " + std::to_string(e.root.height()) +
              "\n";
  }
  r.json["roots"] = std::move(rows);
  return r;
}

inline Report cmd_mult(const ProblemFile& p) {
  Report r;
  RootTable table = RootTable::build(p.cartan, p.budgets.height);
  r.json["command"] = "mult";
  r.json["height"] = p.budgets.height;
  r.json["complete"] = table.complete();
  Json rows = Json::array();
  r.text = "root multiplicities up to height " + std::to_string(p.budgets.height) +
           (table.complete() ? "" : " (truncated)") + "\n";
  for (const RootVec& beta : table.positive_roots()) {
    Json row;
    row["root"] = to_json(beta);
    row["height"] = beta.height();
    row["norm"] = rational_to_string(p.cartan.norm(beta));
    row["mult"] = table.mult_of(beta);
    bool real = p.cartan.norm(beta) > 0;
    row["class"] = real ? "real" : "imaginary";
    rows.push_back(std::move(row));
    r.text += "  " + root_text(beta) + " mult " + std::to_string(table.mult_of(beta)) +
              (real ? " real" : " imaginary") + "\n";
  }
  r.json["rows"] = std::move(rows);
  return r;
}

inline Report cmd_weyl(const ProblemFile& p) {
  Report r;
  r.json["command"] = "weyl";
  r.json["subset_S"] = to_json(p.subset);
  auto cls = classify_subset(p.cartan, p.subset);
  r.json["classification"] = subset_type_name(cls.overall);
  r.text = "W_S for S = " + to_json(p.subset).dump() + ": " +
           subset_type_name(cls.overall) + "\n";
  if (cls.overall == SubsetType::Finite && !p.subset.empty()) {
    WeylWord ws = longest_element(p.cartan, p.subset);
    r.json["longest_word"] = to_json(ws);
    r.json["longest_length"] = ws.length();
    r.text += "  longest element has length " + std::to_string(ws.length()) + "\n";
  }
  if (p.has_weight("lambda")) {
    std::vector<WeylWord> gens;
    for (int i : p.subset.members) gens.push_back(WeylWord{{i}});
    DotOrbit orbit = dot_orbit(p.cartan, p.weight("lambda"), gens, p.budgets.orbit);
    Json members = Json::array();
    for (const auto& w : orbit.members)
      members.push_back(weight_to_json(p.cartan, w));
    r.json["dot_orbit"] = {{"size", orbit.members.size()},
                           {"truncated", orbit.truncated}};
    r.json["dot_orbit"]["members"] = std::move(members);
    r.text += "  dot orbit of lambda under W_S: " +
              std::to_string(orbit.members.size()) +
              (orbit.truncated ? " (truncated)" : "") + "\n";
  }
  return r;
}

inline Report cmd_linkage(const ProblemFile& p) {
  Report r;
  const Weight& lam = p.weight("lambda");
  RootTable table = RootTable::build(p.cartan, p.budgets.height);
  r.json["command"] = "linkage";
  r.json["note"] = "ambient linkage";
  Json pairs = Json::array();
  for (const KKPair& kp : kk_pairs(p.cartan, table, lam)) {
    Json e;
    e["beta"] = to_json(kp.beta);
    if (kp.n)
      e["n"] = *kp.n;
    else
      e["n"] = "all";
    pairs.push_back(std::move(e));
  }
  r.json["kk_pairs"] = std::move(pairs);
  LinkageClass cls = linkage_class(p.cartan, table, lam, p.budgets);
  Json members = Json::array();
  for (const auto& w : cls.members) members.push_back(weight_to_json(p.cartan, w));
  r.json["class"] = {{"size", cls.members.size()}, {"truncated", cls.truncated}};
  r.json["class"]["members"] = std::move(members);
  r.json["budgets"] = to_json(p.budgets);
  r.text = "ambient linkage class of " + weight_text(p.cartan, lam) + ": " +
           std::to_string(cls.members.size()) + " members" +
           (cls.truncated ? " (truncated)" : "") + "\n";
  return r;
}

inline Report cmd_block(const ProblemFile& p) {
  Report r;
  const Weight& lam = p.weight("lambda");
  RootTable table = RootTable::build(p.cartan, p.budgets.height);
  CriticalityReport crit = is_critical(p.cartan, table, lam);
  LevelReport level = level_sign(p.cartan, table, lam, p.budgets);
  r.json["command"] = "block";
  r.json["note"] = "ambient linkage";
  r.json["critical"] = crit.critical;
  if (crit.witness) r.json["witness"] = to_json(*crit.witness);
  r.json["height_scanned"] = crit.height_scanned;
  r.json["level"] = level_sign_name(level.sign);
  if (level.witness)
    r.json["level_witness"] = weight_to_json(p.cartan, *level.witness);
  r.json["both_dominant_and_antidominant"] = level.both;
  r.json["integral_generators"] =
      integral_system(p.cartan, table, lam).size();
  r.json["truncated"] = level.truncated;
  r.json["budgets"] = to_json(p.budgets);
  if (crit.critical)
    r.text = "Critical (witness " + root_text(*crit.witness) + ")\n";
  else
    r.text = "NonCritical up to height " + std::to_string(crit.height_scanned) +
             "; level " + std::string(level_sign_name(level.sign)) +
             (level.both ? " (both dominant and antidominant present)" : "") + "\n";
  return r;
}

inline HomQuery query_from(const ProblemFile& p) {
  return HomQuery::make(p.cartan, p.subset, p.weight("lambda"), p.weight("mu"),
                        p.budgets);
}

inline Report cmd_homdim(const ProblemFile& p) {
  Report r;
  HomVerdict v = decide(query_from(p));
  r.json = v.to_json();
  r.json["budgets"] = to_json(p.budgets);
  switch (v.status) {
    case HomVerdict::Status::ExactDim:
      r.text = "dim Hom = " + std::to_string(*v.dim) + "\n";
      break;
    case HomVerdict::Status::UpperBound:
      r.text = "dim Hom <= " + std::to_string(*v.bound) + " (no exact value within budget)\n";
      break;
    case HomVerdict::Status::Zero:
      r.text = "dim Hom = 0\n";
      break;
    case HomVerdict::Status::Unknown:
      r.text = "unknown within the configured budgets\n";
      break;
  }
  for (const auto& t : v.trace) r.text += "  [" + t.rule + "]\n";
  return r;
}

inline Report cmd_reduce(const ProblemFile& p) {
  Report r;
  HomQuery q = query_from(p);
  r.json["command"] = "reduce";
  FilterResult f = filter_necessary(q);
  if (f.kind == FilterResult::Kind::Zero) {
    r.json["filter"] = "Zero";
    r.json["reason"] = f.reason;
    r.text = "query filtered: dim 0 (" + f.reason + ")\n";
    return r;
  }
  if (f.kind == FilterResult::Kind::Identity) {
    r.json["filter"] = "Identity";
    r.text = "lambda = mu: dim 1\n";
    return r;
  }
  ReducedQuery rq = reduce_to_levi(q, *f.eta);
  r.json["eta"] = to_json(*f.eta);
  r.json["J"] = to_json(SubsetS(rq.j));
  std::vector<int> s_prime_ambient;
  for (int pth : rq.query.s.members) s_prime_ambient.push_back(rq.j[pth]);
  r.json["S_prime"] = to_json(SubsetS(s_prime_ambient));
  r.json["reduced_cartan"] = Json(rq.query.cartan.matrix());
  r.json["reduced_subset_S"] = to_json(rq.query.s);
  r.json["reduced_lambda"] = weight_to_json(rq.query.cartan, rq.query.lambda);
  r.json["reduced_mu"] = weight_to_json(rq.query.cartan, rq.query.mu);
  r.text = "reduced to the support J = " + to_json(SubsetS(rq.j)).dump() +
           " with S' = " + to_json(rq.query.s).dump() + "\n";
  return r;
}

inline Report cmd_dual(const ProblemFile& p) {
  Report r;
  r.json["command"] = "dual";
  require(classify_subset(p.cartan, p.subset).overall == SubsetType::Finite,
          ErrorKind::NotFiniteType, "tilting dual needs S of finite type");
  const Weight& lam = p.weight("lambda");
  const int n = p.cartan.rank();
  WeylWord ws = p.subset.empty() ? WeylWord{} : longest_element(p.cartan, p.subset);
  Weight minus2rho = -(Weight::rho(n) + Weight::rho(n));
  Weight lam_prime = dot(p.cartan, ws, minus2rho - lam);
  r.json["w_S"] = to_json(ws);
  r.json["lambda_prime"] = weight_to_json(p.cartan, lam_prime);
  r.text = "lambda' = " + weight_text(p.cartan, lam_prime) + "\n";
  if (p.has_weight("mu")) {
    TiltingDual td = tilting_dual(query_from(p));
    r.json["mu_prime"] = weight_to_json(p.cartan, td.mu_prime);
    r.json["gamma_S"] = weight_to_json(p.cartan, td.gamma_s);
    r.json["assumed_non_critical"] = !td.criticality.critical;
    r.json["class_level"] = level_sign_name(td.level.sign);
    r.json["dual_query"] = "Hom(M_S(lambda'), M_S(mu'))";
    r.text += "mu'     = " + weight_text(p.cartan, td.mu_prime) + "\n";
  }
  return r;
}

inline Report cmd_oracle(const ProblemFile& p) {
  Report r;
  r.json["command"] = "oracle";
  const Weight& lam = p.weight("lambda");
  const Weight& mu = p.weight("mu");
  try {
    auto eta = difference_in_Qplus(lam, mu);
    require(eta.has_value(), ErrorKind::NotComparable, "mu is not <= lambda");
    int height = static_cast<int>(eta->height());
    GradedNilpotent g =
        GradedNilpotent::build(p.cartan, std::max(height, 1), p.budgets);
    VermaOracle oracle(p.cartan, g, p.budgets);
    OracleReport rep = oracle.parabolic_max_dim(lam, mu, p.subset);
    r.json["status"] = "ok";
    r.json["dim"] = rep.dim;
    r.json["slice_dim"] = rep.slice_dim;
    r.json["eta"] = to_json(rep.eta);
    r.json["budget_report"] = {{"height_used", rep.height_used},
                               {"slice_cap", p.budgets.slice_cap}};
    r.text = "dim = " + std::to_string(rep.dim) +
             " (weight space dim " + std::to_string(rep.slice_dim) + ")\n";
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BudgetExceeded ||
        e.kind() == ErrorKind::NotComparable) {
      r.json["status"] = error_kind_name(e.kind());
      r.json["reason"] = e.what();
      r.text = std::string(e.what()) + "\n";
    } else {
      throw;
    }
  }
  r.json["budgets"] = to_json(p.budgets);
  return r;
}

/// Command dispatch; returns the process exit code (0 = computed verdict,
/// 2 = input error).
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"kmhom - exact Hom-space computations for parabolic Verma "
               "modules over symmetrizable Kac-Moody algebras"};
  app.require_subcommand(1);

  struct Cmd {
    std::string name;
    std::string help;
    Report (*fn)(const ProblemFile&);
  };
  const std::vector<Cmd> cmds = {
      {"roots", "positive real roots with reflection provenance", cmd_roots},
      {"mult", "root multiplicities (Peterson recurrence)", cmd_mult},
      {"weyl", "longest element of W_S and dot orbits", cmd_weyl},
      {"linkage", "Kac-Kazhdan pairs and the truncated linkage class", cmd_linkage},
      {"block", "criticality and level of the ambient class", cmd_block},
      {"homdim", "decide dim Hom(M_S(mu), M_S(lambda))", cmd_homdim},
      {"reduce", "reduce a query to the support of lambda - mu", cmd_reduce},
      {"dual", "tilting-dual weights and query", cmd_dual},
      {"oracle", "brute-force maximal-vector dimension", cmd_oracle},
  };

  std::string problem_path;
  bool as_json = false;
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--problem", problem_path, "problem file (JSON)")->required();
    sub->add_flag("--json", as_json, "emit the machine-readable report");
    subs[c.name] = sub;
  }

  std::vector<std::string> rargs(args.rbegin(), args.rend());
  try {
    app.parse(rargs);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help() << std::endl;
      return 0;
    }
    err << e.what() << std::endl;
    return 2;
  }

  try {
    ProblemFile p = parse_problem(problem_path);
    for (const auto& c : cmds) {
      if (subs[c.name]->parsed()) {
        Report r = c.fn(p);
        if (as_json)
          out << r.json.dump(2) << std::endl;
        else
          out << r.text;
        return 0;
      }
    }
    err << "no command selected" << std::endl;
    return 2;
  } catch (const ProblemError& e) {
    err << e.what() << std::endl;
    return 2;
  } catch (const Error& e) {
    err << e.what() << std::endl;
    return 2;
  }
}

}  // namespace kmhom::cli
