#pragma once

#include <string>
#include <vector>

#include "kmhom/json_io.hpp"
#include "kmhom/linkage.hpp"
#include "kmhom/verma.hpp"

namespace kmhom {

/// A Hom-dimension query: dim Hom(M_S(mu), M_S(lambda)), i.e. the space of
/// maximal vectors of weight mu in M_S(lambda). Both weights must lie in
/// P_S^+ for the parabolic Verma modules to exist.
struct HomQuery {
  CartanData cartan;
  SubsetS s;
  Weight lambda;  // target highest weight
  Weight mu;      // source highest weight
  Budgets budgets;

  static HomQuery make(CartanData cartan, SubsetS s, Weight lambda, Weight mu,
                       Budgets budgets = Budgets{}) {
    require(in_PS_plus(cartan, lambda, s), ErrorKind::NotInPSPlus,
            "lambda is not in P_S^+");
    require(in_PS_plus(cartan, mu, s), ErrorKind::NotInPSPlus,
            "mu is not in P_S^+");
    return HomQuery{std::move(cartan), std::move(s), std::move(lambda),
                    std::move(mu), budgets};
  }
};

struct TraceEntry {
  std::string rule;
  Json data;
};

/// Certified answer with a replayable derivation trace. Zero/Identity come
/// from necessary conditions, ExactDim from the oracle, UpperBound from the
/// uniqueness rules; anything that could not be settled within budget is
/// Unknown, never a guess.
struct HomVerdict {
  enum class Status { ExactDim, UpperBound, Zero, Unknown };
  Status status = Status::Unknown;
  std::optional<long long> dim;
  std::optional<long long> bound;
  std::vector<TraceEntry> trace;

  Json to_json() const {
    Json j;
    switch (status) {
      case Status::ExactDim: j["status"] = "ExactDim"; break;
      case Status::UpperBound: j["status"] = "UpperBound"; break;
      case Status::Zero: j["status"] = "Zero"; break;
      case Status::Unknown: j["status"] = "Unknown"; break;
    }
    if (dim) j["dim"] = *dim;
    if (bound) j["bound"] = *bound;
    Json steps = Json::array();
    for (const auto& t : trace) {
      Json e;
      e["rule"] = t.rule;
      if (!t.data.is_null()) e["data"] = t.data;
      steps.push_back(std::move(e));
    }
    j["trace"] = std::move(steps);
    return j;
  }
};

struct FilterResult {
  enum class Kind { Zero, Identity, Pass };
  Kind kind;
  std::string reason;              // for Zero
  std::optional<RootVec> eta;      // for Pass
};

/// Necessary conditions: mu <= lambda, and for lambda != mu the difference
/// must leave the Levi part, i.e. ht_S(lambda - mu) >= 1.
inline FilterResult filter_necessary(const HomQuery& q) {
  auto eta = difference_in_Qplus(q.lambda, q.mu);
  if (!eta)
    return {FilterResult::Kind::Zero, "mu is not <= lambda", std::nullopt};
  if (eta->is_zero()) return {FilterResult::Kind::Identity, "", std::nullopt};
  if (s_height(*eta, q.s) == 0)
    return {FilterResult::Kind::Zero, "ht_S(lambda - mu) = 0 with lambda != mu",
            std::nullopt};
  return {FilterResult::Kind::Pass, "", std::move(eta)};
}

/// The reduction of a query to the Levi subalgebra l_J on J = supp(eta),
/// with S' = S n J; the Hom-space dimension is preserved.
struct ReducedQuery {
  HomQuery query;           // over the principal submatrix A_J
  std::vector<int> j;       // 0-based ambient indices, ascending
  RootVec eta;              // reduced difference (rank |J|)
};

inline ReducedQuery reduce_to_levi(const HomQuery& q, const RootVec& eta) {
  std::vector<int> j = supp(eta).members;
  CartanData sub = q.cartan.principal_submatrix(j);
  auto restrict_weight = [&](const Weight& w) {
    std::vector<Rational> lab(j.size()), off(j.size());
    for (std::size_t p = 0; p < j.size(); ++p) {
      lab[p] = label(q.cartan, w, j[p]);
      off[p] = w.x[j[p]];
    }
    return weight_from_labels_offset(sub, std::move(lab), std::move(off));
  };
  std::vector<int> s_prime;
  for (std::size_t p = 0; p < j.size(); ++p)
    if (q.s.contains(j[p])) s_prime.push_back(static_cast<int>(p));
  RootVec reta = RootVec::zero(static_cast<int>(j.size()));
  for (std::size_t p = 0; p < j.size(); ++p) reta.k[p] = eta.k[j[p]];
  ReducedQuery out{HomQuery::make(sub, SubsetS(std::move(s_prime)),
                                  restrict_weight(q.lambda), restrict_weight(q.mu),
                                  q.budgets),
                   std::move(j), std::move(reta)};
  return out;
}

/// Uniqueness rules, tried in order; each yields the bound dim <= 1.
///  (a) S' empty and A_J of finite type (the Levi is reductive);
///  (b) S' empty and the reduced class of lambda has decided level;
///  (c) S empty and the ambient class of lambda has decided level.
/// An undetermined level never produces a bound.
inline std::optional<long long> uniqueness_bounds(const HomQuery& ambient,
                                                  const ReducedQuery& rq,
                                                  std::vector<TraceEntry>& trace) {
  const HomQuery& q = rq.query;
  if (q.s.empty()) {
    auto cls = classify_subset(q.cartan, full_subset(q.cartan));
    if (cls.overall == SubsetType::Finite) {
      Json data;
      data["criterion"] = "S' empty, finite-type support";
      data["bound"] = 1;
      trace.push_back({"uniqueness-finite-levi", std::move(data)});
      return 1;
    }
    RootTable table = RootTable::build(q.cartan, q.budgets.height);
    LevelReport level = level_sign(q.cartan, table, q.lambda, q.budgets);
    if (level.sign != LevelSign::Undetermined) {
      Json data;
      data["criterion"] = "S' empty, decided level over the support";
      data["level"] = level_sign_name(level.sign);
      data["bound"] = 1;
      trace.push_back({"uniqueness-level", std::move(data)});
      return 1;
    }
    Json data;
    data["level"] = "Undetermined";
    trace.push_back({"uniqueness-level-undetermined", std::move(data)});
  }
  if (ambient.s.empty()) {
    RootTable table = RootTable::build(ambient.cartan, ambient.budgets.height);
    LevelReport level = level_sign(ambient.cartan, table, ambient.lambda,
                                   ambient.budgets);
    if (level.sign != LevelSign::Undetermined) {
      Json data;
      data["criterion"] = "S empty, decided ambient level";
      data["level"] = level_sign_name(level.sign);
      data["bound"] = 1;
      trace.push_back({"uniqueness-ambient-level", std::move(data)});
      return 1;
    }
  }
  return std::nullopt;
}

/// The tilting-dual rewriting of a query for S of finite type:
/// lambda' = w_S . (-2 rho - lambda), mu' = w_S . (-2 rho - mu), and
/// Hom(M_S(mu), M_S(lambda)) ~ Hom(M_S(lambda'), M_S(mu')) -- source and
/// target swap. The stated hypotheses (non-critical class of positive
/// level) are recorded, not enforced.
struct TiltingDual {
  HomQuery dual;          // asks for Hom(M_S(lambda'), M_S(mu'))
  Weight lambda_prime;
  Weight mu_prime;
  WeylWord w_s;
  Weight gamma_s;         // 2 rho - 2 rho_S
  CriticalityReport criticality;  // of the ambient class of lambda
  LevelReport level;
};

/// Sum of the positive roots of the finite subsystem Delta_S, as a weight.
inline Weight two_rho_s(const CartanData& cd, const SubsetS& s) {
  Weight out = Weight::zero(cd.rank());
  if (s.empty()) return out;
  CartanData sub = cd.principal_submatrix(s.members);
  // finite type: the closure stabilizes; 64 generously exceeds any height here
  bool truncated = false;
  auto entries = real_roots_up_to(sub, 64, &truncated);
  require(!truncated, ErrorKind::NotFiniteType,
          "subsystem closure did not stabilize");
  for (const auto& e : entries)
    for (std::size_t p = 0; p < s.members.size(); ++p)
      out.x[s.members[p]] += Rational(e.root.k[p]);
  return out;
}

inline TiltingDual tilting_dual(const HomQuery& q) {
  require(classify_subset(q.cartan, q.s).overall == SubsetType::Finite,
          ErrorKind::NotFiniteType, "tilting dual needs S of finite type");
  const int n = q.cartan.rank();
  WeylWord ws = longest_element(q.cartan, q.s);
  Weight minus2rho = -(Weight::rho(n) + Weight::rho(n));
  TiltingDual out{
      HomQuery::make(q.cartan, q.s, dot(q.cartan, ws, minus2rho - q.mu),
                     dot(q.cartan, ws, minus2rho - q.lambda), q.budgets),
      dot(q.cartan, ws, minus2rho - q.lambda),
      dot(q.cartan, ws, minus2rho - q.mu),
      ws,
      Weight::rho(n) + Weight::rho(n) - two_rho_s(q.cartan, q.s),
      {},
      {}};
  RootTable table = RootTable::build(q.cartan, q.budgets.height);
  out.criticality = is_critical(q.cartan, table, q.lambda);
  out.level = level_sign(q.cartan, table, q.lambda, q.budgets);
  // the identity -gamma_S - w_S mu = w_S . (-2 rho - mu), exact in the model
  Weight lhs = -out.gamma_s - act(q.cartan, ws, q.mu);
  require(lhs == out.mu_prime, ErrorKind::InvalidArgument,
          "tilting-dual weight identity failed");
  return out;
}

/// Full decision pipeline: necessary filters, Levi reduction, uniqueness
/// bounds, then the brute-force oracle on the reduced query. Failures inside
/// a stage downgrade the verdict, never abort it.
inline HomVerdict decide(const HomQuery& q) {
  HomVerdict v;
  FilterResult f = filter_necessary(q);
  if (f.kind == FilterResult::Kind::Identity) {
    v.status = HomVerdict::Status::ExactDim;
    v.dim = 1;
    Json data;
    data["dim"] = 1;
    v.trace.push_back({"identity", std::move(data)});
    return v;
  }
  if (f.kind == FilterResult::Kind::Zero) {
    v.status = HomVerdict::Status::Zero;
    v.dim = 0;
    Json data;
    data["reason"] = f.reason;
    v.trace.push_back({"necessary-condition", std::move(data)});
    return v;
  }
  const RootVec& eta = *f.eta;
  {
    Json data;
    data["eta"] = to_json(eta);
    data["s_height"] = s_height(eta, q.s);
    v.trace.push_back({"necessary-condition-pass", std::move(data)});
  }

  ReducedQuery rq = reduce_to_levi(q, eta);
  {
    Json data;
    data["J"] = to_json(SubsetS(rq.j));
    data["S_prime"] = to_json(SubsetS([&] {
      std::vector<int> amb;
      for (int p : rq.query.s.members) amb.push_back(rq.j[p]);
      return amb;
    }()));
    data["reduced_cartan"] = Json(rq.query.cartan.matrix());
    data["reduced_lambda"] = weight_to_json(rq.query.cartan, rq.query.lambda);
    data["reduced_mu"] = weight_to_json(rq.query.cartan, rq.query.mu);
    v.trace.push_back({"support-reduction", std::move(data)});
  }

  std::optional<long long> bound;
  try {
    bound = uniqueness_bounds(q, rq, v.trace);
  } catch (const Error& e) {
    Json data;
    data["error"] = e.what();
    v.trace.push_back({"uniqueness-bounds-skipped", std::move(data)});
  }

  std::optional<long long> exact;
  try {
    require(rq.eta.height() <= rq.query.budgets.height, ErrorKind::BudgetExceeded,
            "eta height " + std::to_string(rq.eta.height()) +
                " exceeds the height budget");
    GradedNilpotent g = GradedNilpotent::build(
        rq.query.cartan, static_cast<int>(rq.eta.height()), rq.query.budgets);
    VermaOracle oracle(rq.query.cartan, g, rq.query.budgets);
    OracleReport rep =
        oracle.parabolic_max_dim(rq.query.lambda, rq.query.mu, rq.query.s);
    exact = rep.dim;
    Json data;
    data["dim"] = rep.dim;
    data["slice_dim"] = rep.slice_dim;
    data["height_used"] = rep.height_used;
    v.trace.push_back({"oracle", std::move(data)});
  } catch (const Error& e) {
    Json data;
    data["error"] = e.what();
    v.trace.push_back({"oracle-unavailable", std::move(data)});
  }

  try {
    if (classify_subset(q.cartan, q.s).overall == SubsetType::Finite) {
      TiltingDual td = tilting_dual(q);
      Json data;
      data["lambda_prime"] = weight_to_json(q.cartan, td.lambda_prime);
      data["mu_prime"] = weight_to_json(q.cartan, td.mu_prime);
      data["w_S"] = to_json(td.w_s);
      data["assumed_non_critical"] = !td.criticality.critical;
      data["class_level"] = level_sign_name(td.level.sign);
      data["note"] =
          "the dual query Hom(M_S(lambda'), M_S(mu')) has the same dimension "
          "under the recorded assumptions";
      v.trace.push_back({"dual-description", std::move(data)});
    }
  } catch (const Error& e) {
    Json data;
    data["error"] = e.what();
    v.trace.push_back({"dual-description-skipped", std::move(data)});
  }

  if (exact) {
    require(!bound || *exact <= *bound, ErrorKind::InvalidArgument,
            "oracle exceeded a proven bound");
    v.status = HomVerdict::Status::ExactDim;
    v.dim = exact;
    if (bound) v.bound = bound;
  } else if (bound) {
    v.status = HomVerdict::Status::UpperBound;
    v.bound = bound;
  } else {
    v.status = HomVerdict::Status::Unknown;
  }
  return v;
}

}  // namespace kmhom
