#pragma once

#include <optional>

#include "kmhom/cartan.hpp"

namespace kmhom {

/// Enumeration budgets shared across the engine. Every truncated answer
/// reports which budget was binding; overruns raise BudgetExceeded instead
/// of returning an approximation.
struct Budgets {
  int height = 8;          // root/nilpotent height budget
  int orbit = 10000;       // orbit / linkage-class size cap
  int slice_cap = 5000;    // Verma weight-space dimension cap
  std::optional<long long> iso_n_cap;  // cap on n for isotropic moves

  /// Isotropic Kac-Kazhdan moves lambda -> lambda -+ n beta need an n-cap;
  /// by default it is tied to the height budget via n * ht(beta) <= height.
  long long iso_cap_for(const RootVec& beta) const {
    if (iso_n_cap) return *iso_n_cap;
    long long h = beta.height();
    return h > 0 ? height / h : 0;
  }

  bool operator==(const Budgets&) const = default;
};

}  // namespace kmhom
