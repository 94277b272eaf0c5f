#pragma once

#include <optional>
#include <vector>

#include "kmhom/cartan.hpp"

namespace kmhom {

/// A point of the 2n-dimensional model of h*:
///   lambda = sum_i c_i omega_i + sum_j x_j alpha_j,
/// where the omega_i are formal symbols with <omega_i, alpha_j^vee> = delta_ij
/// and (omega_i, alpha_j) = delta_ij d_j. Equality is componentwise on (c, x);
/// distinct model points may restrict to the same functional in degenerate
/// (e.g. affine) cases, which is deliberate: every operation below is total
/// and exact.
struct Weight {
  std::vector<Rational> c;  // fundamental-weight coordinates
  std::vector<Rational> x;  // simple-root coordinates

  Weight() = default;
  Weight(std::vector<Rational> cc, std::vector<Rational> xx)
      : c(std::move(cc)), x(std::move(xx)) {}

  static Weight zero(int n) {
    return Weight(std::vector<Rational>(n, Rational(0)),
                  std::vector<Rational>(n, Rational(0)));
  }
  /// rho: all labels 1, no root offset.
  static Weight rho(int n) {
    return Weight(std::vector<Rational>(n, Rational(1)),
                  std::vector<Rational>(n, Rational(0)));
  }

  int rank() const { return static_cast<int>(c.size()); }

  bool operator==(const Weight& o) const { return c == o.c && x == o.x; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const {
    if (c != o.c) return c < o.c;
    return x < o.x;
  }

  Weight operator+(const Weight& o) const {
    Weight r = *this;
    for (int i = 0; i < rank(); ++i) {
      r.c[i] += o.c[i];
      r.x[i] += o.x[i];
    }
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r = *this;
    for (int i = 0; i < rank(); ++i) {
      r.c[i] -= o.c[i];
      r.x[i] -= o.x[i];
    }
    return r;
  }
  Weight operator-() const {
    Weight r = *this;
    for (int i = 0; i < rank(); ++i) {
      r.c[i] = -r.c[i];
      r.x[i] = -r.x[i];
    }
    return r;
  }
  Weight operator*(const Rational& s) const {
    Weight r = *this;
    for (int i = 0; i < rank(); ++i) {
      r.c[i] *= s;
      r.x[i] *= s;
    }
    return r;
  }
};

/// Canonical section of the label map: c = labels, x = 0.
inline Weight from_labels(const CartanData& c, std::vector<Rational> labels) {
  require(static_cast<int>(labels.size()) == c.rank(),
          ErrorKind::DimensionMismatch, "label vector of wrong rank");
  return Weight(std::move(labels), std::vector<Rational>(c.rank(), Rational(0)));
}

/// labels(lambda)_i = <lambda, alpha_i^vee> = c_i + (A x)_i.
inline std::vector<Rational> labels(const CartanData& cd, const Weight& w) {
  require(w.rank() == cd.rank(), ErrorKind::DimensionMismatch,
          "weight of wrong rank");
  std::vector<Rational> out(w.c);
  for (int i = 0; i < cd.rank(); ++i)
    for (int j = 0; j < cd.rank(); ++j)
      if (w.x[j] != 0) out[i] += Rational(cd.a(i, j)) * w.x[j];
  return out;
}

inline Rational label(const CartanData& cd, const Weight& w, int i) {
  Rational out = w.c[i];
  for (int j = 0; j < cd.rank(); ++j)
    if (w.x[j] != 0) out += Rational(cd.a(i, j)) * w.x[j];
  return out;
}

/// (lambda, beta) = sum_j k_j c_j d_j + x^T gram k.
inline Rational pair_weight_root(const CartanData& cd, const Weight& w,
                                 const RootVec& beta) {
  require(w.rank() == cd.rank() && beta.rank() == cd.rank(),
          ErrorKind::DimensionMismatch, "rank mismatch");
  Rational acc(0);
  for (int j = 0; j < cd.rank(); ++j)
    if (beta.k[j] != 0 && w.c[j] != 0)
      acc += Rational(beta.k[j]) * w.c[j] * cd.d(j);
  for (int i = 0; i < cd.rank(); ++i) {
    if (w.x[i] == 0) continue;
    Rational row(0);
    for (int j = 0; j < cd.rank(); ++j)
      if (beta.k[j] != 0) row += cd.gram(i, j) * Rational(beta.k[j]);
    acc += w.x[i] * row;
  }
  return acc;
}

/// <lambda, beta^vee> = 2 (lambda, beta) / (beta, beta); ZeroNorm on
/// isotropic beta.
inline Rational pair_weight_coroot(const CartanData& cd, const Weight& w,
                                   const RootVec& beta) {
  Rational nn = cd.norm(beta);
  require(nn != 0, ErrorKind::ZeroNorm, "coroot pairing against isotropic root");
  return Rational(2) * pair_weight_root(cd, w, beta) / nn;
}

/// lambda - m beta (the multiplier may be rational; reflections need this).
inline Weight sub_root(const Weight& w, const RootVec& beta, const Rational& m) {
  Weight r = w;
  for (int j = 0; j < r.rank(); ++j)
    if (beta.k[j] != 0) r.x[j] -= m * Rational(beta.k[j]);
  return r;
}

/// Decides mu <= lambda inside the model: returns eta with
/// lambda - mu = sum eta_i alpha_i, eta in Z_{>=0}^n, or nullopt.
inline std::optional<RootVec> difference_in_Qplus(const Weight& lambda,
                                                  const Weight& mu) {
  if (lambda.c != mu.c) return std::nullopt;
  RootVec eta = RootVec::zero(lambda.rank());
  for (int j = 0; j < lambda.rank(); ++j) {
    Rational diff = lambda.x[j] - mu.x[j];
    if (!is_nonnegative_integer(diff)) return std::nullopt;
    eta.k[j] = rational_to_int64(diff);
  }
  return eta;
}

inline SubsetS supp(const RootVec& eta) {
  std::vector<int> m;
  for (int i = 0; i < eta.rank(); ++i)
    if (eta.k[i] != 0) m.push_back(i);
  return SubsetS(std::move(m));
}

/// S-height: the coordinate sum outside S.
inline long long s_height(const RootVec& eta, const SubsetS& s) {
  long long h = 0;
  for (int i = 0; i < eta.rank(); ++i)
    if (!s.contains(i)) h += eta.k[i];
  return h;
}

/// lambda in P_S^+ iff <lambda, alpha_i^vee> is a nonnegative integer for
/// every i in S.
inline bool in_PS_plus(const CartanData& cd, const Weight& w, const SubsetS& s) {
  for (int i : s.members)
    if (!is_nonnegative_integer(label(cd, w, i))) return false;
  return true;
}

}  // namespace kmhom
