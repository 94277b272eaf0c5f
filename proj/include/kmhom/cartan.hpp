#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "kmhom/error.hpp"
#include "kmhom/rational.hpp"

// Conventions used throughout the library:
//  - indices are 0-based in code; every serialized form (problem files,
//    reports, witnesses) uses the conventional 1-based numbering of the
//    index set I = {1, ..., n};
//  - <alpha_j, alpha_i^vee> = a_ij, so the i-th label of a root-lattice
//    vector k is sum_j a_ij k_j.

namespace kmhom {

/// Element of the root lattice, stored in simple-root coordinates.
struct RootVec {
  std::vector<long long> k;

  RootVec() = default;
  explicit RootVec(std::vector<long long> kk) : k(std::move(kk)) {}
  RootVec(std::initializer_list<long long> kk) : k(kk) {}
  static RootVec zero(int n) { return RootVec(std::vector<long long>(n, 0)); }
  static RootVec simple(int n, int i) {
    RootVec r = zero(n);
    r.k[i] = 1;
    return r;
  }

  int rank() const { return static_cast<int>(k.size()); }
  long long height() const { return std::accumulate(k.begin(), k.end(), 0LL); }
  bool is_zero() const {
    return std::all_of(k.begin(), k.end(), [](long long v) { return v == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(k.begin(), k.end(), [](long long v) { return v >= 0; });
  }
  bool operator==(const RootVec& o) const { return k == o.k; }
  bool operator!=(const RootVec& o) const { return k != o.k; }
  bool operator<(const RootVec& o) const { return k < o.k; }

  RootVec operator+(const RootVec& o) const {
    RootVec r = *this;
    for (std::size_t i = 0; i < k.size(); ++i) r.k[i] += o.k[i];
    return r;
  }
  RootVec operator-(const RootVec& o) const {
    RootVec r = *this;
    for (std::size_t i = 0; i < k.size(); ++i) r.k[i] -= o.k[i];
    return r;
  }
  RootVec operator*(long long s) const {
    RootVec r = *this;
    for (auto& v : r.k) v *= s;
    return r;
  }
  RootVec operator-() const { return *this * -1; }
  bool leq_componentwise(const RootVec& o) const {
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] > o.k[i]) return false;
    return true;
  }
};

/// Orders roots by (height, lexicographic coordinates); the iteration order
/// used for tables, scans and PBW letters.
struct RootHeightLexLess {
  bool operator()(const RootVec& a, const RootVec& b) const {
    long long ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.k < b.k;
  }
};

/// A subset S of the index set, kept sorted and duplicate-free (0-based).
struct SubsetS {
  std::vector<int> members;

  SubsetS() = default;
  explicit SubsetS(std::vector<int> m) : members(std::move(m)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
  SubsetS(std::initializer_list<int> m) : SubsetS(std::vector<int>(m)) {}

  bool contains(int i) const {
    return std::binary_search(members.begin(), members.end(), i);
  }
  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
  bool operator==(const SubsetS& o) const { return members == o.members; }
};

/// Validated generalized Cartan matrix together with its symmetrizer d and
/// the Gram matrix gram_ij = d_i a_ij = (alpha_i, alpha_j) of the invariant
/// form restricted to the root lattice.
class CartanData {
 public:
  static CartanData validate(const std::vector<std::vector<long long>>& a) {
    const std::size_t n = a.size();
    require(n >= 1, ErrorKind::NotGCM, "empty matrix");
    for (const auto& row : a)
      require(row.size() == n, ErrorKind::NotGCM, "matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
      require(a[i][i] == 2, ErrorKind::NotGCM, "diagonal entry differs from 2");
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        require(a[i][j] <= 0, ErrorKind::NotGCM, "positive off-diagonal entry");
        require((a[i][j] == 0) == (a[j][i] == 0), ErrorKind::NotGCM,
                "asymmetric zero pattern");
      }
    }

    // Symmetrizer: propagate d_j = d_i a_ij / a_ji over each connected
    // component of the Dynkin graph, check consistency around cycles, then
    // rescale the component to the smallest positive integer vector.
    std::vector<Rational> d(n, Rational(0));
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
      if (seen[root]) continue;
      std::vector<std::size_t> comp;
      d[root] = 1;
      seen[root] = true;
      comp.push_back(root);
      std::vector<std::size_t> stack{root};
      while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j || a[i][j] == 0) continue;
          Rational dj = d[i] * Rational(a[i][j]) / Rational(a[j][i]);
          if (!seen[j]) {
            d[j] = dj;
            seen[j] = true;
            comp.push_back(j);
            stack.push_back(j);
          } else {
            require(d[j] == dj, ErrorKind::NotSymmetrizable,
                    "inconsistent symmetrizer around a cycle");
          }
        }
      }
      BigInt l = 1;
      for (auto i : comp) l = lcm(l, denominator(d[i]));
      BigInt g = 0;
      for (auto i : comp) g = gcd(g, numerator(d[i] * Rational(l)));
      for (auto i : comp) d[i] = d[i] * Rational(l, g);
    }

    CartanData c;
    c.a_ = a;
    c.d_ = std::move(d);
    c.gram_.assign(n, QVecRow(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        c.gram_[i][j] = c.d_[i] * Rational(a[i][j]);
    return c;
  }

  int rank() const { return static_cast<int>(a_.size()); }
  long long a(int i, int j) const { return a_[i][j]; }
  const std::vector<std::vector<long long>>& matrix() const { return a_; }
  const Rational& d(int i) const { return d_[i]; }
  const std::vector<Rational>& symmetrizer() const { return d_; }
  const Rational& gram(int i, int j) const { return gram_[i][j]; }

  /// (beta, gamma) for root-lattice vectors.
  Rational pair_roots(const RootVec& beta, const RootVec& gamma) const {
    require(beta.rank() == rank() && gamma.rank() == rank(),
            ErrorKind::DimensionMismatch, "root vector of wrong rank");
    Rational acc(0);
    for (int i = 0; i < rank(); ++i) {
      if (beta.k[i] == 0) continue;
      Rational row(0);
      for (int j = 0; j < rank(); ++j)
        if (gamma.k[j] != 0) row += gram_[i][j] * Rational(gamma.k[j]);
      acc += Rational(beta.k[i]) * row;
    }
    return acc;
  }

  Rational norm(const RootVec& beta) const { return pair_roots(beta, beta); }

  /// <beta, alpha_i^vee> = sum_j a_ij beta_j.
  long long label_of_root(const RootVec& beta, int i) const {
    long long t = 0;
    for (int j = 0; j < rank(); ++j) t += a_[i][j] * beta.k[j];
    return t;
  }

  CartanData principal_submatrix(const std::vector<int>& idx) const {
    std::vector<std::vector<long long>> sub(idx.size(),
                                            std::vector<long long>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j)
        sub[i][j] = a_[idx[i]][idx[j]];
    return validate(sub);
  }

 private:
  using QVecRow = std::vector<Rational>;
  std::vector<std::vector<long long>> a_;
  std::vector<Rational> d_;
  std::vector<QVecRow> gram_;
};

enum class SubsetType { Finite, Affine, Indefinite };

inline const char* subset_type_name(SubsetType t) {
  switch (t) {
    case SubsetType::Finite: return "Finite";
    case SubsetType::Affine: return "Affine";
    case SubsetType::Indefinite: return "Indefinite";
  }
  return "?";
}

struct SubsetClassification {
  SubsetType overall = SubsetType::Finite;
  // indecomposable components (0-based index lists) with their types
  std::vector<std::pair<std::vector<int>, SubsetType>> components;
};

namespace detail {

/// Exact positive-(semi)definiteness test by symmetric Gaussian elimination:
/// Finite = positive definite, Affine = positive semidefinite of corank 1.
inline SubsetType classify_gram(std::vector<std::vector<Rational>> g) {
  const std::size_t k = g.size();
  std::size_t corank = 0;
  for (std::size_t p = 0; p < k; ++p) {
    if (g[p][p] < 0) return SubsetType::Indefinite;
    if (g[p][p] == 0) {
      for (std::size_t q = p + 1; q < k; ++q)
        if (g[p][q] != 0) return SubsetType::Indefinite;
      ++corank;
      continue;
    }
    for (std::size_t r = p + 1; r < k; ++r) {
      if (g[r][p] == 0) continue;
      Rational t = g[r][p] / g[p][p];
      for (std::size_t c = p; c < k; ++c) g[r][c] -= t * g[p][c];
    }
  }
  if (corank == 0) return SubsetType::Finite;
  if (corank == 1) return SubsetType::Affine;
  return SubsetType::Indefinite;
}

}  // namespace detail

/// Classifies the principal submatrix A_S per indecomposable component.
/// The overall tag is Finite iff every component is Finite; empty S counts
/// as Finite.
inline SubsetClassification classify_subset(const CartanData& c, const SubsetS& s) {
  SubsetClassification out;
  for (int i : s.members)
    require(i >= 0 && i < c.rank(), ErrorKind::InvalidArgument,
            "subset index out of range");
  std::vector<bool> seen(c.rank(), false);
  bool any_affine = false, any_indef = false;
  for (int i : s.members) {
    if (seen[i]) continue;
    std::vector<int> comp;
    std::vector<int> stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : s.members)
        if (!seen[v] && c.a(u, v) != 0) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<std::vector<Rational>> g(comp.size(),
                                         std::vector<Rational>(comp.size()));
    for (std::size_t p = 0; p < comp.size(); ++p)
      for (std::size_t q = 0; q < comp.size(); ++q)
        g[p][q] = c.gram(comp[p], comp[q]);
    SubsetType t = detail::classify_gram(std::move(g));
    any_affine = any_affine || t == SubsetType::Affine;
    any_indef = any_indef || t == SubsetType::Indefinite;
    out.components.emplace_back(std::move(comp), t);
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  out.overall = any_indef ? SubsetType::Indefinite
                          : (any_affine ? SubsetType::Affine : SubsetType::Finite);
  return out;
}

inline SubsetS full_subset(const CartanData& c) {
  std::vector<int> all(c.rank());
  std::iota(all.begin(), all.end(), 0);
  return SubsetS(std::move(all));
}

}  // namespace kmhom
