#pragma once

#include <map>
#include <vector>

#include "kmhom/budgets.hpp"
#include "kmhom/linalg.hpp"
#include "kmhom/weight.hpp"

namespace kmhom {

/// The positive nilpotent subalgebra presented by Chevalley-Serre relations,
/// built degree by degree up to a height budget: the free Lie algebra on the
/// generators modulo the ideal generated by (ad x_i)^{1-a_ij}(x_j).
///
/// Each graded component carries an ordered basis; every basis element of
/// height >= 2 records a defining bracket b = [x_gen, parent], and the table
/// ad(gamma, i) expands [x_i, -] on the basis of degree gamma in the basis
/// of degree gamma + alpha_i. The negative half is the same algebra under
/// x_i -> f_i (identical presentation), which is how the Verma oracle uses it.
///
/// Construction works inside the tensor algebra modulo the two-sided Serre
/// ideal (i.e. the enveloping algebra): candidates [x_i, y] are expanded as
/// noncommutative polynomials, reduced modulo the ideal component, and a
/// maximal independent subset is selected; dependent candidates yield the
/// bracket-table expansions. Exactness throughout - no tolerances.
class GradedNilpotent {
 public:
  struct BasisElem {
    RootVec degree;
    int gen = -1;     // b = [x_gen, parent]; for height 1, the generator itself
    int parent = -1;  // index into basis(degree - alpha_gen); -1 at height 1
  };

  static GradedNilpotent build(const CartanData& cd, int height,
                               const Budgets& budgets = Budgets{});

  const CartanData& cartan() const { return cartan_; }
  int height() const { return height_; }
  long long total_dim() const { return total_dim_; }

  long long dim(const RootVec& deg) const {
    auto it = basis_.find(deg);
    return it == basis_.end() ? 0 : static_cast<long long>(it->second.size());
  }

  const std::vector<BasisElem>& basis(const RootVec& deg) const {
    static const std::vector<BasisElem> kEmpty;
    auto it = basis_.find(deg);
    return it == basis_.end() ? kEmpty : it->second;
  }

  /// Graded dimensions, i.e. the multiplicity of each degree (only nonzero
  /// entries, height <= budget).
  std::map<RootVec, long long> graded_dims() const {
    std::map<RootVec, long long> out;
    for (const auto& [deg, elems] : basis_)
      if (!elems.empty()) out[deg] = static_cast<long long>(elems.size());
    return out;
  }

  /// Expansion of [x_i, basis(gamma)[m]] over basis(gamma + alpha_i), or
  /// nullptr when gamma + alpha_i lies beyond the height budget.
  const std::vector<QVec>* ad(const RootVec& gamma, int i) const {
    auto it = ad_.find({gamma, i});
    return it == ad_.end() ? nullptr : &it->second;
  }

 private:
  CartanData cartan_ = CartanData::validate({{2}});
  int height_ = 0;
  long long total_dim_ = 0;
  std::map<RootVec, std::vector<BasisElem>> basis_;
  std::map<std::pair<RootVec, int>, std::vector<QVec>> ad_;
};

namespace detail {

using Word = std::vector<int>;
using WordPoly = std::map<Word, Rational>;

inline void add_term(WordPoly& p, const Word& w, const Rational& c) {
  auto [it, inserted] = p.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

/// ad x_i on a noncommutative polynomial: i*p - p*i.
inline WordPoly ad_word(int i, const WordPoly& p) {
  WordPoly out;
  for (const auto& [w, c] : p) {
    Word left = w;
    left.insert(left.begin(), i);
    add_term(out, left, c);
    Word right = w;
    right.push_back(i);
    add_term(out, right, -c);
  }
  return out;
}

inline std::vector<Word> words_of_degree(const RootVec& deg) {
  std::vector<Word> out;
  Word cur;
  long long total = deg.height();
  cur.reserve(total);
  std::vector<long long> rem = deg.k;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<long long>(cur.size()) == total) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < static_cast<int>(rem.size()); ++i) {
      if (rem[i] == 0) continue;
      --rem[i];
      cur.push_back(i);
      self(self);
      cur.pop_back();
      ++rem[i];
    }
  };
  rec(rec);
  return out;  // lexicographic by construction
}

}  // namespace detail

inline GradedNilpotent GradedNilpotent::build(const CartanData& cd, int height,
                                              const Budgets& budgets) {
  using detail::Word;
  using detail::WordPoly;
  require(height >= 1, ErrorKind::InvalidArgument, "height must be >= 1");
  const int n = cd.rank();

  GradedNilpotent g;
  g.cartan_ = cd;
  g.height_ = height;

  // Serre elements (ad x_i)^{1-a_ij}(x_j), grouped by degree.
  std::map<RootVec, std::vector<WordPoly>> serre;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      long long power = 1 - cd.a(i, j);
      if (power + 1 > height) continue;
      WordPoly p{{Word{j}, Rational(1)}};
      for (long long t = 0; t < power; ++t) p = detail::ad_word(i, p);
      RootVec deg = RootVec::zero(n);
      deg.k[j] = 1;
      deg.k[i] = power;
      serre[deg].push_back(std::move(p));
    }

  // Scratch per degree, kept while construction climbs the heights.
  std::map<RootVec, std::vector<Word>> words;
  std::map<RootVec, std::map<Word, int>> word_index;
  std::map<RootVec, RowSpace> ideal;
  std::map<RootVec, std::vector<QVec>> elem_poly;  // reduced coords of basis elems

  std::vector<RootVec> degrees;
  {
    std::vector<long long> cur(n, 0);
    auto rec = [&](auto&& self, int idx, long long rem) -> void {
      if (idx == n - 1) {
        cur[idx] = rem;
        degrees.push_back(RootVec(cur));
        return;
      }
      for (long long v = 0; v <= rem; ++v) {
        cur[idx] = v;
        self(self, idx + 1, rem - v);
      }
    };
    for (int h = 1; h <= height; ++h) rec(rec, 0, h);
  }
  std::sort(degrees.begin(), degrees.end(), RootHeightLexLess{});

  constexpr long long kWordCap = 200000;

  for (const RootVec& beta : degrees) {
    auto ws = detail::words_of_degree(beta);
    require(static_cast<long long>(ws.size()) <= kWordCap, ErrorKind::BudgetExceeded,
            "monomial space too large for the Serre construction");
    const std::size_t ncols = ws.size();
    std::map<Word, int> index;
    for (std::size_t w = 0; w < ncols; ++w) index.emplace(ws[w], static_cast<int>(w));

    auto densify = [&](const WordPoly& p) {
      QVec v(ncols, Rational(0));
      for (const auto& [w, c] : p) v[index.at(w)] = c;
      return v;
    };

    // Two-sided ideal component: J_beta = sum_i (x_i J_{beta-a_i} + J_{beta-a_i} x_i)
    // plus the Serre elements of degree exactly beta.
    RowSpace J(ncols);
    for (int i = 0; i < n; ++i) {
      if (beta.k[i] == 0) continue;
      RootVec sub = beta;
      sub.k[i] -= 1;
      auto it = ideal.find(sub);
      if (it == ideal.end()) continue;
      const auto& sub_words = words.at(sub);
      for (const QVec& row : it->second.rows()) {
        QVec left(ncols, Rational(0)), right(ncols, Rational(0));
        for (std::size_t w = 0; w < sub_words.size(); ++w) {
          if (row[w] == 0) continue;
          Word lw = sub_words[w];
          lw.insert(lw.begin(), i);
          left[index.at(lw)] = row[w];
          Word rw = sub_words[w];
          rw.push_back(i);
          right[index.at(rw)] = row[w];
        }
        J.insert(std::move(left));
        J.insert(std::move(right));
      }
    }
    if (auto it = serre.find(beta); it != serre.end())
      for (const auto& p : it->second) J.insert(densify(p));

    // Graded component: spanned by [x_i, y] over basis elements y one step
    // below (at height 1, by the generators themselves).
    std::vector<BasisElem> elems;
    std::vector<QVec> polys;
    if (beta.height() == 1) {
      int i = 0;
      while (beta.k[i] == 0) ++i;
      elems.push_back(BasisElem{beta, i, -1});
      polys.push_back(densify(WordPoly{{Word{i}, Rational(1)}}));
    } else {
      SpanTracker tracker(ncols);
      // nullopt marks a candidate that became a basis element
      std::map<std::pair<int, int>, std::optional<QVec>> pending;
      for (int i = 0; i < n; ++i) {
        if (beta.k[i] == 0) continue;
        RootVec sub = beta;
        sub.k[i] -= 1;
        auto pit = elem_poly.find(sub);
        if (pit == elem_poly.end()) continue;
        const auto& sub_words = words.at(sub);
        for (std::size_t y = 0; y < pit->second.size(); ++y) {
          const QVec& ypoly = pit->second[y];
          QVec cand(ncols, Rational(0));
          for (std::size_t w = 0; w < sub_words.size(); ++w) {
            if (ypoly[w] == 0) continue;
            Word lw = sub_words[w];
            lw.insert(lw.begin(), i);
            cand[index.at(lw)] += ypoly[w];
            Word rw = sub_words[w];
            rw.push_back(i);
            cand[index.at(rw)] -= ypoly[w];
          }
          cand = J.reduce(std::move(cand));
          auto expansion = tracker.solve_or_insert(cand);
          pending[{i, static_cast<int>(y)}] = std::move(expansion);
          if (!pending[{i, static_cast<int>(y)}]) {
            elems.push_back(BasisElem{beta, i, static_cast<int>(y)});
            polys.push_back(std::move(cand));
          }
        }
      }
      // Freeze the bracket tables at the final component dimension.
      const std::size_t dim = elems.size();
      std::size_t selected_seen = 0;
      for (int i = 0; i < n; ++i) {
        if (beta.k[i] == 0) continue;
        RootVec sub = beta;
        sub.k[i] -= 1;
        auto pit = elem_poly.find(sub);
        if (pit == elem_poly.end()) continue;
        std::vector<QVec> cols;
        for (std::size_t y = 0; y < pit->second.size(); ++y) {
          std::optional<QVec>& e = pending.at({i, static_cast<int>(y)});
          if (!e) {  // candidate became basis element number selected_seen
            e = QVec(dim, Rational(0));
            (*e)[selected_seen++] = 1;
          } else {
            e->resize(dim, Rational(0));
          }
          cols.push_back(std::move(*e));
        }
        g.ad_.emplace(std::make_pair(sub, i), std::move(cols));
      }
    }

    g.total_dim_ += static_cast<long long>(elems.size());
    require(g.total_dim_ <= budgets.slice_cap, ErrorKind::BudgetExceeded,
            "nilpotent dimension exceeds the configured cap");
    if (!elems.empty()) {
      g.basis_.emplace(beta, std::move(elems));
      elem_poly.emplace(beta, std::move(polys));
    }
    words.emplace(beta, std::move(ws));
    word_index.emplace(beta, std::move(index));
    ideal.emplace(beta, std::move(J));
  }
  return g;
}

/// (ad x_i)^power applied to a vector over basis(deg); used to check that the
/// Serre elements vanish in the constructed algebra.
inline QVec ad_power(const GradedNilpotent& g, int i, RootVec deg, QVec v,
                     long long power) {
  for (long long t = 0; t < power; ++t) {
    const auto* table = g.ad(deg, i);
    RootVec next = deg;
    next.k[i] += 1;
    std::size_t dim_next = static_cast<std::size_t>(g.dim(next));
    QVec out(dim_next, Rational(0));
    if (table) {
      for (std::size_t m = 0; m < v.size(); ++m) {
        if (v[m] == 0) continue;
        const QVec& col = (*table)[m];
        for (std::size_t r = 0; r < col.size(); ++r) out[r] += v[m] * col[r];
      }
    } else {
      require(is_zero(v), ErrorKind::OutOfBudget, "ad beyond the built height");
    }
    deg = next;
    v = std::move(out);
  }
  return v;
}

}  // namespace kmhom
