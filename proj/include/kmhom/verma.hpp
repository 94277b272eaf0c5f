#pragma once

#include <map>
#include <vector>

#include "kmhom/nilpotent.hpp"

namespace kmhom {

/// PBW realization of Verma weight spaces over the constructed nilpotent
/// algebra. Letters are the negative root vectors f_{beta,m} (one letter per
/// basis element of the graded algebra), totally ordered by
/// (height, lex degree, basis position); a PBW monomial is a weakly
/// decreasing word of letters, largest first, applied to the highest weight
/// vector.
///
/// Within a monomial, products are straightened back to normal form by the
/// rewriting  x y = y x + [x, y]  (applied at inversions), which terminates:
/// a swap lowers the inversion count, a bracket substitution shortens the
/// word. Pair brackets and the mixed brackets [e_i, f_{beta,m}] are derived
/// recursively from each letter's defining bracket via the Jacobi identity,
/// with memoization. An instance carries those caches and is meant to be
/// confined to one query.
class PBWModel {
 public:
  struct Letter {
    RootVec degree;
    int m = 0;
  };
  using Monomial = std::vector<int>;           // weakly decreasing letter ids
  using SparseVec = std::map<int, Rational>;   // letter id -> coefficient

  PBWModel(const CartanData& cd, const GradedNilpotent& g) : cd_(cd), g_(g) {
    std::vector<RootVec> degs;
    for (const auto& [deg, d] : g.graded_dims()) degs.push_back(deg);
    std::sort(degs.begin(), degs.end(), RootHeightLexLess{});
    for (const RootVec& deg : degs) {
      letter_base_[deg] = static_cast<int>(letters_.size());
      for (int m = 0; m < g.dim(deg); ++m) letters_.push_back(Letter{deg, m});
    }
  }

  const CartanData& cartan() const { return cd_; }
  const GradedNilpotent& algebra() const { return g_; }
  int num_letters() const { return static_cast<int>(letters_.size()); }
  const Letter& letter(int id) const { return letters_[id]; }

  int letter_id(const RootVec& deg, int m) const {
    auto it = letter_base_.find(deg);
    require(it != letter_base_.end(), ErrorKind::InvalidArgument,
            "no letter at this degree");
    return it->second + m;
  }

  struct Slice {
    RootVec eta;
    std::vector<Monomial> monomials;
    std::map<Monomial, int> index;
    long long dim() const { return static_cast<long long>(monomials.size()); }
  };

  /// All PBW monomials of total degree eta (the basis of M(lambda)_{lambda-eta}).
  Slice slice(const RootVec& eta, long long cap) const {
    Slice s;
    s.eta = eta;
    Monomial cur;
    RootVec rem = eta;
    auto rec = [&](auto&& self, int max_id) -> void {
      if (rem.is_zero()) {
        require(static_cast<long long>(s.monomials.size()) < cap,
                ErrorKind::BudgetExceeded, "weight-space dimension exceeds cap");
        s.monomials.push_back(cur);
        return;
      }
      for (int id = max_id; id >= 0; --id) {
        const Letter& l = letters_[id];
        if (!l.degree.leq_componentwise(rem)) continue;
        rem = rem - l.degree;
        cur.push_back(id);
        self(self, id);
        cur.pop_back();
        rem = rem + l.degree;
      }
    };
    require(eta.is_nonnegative(), ErrorKind::InvalidArgument, "eta not in Q^+");
    rec(rec, num_letters() - 1);
    std::sort(s.monomials.begin(), s.monomials.end());
    for (std::size_t i = 0; i < s.monomials.size(); ++i)
      s.index.emplace(s.monomials[i], static_cast<int>(i));
    return s;
  }

  /// [f_a, f_b] expanded over the letters of degree deg(a)+deg(b).
  const SparseVec& pair_bracket(int a, int b) {
    auto it = pair_cache_.find({a, b});
    if (it != pair_cache_.end()) return it->second;
    SparseVec result;
    if (a == b) {
      // zero
    } else if (letters_[a].degree.height() == 1) {
      int i = generator_of(a);
      result = ad_letter(i, b);
    } else {
      const auto& elem = g_.basis(letters_[a].degree)[letters_[a].m];
      int j = elem.gen;
      int y = letter_id(letters_[a].degree - RootVec::simple(cd_.rank(), j),
                        elem.parent);
      // [[x_j, y], b] = [x_j, [y, b]] - [y, [x_j, b]]
      SparseVec term1;
      {
        const SparseVec& u = pair_bracket(y, b);
        term1 = apply_ad(j, u);
      }
      SparseVec term2;
      for (const auto& [l, c] : ad_letter(j, b)) {
        if (l == y) continue;  // [y, y] = 0
        for (const auto& [l2, c2] : pair_bracket(y, l)) add(term2, l2, c * c2);
      }
      for (const auto& [l, c] : term1) add(result, l, c);
      for (const auto& [l, c] : term2) add(result, l, -c);
    }
    SparseVec neg;
    for (const auto& [l, c] : result) neg.emplace(l, -c);
    pair_cache_.emplace(std::make_pair(b, a), std::move(neg));
    return pair_cache_.emplace(std::make_pair(a, b), std::move(result))
        .first->second;
  }

  /// [e_i, f_a]: a vector over the letters of degree deg(a) - alpha_i plus a
  /// Cartan part h * alpha_i^vee (nonzero only when deg(a) = alpha_i).
  struct Mixed {
    SparseVec f;
    Rational h = Rational(0);
  };

  const Mixed& mixed_bracket(int i, int a) {
    auto it = mixed_cache_.find({i, a});
    if (it != mixed_cache_.end()) return it->second;
    Mixed out;
    const Letter& la = letters_[a];
    if (la.degree.height() == 1) {
      if (generator_of(a) == i) out.h = 1;
    } else {
      const auto& elem = g_.basis(la.degree)[la.m];
      int j = elem.gen;
      RootVec ydeg = la.degree - RootVec::simple(cd_.rank(), j);
      int y = letter_id(ydeg, elem.parent);
      // [e_i, [f_j, y]] = delta_ij [h_i, y] + [f_j, [e_i, y]]
      if (j == i) add(out.f, y, Rational(-cd_.label_of_root(ydeg, i)));
      const Mixed& inner = mixed_bracket(i, y);
      for (const auto& [l, c] : apply_ad(j, inner.f)) add(out.f, l, c);
      if (inner.h != 0) {
        // [f_j, h alpha_i^vee] = h <alpha_j, alpha_i^vee> f_j = h a_ij f_j
        int fj = letter_id(RootVec::simple(cd_.rank(), j), 0);
        add(out.f, fj, inner.h * Rational(cd_.a(i, j)));
      }
    }
    return mixed_cache_.emplace(std::make_pair(i, a), std::move(out))
        .first->second;
  }

  /// Straightens an arbitrary word of letters into the PBW basis.
  void straighten(const Monomial& word, const Rational& coeff,
                  std::map<Monomial, Rational>& out) {
    std::size_t p = 0;
    while (p + 1 < word.size() && word[p] >= word[p + 1]) ++p;
    if (p + 1 >= word.size()) {
      auto [it, inserted] = out.emplace(word, coeff);
      if (!inserted) it->second += coeff;
      return;
    }
    Monomial swapped = word;
    std::swap(swapped[p], swapped[p + 1]);
    straighten(swapped, coeff, out);
    const SparseVec& br = pair_bracket(word[p], word[p + 1]);
    for (const auto& [l, c] : br) {
      Monomial shorter;
      shorter.reserve(word.size() - 1);
      shorter.insert(shorter.end(), word.begin(), word.begin() + p);
      shorter.push_back(l);
      shorter.insert(shorter.end(), word.begin() + p + 2, word.end());
      straighten(shorter, coeff * c, out);
    }
  }

  /// e_i . (mono v_lambda) expressed over the monomials of dst (the slice one
  /// alpha_i above): each letter occurrence contributes its mixed bracket,
  /// Cartan parts act on the weight below the removed letter.
  QVec e_apply(int i, const Monomial& mono,
               const std::vector<Rational>& lambda_labels, const Slice& dst) {
    std::map<Monomial, Rational> acc;
    // label of the weight strictly below position t, precomputed from the right
    std::vector<Rational> below(mono.size() + 1, lambda_labels[i]);
    for (std::size_t s = mono.size(); s-- > 0;)
      below[s] = below[s + 1] -
                 Rational(cd_.label_of_root(letters_[mono[s]].degree, i));
    for (std::size_t t = 0; t < mono.size(); ++t) {
      const Mixed& mb = mixed_bracket(i, mono[t]);
      if (mb.h != 0) {
        Monomial removed;
        removed.reserve(mono.size() - 1);
        removed.insert(removed.end(), mono.begin(), mono.begin() + t);
        removed.insert(removed.end(), mono.begin() + t + 1, mono.end());
        Rational scalar = mb.h * below[t + 1];
        if (scalar != 0) {
          auto [it, inserted] = acc.emplace(std::move(removed), scalar);
          if (!inserted) it->second += scalar;
        }
      }
      for (const auto& [l, c] : mb.f) {
        Monomial replaced = mono;
        replaced[t] = l;
        straighten(replaced, c, acc);
      }
    }
    QVec v(dst.monomials.size(), Rational(0));
    for (const auto& [m, c] : acc) {
      if (c == 0) continue;
      auto it = dst.index.find(m);
      require(it != dst.index.end(), ErrorKind::InvalidArgument,
              "straightened monomial missing from target slice");
      v[it->second] = c;
    }
    return v;
  }

 private:
  int generator_of(int id) const {
    const Letter& l = letters_[id];
    return g_.basis(l.degree)[l.m].gen;
  }

  static void add(SparseVec& v, int l, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = v.emplace(l, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) v.erase(it);
    }
  }

  /// [x_j, f_b] via the bracket table, as letters at deg(b) + alpha_j.
  SparseVec ad_letter(int j, int b) {
    const Letter& lb = letters_[b];
    const auto* table = g_.ad(lb.degree, j);
    SparseVec out;
    if (!table) return out;  // target beyond height or zero component
    RootVec target = lb.degree + RootVec::simple(cd_.rank(), j);
    const QVec& col = (*table)[lb.m];
    for (std::size_t r = 0; r < col.size(); ++r)
      if (col[r] != 0) out.emplace(letter_id(target, static_cast<int>(r)), col[r]);
    return out;
  }

  SparseVec apply_ad(int j, const SparseVec& v) {
    SparseVec out;
    for (const auto& [l, c] : v)
      for (const auto& [l2, c2] : ad_letter(j, l)) add(out, l2, c * c2);
    return out;
  }

  const CartanData& cd_;
  const GradedNilpotent& g_;
  std::vector<Letter> letters_;
  std::map<RootVec, int> letter_base_;
  std::map<std::pair<int, int>, SparseVec> pair_cache_;
  std::map<std::pair<int, int>, Mixed> mixed_cache_;
};

struct OracleReport {
  long long dim = 0;
  long long slice_dim = 0;
  RootVec eta;
  int height_used = 0;
};

/// Brute-force oracle: realizes M_S(lambda) as the quotient of M(lambda) by
/// the submodule generated by the S-singular vectors
/// f_i^{<lambda,alpha_i^vee>+1} v_lambda, and computes maximal-vector spaces
/// as joint kernels of the raising operators, by exact linear algebra.
class VermaOracle {
 public:
  VermaOracle(const CartanData& cd, const GradedNilpotent& g,
              const Budgets& budgets = Budgets{})
      : cd_(cd), g_(g), budgets_(budgets), model_(cd, g) {}

  /// dim of the space of maximal vectors of weight mu in M_S(lambda), i.e.
  /// dim Hom(M_S(mu), M_S(lambda)) for mu in P_S^+. lambda must lie in
  /// P_S^+; mu is not constrained (the maximal-vector dimension is defined
  /// regardless, and equals 0 in the excluded cases).
  OracleReport parabolic_max_dim(const Weight& lambda, const Weight& mu,
                                 const SubsetS& s) {
    require(in_PS_plus(cd_, lambda, s), ErrorKind::NotInPSPlus,
            "highest weight not in P_S^+");
    auto eta_opt = difference_in_Qplus(lambda, mu);
    require(eta_opt.has_value(), ErrorKind::NotComparable,
            "mu is not <= lambda in the model");
    return max_vectors_at(lambda, *eta_opt, s);
  }

  OracleReport verma_max_dim(const Weight& lambda, const Weight& mu) {
    return parabolic_max_dim(lambda, mu, SubsetS{});
  }

  /// dim M_S(lambda)_{lambda - eta} for all eta of height <= depth.
  std::map<RootVec, long long> parabolic_weight_dims(const Weight& lambda,
                                                     const SubsetS& s,
                                                     int depth) {
    require(in_PS_plus(cd_, lambda, s), ErrorKind::NotInPSPlus,
            "highest weight not in P_S^+");
    require(depth <= g_.height(), ErrorKind::BudgetExceeded,
            "depth exceeds the built nilpotent height");
    std::map<RootVec, long long> out;
    std::vector<Rational> lam_labels = labels(cd_, lambda);
    for (const RootVec& eta : degrees_up_to(depth)) {
      PBWModel::Slice sl = model_.slice(eta, budgets_.slice_cap);
      RowSpace k = submodule_rows(lam_labels, s, sl);
      out[eta] = sl.dim() - static_cast<long long>(k.rank());
    }
    return out;
  }

 private:
  std::vector<RootVec> degrees_up_to(int depth) const {
    std::vector<RootVec> degrees;
    const int n = cd_.rank();
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
    for (int h = 0; h <= depth; ++h) rec(rec, 0, h);
    std::sort(degrees.begin(), degrees.end(), RootHeightLexLess{});
    return degrees;
  }

  RowSpace submodule_rows(const std::vector<Rational>& lam_labels,
                          const SubsetS& s, const PBWModel::Slice& sl) {
    RowSpace rows(sl.monomials.size());
    const int n = cd_.rank();
    for (int i : s.members) {
      const Rational& ci = lam_labels[i];
      require(is_nonnegative_integer(ci), ErrorKind::NotInPSPlus,
              "label on S is not a nonnegative integer");
      long long c = rational_to_int64(ci);
      RootVec rem = sl.eta;
      rem.k[i] -= c + 1;
      if (!rem.is_nonnegative()) continue;
      int fi = model_.letter_id(RootVec::simple(n, i), 0);
      PBWModel::Slice factors = model_.slice(rem, budgets_.slice_cap);
      for (const auto& mono : factors.monomials) {
        PBWModel::Monomial word = mono;
        word.insert(word.end(), static_cast<std::size_t>(c) + 1, fi);
        std::map<PBWModel::Monomial, Rational> acc;
        model_.straighten(word, Rational(1), acc);
        QVec v(sl.monomials.size(), Rational(0));
        for (const auto& [m, cf] : acc) {
          auto it = sl.index.find(m);
          require(it != sl.index.end(), ErrorKind::InvalidArgument,
                  "straightened monomial missing from slice");
          v[it->second] = cf;
        }
        rows.insert(std::move(v));
      }
    }
    return rows;
  }

  OracleReport max_vectors_at(const Weight& lambda, const RootVec& eta,
                              const SubsetS& s) {
    require(eta.height() <= g_.height(), ErrorKind::BudgetExceeded,
            "eta height exceeds the built nilpotent height");
    OracleReport rep;
    rep.eta = eta;
    rep.height_used = static_cast<int>(eta.height());
    std::vector<Rational> lam_labels = labels(cd_, lambda);
    PBWModel::Slice sl = model_.slice(eta, budgets_.slice_cap);
    rep.slice_dim = sl.dim();
    if (eta.is_zero()) {
      rep.dim = 1;  // the highest weight line
      return rep;
    }
    RowSpace k_eta = submodule_rows(lam_labels, s, sl);

    std::vector<QVec> constraints;
    const int n = cd_.rank();
    for (int i = 0; i < n; ++i) {
      RootVec target = eta;
      target.k[i] -= 1;
      if (!target.is_nonnegative()) continue;
      PBWModel::Slice dst = model_.slice(target, budgets_.slice_cap);
      RowSpace k_dst = submodule_rows(lam_labels, s, dst);
      std::vector<QVec> cols;
      cols.reserve(sl.monomials.size());
      for (const auto& mono : sl.monomials)
        cols.push_back(k_dst.reduce(model_.e_apply(i, mono, lam_labels, dst)));
      for (std::size_t r = 0; r < dst.monomials.size(); ++r) {
        QVec row(sl.monomials.size());
        bool nonzero = false;
        for (std::size_t c = 0; c < sl.monomials.size(); ++c) {
          row[c] = cols[c][r];
          nonzero = nonzero || row[c] != 0;
        }
        if (nonzero) constraints.push_back(std::move(row));
      }
    }
    long long joint_kernel =
        static_cast<long long>(kernel_basis(constraints, sl.monomials.size()).size());
    rep.dim = joint_kernel - static_cast<long long>(k_eta.rank());
    return rep;
  }

  const CartanData& cd_;
  const GradedNilpotent& g_;
  Budgets budgets_;
  PBWModel model_;
};

inline long long verma_max_dim(const CartanData& cd, const GradedNilpotent& g,
                               const Weight& lambda, const Weight& mu,
                               const Budgets& budgets = Budgets{}) {
  return VermaOracle(cd, g, budgets).verma_max_dim(lambda, mu).dim;
}

inline long long parabolic_max_dim(const CartanData& cd, const GradedNilpotent& g,
                                   const Weight& lambda, const Weight& mu,
                                   const SubsetS& s,
                                   const Budgets& budgets = Budgets{}) {
  return VermaOracle(cd, g, budgets).parabolic_max_dim(lambda, mu, s).dim;
}

inline std::map<RootVec, long long> parabolic_weight_dims(
    const CartanData& cd, const GradedNilpotent& g, const Weight& lambda,
    const SubsetS& s, int depth, const Budgets& budgets = Budgets{}) {
  return VermaOracle(cd, g, budgets).parabolic_weight_dims(lambda, s, depth);
}

}  // namespace kmhom
