#pragma once

#include <cassert>
#include <deque>
#include <map>
#include <vector>

#include "kmhom/weyl.hpp"

namespace kmhom {

/// A positive real root together with its reflection provenance:
/// root = act(word, alpha_base).
struct RealRootEntry {
  RootVec root;
  WeylWord word;
  int base = 0;
};

/// Breadth-first closure of the simple roots under simple reflections,
/// keeping positive roots of height <= H. Returns entries sorted by
/// (height, lex). `truncated`, when given, is set if some reflection left
/// the height window (i.e. the closure is incomplete).
inline std::vector<RealRootEntry> real_roots_up_to(const CartanData& cd, int H,
                                                   bool* truncated = nullptr) {
  require(H >= 1, ErrorKind::InvalidArgument, "height budget must be >= 1");
  const int n = cd.rank();
  std::map<RootVec, RealRootEntry> found;
  std::deque<RootVec> queue;
  bool trunc = false;
  for (int i = 0; i < n; ++i) {
    RootVec a = RootVec::simple(n, i);
    found.emplace(a, RealRootEntry{a, WeylWord{}, i});
    queue.push_back(a);
  }
  while (!queue.empty()) {
    RootVec beta = queue.front();
    queue.pop_front();
    const RealRootEntry& src = found.at(beta);
    for (int j = 0; j < n; ++j) {
      long long t = cd.label_of_root(beta, j);
      if (t == 0) continue;
      RootVec img = beta;
      img.k[j] -= t;
      if (!img.is_nonnegative()) continue;  // only beta = alpha_j reflects out
      if (img.height() > H) {
        trunc = true;
        continue;
      }
      if (found.count(img)) continue;
      RealRootEntry e;
      e.root = img;
      e.word = src.word;
      e.word.gens.push_back(j);  // img = r_j(beta) = act(word + [j], alpha_base)
      e.base = src.base;
      found.emplace(img, std::move(e));
      queue.push_back(img);
    }
  }
  std::vector<RealRootEntry> out;
  out.reserve(found.size());
  for (auto& [root, entry] : found) out.push_back(entry);
  std::sort(out.begin(), out.end(), [](const RealRootEntry& a, const RealRootEntry& b) {
    return RootHeightLexLess{}(a.root, b.root);
  });
  if (truncated) *truncated = trunc;
  return out;
}

/// Root multiplicities up to height H via the Peterson recurrence
///    (beta, beta - 2 rho) c_beta = sum_{b'+b''=beta} (b', b'') c_b' c_b''
/// over ordered pairs of positive-height vectors, with c_beta =
/// sum_{m | beta} mult(beta/m)/m and (rho, alpha_i) = d_i. The denominator
/// vanishes only at vectors that are not roots (at simple roots the base
/// case applies); there mult = 0 while c_beta keeps its divisor part, and
/// the right-hand side must vanish too, which is asserted.
inline std::map<RootVec, long long> peterson_mults(const CartanData& cd, int H) {
  require(H >= 1, ErrorKind::InvalidArgument, "height budget must be >= 1");
  const int n = cd.rank();
  std::map<RootVec, Rational> c;       // nonzero c_beta only
  std::map<RootVec, long long> mult;   // nonzero multiplicities only

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
    for (int h = 1; h <= H; ++h) rec(rec, 0, h);
  }
  std::sort(degrees.begin(), degrees.end(), RootHeightLexLess{});

  for (const RootVec& beta : degrees) {
    long long h = beta.height();
    if (h == 1) {
      c[beta] = 1;
      mult[beta] = 1;
      continue;
    }
    Rational rhs(0);
    for (const auto& [b1, c1] : c) {
      if (b1.height() >= h || !b1.leq_componentwise(beta)) continue;
      RootVec b2 = beta - b1;
      auto it = c.find(b2);
      if (it == c.end()) continue;
      rhs += cd.pair_roots(b1, b2) * c1 * it->second;
    }
    Rational two_rho_beta(0);
    for (int i = 0; i < n; ++i)
      if (beta.k[i] != 0) two_rho_beta += Rational(2) * cd.d(i) * Rational(beta.k[i]);
    Rational den = cd.norm(beta) - two_rho_beta;

    Rational divisor_part(0);
    for (long long m = 2; m <= h; ++m) {
      bool divides = true;
      RootVec q = RootVec::zero(n);
      for (int i = 0; i < n; ++i) {
        if (beta.k[i] % m != 0) {
          divides = false;
          break;
        }
        q.k[i] = beta.k[i] / m;
      }
      if (!divides) continue;
      auto it = mult.find(q);
      if (it != mult.end()) divisor_part += Rational(it->second, m);
    }

    Rational c_beta;
    if (den == 0) {
      require(rhs == 0, ErrorKind::DegenerateDenominator,
              "Peterson denominator vanished with nonzero right-hand side");
      c_beta = divisor_part;  // not a root: mult 0
    } else {
      c_beta = rhs / den;
    }
    Rational m_beta = c_beta - divisor_part;
    assert(is_nonnegative_integer(m_beta));
    if (c_beta != 0) c[beta] = c_beta;
    if (m_beta != 0) mult[beta] = rational_to_int64(m_beta);
  }
  return mult;
}

enum class RootClass { Real, Imaginary, NotARoot };

/// Positive roots with multiplicities up to a height budget, built from two
/// independent computations: the reflection closure (real roots, each with a
/// provenance word) and the Peterson recurrence (all multiplicities). The
/// two real-root sets are cross-checked at construction.
class RootTable {
 public:
  static RootTable build(const CartanData& cd, int H) {
    RootTable t;
    t.cartan_ = cd;
    t.height_ = H;
    bool truncated = false;
    t.real_ = real_roots_up_to(cd, H, &truncated);
    t.complete_ = !truncated;
    t.mult_ = peterson_mults(cd, H);
    for (const auto& e : t.real_) t.provenance_.emplace(e.root, e);
    // Peterson's positive-norm support must be exactly the reflection closure.
    std::size_t real_in_mults = 0;
    for (const auto& [beta, m] : t.mult_) {
      if (cd.norm(beta) > 0) {
        ++real_in_mults;
        auto it = t.provenance_.find(beta);
        require(it != t.provenance_.end() && m == 1, ErrorKind::InvalidArgument,
                "real-root cross-check failed");
      }
    }
    require(real_in_mults == t.real_.size(), ErrorKind::InvalidArgument,
            "real-root cross-check failed");
    return t;
  }

  const CartanData& cartan() const { return cartan_; }
  int height_budget() const { return height_; }
  /// True when the closure certifies that no positive root was left outside
  /// the window (finite root systems, sufficiently large H).
  bool complete() const { return complete_; }

  const std::vector<RealRootEntry>& real_entries() const { return real_; }
  const std::map<RootVec, long long>& mults() const { return mult_; }

  long long mult_of(const RootVec& beta) const {
    auto it = mult_.find(beta);
    return it == mult_.end() ? 0 : it->second;
  }

  /// All positive roots (mult > 0) of height <= H sorted by (height, lex).
  std::vector<RootVec> positive_roots() const {
    std::vector<RootVec> out;
    out.reserve(mult_.size());
    for (const auto& [beta, m] : mult_) out.push_back(beta);
    std::sort(out.begin(), out.end(), RootHeightLexLess{});
    return out;
  }

  const RealRootEntry* real_entry(const RootVec& beta) const {
    auto it = provenance_.find(beta);
    return it == provenance_.end() ? nullptr : &it->second;
  }

 private:
  CartanData cartan_ = CartanData::validate({{2}});
  int height_ = 1;
  bool complete_ = false;
  std::vector<RealRootEntry> real_;
  std::map<RootVec, long long> mult_;
  std::map<RootVec, RealRootEntry> provenance_;
};

inline RootClass classify_root(const CartanData& cd, const RootTable& table,
                               const RootVec& beta) {
  require(beta.height() <= table.height_budget(), ErrorKind::OutOfBudget,
          "root height exceeds the table budget");
  if (table.mult_of(beta) == 0) return RootClass::NotARoot;
  return cd.norm(beta) > 0 ? RootClass::Real : RootClass::Imaginary;
}

/// The reflection r_beta = w r_i w^{-1} attached to a real root
/// beta = w(alpha_i), assembled from the table's provenance word.
inline WeylWord reflection_for_root(const CartanData& cd, const RootTable& table,
                                    const RootVec& beta) {
  const RealRootEntry* e = table.real_entry(beta);
  require(e != nullptr, ErrorKind::NotRealRoot,
          "no real root with this coordinate vector in the table");
  WeylWord w = e->word.inverse();            // apply w^{-1} first
  w.gens.push_back(e->base);                 // then r_i
  w.gens.insert(w.gens.end(), e->word.gens.begin(), e->word.gens.end());
  return w;
}

struct DominanceReport {
  bool dominant = true;       // no <lambda+rho, beta^vee> in Z_{<0} found
  bool antidominant = true;   // no <lambda+rho, beta^vee> in Z_{>0} found
  bool exact = false;         // scan covered all of Delta^+_re
  std::optional<RootVec> dominance_witness;
  std::optional<RootVec> antidominance_witness;
};

/// Scans <lambda + rho, beta^vee> over the positive real roots of the table,
/// in (height, lex) order; the first violating root of each kind is kept as
/// witness. Exact (not just up-to-H) when the table is complete.
inline DominanceReport dominance(const CartanData& cd, const Weight& lambda,
                                 const RootTable& table) {
  DominanceReport rep;
  rep.exact = table.complete();
  Weight shifted = lambda + Weight::rho(cd.rank());
  for (const auto& e : table.real_entries()) {
    Rational p = pair_weight_coroot(cd, shifted, e.root);
    if (!is_integer(p) || p == 0) continue;
    if (p < 0 && rep.dominant) {
      rep.dominant = false;
      rep.dominance_witness = e.root;
    } else if (p > 0 && rep.antidominant) {
      rep.antidominant = false;
      rep.antidominance_witness = e.root;
    }
    if (!rep.dominant && !rep.antidominant) break;
  }
  return rep;
}

}  // namespace kmhom
