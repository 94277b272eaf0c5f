#pragma once

#include <deque>
#include <set>
#include <vector>

#include "kmhom/weight.hpp"

namespace kmhom {

/// A Weyl group element given as a word in the simple reflections. The word
/// (g_0, g_1, ..., g_k) denotes the operator r_{g_k} o ... o r_{g_0}: when
/// acting, g_0 is applied first. No canonicalization is attempted; equality
/// of group elements is decided by comparing actions on a spanning set.
struct WeylWord {
  std::vector<int> gens;  // 0-based generator indices

  WeylWord() = default;
  explicit WeylWord(std::vector<int> g) : gens(std::move(g)) {}

  std::size_t length() const { return gens.size(); }
  bool operator==(const WeylWord& o) const { return gens == o.gens; }

  WeylWord inverse() const {
    WeylWord w = *this;
    std::reverse(w.gens.begin(), w.gens.end());
    return w;
  }
  /// Word of (*this followed by o), i.e. the operator o . *this ... the
  /// returned word applies this word's letters first, then o's.
  WeylWord then(const WeylWord& o) const {
    WeylWord w = *this;
    w.gens.insert(w.gens.end(), o.gens.begin(), o.gens.end());
    return w;
  }
};

/// r_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i, applied along the word.
inline Weight act(const CartanData& cd, const WeylWord& w, Weight lambda) {
  for (int g : w.gens) {
    Rational t = label(cd, lambda, g);
    if (t != 0) lambda.x[g] -= t;
  }
  return lambda;
}

/// The same action on root-lattice coordinates: k -> k - <beta, alpha_i^vee> e_i.
inline RootVec act_root(const CartanData& cd, const WeylWord& w, RootVec beta) {
  for (int g : w.gens) {
    long long t = cd.label_of_root(beta, g);
    beta.k[g] -= t;
  }
  return beta;
}

/// Dot action w . lambda = w(lambda + rho) - rho; independent of the choice
/// of rho.
inline Weight dot(const CartanData& cd, const WeylWord& w, const Weight& lambda) {
  Weight rho = Weight::rho(cd.rank());
  return act(cd, w, lambda + rho) - rho;
}

/// True iff w1 and w2 act identically on the whole 2n-dimensional model
/// (checked on the c- and x-coordinate basis).
inline bool same_action(const CartanData& cd, const WeylWord& w1, const WeylWord& w2) {
  const int n = cd.rank();
  for (int i = 0; i < n; ++i) {
    Weight cu = Weight::zero(n);
    cu.c[i] = 1;
    if (act(cd, w1, cu) != act(cd, w2, cu)) return false;
    Weight xu = Weight::zero(n);
    xu.x[i] = 1;
    if (act(cd, w1, xu) != act(cd, w2, xu)) return false;
  }
  return true;
}

/// Longest element of the finite parabolic subgroup W_S, built greedily:
/// starting from the empty word, append any i in S (smallest first, for
/// determinism) such that the current word's inverse sends alpha_i to a
/// positive root; each step lengthens the element, and the loop stops at
/// w_S after |Delta_S^+| steps.
inline WeylWord longest_element(const CartanData& cd, const SubsetS& s) {
  require(classify_subset(cd, s).overall == SubsetType::Finite,
          ErrorKind::NotFiniteType, "longest element needs S of finite type");
  WeylWord w;
  for (;;) {
    bool extended = false;
    for (int i : s.members) {
      RootVec im = act_root(cd, w.inverse(), RootVec::simple(cd.rank(), i));
      if (im.is_nonnegative()) {
        w.gens.push_back(i);
        extended = true;
        break;
      }
    }
    if (!extended) return w;
  }
}

struct DotOrbit {
  std::vector<Weight> members;  // discovery order, seed first
  bool truncated = false;
};

/// BFS closure of {lambda} under the dot action of the given generator
/// words, halting (with the truncation flag set) once the budget is hit.
inline DotOrbit dot_orbit(const CartanData& cd, const Weight& lambda,
                          const std::vector<WeylWord>& gens, int budget) {
  require(budget >= 1, ErrorKind::InvalidArgument, "orbit budget must be >= 1");
  DotOrbit out;
  std::set<Weight> seen;
  std::deque<Weight> queue;
  seen.insert(lambda);
  out.members.push_back(lambda);
  queue.push_back(lambda);
  while (!queue.empty()) {
    Weight v = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Weight u = dot(cd, g, v);
      if (seen.insert(u).second) {
        if (static_cast<int>(out.members.size()) >= budget) {
          out.truncated = true;
          return out;
        }
        out.members.push_back(u);
        queue.push_back(u);
      }
    }
  }
  return out;
}

}  // namespace kmhom
