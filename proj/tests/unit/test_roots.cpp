#include <catch2/catch_amalgamated.hpp>

#include "kmhom/roots.hpp"

using namespace kmhom;

namespace {

const CartanData kA2 = CartanData::validate({{2, -1}, {-1, 2}});
const CartanData kAff = CartanData::validate({{2, -2}, {-2, 2}});
const CartanData kHyp = CartanData::validate({{2, -3}, {-3, 2}});
const CartanData kRank1 = CartanData::validate({{2}});

std::vector<RootVec> roots_of(const std::vector<RealRootEntry>& es) {
  std::vector<RootVec> out;
  for (const auto& e : es) out.push_back(e.root);
  return out;
}

}  // namespace

TEST_CASE("real root closure") {
  CHECK(roots_of(real_roots_up_to(kA2, 5)) ==
        std::vector<RootVec>{RootVec({0, 1}), RootVec({1, 0}), RootVec({1, 1})});

  SECTION("affine A1 heights") {
    CHECK(roots_of(real_roots_up_to(kAff, 4)) ==
          std::vector<RootVec>{RootVec({0, 1}), RootVec({1, 0}),
                               RootVec({1, 2}), RootVec({2, 1})});
    CHECK(roots_of(real_roots_up_to(kAff, 5)) ==
          std::vector<RootVec>{RootVec({0, 1}), RootVec({1, 0}),
                               RootVec({1, 2}), RootVec({2, 1}),
                               RootVec({2, 3}), RootVec({3, 2})});
    for (const auto& e : real_roots_up_to(kAff, 6))
      CHECK(kAff.norm(e.root) == Rational(2));
  }

  auto one = CartanData::validate({{2}});
  CHECK(roots_of(real_roots_up_to(one, 100)) ==
        std::vector<RootVec>{RootVec({1})});

  SECTION("provenance words reproduce the roots") {
    for (const auto& e : real_roots_up_to(kAff, 7))
      CHECK(act_root(kAff, e.word, RootVec::simple(2, e.base)) == e.root);
  }
}

TEST_CASE("peterson multiplicities") {
  SECTION("finite type: all roots real, mult 1") {
    auto m = peterson_mults(kA2, 10);
    CHECK(m.size() == 3);
    for (auto& [b, v] : m) CHECK(v == 1);
  }

  SECTION("affine A1: real roots and m*delta, all mult 1") {
    auto m = peterson_mults(kAff, 6);
    CHECK(m.size() == 9);
    for (long long k = 1; k <= 3; ++k) CHECK(m.at(RootVec({k, k})) == 1);
    CHECK(m.at(RootVec({3, 2})) == 1);
  }

  SECTION("hyperbolic [[2,-3],[-3,2]] up to height 6") {
    auto m = peterson_mults(kHyp, 6);
    std::map<RootVec, long long> expect = {
        {RootVec({0, 1}), 1}, {RootVec({1, 0}), 1}, {RootVec({1, 1}), 1},
        {RootVec({1, 2}), 1}, {RootVec({2, 1}), 1}, {RootVec({1, 3}), 1},
        {RootVec({2, 2}), 1}, {RootVec({3, 1}), 1}, {RootVec({2, 3}), 2},
        {RootVec({3, 2}), 2}, {RootVec({2, 4}), 1}, {RootVec({3, 3}), 3},
        {RootVec({4, 2}), 1}};
    CHECK(m == expect);
  }

  SECTION("orthogonal sum: the degenerate denominator at alpha_1+alpha_2") {
    auto m = peterson_mults(CartanData::validate({{2, 0}, {0, 2}}), 4);
    CHECK(m.size() == 2);  // only the two simple roots
  }

  SECTION("mult is Weyl-invariant inside the window") {
    auto m = peterson_mults(kHyp, 6);
    for (const auto& [beta, v] : m) {
      for (int i = 0; i < 2; ++i) {
        RootVec img = beta;
        img.k[i] -= kHyp.label_of_root(beta, i);
        if (img.is_nonnegative() && img.height() >= 1 && img.height() <= 6) {
          auto it = m.find(img);
          long long mi = it == m.end() ? 0 : it->second;
          CHECK(mi == v);
        }
      }
    }
  }
}

TEST_CASE("root table") {
  RootTable t = RootTable::build(kA2, 10);
  CHECK(t.complete());
  CHECK(t.positive_roots().size() == 3);

  RootTable ta = RootTable::build(kAff, 6);
  CHECK_FALSE(ta.complete());

  SECTION("classification") {
    CHECK(classify_root(kA2, t, RootVec({1, 1})) == RootClass::Real);
    CHECK(classify_root(kA2, t, RootVec({2, 0})) == RootClass::NotARoot);
    CHECK(classify_root(kAff, ta, RootVec({1, 1})) == RootClass::Imaginary);
    CHECK_THROWS_AS(classify_root(kA2, t, RootVec({20, 20})), Error);
  }
}

TEST_CASE("dominance scans") {
  RootTable t2 = RootTable::build(kRank1, 4);
  SECTION("boundary weight is both") {
    auto rep = dominance(kRank1, from_labels(kRank1, {Rational(-1)}), t2);
    CHECK(rep.dominant);
    CHECK(rep.antidominant);
    CHECK(rep.exact);
  }
  SECTION("zero is dominant, not antidominant") {
    auto rep = dominance(kRank1, from_labels(kRank1, {Rational(0)}), t2);
    CHECK(rep.dominant);
    CHECK_FALSE(rep.antidominant);
    CHECK(rep.antidominance_witness.value() == RootVec({1}));
  }
  SECTION("affine A1 labels (-3,1) is neither") {
    RootTable ta = RootTable::build(kAff, 10);
    auto rep = dominance(kAff, from_labels(kAff, {Rational(-3), Rational(1)}), ta);
    CHECK_FALSE(rep.dominant);
    CHECK_FALSE(rep.antidominant);
    CHECK(rep.dominance_witness.value() == RootVec({1, 0}));
    CHECK(rep.antidominance_witness.value() == RootVec({0, 1}));
    CHECK_FALSE(rep.exact);
  }
  SECTION("finite type agrees with the exhaustive check") {
    RootTable t = RootTable::build(kA2, 10);
    for (int l0 = -3; l0 <= 3; ++l0)
      for (int l1 = -3; l1 <= 3; ++l1) {
        Weight w = from_labels(kA2, {Rational(l0), Rational(l1)});
        auto rep = dominance(kA2, w, t);
        CHECK(rep.exact);
        bool dom = true, anti = true;
        for (const RootVec& beta : t.positive_roots()) {
          Rational p = pair_weight_coroot(kA2, w + Weight::rho(2), beta);
          if (is_integer(p) && p < 0) dom = false;
          if (is_integer(p) && p > 0) anti = false;
        }
        CHECK(rep.dominant == dom);
        CHECK(rep.antidominant == anti);
      }
  }
}
