#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kmhom/weight.hpp"

using namespace kmhom;

namespace {

const CartanData kA2 = CartanData::validate({{2, -1}, {-1, 2}});
const CartanData kAff = CartanData::validate({{2, -2}, {-2, 2}});
const CartanData kSl2 = CartanData::validate({{2}});

Weight wlab(const CartanData& c, std::initializer_list<Rational> l) {
  return from_labels(c, std::vector<Rational>(l));
}

Weight random_weight(const CartanData& c, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  Weight w = Weight::zero(c.rank());
  for (int i = 0; i < c.rank(); ++i) {
    w.c[i] = Rational(num(rng)) / Rational(den(rng));
    w.x[i] = Rational(num(rng)) / Rational(den(rng));
  }
  return w;
}

}  // namespace

TEST_CASE("from_labels round-trips") {
  auto w = wlab(kA2, {Rational(1), Rational(-1)});
  CHECK(labels(kA2, w) == std::vector<Rational>{Rational(1), Rational(-1)});
  auto v = wlab(kA2, {Rational(1, 2), Rational(3)});
  CHECK(labels(kA2, v) == std::vector<Rational>{Rational(1, 2), Rational(3)});
  CHECK(wlab(kA2, {Rational(0), Rational(0)}) == Weight::zero(2));
}

TEST_CASE("pairing weights against roots and coroots") {
  RootVec theta({1, 1});
  CHECK(pair_weight_root(kA2, Weight::rho(2), theta) == Rational(2));

  RootVec delta({1, 1});
  CHECK(pair_weight_root(kAff, Weight::rho(2), delta) == Rational(2));
  CHECK_THROWS_AS(pair_weight_coroot(kAff, Weight::rho(2), delta), Error);

  CHECK(pair_weight_root(kA2, Weight::zero(2), theta) == Rational(0));

  SECTION("x-part enters through the gram matrix") {
    Weight w = Weight::zero(2);
    w.x[0] = Rational(1);
    CHECK(pair_weight_root(kA2, w, theta) == Rational(1));  // (a1, a1+a2)
  }
}

TEST_CASE("sub_root shifts the root offset only") {
  auto lam = wlab(kSl2, {Rational(0)});
  CHECK(sub_root(lam, RootVec::simple(1, 0), Rational(0)) == lam);
  auto mu = sub_root(lam, RootVec::simple(1, 0), Rational(1));
  CHECK(labels(kSl2, mu) == std::vector<Rational>{Rational(-2)});

  SECTION("delta shift changes the model point, not the labels") {
    auto z = wlab(kAff, {Rational(0), Rational(0)});
    auto shifted = sub_root(z, RootVec({1, 1}), Rational(1));
    CHECK(shifted != z);
    CHECK(labels(kAff, shifted) == labels(kAff, z));
    CHECK(shifted.x == std::vector<Rational>{Rational(-1), Rational(-1)});
  }
}

TEST_CASE("difference_in_Qplus decides the partial order") {
  auto z = Weight::zero(2);
  CHECK(difference_in_Qplus(z, z).value() == RootVec::zero(2));

  auto mu = sub_root(z, RootVec({1, 2}), Rational(1));
  CHECK(difference_in_Qplus(z, mu).value() == RootVec({1, 2}));
  CHECK_FALSE(difference_in_Qplus(mu, z).has_value());

  auto other_c = wlab(kA2, {Rational(1), Rational(0)});
  CHECK_FALSE(difference_in_Qplus(other_c, z).has_value());

  auto frac = sub_root(z, RootVec::simple(2, 0), Rational(1, 2));
  CHECK_FALSE(difference_in_Qplus(z, frac).has_value());
}

TEST_CASE("support and S-height") {
  CHECK(supp(RootVec({1, 2})) == SubsetS{0, 1});
  CHECK(supp(RootVec({0, 3, 0})) == SubsetS{1});
  CHECK(supp(RootVec::zero(2)).empty());

  RootVec eta({2, 3});
  CHECK(s_height(eta, SubsetS{0}) == 3);
  CHECK(s_height(eta, SubsetS{}) == 5);
  CHECK(s_height(eta, SubsetS{0, 1}) == 0);
  CHECK(s_height(eta, SubsetS{}) == eta.height());
}

TEST_CASE("P_S^+ membership") {
  auto w = wlab(kA2, {Rational(1), Rational(-1, 2)});
  CHECK(in_PS_plus(kA2, w, SubsetS{}));
  CHECK(in_PS_plus(kA2, w, SubsetS{0}));
  CHECK_FALSE(in_PS_plus(kA2, w, SubsetS{1}));
  CHECK(in_PS_plus(kA2, Weight::zero(2), SubsetS{0, 1}));
}

TEST_CASE("label consistency against the coroot pairing") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const CartanData& c = trial % 2 ? kA2 : kAff;
    Weight w = random_weight(c, rng);
    auto lab = labels(c, w);
    for (int i = 0; i < c.rank(); ++i)
      CHECK(pair_weight_coroot(c, w, RootVec::simple(c.rank(), i)) == lab[i]);
  }
}

TEST_CASE("sub_root then difference_in_Qplus round-trips") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    Weight w = random_weight(kA2, rng);
    RootVec beta({coeff(rng), coeff(rng)});
    long long m = coeff(rng);
    auto diff = difference_in_Qplus(w, sub_root(w, beta, Rational(m)));
    REQUIRE(diff.has_value());
    CHECK(*diff == beta * m);
  }
}

TEST_CASE("disjoint support means S-height equals height") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coeff(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    RootVec eta({coeff(rng), coeff(rng), 0});
    SubsetS s{2};
    if (supp(eta).contains(2)) continue;
    CHECK(s_height(eta, s) == eta.height());
  }
}
