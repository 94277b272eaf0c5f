#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "kmhom/linkage.hpp"

using namespace kmhom;

namespace {

const CartanData kA2 = CartanData::validate({{2, -1}, {-1, 2}});
const CartanData kAff = CartanData::validate({{2, -2}, {-2, 2}});
const CartanData kSl2 = CartanData::validate({{2}});

Weight wlab(const CartanData& c, std::vector<Rational> l) {
  return from_labels(c, std::move(l));
}

std::set<std::vector<Rational>> label_set(const CartanData& c,
                                          const std::vector<Weight>& ws) {
  std::set<std::vector<Rational>> out;
  for (const auto& w : ws) out.insert(labels(c, w));
  return out;
}

}  // namespace

TEST_CASE("kk_pairs") {
  RootTable t = RootTable::build(kA2, 8);
  auto pairs = kk_pairs(kA2, t, Weight::zero(2));
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].beta == RootVec({0, 1}));
  CHECK(pairs[0].n.value() == 1);
  CHECK(pairs[1].beta == RootVec({1, 0}));
  CHECK(pairs[1].n.value() == 1);
  CHECK(pairs[2].beta == RootVec({1, 1}));
  CHECK(pairs[2].n.value() == 2);

  SECTION("sl2 with integral dominant labels") {
    RootTable t2 = RootTable::build(kSl2, 4);
    for (long long m = 0; m <= 4; ++m) {
      auto ps = kk_pairs(kSl2, t2, wlab(kSl2, {Rational(m)}));
      REQUIRE(ps.size() == 1);
      CHECK(ps[0].n.value() == m + 1);
    }
    CHECK(kk_pairs(kSl2, t2, wlab(kSl2, {Rational(1, 2)})).empty());
  }

  SECTION("isotropic AllPositive pair at the critical level") {
    RootTable ta = RootTable::build(kAff, 6);
    auto ps = kk_pairs(kAff, ta, wlab(kAff, {Rational(-1), Rational(-1)}));
    bool found = false;
    for (const auto& p : ps)
      if (p.beta == RootVec({1, 1}) && !p.n.has_value()) found = true;
    CHECK(found);
  }
}

TEST_CASE("linkage classes") {
  SECTION("sl2 integral") {
    RootTable t = RootTable::build(kSl2, 6);
    LinkageClass cls = linkage_class(kSl2, t, wlab(kSl2, {Rational(0)}), Budgets{});
    CHECK(label_set(kSl2, cls.members) ==
          std::set<std::vector<Rational>>{{Rational(0)}, {Rational(-2)}});
    CHECK_FALSE(cls.truncated);
  }
  SECTION("sl2 generic weight is alone") {
    RootTable t = RootTable::build(kSl2, 6);
    LinkageClass cls =
        linkage_class(kSl2, t, wlab(kSl2, {Rational(1, 2)}), Budgets{});
    CHECK(cls.members.size() == 1);
  }
  SECTION("sl3 block of zero equals the dot orbit") {
    Budgets b;
    b.height = 10;
    RootTable t = RootTable::build(kA2, b.height);
    LinkageClass cls = linkage_class(kA2, t, Weight::zero(2), b);
    CHECK(cls.members.size() == 6);
    CHECK_FALSE(cls.truncated);
    DotOrbit orbit =
        dot_orbit(kA2, Weight::zero(2), {WeylWord{{0}}, WeylWord{{1}}}, 100);
    CHECK(std::set<Weight>(cls.members.begin(), cls.members.end()) ==
          std::set<Weight>(orbit.members.begin(), orbit.members.end()));
  }
  SECTION("members stay in the same c-fiber") {
    RootTable t = RootTable::build(kAff, 6);
    Weight seed = wlab(kAff, {Rational(1), Rational(-3)});
    LinkageClass cls = linkage_class(kAff, t, seed, Budgets{});
    for (const auto& w : cls.members) CHECK(w.c == seed.c);
  }
}

TEST_CASE("integral systems") {
  RootTable t = RootTable::build(kA2, 8);
  CHECK(integral_system(kA2, t, Weight::zero(2)).size() == 3);
  CHECK(integral_system(kA2, t, wlab(kA2, {Rational(1, 2), Rational(1, 3)})).empty());

  auto partial = integral_system(kA2, t, wlab(kA2, {Rational(1, 2), Rational(0)}));
  REQUIRE(partial.size() == 1);
  CHECK(partial[0].first == RootVec({0, 1}));

  RootTable t2 = RootTable::build(kSl2, 4);
  CHECK(integral_system(kSl2, t2, wlab(kSl2, {Rational(1, 2)})).empty());
}

TEST_CASE("criticality detection") {
  RootTable ta = RootTable::build(kAff, 12);
  SECTION("level -2 locus of affine A1") {
    auto rep = is_critical(kAff, ta, wlab(kAff, {Rational(-1), Rational(-1)}));
    CHECK(rep.critical);
    CHECK(rep.witness.value() == RootVec({1, 1}));
    auto rep2 = is_critical(kAff, ta, wlab(kAff, {Rational(1, 2), Rational(-5, 2)}));
    CHECK(rep2.critical);
  }
  SECTION("away from the critical level") {
    CHECK_FALSE(is_critical(kAff, ta, Weight::zero(2)).critical);
    CHECK_FALSE(
        is_critical(kAff, ta, wlab(kAff, {Rational(1, 3), Rational(0)})).critical);
  }
  SECTION("no imaginary roots in finite type") {
    RootTable t = RootTable::build(kA2, 12);
    CHECK_FALSE(is_critical(kA2, t, Weight::zero(2)).critical);
  }
  SECTION("criticality is constant on the truncated class") {
    Weight seed = wlab(kAff, {Rational(-1), Rational(-1)});
    Budgets b;
    b.height = 6;
    LinkageClass cls = linkage_class(kAff, RootTable::build(kAff, 6), seed, b);
    CHECK(cls.members.size() > 1);
    for (const auto& w : cls.members) CHECK(is_critical(kAff, ta, w).critical);
  }
}

TEST_CASE("level sign") {
  RootTable t2 = RootTable::build(kSl2, 4);
  SECTION("already dominant") {
    auto rep = level_sign(kSl2, t2, wlab(kSl2, {Rational(0)}), Budgets{});
    CHECK(rep.sign == LevelSign::Positive);
    CHECK(labels(kSl2, rep.witness.value()) == std::vector<Rational>{Rational(0)});
  }
  SECTION("orbit partner is dominant") {
    auto rep = level_sign(kSl2, t2, wlab(kSl2, {Rational(-2)}), Budgets{});
    CHECK(rep.sign == LevelSign::Positive);
    CHECK(labels(kSl2, rep.witness.value()) == std::vector<Rational>{Rational(0)});
  }
  SECTION("boundary weight reports Positive with the both note") {
    auto rep = level_sign(kSl2, t2, wlab(kSl2, {Rational(-1)}), Budgets{});
    CHECK(rep.sign == LevelSign::Positive);
    CHECK(rep.both);
  }
  SECTION("critical classes are undetermined") {
    RootTable ta = RootTable::build(kAff, 8);
    auto rep =
        level_sign(kAff, ta, wlab(kAff, {Rational(-1), Rational(-1)}), Budgets{});
    CHECK(rep.sign == LevelSign::Undetermined);
  }
  SECTION("negative level in affine type") {
    RootTable ta = RootTable::build(kAff, 8);
    Budgets b;
    b.orbit = 200;  // the integral orbit is infinite; the seed already decides
    auto rep = level_sign(kAff, ta, wlab(kAff, {Rational(-2), Rational(-2)}), b);
    CHECK(rep.sign == LevelSign::Negative);
    CHECK(rep.truncated);
  }
  SECTION("positive level in affine type") {
    RootTable ta = RootTable::build(kAff, 8);
    Budgets b;
    b.orbit = 200;
    auto rep = level_sign(kAff, ta, wlab(kAff, {Rational(1), Rational(2)}), b);
    CHECK(rep.sign == LevelSign::Positive);
    CHECK(labels(kAff, rep.witness.value()) ==
          std::vector<Rational>{Rational(1), Rational(2)});
  }
}
