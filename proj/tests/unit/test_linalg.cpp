#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kmhom/linalg.hpp"

using namespace kmhom;

namespace {

QVec qvec(std::initializer_list<long long> xs) {
  QVec v;
  for (auto x : xs) v.push_back(Rational(x));
  return v;
}

bool maps_to_zero(const std::vector<QVec>& rows, const QVec& x) {
  for (const auto& r : rows) {
    Rational acc(0);
    for (std::size_t c = 0; c < x.size(); ++c) acc += r[c] * x[c];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("kernel of simple matrices") {
  SECTION("identity has trivial kernel") {
    auto k = kernel_basis({qvec({1, 0}), qvec({0, 1})}, 2);
    CHECK(k.empty());
  }
  SECTION("zero matrix has full kernel") {
    auto k = kernel_basis({qvec({0, 0, 0})}, 3);
    CHECK(k.size() == 3);
  }
  SECTION("rank-1 matrix") {
    std::vector<QVec> rows = {qvec({1, 2, 3}), qvec({2, 4, 6}), qvec({-1, -2, -3})};
    auto k = kernel_basis(rows, 3);
    REQUIRE(k.size() == 2);
    for (const auto& x : k) CHECK(maps_to_zero(rows, x));
  }
  SECTION("rational entries") {
    std::vector<QVec> rows = {{Rational(1, 2), Rational(1, 3)},
                              {Rational(3), Rational(2)}};
    auto k = kernel_basis(rows, 2);
    REQUIRE(k.size() == 1);
    CHECK(maps_to_zero(rows, k[0]));
  }
  SECTION("empty rows") {
    auto k = kernel_basis({}, 2);
    CHECK(k.size() == 2);
  }
}

TEST_CASE("kernel dimension matches rank on random matrices") {
  std::mt19937 rng(20250810);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t m = 1 + rng() % 5, n = 1 + rng() % 5;
    std::vector<QVec> rows(m, QVec(n));
    for (auto& r : rows)
      for (auto& q : r) q = Rational(entry(rng));
    auto k = kernel_basis(rows, n);
    for (const auto& x : k) CHECK(maps_to_zero(rows, x));
    RowSpace rs(n);
    for (const auto& r : rows) rs.insert(r);
    CHECK(k.size() + rs.rank() == n);
    // kernel vectors are independent
    RowSpace span(n);
    for (const auto& x : k) CHECK(span.insert(x));
  }
}

TEST_CASE("row space reduction") {
  RowSpace rs(3);
  CHECK(rs.insert(qvec({1, 1, 0})));
  CHECK(rs.insert(qvec({0, 1, 1})));
  CHECK_FALSE(rs.insert(qvec({1, 2, 1})));
  CHECK(rs.rank() == 2);
  CHECK(rs.contains(qvec({2, 3, 1})));
  CHECK_FALSE(rs.contains(qvec({0, 0, 1})));
  QVec r = rs.reduce(qvec({5, 5, 5}));
  CHECK(is_zero(rs.reduce(r)));  // idempotent
}

TEST_CASE("span tracker records expansions") {
  SpanTracker t(3);
  CHECK_FALSE(t.solve_or_insert(qvec({1, 0, 1})).has_value());
  CHECK_FALSE(t.solve_or_insert(qvec({0, 1, 1})).has_value());
  auto combo = t.solve_or_insert(qvec({2, 3, 5}));
  REQUIRE(combo.has_value());
  REQUIRE(combo->size() == 2);
  CHECK((*combo)[0] == Rational(2));
  CHECK((*combo)[1] == Rational(3));
  // zero vector over an empty basis is dependent with empty expansion
  SpanTracker t2(2);
  auto z = t2.solve_or_insert(qvec({0, 0}));
  REQUIRE(z.has_value());
  CHECK(z->empty());
}
