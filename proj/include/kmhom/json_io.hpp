#pragma once

#include <json.hpp>

#include "kmhom/budgets.hpp"
#include "kmhom/weight.hpp"
#include "kmhom/weyl.hpp"

// JSON conventions: rationals are strings ("1/2", "-3"), never floats;
// index sets and generator words are 1-based; weights serialize as their
// label vector plus the root-lattice offset, which determines the model
// point uniquely (c = labels - A x).

namespace kmhom {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return rational_to_string(q); }

inline Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rational_to_string(q));
  return a;
}

inline Json to_json(const RootVec& r) {
  Json a = Json::array();
  for (long long k : r.k) a.push_back(k);
  return a;
}

inline Json to_json(const SubsetS& s) {
  Json a = Json::array();
  for (int i : s.members) a.push_back(i + 1);
  return a;
}

inline Json to_json(const WeylWord& w) {
  Json a = Json::array();
  for (int g : w.gens) a.push_back(g + 1);
  return a;
}

inline Json weight_to_json(const CartanData& cd, const Weight& w) {
  Json j;
  j["labels"] = to_json(labels(cd, w));
  j["root_offset"] = to_json(w.x);
  return j;
}

/// Inverse of weight_to_json: c = labels - A x.
inline Weight weight_from_labels_offset(const CartanData& cd,
                                        std::vector<Rational> lab,
                                        std::vector<Rational> offset) {
  require(static_cast<int>(lab.size()) == cd.rank() &&
              static_cast<int>(offset.size()) == cd.rank(),
          ErrorKind::DimensionMismatch, "weight data of wrong rank");
  std::vector<Rational> c = std::move(lab);
  for (int i = 0; i < cd.rank(); ++i)
    for (int j = 0; j < cd.rank(); ++j)
      if (offset[j] != 0) c[i] -= Rational(cd.a(i, j)) * offset[j];
  return Weight(std::move(c), std::move(offset));
}

inline Json to_json(const Budgets& b) {
  Json j;
  j["height"] = b.height;
  j["orbit"] = b.orbit;
  j["slice_cap"] = b.slice_cap;
  if (b.iso_n_cap)
    j["iso_n_cap"] = *b.iso_n_cap;
  else
    j["iso_n_cap"] = nullptr;  // tied to the height budget
  return j;
}

}  // namespace kmhom
