#pragma once
// JSON serialization for library results.
//
// Conventions shared by every producer:
//   * all group orders and other potentially large integers are emitted as
//     decimal strings, never as JSON numbers, so consumers cannot overflow;
//   * small structural integers (primes, exponents, matrix dimensions,
//     element encodings) are plain numbers;
//   * objects are built with nlohmann::json, whose object keys are stored
//     sorted, so serialization of equal values is byte-identical.

#include <string>
#include <vector>

#include <json.hpp>

#include "rcm/finite_field.hpp"
#include "rcm/matrix.hpp"
#include "rcm/orders.hpp"
#include "rcm/structure.hpp"

namespace rcm {

using json = nlohmann::json;

inline json group_order_to_json(const GroupOrder& g) {
  json params;
  if (g.kind == GroupOrder::Kind::field) {
    params = {{"p", g.p}, {"t", g.t}, {"n", g.n}};
  } else {
    params = {{"a", g.a}, {"n", g.n}};
  }
  json breakdown = json::array();
  for (const OrderTerm& term : g.breakdown) {
    breakdown.push_back(
        {{"p", term.p}, {"d", term.d}, {"factor", term.factor.get_str()}});
  }
  return {{"kind", g.kind == GroupOrder::Kind::field ? "field" : "zmod"},
          {"params", params},
          {"order", g.value.get_str()},
          {"breakdown", breakdown}};
}

inline json field_to_json(const FiniteField& f) {
  return {{"p", f.p()}, {"s", f.s()}, {"modulus", f.modulus()}};
}

inline json cycles_to_json(const CycleDecomposition& d) {
  json cycles = json::array();
  for (const auto& cycle : d.cycles) cycles.push_back(cycle);
  json lengths = json::object();
  for (const auto& [len, count] : d.lengths()) {
    lengths[std::to_string(len)] = count;
  }
  return {{"modulus", d.modulus}, {"cycles", cycles}, {"lengths", lengths}};
}

// {rows, cols, ring, entries} with entries in the ring's element encoding.
template <class R>
json matrix_to_json(const Matrix<R>& m, const std::string& ring_name) {
  json rows = json::array();
  for (u32 i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (u32 j = 0; j < m.cols(); ++j) {
      row.push_back(m.ring().encoding(m.at(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"ring", ring_name},
          {"entries", rows}};
}

}  // namespace rcm
