#pragma once

// JSON encodings. Objects serialize with sorted keys and integers only, so
// dump() output is canonical.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tiltcat/combinatorics.hpp"
#include "tiltcat/engine/algebra.hpp"
#include "tiltcat/engine/module.hpp"
#include "tiltcat/harada.hpp"

namespace tiltcat::io {

using nlohmann::json;

inline json to_json(const comb::Coordinate& c) { return json::array({c.a(), c.b()}); }

inline comb::Coordinate coordinate_from_json(int n, const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("coordinate must be [a,b]");
  return comb::Coordinate(n, j[0].get<int>(), j[1].get<int>());
}

inline json to_json(const comb::Triangulation& t) {
  json out = json::array();
  for (const auto& d : t.diagonals()) out.push_back(to_json(d));
  return out;
}

inline json to_json(const harada::HaradaType& h) { return json{{"blocks", h.blocks()}}; }

inline harada::HaradaType harada_type_from_json(const json& j) {
  return harada::HaradaType(j.at("blocks").get<std::vector<int>>());
}

inline json to_json(const harada::Indec& x) {
  if (x.is_projective()) return json{{"block", x.block}, {"proj", x.first}};
  return json{{"block", x.block}, {"quot", json::array({x.first, x.second})}};
}

inline harada::Indec indec_from_json(const json& j) {
  const int block = j.at("block").get<int>();
  const bool proj = j.contains("proj");
  if (proj == j.contains("quot")) throw std::invalid_argument("summand needs exactly one of \"proj\" and \"quot\"");
  if (proj) return harada::Indec::projective(block, j.at("proj").get<int>());
  const auto& q = j.at("quot");
  if (!q.is_array() || q.size() != 2) throw std::invalid_argument("\"quot\" must be [k,l]");
  return harada::Indec::quotient(block, q[0].get<int>(), q[1].get<int>());
}

inline json to_json(const harada::HaradaModule& m) {
  json s = json::array();
  for (const auto& x : m.summands) s.push_back(to_json(x));
  return json{{"type", to_json(m.type)}, {"summands", s}};
}

inline harada::HaradaModule harada_module_from_json(const json& j) {
  std::vector<harada::Indec> s;
  for (const auto& x : j.at("summands")) s.push_back(indec_from_json(x));
  return harada::HaradaModule(harada_type_from_json(j.at("type")), std::move(s));
}

/// {"p", "dim", "unit", "sc": [[i,j,k,c],...], "idempotents": [[block,row,basisIndex],...],
/// "radical": [...]}. Unlabelled idempotents use block = row = 0.
inline json to_json(const engine::FDAlgebra& a) {
  json sc = json::array();
  for (const auto& c : a.structure_constants()) sc.push_back(json::array({c.left, c.right, c.out, c.coeff}));
  json idem = json::array();
  for (const auto& e : a.idempotents())
    idem.push_back(json::array({e.label ? e.label->block : 0, e.label ? e.label->row : 0, e.basis}));
  return json{{"p", a.field().modulus()}, {"dim", a.dim()},        {"unit", a.unit()},
              {"sc", sc},                 {"idempotents", idem}, {"radical", a.radical()}};
}

inline engine::AlgebraPtr algebra_from_json(const json& j) {
  const engine::PrimeField field(j.at("p").get<std::uint32_t>());
  std::vector<engine::StructureConstant> sc;
  for (const auto& c : j.at("sc")) {
    if (!c.is_array() || c.size() != 4) throw std::invalid_argument("structure constant must be [i,j,k,c]");
    sc.push_back({c[0].get<std::size_t>(), c[1].get<std::size_t>(), c[2].get<std::size_t>(), c[3].get<long long>()});
  }
  std::vector<engine::Elem> unit;
  for (const auto& u : j.at("unit")) unit.push_back(field.reduce(u.get<long long>()));
  std::vector<engine::Idempotent> idem;
  for (const auto& e : j.at("idempotents")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("idempotent must be [block,row,basisIndex]");
    engine::Idempotent x{e[2].get<std::size_t>(), std::nullopt};
    const int block = e[0].get<int>(), row = e[1].get<int>();
    if (block != 0 || row != 0) x.label = engine::GridLabel{block, row};
    idem.push_back(x);
  }
  return std::make_shared<const engine::FDAlgebra>(field, j.at("dim").get<std::size_t>(), sc, std::move(unit),
                                                   std::move(idem), j.at("radical").get<std::vector<std::size_t>>());
}

/// {"dim": d, "action": {"<basisIndex>": [[row],...], ...}}
inline json to_json(const engine::RightModule& m) {
  json action = json::object();
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    json rows = json::array();
    const auto& a = m.action(i);
    for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(std::vector<engine::Elem>(a.row(r).begin(), a.row(r).end()));
    action[std::to_string(i)] = rows;
  }
  return json{{"dim", m.dim()}, {"action", action}};
}

inline engine::RightModule module_from_json(const engine::AlgebraPtr& alg, const json& j) {
  const std::size_t d = j.at("dim").get<std::size_t>();
  std::vector<engine::Matrix> action(alg->dim(), engine::Matrix(alg->field(), d, d));
  for (const auto& [key, rows] : j.at("action").items()) {
    const std::size_t i = std::stoul(key);
    if (i >= alg->dim()) throw std::invalid_argument("action index out of range");
    std::vector<std::vector<long long>> r = rows.get<std::vector<std::vector<long long>>>();
    action[i] = engine::Matrix::from_rows(alg->field(), r, d);
    if (action[i].rows() != d || action[i].cols() != d) throw std::invalid_argument("action matrix has wrong shape");
  }
  return engine::RightModule::validated(alg, d, std::move(action));
}

}  // namespace tiltcat::io
