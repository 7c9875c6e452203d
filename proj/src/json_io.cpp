#include "qder/json_io.hpp"

#include <stdexcept>

namespace qder {

using nlohmann::json;

json to_json(const Scalar& s) {
  if (s.is_rational()) return s.to_string();
  return s.residue_value();
}

json to_json(const Quandle& q) { return json{{"n", q.order()}, {"table", q.table()}}; }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& s : m.row(r)) row.push_back(to_json(s));
    rows.push_back(std::move(row));
  }
  return rows;
}

CayleyTable table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("table"))
    throw std::invalid_argument("quandle JSON needs the keys \"n\" and \"table\"");
  if (!j["n"].is_number_unsigned()) throw std::invalid_argument("\"n\" must be a non-negative integer");
  const auto n = j["n"].get<std::size_t>();
  const auto& t = j["table"];
  if (!t.is_array() || t.size() != n) throw std::invalid_argument("\"table\" must be an array of n rows");
  CayleyTable table;
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != n) throw std::invalid_argument("every table row must have n entries");
    std::vector<Element> r;
    for (const auto& v : row) {
      if (!v.is_number_unsigned()) throw std::invalid_argument("table entries must be non-negative integers");
      r.push_back(v.get<Element>());
    }
    table.push_back(std::move(r));
  }
  return table;
}

Quandle quandle_from_json(const json& j) { return Quandle::from_table(table_from_json(j)); }

json derivations_to_json(const DerivationBasis& d, const std::string& source) {
  json basis = json::array();
  for (const auto& m : d.basis) basis.push_back(to_json(m.matrix()));
  return json{{"quandle", source}, {"field", d.field.name()}, {"dim", d.dim()}, {"basis", std::move(basis)}};
}

json lietransform_to_json(const OperatorSpace& lie, const InnerDerivations& inner) {
  json basis = json::array();
  for (const auto& v : lie.basis.vectors()) {
    json flat = json::array();
    for (const auto& s : v) flat.push_back(to_json(s));
    basis.push_back(std::move(flat));
  }
  return json{{"dim", lie.dim()},
              {"basis", std::move(basis)},
              {"inner_dim", inner.inner_dim()},
              {"outer_dim", inner.outer_dim()}};
}

}  // namespace qder
