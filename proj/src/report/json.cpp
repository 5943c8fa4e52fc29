#include "handlecalc/report/json.hpp"

namespace handlecalc::report {

Json document() {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  return j;
}

Json big(const BigInt& value) {
  if (auto v = to_int64(value)) return *v;
  return value.str();
}

BigInt parse_big(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw Error("'" + s + "' is not an integer");
    return BigInt(s);
  }
  throw Error("expected an integer, got " + j.dump());
}

Json to_json(const IntegerVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(big(v(i)));
  return out;
}

Json to_json(const IntegerMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(big(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const AbelianGroup& g) {
  Json out;
  out["free_rank"] = g.free_rank;
  out["torsion"] = Json::array();
  for (const auto& t : g.torsion) out["torsion"].push_back(big(t));
  if (auto order = g.order()) {
    out["order"] = big(*order);
  } else {
    out["order"] = nullptr;
  }
  return out;
}

Json to_json(const HomologyProfile& h) {
  Json out;
  out["h1"] = to_json(h.h1);
  out["h2_rank"] = h.h2_rank;
  out["h2_basis"] = to_json(IntegerMatrix(h.h2_basis.transpose()));
  out["intersection_form"] = to_json(h.intersection_form);
  out["signature"] = h.inertia.signature();
  out["b2_plus"] = h.inertia.positive;
  out["b2_minus"] = h.inertia.negative;
  return out;
}

Json to_json(const HandleDecomposition& d) {
  Json out;
  out["name"] = d.name();
  out["one_handles"] = d.one_handles();
  out["two_handles"] = d.two_handles();
  out["linking"] = to_json(d.linking_matrix());
  out["run_through"] = to_json(d.run_through_matrix());
  out["three_handles"] = d.three_handle_count();
  return out;
}

Json to_json(const legendrian::SteinReport& r) {
  Json out;
  out["ok"] = r.ok;
  out["handles"] = Json::array();
  for (const auto& v : r.verdicts) {
    out["handles"].push_back(
        {{"id", v.handle}, {"framing", big(v.framing)}, {"tb", v.tb}, {"ok", v.ok}});
  }
  return out;
}

Json to_json(const BasicClassSet& classes) {
  Json out = Json::array();
  for (const auto& [k, w] : classes.classes()) {
    out.push_back({{"evaluation", to_json(k)}, {"weight", big(w)}});
  }
  return out;
}

Json to_json(const ManifoldModel& m) {
  Json out;
  out["rank"] = m.lattice.rank();
  out["pairing"] = to_json(m.lattice.pairing());
  out["euler"] = big(m.euler);
  out["signature"] = big(m.signature);
  out["b2plus"] = m.b2plus;
  Json named = Json::object();
  for (const auto& [label, v] : m.lattice.names()) named[label] = to_json(v);
  out["named"] = named;
  return out;
}

Json to_json(const LaurentPolynomial& p) {
  Json terms = Json::object();
  for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = big(c);
  return {{"text", p.to_string()}, {"coefficients", terms}};
}

Json to_json(const catalog::ScenarioReport& r) {
  Json out;
  out["name"] = r.name;
  out["ok"] = r.ok();
  out["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json item = {{"claim", c.claim}, {"origin", c.origin}, {"holds", c.holds}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    out["checks"].push_back(item);
  }
  return out;
}

IntegerVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error("expected an integer array");
  IntegerVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = parse_big(j[i]);
  return v;
}

IntegerMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error("expected a matrix");
  const auto rows = static_cast<Index>(j.size());
  const Index cols = rows == 0 ? 0 : static_cast<Index>(j[0].size());
  IntegerMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const IntegerVector row = vector_from_json(j[static_cast<std::size_t>(i)]);
    if (row.size() != cols) throw Error("ragged matrix");
    m.row(i) = row.transpose();
  }
  return m;
}

sw::ModelWithClasses model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pairing")) throw Error("model needs a 'pairing' matrix");
  IntersectionLattice lattice(matrix_from_json(j["pairing"]));
  if (j.contains("named")) {
    for (const auto& [label, v] : j["named"].items()) lattice.name(label, vector_from_json(v));
  }
  sw::ModelWithClasses out;
  out.model = simply_connected_model(std::move(lattice));
  if (j.contains("euler")) out.model.euler = parse_big(j["euler"]);
  if (j.contains("signature")) out.model.signature = parse_big(j["signature"]);
  if (j.contains("b2plus")) out.model.b2plus = parse_big(j["b2plus"]).convert_to<long>();
  if (j.contains("basic_classes")) {
    for (const auto& c : j["basic_classes"]) {
      const IntegerVector k = vector_from_json(c.is_object() ? c.at("evaluation") : c);
      if (k.size() != out.model.lattice.rank()) throw Error("basic class has wrong rank");
      out.classes.add(k, c.is_object() && c.contains("weight") ? parse_big(c["weight"]) : BigInt(1));
    }
  }
  return out;
}

Json model_to_json(const sw::ModelWithClasses& m) {
  Json out = to_json(m.model);
  out.erase("rank");
  out["basic_classes"] = to_json(m.classes);
  return out;
}

}  // namespace handlecalc::report
