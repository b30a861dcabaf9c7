#pragma once

// JSON and CSV reports. Rationals are canonical "p/q" strings; the only
// floats are the orthonormal-basis matrix entries. Every top-level document
// carries "schema": 1, and nlohmann::json keeps keys sorted.

#include "slantlab/commutator.hpp"
#include "slantlab/identities.hpp"
#include "slantlab/matrix.hpp"
#include "slantlab/parse.hpp"
#include "slantlab/remark.hpp"
#include "slantlab/systems.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace slantlab {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline Json rational_json(const Rational& r) { return to_string(r); }

inline Json with_schema(Json body) {
  body["schema"] = kSchemaVersion;
  return body;
}

/// Pretty-printed with a trailing newline, so identical input gives identical bytes.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json poly_json(const AnalyticPoly& p) {
  Json coeffs = Json::object();
  for (const auto& [n, c] : p.terms()) coeffs[std::to_string(n)] = to_string(c);
  return {{"text", format_poly(p)}, {"coeffs", coeffs}};
}

inline Json matrix_rows_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json matrix_json(const OperatorMatrix& m, const std::string& word) {
  return with_schema({{"word", word},
                      {"basis", "monomial"},
                      {"rows", m.max_row + 1},
                      {"cols", m.max_col + 1},
                      {"entries", matrix_rows_json(m.entries)}});
}

inline Json orthonormal_matrix_json(const OperatorMatrix& m, const std::string& word) {
  return with_schema({{"word", word},
                      {"basis", "orthonormal"},
                      {"approximate", true},
                      {"rows", m.max_row + 1},
                      {"cols", m.max_col + 1},
                      {"entries", orthonormal_export(m)}});
}

inline std::string matrix_csv(const OperatorMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i <= m.max_row; ++i) {
    for (std::size_t j = 0; j <= m.max_col; ++j) out << (j ? "," : "") << to_string(m.entry(i, j));
    out << "\n";
  }
  return out.str();
}

inline std::string orthonormal_csv(const OperatorMatrix& m) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& row : orthonormal_export(m)) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
    out << "\n";
  }
  return out.str();
}

inline Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"k", w->k}, {"s", w->s}, {"value", to_string(w->value)}};
}

inline Json commutator_json(const CommutatorReport& r) {
  return {{"f", format_symbol(r.f)},
          {"g", format_symbol(r.g)},
          {"kMax", r.k_max},
          {"witness", witness_json(r.first_witness)},
          {"maxAbsEntry", to_string(r.max_abs_entry)}};
}

inline Json verdict_json(const Verdict& v) {
  Json j = commutator_json(v.scan);
  j["verdict"] = to_string(v.kind);
  j["ratio"] = v.ratio ? Json(to_string(*v.ratio)) : Json(nullptr);
  j["note"] = v.note;
  return j;
}

inline Json remark_json(const RemarkReport& r) {
  Json rows = Json::array();
  auto terms = [](const std::vector<RemarkTerm>& side) {
    Json out = Json::array();
    for (const auto& t : side) {
      Json e = {{"label", t.label}, {"engine", to_string(t.engine)}};
      e["closedForm"] = t.closed_form ? Json(to_string(*t.closed_form)) : Json(nullptr);
      out.push_back(std::move(e));
    }
    return out;
  };
  for (const auto& row : r.rows)
    rows.push_back({{"halfK", row.half_k},
                    {"k", row.input_degree},
                    {"lhsConst", to_string(row.lhs_const)},
                    {"rhsConst", to_string(row.rhs_const)},
                    {"lhsTerms", terms(row.lhs_terms)},
                    {"rhsTerms", terms(row.rhs_terms)},
                    {"closedFormAgrees", row.closed_form_agrees}});
  const RemarkRow& sel = r.rows.at(r.selected);
  Json j = {{"variant", to_string(r.variant)},
            {"phi", format_poly(r.phi)},
            {"psi", format_poly(r.psi)},
            {"k", sel.input_degree},
            {"halfK", sel.half_k},
            {"lhsConst", to_string(sel.lhs_const)},
            {"rhsConst", to_string(sel.rhs_const)},
            {"publishedValuesReproduced", r.published_values_reproduced},
            {"note", r.note},
            {"rows", rows}};
  j["firstDisagreementHalfK"] = r.first_disagreement ? Json(*r.first_disagreement) : Json(nullptr);
  return j;
}

inline Json discrepancy_json(const Discrepancy& d) {
  return {{"identity", d.identity},          {"s", d.s},
          {"k", d.k},                        {"parity", to_string(d.parity)},
          {"side", d.side},                  {"printedValue", to_string(d.printed_value)},
          {"engineValue", to_string(d.engine_value)}, {"defects", d.defects}};
}

inline Json cross_check_json(const CrossCheckReport& r) {
  Json list = Json::array();
  for (const auto& d : r.mismatches) list.push_back(discrepancy_json(d));
  return {{"reading", to_string(r.reading)},
          {"comparisons", r.comparisons},
          {"mismatches", list},
          {"attributed", r.attributed()},
          {"unattributed", r.unattributed()}};
}

inline Json defect_registry_json() {
  Json list = Json::array();
  for (const auto& d : print_defects())
    list.push_back({{"id", std::string(d.id)},
                    {"where", std::string(d.where)},
                    {"printed", std::string(d.printed)},
                    {"corrected", std::string(d.corrected)}});
  return list;
}

inline Json system_json(const SystemReport& r) {
  Json j = {{"system", to_string(r.which)},
            {"t", r.t},
            {"N", r.N},
            {"reading", to_string(r.reading)},
            {"matrix", matrix_rows_json(r.matrix)},
            {"determinant", to_string(r.determinant)},
            {"invertible", r.invertible},
            {"unknowns", {{r.x_name, r.x_def}, {r.y_name, r.y_def}}}};
  if (r.solution)
    j["solution"] = {{r.x_name, to_string((*r.solution)[0])}, {r.y_name, to_string((*r.solution)[1])}};
  else
    j["solution"] = nullptr;
  return j;
}

inline Json rank_json(const RankReport& r) {
  return {{"N", r.N},
          {"factorizationHolds", r.factorization_holds},
          {"rankA", r.rank_A},
          {"rankB", r.rank_B},
          {"rankAB", r.rank_AB},
          {"rankSystem", r.rank_system},
          {"rankInequalityHolds", r.rank_inequality_holds},
          {"oddFamilyColumnScaled", r.odd_family_column_scaled},
          {"oddFamilyIdentical", r.odd_family_identical},
          {"rankOdd", r.rank_odd}};
}

}  // namespace slantlab
