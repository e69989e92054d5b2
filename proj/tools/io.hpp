#pragma once

// JSON encoding of fields, matrices, Hecke symmetries, parameter triples,
// twist operators and reports. Elements are always written as strings in the
// field's text encoding; keys keep insertion order so output is stable.

#include <string>
#include <string_view>

#include <json.hpp>

#include "hecke/classify.hpp"
#include "hecke/enumerate.hpp"
#include "hecke/hecke.hpp"

namespace hecke::io {

using json = nlohmann::ordered_json;

json field_to_json(const FieldDescriptor& d);
/// Accepts {"kind": "Q"} or {"kind": "Fp", "p": 7}.
FieldDescriptor field_from_json(const json& j, const std::string& where);

/// Throws MalformedSpec naming `where` when the value is not an element.
template <class F>
typename F::Elem elem_from_json(const F& f, const json& j, const std::string& where) {
  try {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
  } catch (const Error& e) {
    throw Error(Errc::MalformedSpec, where + ": " + e.what());
  }
  throw Error(Errc::MalformedSpec, where + ": expected a field element as a string");
}

template <class F>
json elem_to_json(const F& f, const typename F::Elem& a) {
  return f.format(a);
}

template <class F>
json matrix_to_json(const Matrix<F>& m) {
  const F& f = m.field();
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(f.format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"field", field_to_json(f.descriptor())}, {"rows", std::move(rows)}};
}

/// Reads {"field"?, "rows"} with the given shape; a "field" key, if present,
/// must agree with f.
template <class F>
Matrix<F> matrix_from_json(const F& f, const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_object() || !j.contains("rows")) throw Error(Errc::MalformedSpec, where + ": expected {\"rows\": [...]}");
  if (j.contains("field") && !(field_from_json(j["field"], where + ".field") == f.descriptor())) {
    throw Error(Errc::FieldMismatch, where + ".field: matrix is over " +
                                         field_from_json(j["field"], where + ".field").to_string() + ", expected " +
                                         f.descriptor().to_string());
  }
  const json& rs = j["rows"];
  if (!rs.is_array() || rs.size() != rows) {
    throw Error(Errc::DimensionMismatch, where + ".rows: expected " + std::to_string(rows) + " rows");
  }
  Matrix<F> m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string wi = where + ".rows[" + std::to_string(i) + "]";
    if (!rs[i].is_array() || rs[i].size() != cols) {
      throw Error(Errc::DimensionMismatch, wi + ": expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = elem_from_json(f, rs[i][c], wi + "[" + std::to_string(c) + "]");
  }
  return m;
}

template <class F>
json hecke_to_json(const HeckeSymmetry<F>& h) {
  const F& f = h.field();
  return json{{"field", field_to_json(f.descriptor())}, {"q", f.format(h.q)}, {"R", matrix_to_json(h.R)}};
}

/// Unvalidated (R, q); the caller decides which checks to run.
template <class F>
HeckeSymmetry<F> hecke_from_json(const F& f, const json& j) {
  if (!j.is_object() || !j.contains("R") || !j.contains("q")) {
    throw Error(Errc::MalformedSpec, "input: expected {\"q\": ..., \"R\": ...}");
  }
  return HeckeSymmetry<F>{matrix_from_json(f, j["R"], kDim * kDim, kDim * kDim, "R"), elem_from_json(f, j["q"], "q")};
}

template <class F>
json triple_to_json(const ParamTriple<F>& tr) {
  const F& f = tr.field();
  json t = json::array();
  for (const auto& x : tr.t) t.push_back(f.format(x));
  return json{{"t", std::move(t)}, {"g", matrix_to_json(tr.g)}, {"q", f.format(tr.q)}};
}

/// Shape and symmetry are checked here; the Delta relation is left to
/// validate_triple.
template <class F>
ParamTriple<F> triple_from_json(const F& f, const json& j) {
  if (!j.is_object() || !j.contains("t") || !j.contains("g") || !j.contains("q")) {
    throw Error(Errc::MalformedSpec, "input: expected {\"t\": [...], \"g\": ..., \"q\": ...}");
  }
  if (!j["t"].is_array() || j["t"].size() != 3) throw Error(Errc::DimensionMismatch, "t: expected [t12, t13, t23]");
  ParamTriple<F> tr{{elem_from_json(f, j["t"][0], "t[0]"), elem_from_json(f, j["t"][1], "t[1]"),
                     elem_from_json(f, j["t"][2], "t[2]")},
                    matrix_from_json(f, j["g"], kDim, kDim, "g"),
                    elem_from_json(f, j["q"], "q")};
  if (!(tr.g == tr.g.transpose())) throw Error(Errc::MalformedSpec, "g: matrix is not symmetric");
  return tr;
}

template <class F>
json twist_to_json(const TwistOperator<F>& z) {
  return json{{"zeta", matrix_to_json(z.matrix())}};
}

/// {"zeta": <3x3>}; throws Singular for a non-invertible matrix.
template <class F>
TwistOperator<F> twist_from_json(const F& f, const json& j) {
  if (!j.is_object() || !j.contains("zeta")) throw Error(Errc::MalformedSpec, "zeta: expected {\"zeta\": ...}");
  return TwistOperator<F>(matrix_from_json(f, j["zeta"], kDim, kDim, "zeta"));
}

template <class F>
json class_report_to_json(const F& f, const ClassReport<F>& rep);

json enumeration_report_to_json(const PrimeField& f, const EnumerationReport& rep);

}  // namespace hecke::io
