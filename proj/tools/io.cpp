#include "io.hpp"

namespace hecke::io {

json field_to_json(const FieldDescriptor& d) {
  if (d.kind == FieldDescriptor::Kind::Rationals) return json{{"kind", "Q"}};
  return json{{"kind", "Fp"}, {"p", d.p}};
}

FieldDescriptor field_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_field(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.what());
    }
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw Error(Errc::MalformedSpec, where + ": expected {\"kind\": \"Q\"} or {\"kind\": \"Fp\", \"p\": <prime>}");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "Q") return FieldDescriptor::rationals();
  if (kind == "Fp") {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) throw Error(Errc::MalformedSpec, where + ".p: expected a prime");
    const auto p = j["p"].get<std::uint64_t>();
    if (p >= (1ull << 31)) throw Error(Errc::MalformedSpec, where + ".p: modulus too large");
    try {
      return FieldDescriptor::prime(static_cast<std::uint32_t>(p));
    } catch (const Error& e) {
      throw Error(e.code(), where + ".p: " + e.what());
    }
  }
  throw Error(Errc::MalformedSpec, where + ".kind: unknown field kind \"" + kind + "\"");
}

namespace {

json order_to_json(const std::array<std::size_t, 3>& order) {
  return json::array({order[0] + 1, order[1] + 1, order[2] + 1});
}

template <class F>
json alphas_to_json(const F& f, const std::array<typename F::Elem, 3>& a) {
  return json::array({f.format(a[0]), f.format(a[1]), f.format(a[2])});
}

}  // namespace

template <class F>
json class_report_to_json(const F& f, const ClassReport<F>& rep) {
  json real = json::array();
  for (const auto& r : rep.realizations) real.push_back(json{{"type", r.type}, {"order", order_to_json(r.order)}});
  json triples = json::array();
  for (const auto& c : rep.triples) {
    triples.push_back(json{{"type", c.type},
                           {"order", order_to_json(c.order)},
                           {"shape", std::string(shape_name(c.shape))},
                           {"triple", triple_to_json(c.triple)}});
  }
  return json{{"field", field_to_json(f.descriptor())},
              {"zeta", alphas_to_json(f, rep.twist.alphas)},
              {"q", f.format(rep.q)},
              {"regime", std::string(regime_name(rep.regime))},
              {"skew", {{"p1", f.format(rep.skew.p1)}, {"p2", f.format(rep.skew.p2)}, {"p3", f.format(rep.skew.p3)}}},
              {"gzeta_index", rep.gzeta_index},
              {"realizations", std::move(real)},
              {"types", rep.types},
              {"triples", std::move(triples)},
              {"table",
               {{"row", std::string(row_name(rep.row))},
                {"count_q_not_one", rep.count_q_not_one},
                {"count_q_one", rep.count_q_one},
                {"count", rep.count()},
                {"assumes_algebraically_closed_field", rep.counts_assume_closed_field}}}};
}

template json class_report_to_json<RationalField>(const RationalField&, const ClassReport<RationalField>&);
template json class_report_to_json<PrimeField>(const PrimeField&, const ClassReport<PrimeField>&);

json enumeration_report_to_json(const PrimeField& f, const EnumerationReport& rep) {
  const TheoremTally& t = rep.tally;
  json samples = json::array();
  for (const auto& s : rep.samples) samples.push_back(triple_to_json(s));
  return json{{"field", field_to_json(f.descriptor())},
              {"zeta", alphas_to_json(f, rep.alphas)},
              {"q", f.format(rep.q)},
              {"total_triples", rep.total_triples},
              {"kx_orbits", rep.kx_orbits},
              {"gzeta_orbits", rep.gzeta_orbits},
              {"gzeta_index", rep.gzeta_index},
              {"tally",
               {{"checked", t.checked},
                {"braid_failures", t.braid_failures},
                {"hecke_failures", t.hecke_failures},
                {"commute_failures", t.commute_failures},
                {"twist_failures", t.twist_failures},
                {"equivalence_failures", t.equivalence_failures},
                {"untwisted_identity_failures", t.untwisted_identity_failures},
                {"exceptions", t.exceptions},
                {"theorem_failures", t.theorem_failures()},
                {"dim_u_violations", t.dim_u_violations}}},
              {"samples", std::move(samples)},
              {"table",
               {{"row", rep.table_row},
                {"count", rep.table_count},
                {"matches_orbit_count", rep.table_match},
                {"note", rep.comparison_note}}}};
}

}  // namespace hecke::io
