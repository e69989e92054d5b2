#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hecke/classify.hpp"
#include "hecke/ell_forms.hpp"
#include "hecke/enumerate.hpp"
#include "hecke/quad_algebra.hpp"
#include "io.hpp"

namespace hecke::cli {

namespace {

using io::json;

// Check name -> the statement it verifies.
const std::map<std::string, std::string>& provenance_table() {
  static const std::map<std::string, std::string> table = {
      {"braid", "braid equation (R x 1)(1 x R)(R x 1) = (1 x R)(R x 1)(1 x R) on V^3"},
      {"hecke", "quadratic relation (R - q)(R + 1) = 0"},
      {"relations_dim", "dim Im(q - R) = 3"},
      {"commutes_with_zeta", "R commutes with zeta x zeta"},
      {"twisted_polynomial", "S(V, R) equals the twisted polynomial algebra S(V)_zeta"},
      {"q_unchanged", "twisting keeps the Hecke parameter"},
      {"equals_twisted_relations", "Im(q - R) = span of zeta(x) y - zeta(y) x"},
      {"hilbert", "Hilbert dimensions 1, 3, 6, 10 of a polynomial algebra in three variables"},
      {"upsilon3_dim", "dim (I2 V n V I2) = 1"},
      {"degree3_sum_dim", "dim (I2 V + V I2) = 17"},
      {"twisted_cyclic", "generator of I2 V n V I2 is twisted-cyclic"},
      {"zeta_transport", "l'_xy(z) det(zeta) = l_{zeta x, zeta y}(zeta z)"},
      {"skewsymmetrizer", "l_xy(z) - l_xz(y) = (q + 1) omega(x, y, z)"},
      {"wedge_swap", "l_xy ^ l'_xy = l_xx ^ l'_yy"},
      {"diagonal_swap", "l_xy(x) = l_xx(y) and l'_xy(x) = l'_xx(y)"},
      {"full_identity", "(l_xy ^ l'_xz - l_xx ^ l'_yz)(u, v) = q omega(x, y, z) omega(x, u, v)"},
      {"untwisted_identity", "l_xx ^ l_yy = 0 for scalar zeta"},
      {"equivalent_conditions", "commutation, Y' = Y, Y' = cY, l' = cl and l ^ l' = 0 agree"},
      {"commutes_with_zeta_cubed", "R commutes with (zeta x zeta)^3"},
      {"span", "the forms l_xy span V* and have no one-sided kernel"},
      {"skewsymmetrizer_kernel", "a -> Y(a x .) and a -> Y(. x a) are injective"},
      {"dim_u", "dim span{l_xx} = 1"},
      {"triples_build", "each canonical triple gives a Hecke symmetry commuting with zeta x zeta"},
      {"no_theorem_failures", "every enumerated triple: braid, Hecke, commutation, twist, equivalent conditions"},
      {"dim_u_is_one", "every enumerated triple: dim span{l_xx} = 1"},
  };
  return table;
}

struct Checks {
  json values = json::object();
  json provenance = json::object();
  bool ok = true;

  void set(const std::string& name, bool v) {
    values[name] = v;
    provenance[name] = provenance_table().at(name);
    ok = ok && v;
  }
  void attach(json& doc) const {
    doc["checks"] = values;
    doc["provenance"] = provenance;
  }
};

struct Options {
  std::string command;
  std::vector<std::string> field_tokens;
  std::string input;
  std::string zeta;
  std::string q;
  std::string p1, p2, p3;
  int type = 0;
  std::uint32_t max_prime = 13;
  unsigned threads = 0;
  std::size_t degree = 3;
  std::string output = "json";
  std::string out;
};

struct Result {
  json doc;
  bool ok = true;
  std::string text;  // overrides the generic text rendering when set
};

std::string read_file(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::MalformedSpec, what + ": cannot open \"" + path + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedSpec, what + ": " + e.what());
  }
}

std::optional<json> load_input(const Options& o) {
  if (o.input.empty()) return std::nullopt;
  return parse_json(read_file(o.input, "input"), "input");
}

// "Fp:7", or the two tokens "F" "p:7".
std::optional<FieldDescriptor> field_from_flag(const Options& o) {
  if (o.field_tokens.empty()) return std::nullopt;
  std::string spec;
  for (const auto& t : o.field_tokens) spec += t;
  try {
    return parse_field(spec);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("field: ") + e.what());
  }
}

template <class F>
typename F::Elem parse_elem(const F& f, const std::string& text, const std::string& what) {
  if (text.empty()) throw Error(Errc::MalformedSpec, what + ": missing value");
  try {
    return f.parse(text);
  } catch (const Error& e) {
    throw Error(e.code(), what + ": " + e.what());
  }
}

template <class F>
std::vector<typename F::Elem> parse_list(const F& f, std::string body, const std::string& what) {
  std::vector<typename F::Elem> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    out.push_back(parse_elem(f, item, what));
  }
  return out;
}

// A file holding {"zeta": ...}, or inline "diag(a,b,c)" / "a,b,c".
template <class F>
std::optional<TwistOperator<F>> load_zeta(const F& f, const Options& o) {
  if (o.zeta.empty()) return std::nullopt;
  std::string s = o.zeta;
  const bool inline_diag = s.rfind("diag(", 0) == 0 && s.back() == ')';
  if (inline_diag || (!std::filesystem::exists(s) && s.find(',') != std::string::npos)) {
    if (inline_diag) s = s.substr(5, s.size() - 6);
    auto entries = parse_list(f, s, "zeta");
    if (entries.size() != kDim) throw Error(Errc::DimensionMismatch, "zeta: expected three diagonal entries");
    try {
      return TwistOperator<F>::diagonal(f, entries);
    } catch (const Error& e) {
      throw Error(e.code(), std::string("zeta: ") + e.what());
    }
  }
  return io::twist_from_json(f, parse_json(read_file(s, "zeta"), "zeta"));
}

template <class F>
DiagonalTwist<F> require_diagonal(const F& f, const Options& o) {
  auto z = load_zeta(f, o);
  if (!z) throw Error(Errc::MalformedSpec, "zeta: this command needs --zeta");
  const Matrix<F>& m = z->matrix();
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      if (i != j && !f.is_zero(m(i, j))) throw Error(Errc::InvalidParameter, "zeta: expected a diagonal operator");
  return DiagonalTwist<F>::make(f, {m(0, 0), m(1, 1), m(2, 2)});
}

template <class F>
HeckeSymmetry<F> require_hecke(const F& f, const std::optional<json>& input) {
  if (!input) throw Error(Errc::MalformedSpec, "input: this command needs --input <hecke.json>");
  return io::hecke_from_json(f, *input);
}

json header(const std::string& command, const FieldDescriptor& d) {
  return json{{"command", command}, {"field", io::field_to_json(d)}};
}

// Runs a check that signals failure by throwing.
template <class Fn>
bool holds(Fn&& fn) {
  try {
    return fn();
  } catch (const Error&) {
    return false;
  }
}

template <class F>
Result cmd_verify(const F& f, const Options& o, const std::optional<json>& input) {
  const auto h = require_hecke(f, input);
  const auto zeta = load_zeta(f, o);
  Checks c;
  c.set("braid", check_braid(h));
  c.set("hecke", check_hecke(h));
  c.set("relations_dim", holds([&] { return relations_of(h).I2.dim() == 3; }));
  if (zeta) {
    c.set("commutes_with_zeta", commutes_with_zeta(h, *zeta));
    c.set("twisted_polynomial", holds([&] { return is_twisted_polynomial(h, *zeta); }));
  }
  json doc = header("verify", f.descriptor());
  doc["q"] = f.format(h.q);
  c.attach(doc);
  return {doc, c.ok, {}};
}

template <class F>
Result cmd_construct(const F& f, const Options& o, const std::optional<json>& input) {
  HeckeSymmetry<F> h{Matrix<F>(f, 0, 0), f.zero()};
  if (o.type != 0) {
    if (o.type < 1 || o.type > 8) throw Error(Errc::InvalidParameter, "type: expected 1..8");
    const typename F::Elem q = o.q.empty() ? f.one() : parse_elem(f, o.q, "q");
    h = build_type(f, o.type, q);
  } else {
    if (!input) throw Error(Errc::MalformedSpec, "input: construct needs --type or --input <triple.json>");
    h = build_from_triple(io::triple_from_json(f, *input));
  }
  Checks c;
  c.set("braid", check_braid(h));
  c.set("hecke", check_hecke(h));
  json doc = header("construct", f.descriptor());
  json body = io::hecke_to_json(h);
  doc["q"] = body["q"];
  doc["R"] = body["R"];
  c.attach(doc);
  return {doc, c.ok, {}};
}

template <class F>
Result cmd_twist(const F& f, const Options& o, const std::optional<json>& input) {
  const auto h = require_hecke(f, input);
  const auto zeta = load_zeta(f, o);
  if (!zeta) throw Error(Errc::MalformedSpec, "zeta: twist needs --zeta");
  Checks c;
  json doc = header("twist", f.descriptor());
  const bool comm = commutes_with_zeta(h, *zeta);
  c.set("commutes_with_zeta", comm);
  if (comm) {
    const auto hz = twist(h, *zeta);
    c.set("braid", check_braid(hz));
    c.set("hecke", check_hecke(hz));
    c.set("q_unchanged", hz.q == h.q);
    c.set("twisted_polynomial", holds([&] { return is_twisted_polynomial(hz, *zeta); }));
    json body = io::hecke_to_json(hz);
    doc["q"] = body["q"];
    doc["R"] = body["R"];
  }
  c.attach(doc);
  return {doc, c.ok, {}};
}

template <class F>
Result cmd_relations(const F& f, const Options& o, const std::optional<json>& input) {
  const auto h = require_hecke(f, input);
  const auto zeta = load_zeta(f, o);
  Checks c;
  json doc = header("relations", f.descriptor());
  std::optional<RelationSpace<F>> rel;
  try {
    rel = relations_of(h);
  } catch (const Error& e) {
    if (e.code() != Errc::WrongRank) throw;
  }
  c.set("relations_dim", rel.has_value());
  if (rel) {
    doc["dim"] = rel->I2.dim();
    doc["basis"] = io::matrix_to_json(rel->I2.basis());
    if (zeta) c.set("equals_twisted_relations", *rel == twisted_relations(*zeta));
  }
  c.attach(doc);
  return {doc, c.ok, {}};
}

template <class F>
Result cmd_hilbert(const F& f, const Options& o, const std::optional<json>& input) {
  const auto zeta = load_zeta(f, o);
  std::optional<RelationSpace<F>> rel;
  if (input) {
    try {
      rel = relations_of(require_hecke(f, input));
    } catch (const Error& e) {
      if (e.code() != Errc::WrongRank) throw;
    }
  } else if (zeta) {
    rel = twisted_relations(*zeta);
  } else {
    throw Error(Errc::MalformedSpec, "input: hilbert needs --input <hecke.json> or --zeta");
  }
  Checks c;
  json doc = header("hilbert", f.descriptor());
  c.set("relations_dim", rel.has_value());
  if (rel) {
    if (o.degree > 4) throw Error(Errc::InvalidParameter, "degree: at most 4");
    const auto dims = hilbert_dims(*rel, o.degree);
    doc["dims"] = dims;
    bool poly = true;
    for (std::size_t n = 0; n < dims.size(); ++n) poly = poly && dims[n] == (n + 1) * (n + 2) / 2;
    c.set("hilbert", poly);
    const auto l = left_degree3(*rel);
    const auto r = right_degree3(*rel);
    const std::size_t cap = subspace_intersect(l, r).dim();
    const std::size_t sum = subspace_sum(l, r).dim();
    doc["upsilon3_dim"] = cap;
    doc["degree3_sum_dim"] = sum;
    c.set("upsilon3_dim", cap == 1);
    c.set("degree3_sum_dim", sum == 17);
    if (zeta) c.set("twisted_cyclic", holds([&] { return twisted_cyclicity_check(*zeta); }));
  }
  c.attach(doc);
  return {doc, c.ok, {}};
}

template <class F>
Result cmd_forms_check(const F& f, const Options& o, const std::optional<json>& input) {
  const auto h = require_hecke(f, input);
  const auto zeta = load_zeta(f, o).value_or(TwistOperator<F>::identity(f));
  Checks c;
  json doc = header("forms-check", f.descriptor());
  const bool poly = holds([&] { return is_twisted_polynomial(h, zeta); });
  c.set("twisted_polynomial", poly);
  if (poly) {
    const FormsContext<F> ctx(h, zeta);
    c.set("zeta_transport", check_zeta_transport_identity(ctx));
    c.set("skewsymmetrizer", check_skewsymmetrizer_identity(ctx));
    c.set("wedge_swap", check_wedge_swap_identity(ctx));
    c.set("diagonal_swap", check_diagonal_swap_identity(ctx));
    c.set("full_identity", check_full_braid_identity(ctx));
    bool scalar = true;
    const Matrix<F>& z = zeta.matrix();
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) scalar = scalar && z(i, j) == (i == j ? z(0, 0) : f.zero());
    if (scalar) c.set("untwisted_identity", check_untwisted_identity(ctx));
    c.set("equivalent_conditions", holds([&] {
            equivalence_report(ctx);
            return true;
          }));
    doc["commutes_with_zeta"] = commutes_with_zeta(h, zeta);
    c.set("commutes_with_zeta_cubed", commutes_with_zeta_cubed(ctx));
    c.set("span", check_form_spans(ctx));
    c.set("skewsymmetrizer_kernel", skewsymmetrizer_kernel_check(ctx));
    const std::size_t du = dim_U(ctx);
    doc["dim_u"] = du;
    c.set("dim_u", du == 1);
  }
  c.attach(doc);
  return {doc, c.ok, {}};
}

template <class F>
Result cmd_classify(const F& f, const Options& o) {
  const auto d = require_diagonal(f, o);
  const typename F::Elem q = parse_elem(f, o.q.empty() ? std::string("1") : o.q, "q");
  const auto rep = classify(f, d, q);
  json doc = header("classify", f.descriptor());
  const json body = io::class_report_to_json(f, rep);
  for (const auto& [k, v] : body.items())
    if (k != "field") doc[k] = v;
  Checks c;
  const TwistOperator<F> zeta = d.op(f);
  bool built = true;
  for (const auto& t : rep.triples) {
    const auto h = build_from_triple(t.triple);
    built = built && check_braid(h) && check_hecke(h) && commutes_with_zeta(h, zeta);
  }
  c.set("triples_build", built);
  c.attach(doc);
  std::ostringstream text;
  text << "types:";
  for (int t : rep.types) text << ' ' << t;
  text << "\nclasses (" << regime_name(rep.regime) << "): " << rep.count() << '\n';
  return {doc, c.ok, text.str()};
}

template <class F>
Result cmd_count_classes(const F& f, const Options& o) {
  if (o.p1.empty() || o.p2.empty() || o.p3.empty()) throw Error(Errc::MalformedSpec, "p1/p2/p3: all three are required");
  auto param = [&](const std::string& s, const char* name) {
    try {
      return parse_skew_param(f, s);
    } catch (const Error& e) {
      throw Error(e.code(), std::string(name) + ": " + e.what());
    }
  };
  const SkewParams<F> p{param(o.p1, "p1"), param(o.p2, "p2"), param(o.p3, "p3")};
  const typename F::Elem q = parse_elem(f, o.q.empty() ? std::string("1") : o.q, "q");
  if (f.is_zero(q)) throw Error(Errc::InvalidParameter, "q: must be nonzero");
  const QRegime regime = q == f.one() ? QRegime::One : QRegime::NotOne;
  const TableRow row = table_row(f, p);
  json doc = header("count-classes", f.descriptor());
  doc["p"] = json::array({f.format(p.p1), f.format(p.p2), f.format(p.p3)});
  doc["q"] = f.format(q);
  doc["regime"] = std::string(regime_name(regime));
  doc["row"] = std::string(row_name(row));
  doc["count"] = row_count(row, regime);
  return {doc, true, std::to_string(row_count(row, regime)) + "\n"};
}

Result cmd_enumerate(const PrimeField& f, const Options& o) {
  const auto d = require_diagonal(f, o);
  const ModInt q = parse_elem(f, o.q.empty() ? std::string("1") : o.q, "q");
  EnumerationOptions eo;
  eo.max_prime = o.max_prime;
  eo.threads = o.threads;
  const auto rep = empirical_theorem_check(f, d, q, eo);
  json doc = header("enumerate", f.descriptor());
  const json body = io::enumeration_report_to_json(f, rep);
  for (const auto& [k, v] : body.items())
    if (k != "field") doc[k] = v;
  Checks c;
  c.set("no_theorem_failures", rep.theorem_failures() == 0);
  c.set("dim_u_is_one", rep.dim_u_violations() == 0);
  c.attach(doc);
  return {doc, c.ok, {}};
}

template <class F>
Result dispatch(const F& f, const Options& o, const std::optional<json>& input) {
  const std::string& cmd = o.command;
  if (cmd == "verify") return cmd_verify(f, o, input);
  if (cmd == "construct") return cmd_construct(f, o, input);
  if (cmd == "twist") return cmd_twist(f, o, input);
  if (cmd == "relations") return cmd_relations(f, o, input);
  if (cmd == "hilbert") return cmd_hilbert(f, o, input);
  if (cmd == "forms-check") return cmd_forms_check(f, o, input);
  if (cmd == "classify") return cmd_classify(f, o);
  if (cmd == "count-classes") return cmd_count_classes(f, o);
  if (cmd == "enumerate") {
    if constexpr (std::is_same_v<F, PrimeField>) {
      return cmd_enumerate(f, o);
    } else {
      throw Error(Errc::InvalidParameter, "field: enumeration needs a prime field Fp:<p>");
    }
  }
  throw Error(Errc::MalformedSpec, "unknown command \"" + cmd + "\"");
}

// Plain "path: value" lines; rows of matrices one per line.
void render_text(const json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, path.empty() ? k : path + "." + k, out);
    return;
  }
  if (j.is_array() && !j.empty() && j[0].is_array()) {
    out << path << ":\n";
    for (const auto& row : j) {
      out << " ";
      for (const auto& e : row) out << ' ' << (e.is_string() ? e.get<std::string>() : e.dump());
      out << '\n';
    }
    return;
  }
  if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); })) {
    out << path << ":";
    for (const auto& e : j) out << ' ' << (e.is_string() ? e.get<std::string>() : e.dump());
    out << '\n';
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hecke symmetries with twisted polynomial R-symmetric algebras in dimension 3"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--field", o.field_tokens, "Q or Fp:<prime> (also accepted: F p:<prime>)")->expected(1, 2);
  app.add_option("--input", o.input, "input JSON file");
  app.add_option("--zeta", o.zeta, "JSON file {\"zeta\": ...}, or diag(a,b,c)");
  app.add_option("--q", o.q, "Hecke parameter");
  app.add_option("--p1", o.p1, "skew parameter p1 (\"eps\": primitive cube root of 1)");
  app.add_option("--p2", o.p2, "skew parameter p2");
  app.add_option("--p3", o.p3, "skew parameter p3");
  app.add_option("--type", o.type, "type 1..8 for construct");
  app.add_option("--max-prime", o.max_prime, "largest prime accepted by enumerate");
  app.add_option("--threads", o.threads, "worker threads for enumerate (0: all cores)");
  app.add_option("--degree", o.degree, "top degree for hilbert (at most 4)");
  app.add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", o.out, "write the document to FILE");
  for (const char* name :
       {"verify", "construct", "twist", "relations", "hilbert", "forms-check", "classify", "count-classes", "enumerate"}) {
    app.add_subcommand(name)->callback([&o, name] { o.command = name; });
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  Result res;
  try {
    const auto input = load_input(o);
    auto desc = field_from_flag(o);
    if (input && input->is_object() && input->contains("field")) {
      const auto in_field = io::field_from_json((*input)["field"], "input.field");
      if (desc && !(*desc == in_field)) {
        throw Error(Errc::FieldMismatch, "field: --field " + desc->to_string() + " but input is over " +
                                             in_field.to_string());
      }
      desc = in_field;
    }
    const FieldDescriptor d = desc.value_or(FieldDescriptor::rationals());
    if (d.kind == FieldDescriptor::Kind::Rationals) {
      res = dispatch(RationalField{}, o, input);
    } else {
      res = dispatch(PrimeField(d.p), o, input);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  std::ostringstream doc;
  if (o.output == "json") {
    doc << res.doc.dump(2) << '\n';
  } else if (!res.text.empty()) {
    doc << res.text;
  } else {
    render_text(res.doc, "", doc);
  }
  if (o.out.empty()) {
    out << doc.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: out: cannot write \"" << o.out << "\"\n";
      return kInputError;
    }
    f << doc.str();
  }
  if (!res.ok) err << "check failed\n";
  return res.ok ? kOk : kCheckFailed;
}

}  // namespace hecke::cli
