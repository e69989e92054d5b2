// Acceptance gate: one PASS/FAIL line per criterion, with wall time against a
// fixed budget. A criterion passes only if every check holds and the budget
// is met. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hecke/classify.hpp"
#include "hecke/ell_forms.hpp"
#include "hecke/enumerate.hpp"
#include "hecke/quad_algebra.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace hecke;

namespace {

RationalField Q;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = "first failure: " + what;
    ok = ok && cond;
  }
};

template <class F>
DiagonalTwist<F> dt(const F& f, long long a, long long b, long long c) {
  return DiagonalTwist<F>::make(f, {f.from_int(a), f.from_int(b), f.from_int(c)});
}

template <class F>
std::string fmt_twist(const F& f, const DiagonalTwist<F>& d) {
  return f.descriptor().to_string() + " diag(" + f.format(d.alphas[0]) + "," + f.format(d.alphas[1]) + "," +
         f.format(d.alphas[2]) + ")";
}

// A twisted Hecke symmetry with its twisting operator.
template <class F>
struct Context {
  std::string label;
  TwistOperator<F> zeta;
  HeckeSymmetry<F> untwisted;
  HeckeSymmetry<F> twisted;
  bool is_flip;
};

// Every canonical triple for each q, plus the flip, twisted by zeta.
template <class F>
std::vector<Context<F>> contexts(const F& f, const DiagonalTwist<F>& d, const std::vector<long long>& qs) {
  const TwistOperator<F> zeta = d.op(f);
  std::vector<Context<F>> out;
  for (long long qq : qs) {
    const typename F::Elem q = f.from_int(qq);
    for (const auto& c : classify(f, d, q).triples) {
      const auto h = build_from_triple(c.triple);
      out.push_back({fmt_twist(f, d) + " type " + std::to_string(c.type) + " q=" + f.format(q), zeta, h,
                     twist(h, zeta), false});
    }
  }
  const auto r0 = flip(f);
  out.push_back({fmt_twist(f, d) + " flip", zeta, r0, twist(r0, zeta), true});
  return out;
}

std::vector<Context<RationalField>> rational_contexts() {
  std::vector<Context<RationalField>> all;
  for (const auto& d : {dt(Q, 1, 1, 1), dt(Q, 1, 2, 4), dt(Q, 1, 1, -1)}) {
    auto cs = contexts(Q, d, {1, 2, 3, 5});
    all.insert(all.end(), cs.begin(), cs.end());
  }
  return all;
}

// ---------------------------------------------------------------------------

Outcome type_table() {
  Outcome o;
  const auto antisym = twisted_relations(TwistOperator<RationalField>::identity(Q));
  std::size_t n = 0;
  for (int type = 1; type <= 8; ++type) {
    const std::vector<long long> qs = type <= 2 ? std::vector<long long>{2, 3, 5} : std::vector<long long>{1};
    for (long long q : qs) {
      const auto h = build_type(Q, type, Q.from_int(q));
      const std::string tag = "type " + std::to_string(type) + " q=" + std::to_string(q);
      o.require(check_braid(h), tag + " braid");
      o.require(check_hecke(h), tag + " hecke");
      o.require(relations_of(h) == antisym, tag + " relations");
      ++n;
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " (type, q) pairs";
  return o;
}

Outcome construction() {
  Outcome o;
  std::size_t n = 0;
  auto same = [&](const ParamTriple<RationalField>& tr, int type, const std::string& tag) {
    o.require(build_from_triple(tr) == build_type(Q, type, tr.q), tag);
    ++n;
  };
  for (long long q : {2, 3, 5, -3}) {
    same(fixtures::shape_hyperbolic(Q, Q.from_int(q), 1), 1, "hyperbolic gamma=1 -> type 1, q=" + std::to_string(q));
    same(fixtures::shape_hyperbolic(Q, Q.from_int(q), 0), 2, "hyperbolic gamma=0 -> type 2, q=" + std::to_string(q));
  }
  same(fixtures::shape_hyperbolic(Q, Q.one(), 1), 7, "hyperbolic q=1 -> type 7");
  same(fixtures::shape_diagonal(Q, 1), 4, "diag(1,0,1) -> type 4");
  same(fixtures::shape_diagonal(Q, 0), 5, "diag(1,0,0) -> type 5");
  same(fixtures::shape_mixed(Q), 6, "mixed -> type 6");
  if (o.ok) o.detail = std::to_string(n) + " matrices equal entry for entry";
  return o;
}

Outcome twisting() {
  Outcome o;
  const auto d = dt(Q, 1, 2, 4);
  const TwistOperator<RationalField> zeta = d.op(Q);
  const auto id = Matrix<RationalField>::identity(Q, kDim);
  const auto target = twisted_relations(zeta);
  std::size_t n = 0;
  for (const auto& c : contexts(Q, d, {1, 2, 3, 5})) {
    const auto& h = c.untwisted;
    const auto& hz = c.twisted;
    o.require(commutes_with_zeta(h, zeta), c.label + " commutes");
    const auto left = kron(zeta.matrix(), id) * h.R * kron(zeta.inverse_matrix(), id);
    const auto right = kron(id, zeta.inverse_matrix()) * h.R * kron(id, zeta.matrix());
    o.require(left == right && left == hz.R, c.label + " twist formulas");
    o.require(check_braid(hz) && check_hecke(hz) && hz.q == h.q, c.label + " twisted braid/hecke/q");
    const auto rel = relations_of(hz);
    o.require(rel.I2 == relations_of(h).I2.image(kron(zeta.matrix(), id)), c.label + " relations transported");
    o.require(rel == target, c.label + " relations twisted");
    o.require(twist(hz, zeta.inverse()) == h, c.label + " untwist");
    ++n;
  }
  o.require(n > 4, "too few canonical triples");
  if (o.ok) o.detail = std::to_string(n) + " symmetries (incl. flip)";
  return o;
}

Outcome class_table() {
  Outcome o;
  PrimeField f7(7);
  struct Row {
    const char* p1;
    const char* p2;
    const char* p3;
    bool over_f7;
    std::size_t not_one, one;
  };
  const Row rows[] = {
      {"2", "3", "1/6", false, 6, 1}, {"2", "2", "1/4", false, 8, 2}, {"eps", "eps", "eps", true, 4, 2},
      {"2", "1/2", "1", false, 3, 3}, {"-1", "-1", "1", false, 4, 5},  {"1", "1", "1", false, 2, 6},
  };
  std::size_t n = 0;
  auto check_row = [&](const auto& f, const Row& r) {
    using F = std::decay_t<decltype(f)>;
    const SkewParams<F> p{parse_skew_param(f, r.p1), parse_skew_param(f, r.p2), parse_skew_param(f, r.p3)};
    const std::string tag = std::string("(") + r.p1 + "," + r.p2 + "," + r.p3 + ")";
    // every cyclic rotation gives the same value
    for (const auto& rot : {p, SkewParams<F>{p.p2, p.p3, p.p1}, SkewParams<F>{p.p3, p.p1, p.p2}}) {
      o.require(count_classes(f, rot, QRegime::NotOne) == r.not_one, tag + " q!=1");
      o.require(count_classes(f, rot, QRegime::One) == r.one, tag + " q=1");
    }
    n += 2;
  };
  for (const auto& r : rows) {
    if (r.over_f7) {
      check_row(f7, r);
    } else {
      check_row(Q, r);
    }
  }
  // The same rows from eigenvalues: the eps row is diag(1,2,4) over F_7.
  o.require(classify(f7, dt(f7, 1, 2, 4), f7.from_int(3)).count() == 4, "F7 diag(1,2,4) q=3");
  o.require(classify(f7, dt(f7, 1, 2, 4), f7.one()).count() == 2, "F7 diag(1,2,4) q=1");
  auto lacks_root = [&](const auto& f) {
    try {
      parse_skew_param(f, "eps");
    } catch (const Error& e) {
      return e.code() == Errc::FieldLacksRoot;
    }
    return false;
  };
  PrimeField f5(5);
  o.require(lacks_root(Q), "eps over Q must raise FieldLacksRoot");
  o.require(lacks_root(f5), "eps over F5 must raise FieldLacksRoot");
  if (o.ok) o.detail = std::to_string(n) + " table entries; FieldLacksRoot over Q and F5";
  return o;
}

Outcome graded() {
  Outcome o;
  const std::vector<std::size_t> poly = {1, 3, 6, 10};
  for (const auto& d : {dt(Q, 1, 1, 1), dt(Q, 1, 2, 4), dt(Q, 1, 1, -1)}) {
    const auto zeta = d.op(Q);
    const std::string tag = fmt_twist(Q, d);
    o.require(hilbert_dims(twisted_relations(zeta), 3) == poly, tag + " hilbert");
    o.require(upsilon3(zeta).dim() == 1, tag + " upsilon3");
    o.require(upsilon3_sum_dim(zeta) == 17, tag + " degree-3 sum");
    o.require(twisted_cyclicity_check(zeta), tag + " twisted cyclicity");
  }
  std::size_t n = 0;
  auto check_r = [&](const HeckeSymmetry<RationalField>& h, const TwistOperator<RationalField>& zeta,
                     const std::string& tag) {
    const auto rel = relations_of(h);
    o.require(hilbert_dims(rel, 3) == poly, tag + " hilbert");
    const auto l = left_degree3(rel);
    const auto r = right_degree3(rel);
    o.require(subspace_intersect(l, r).dim() == 1, tag + " upsilon3");
    o.require(subspace_sum(l, r).dim() == 17, tag + " degree-3 sum");
    o.require(is_twisted_polynomial(h, zeta), tag + " twisted polynomial");
    ++n;
  };
  const auto id = TwistOperator<RationalField>::identity(Q);
  for (int type = 1; type <= 8; ++type)
    for (long long q : type <= 2 ? std::vector<long long>{2, 3, 5} : std::vector<long long>{1})
      check_r(build_type(Q, type, Q.from_int(q)), id, "type " + std::to_string(type));
  for (const auto& c : rational_contexts()) check_r(c.twisted, c.zeta, c.label);
  if (o.ok) o.detail = "3 twists, " + std::to_string(n) + " symmetries";
  return o;
}

template <class F>
void identity_suite(Outcome& o, const std::vector<Context<F>>& cs, std::size_t& n) {
  for (const auto& c : cs) {
    const FormsContext<F> ctx(c.twisted, c.zeta);
    o.require(check_zeta_transport_identity(ctx), c.label + " zeta transport");
    o.require(check_wedge_swap_identity(ctx), c.label + " wedge swap");
    o.require(check_diagonal_swap_identity(ctx), c.label + " diagonal swap");
    o.require(check_skewsymmetrizer_identity(ctx), c.label + " skewsymmetrizer");
    o.require(check_full_braid_identity(ctx), c.label + " full identity");
    bool agree = false;
    try {
      agree = equivalence_report(ctx).all();
    } catch (const Error&) {
    }
    o.require(agree, c.label + " five equivalent conditions");
    o.require(commutes_with_zeta_cubed(ctx), c.label + " (zeta x zeta)^3");
    o.require(check_form_spans(ctx), c.label + " span");
    o.require(skewsymmetrizer_kernel_check(ctx), c.label + " skewsymmetrizer kernel");
    // l_xx vanishes identically for the (twisted) flip.
    o.require(dim_U(ctx) == (c.is_flip ? 0u : 1u), c.label + " dim U");
    if (c.zeta.matrix() == Matrix<F>::identity(c.zeta.field(), kDim))
      o.require(check_untwisted_identity(ctx), c.label + " untwisted identity");
    ++n;
  }
}

Outcome identities() {
  Outcome o;
  std::size_t n = 0;
  identity_suite(o, rational_contexts(), n);
  PrimeField f7(7);
  identity_suite(o, contexts(f7, dt(f7, 1, 2, 4), {1, 2, 3, 6}), n);
  if (o.ok) o.detail = std::to_string(n) + " contexts over Q and F7 (flip: dim U = 0)";
  return o;
}

Outcome exhaustive() {
  Outcome o;
  struct Config {
    std::uint32_t p;
    long long a, b, c;
  };
  const Config configs[] = {{5, 1, 1, 1}, {5, 1, 2, 4}, {5, 1, 1, 4}, {7, 1, 2, 4}};
  std::size_t runs = 0, triples = 0, orbits = 0, failures = 0, dimu = 0, oracle_equal = 0;
  for (const auto& cf : configs) {
    PrimeField f(cf.p);
    const auto d = dt(f, cf.a, cf.b, cf.c);
    for (long long qq = 1; qq < cf.p; ++qq) {
      const ModInt q = f.from_int(qq);
      const std::string tag = fmt_twist(f, d) + " q=" + std::to_string(qq);
      const auto keys = enumerate_P_zeta(f, d, q);
      const bool eq = keys == oracle::brute_force(cf.p, oracle::diag(cf.a, cf.b, cf.c), static_cast<oracle::u64>(qq));
      o.require(eq, tag + " oracle mismatch");
      const auto rep = empirical_theorem_check(f, d, q);
      o.require(rep.total_triples == keys.size(), tag + " enumeration not deterministic");
      o.require(rep.theorem_failures() == 0, tag + " theorem failures");
      o.require(rep.dim_u_violations() == 0, tag + " dim U violations");
      o.require(rep.tally.checked == rep.kx_orbits, tag + " not every orbit checked");
      ++runs;
      oracle_equal += eq;
      triples += rep.total_triples;
      orbits += rep.kx_orbits;
      failures += rep.theorem_failures();
      dimu += rep.dim_u_violations();
    }
  }
  const std::string summary = std::to_string(runs) + " runs, " + std::to_string(triples) + " triples, " +
                              std::to_string(orbits) + " orbits checked, failures=" + std::to_string(failures) +
                              ", dimU violations=" + std::to_string(dimu) + ", oracle equal " +
                              std::to_string(oracle_equal) + "/" + std::to_string(runs);
  o.detail = o.ok ? summary : o.detail + "; " + summary;
  return o;
}

Outcome negative_controls() {
  Outcome o;
  auto bad = build_type(Q, 1, Q.from_int(2));
  bad.R(flat(0, 1), flat(0, 1)) += Q.one();
  o.require(!check_braid(bad), "perturbed type 1 passes braid");
  // Subtracting e1 ^ e2 from R(e1 e1) keeps Im(q - R) antisymmetric but breaks braid.
  auto subtle = build_type(Q, 1, Q.from_int(2));
  subtle.R(flat(0, 1), flat(0, 0)) -= Q.one();
  subtle.R(flat(1, 0), flat(0, 0)) += Q.one();
  o.require(!check_braid(subtle), "antisymmetric perturbation passes braid");
  o.require(!is_twisted_polynomial(flip(Q), dt(Q, 1, 2, 4).op(Q)), "flip passes as S(V)_zeta for diag(1,2,4)");
  auto tr = fixtures::shape_hyperbolic(Q, Q.from_int(3), 1);
  tr.q = Q.from_int(5);
  bool rejected = false;
  try {
    build_from_triple(tr);
  } catch (const Error& e) {
    rejected = e.code() == Errc::DeltaRelationViolated;
  }
  o.require(rejected, "triple violating the Delta relation accepted");
  if (o.ok) o.detail = "4 controls rejected";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "type-table fidelity", 1.0, type_table},
      {2, "construction consistency", 1.0, construction},
      {3, "twisting pipeline", 2.0, twisting},
      {4, "class-count table", 1.0, class_table},
      {5, "Hilbert and graded structure", 5.0, graded},
      {6, "identity suite", 10.0, identities},
      {7, "exhaustive finite-field verification", 300.0, exhaustive},
      {8, "negative controls", 1.0, negative_controls},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.ok && in_time;
    if (!in_time) o.detail += " [over budget]";
    std::printf("criterion %d: %s  %s  (%.2f s, budget %.0f s)  %s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs,
                c.budget_s, o.detail.c_str());
    std::fflush(stdout);
    failed += pass ? 0 : 1;
  }
  return failed;
}
