#include "hecke/classify.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hecke {

namespace {

constexpr std::array<std::array<std::size_t, 3>, 6> kOrders = {
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

template <class F>
bool type_condition(int type, const std::array<typename F::Elem, 3>& a) {
  switch (type) {
    case 1:
    case 7: return a[2] * a[2] == a[0] * a[1];
    case 2:
    case 8: return true;
    case 3: return false;
    case 4: return a[0] == a[1] && a[1] == -a[2];
    case 5: return a[0] == a[1];
    case 6: return a[0] == a[2];
  }
  return false;
}

template <class F>
Matrix<F> permutation(const F& f, const std::array<std::size_t, 3>& order) {
  Matrix<F> p(f, kDim, kDim);
  for (std::size_t a = 0; a < kDim; ++a) p(order[a], a) = f.one();
  return p;
}

// The type's triple in its own standard basis.
template <class F>
std::optional<std::pair<CanonicalShape, ParamTriple<F>>> standard_triple(const F& f, int type,
                                                                         const typename F::Elem& q) {
  Matrix<F> g(f, kDim, kDim);
  CanonicalShape shape = CanonicalShape::Hyperbolic;
  const typename F::Elem beta = (q - f.one()) / f.from_int(2);
  switch (type) {
    case 1:
    case 2:
    case 7:
      g(0, 1) = beta;
      g(1, 0) = beta;
      if (type != 2) g(2, 2) = f.one();
      break;
    case 3:
      shape = CanonicalShape::Type3;
      g(0, 0) = f.one();
      g(1, 2) = f.one();
      g(2, 1) = f.one();
      break;
    case 4:
    case 5:
      shape = CanonicalShape::Diagonal;
      g(0, 0) = f.one();
      if (type == 4) g(2, 2) = f.one();
      break;
    case 6:
      shape = CanonicalShape::Mixed;
      g(1, 2) = f.one();
      g(2, 1) = f.one();
      break;
    default: return std::nullopt;
  }
  if (g.is_zero()) return std::nullopt;
  return std::pair{shape, ParamTriple<F>{{f.one(), f.zero(), f.zero()}, std::move(g), q}};
}

template <class F>
QRegime regime_of(const F& f, const typename F::Elem& q) {
  return q == f.one() ? QRegime::One : QRegime::NotOne;
}

}  // namespace

template <class F>
DiagonalTwist<F> DiagonalTwist<F>::make(const F& f, std::array<typename F::Elem, 3> alphas) {
  for (const auto& a : alphas)
    if (f.is_zero(a)) throw Error(Errc::ZeroParameter, "eigenvalues of zeta must be nonzero");
  return DiagonalTwist{std::move(alphas)};
}

template <class F>
TwistOperator<F> DiagonalTwist<F>::op(const F& f) const {
  return TwistOperator<F>::diagonal(f, Vec<F>(alphas.begin(), alphas.end()));
}

template <class F>
SkewParams<F> skew_params(const F& f, const DiagonalTwist<F>& d) {
  const auto& a = d.alphas;
  SkewParams<F> p{a[1] / a[2], a[2] / a[0], a[0] / a[1]};
  if (!(p.p1 * p.p2 * p.p3 == f.one())) throw Error(Errc::InternalInvariant, "p1 p2 p3 != 1");
  return p;
}

template <class F>
typename F::Elem parse_skew_param(const F& f, std::string_view text) {
  if (text == "eps") {
    auto e = f.primitive_cube_root();
    if (!e) throw Error(Errc::FieldLacksRoot, f.descriptor().to_string() + " has no primitive cube root of 1");
    return *e;
  }
  return f.parse(text);
}

template <class F>
int group_index(const F& f, const DiagonalTwist<F>& d) {
  (void)f;
  const auto& a = d.alphas;
  if (a[0] == a[1] || a[1] == a[2] || a[0] == a[2]) return 1;
  const typename F::Elem r12 = a[0] / a[1];
  const typename F::Elem r23 = a[1] / a[2];
  const typename F::Elem r31 = a[2] / a[0];
  return r12 == r23 && r23 == r31 ? 3 : 1;
}

template <class F>
std::vector<TypeRealization> allowed_types(const F& f, const DiagonalTwist<F>& d) {
  (void)f;
  std::vector<TypeRealization> out;
  if (d.is_scalar()) {
    for (int type = 1; type <= 8; ++type) out.push_back({type, kOrders[0]});
    return out;
  }
  for (int type = 1; type <= 8; ++type) {
    std::vector<std::array<typename F::Elem, 3>> seen;
    for (const auto& order : kOrders) {
      const std::array<typename F::Elem, 3> a = {d.alphas[order[0]], d.alphas[order[1]], d.alphas[order[2]]};
      if (!type_condition<F>(type, a)) continue;
      if (std::find(seen.begin(), seen.end(), a) != seen.end()) continue;
      seen.push_back(a);
      out.push_back({type, order});
    }
  }
  return out;
}

std::string_view shape_name(CanonicalShape s) {
  switch (s) {
    case CanonicalShape::Hyperbolic: return "hyperbolic";
    case CanonicalShape::Diagonal: return "diagonal";
    case CanonicalShape::Mixed: return "mixed";
    case CanonicalShape::Type3: return "type3";
  }
  return "?";
}

template <class F>
std::vector<CanonicalTriple<F>> canonical_triples(const F& f, const DiagonalTwist<F>& d, const typename F::Elem& q) {
  if (f.is_zero(q)) throw Error(Errc::InvalidParameter, "q must be nonzero");
  const QRegime regime = regime_of(f, q);
  const TwistOperator<F> zeta = d.op(f);
  std::vector<CanonicalTriple<F>> out;
  for (const auto& real : allowed_types(f, d)) {
    if (!type_in_regime(real.type, regime)) continue;
    auto std_triple = standard_triple(f, real.type, q);
    if (!std_triple) continue;
    const TwistOperator<F> perm(permutation(f, real.order));
    ParamTriple<F> tr = act_on_triple(perm, std_triple->second);
    validate_triple(tr);
    if (!is_zeta_stable(zeta, tr)) {
      throw Error(Errc::InternalInvariant, "canonical triple of type " + std::to_string(real.type) + " is not zeta-stable");
    }
    out.push_back({real.type, real.order, std_triple->first, std::move(tr)});
  }
  return out;
}

std::string_view row_name(TableRow r) {
  switch (r) {
    case TableRow::Distinct: return "pairwise-distinct";
    case TableRow::TwoEqual: return "two-equal";
    case TableRow::AllEps: return "all-eps";
    case TableRow::OneIsOne: return "one-is-one";
    case TableRow::MinusOneMinusOne: return "minus-one-minus-one-one";
    case TableRow::AllOne: return "all-one";
  }
  return "?";
}

std::size_t row_count(TableRow r, QRegime regime) {
  const bool one = regime == QRegime::One;
  switch (r) {
    case TableRow::Distinct: return one ? 1 : 6;
    case TableRow::TwoEqual: return one ? 2 : 8;
    case TableRow::AllEps: return one ? 2 : 4;
    case TableRow::OneIsOne: return one ? 3 : 3;
    case TableRow::MinusOneMinusOne: return one ? 5 : 4;
    case TableRow::AllOne: return one ? 6 : 2;
  }
  return 0;
}

template <class F>
TableRow table_row(const F& f, const SkewParams<F>& p) {
  using E = typename F::Elem;
  if (!(p.p1 * p.p2 * p.p3 == f.one())) throw Error(Errc::NoRowMatches, "p1 p2 p3 != 1");
  const E one = f.one();
  const E minus_one = -one;
  std::set<TableRow> matched;
  const std::array<std::array<E, 3>, 3> rotations = {
      {{p.p1, p.p2, p.p3}, {p.p2, p.p3, p.p1}, {p.p3, p.p1, p.p2}}};
  for (const auto& [a, b, c] : rotations) {
    const bool none_one = !(a == one) && !(b == one) && !(c == one);
    if (none_one && !(a == b) && !(b == c) && !(a == c)) matched.insert(TableRow::Distinct);
    if (none_one && a == b && !(b == c)) matched.insert(TableRow::TwoEqual);
    if (none_one && a == b && b == c) {
      if (!f.primitive_cube_root()) throw Error(Errc::FieldLacksRoot, "cube-root row over a field without one");
      matched.insert(TableRow::AllEps);
    }
    if (!(a == b) && c == one) matched.insert(TableRow::OneIsOne);
    if (a == minus_one && b == minus_one && c == one) matched.insert(TableRow::MinusOneMinusOne);
    if (a == one && b == one && c == one) matched.insert(TableRow::AllOne);
  }
  if (matched.size() != 1) {
    throw Error(Errc::NoRowMatches, matched.empty() ? "no row matches" : "several rows match");
  }
  return *matched.begin();
}

template <class F>
std::size_t count_classes(const F& f, const SkewParams<F>& p, QRegime regime) {
  return row_count(table_row(f, p), regime);
}

template <class F>
ClassReport<F> classify(const F& f, const DiagonalTwist<F>& d, const typename F::Elem& q) {
  const QRegime regime = regime_of(f, q);
  ClassReport<F> rep{d, q, regime, skew_params(f, d), group_index(f, d), allowed_types(f, d), {}, {}};
  for (const auto& r : rep.realizations) {
    if (type_in_regime(r.type, regime) && std::find(rep.types.begin(), rep.types.end(), r.type) == rep.types.end())
      rep.types.push_back(r.type);
  }
  rep.triples = canonical_triples(f, d, q);
  rep.row = table_row(f, rep.skew);
  rep.count_q_not_one = row_count(rep.row, QRegime::NotOne);
  rep.count_q_one = row_count(rep.row, QRegime::One);
  return rep;
}

#define CLASSIFY_INSTANTIATE(F)                                                                       \
  template struct DiagonalTwist<F>;                                                                   \
  template struct ClassReport<F>;                                                                     \
  template SkewParams<F> skew_params<F>(const F&, const DiagonalTwist<F>&);                           \
  template F::Elem parse_skew_param<F>(const F&, std::string_view);                                   \
  template int group_index<F>(const F&, const DiagonalTwist<F>&);                                     \
  template std::vector<TypeRealization> allowed_types<F>(const F&, const DiagonalTwist<F>&);          \
  template std::vector<CanonicalTriple<F>> canonical_triples<F>(const F&, const DiagonalTwist<F>&,    \
                                                                const F::Elem&);                      \
  template TableRow table_row<F>(const F&, const SkewParams<F>&);                                     \
  template std::size_t count_classes<F>(const F&, const SkewParams<F>&, QRegime);                     \
  template ClassReport<F> classify<F>(const F&, const DiagonalTwist<F>&, const F::Elem&);

CLASSIFY_INSTANTIATE(RationalField)
CLASSIFY_INSTANTIATE(PrimeField)

#undef CLASSIFY_INSTANTIATE

}  // namespace hecke
