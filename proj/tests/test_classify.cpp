#include <set>

#include "hecke/classify.hpp"
#include "hecke/quad_algebra.hpp"

#include "fixtures.hpp"
#include "support.hpp"

using namespace hecke;

namespace {

RationalField Q;
Rational r(long long n) { return Q.from_int(n); }

template <class F>
DiagonalTwist<F> dt(const F& f, long long a, long long b, long long c) {
  return DiagonalTwist<F>::make(f, {f.from_int(a), f.from_int(b), f.from_int(c)});
}

template <class F>
SkewParams<F> sp(const F& f, const char* a, const char* b, const char* c) {
  return {parse_skew_param(f, a), parse_skew_param(f, b), parse_skew_param(f, c)};
}

template <class F>
std::string key(const F& f, const typename F::Elem& a, const typename F::Elem& b, const typename F::Elem& c) {
  return f.format(a) + "," + f.format(b) + "," + f.format(c);
}

// Oracle: a (type, ordering) is realizable iff the type's operator, moved to
// that ordering of the eigenbasis, commutes with zeta (x) zeta.
template <class F>
std::set<std::pair<int, std::string>> commuting_types(const F& f, const DiagonalTwist<F>& d) {
  const std::array<std::array<std::size_t, 3>, 6> orders = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::set<std::pair<int, std::string>> out;
  for (int type = 1; type <= 8; ++type) {
    auto h = build_type(f, type, type <= 2 ? f.from_int(3) : f.one());
    for (const auto& o : orders) {
      Matrix<F> p(f, 3, 3);
      for (std::size_t a = 0; a < 3; ++a) p(o[a], a) = f.one();
      if (commutes_with_zeta(conjugate(h, p), d.op(f)))
        out.insert({type, key(f, d.alphas[o[0]], d.alphas[o[1]], d.alphas[o[2]])});
    }
  }
  return out;
}

template <class F>
std::set<std::pair<int, std::string>> realized(const F& f, const DiagonalTwist<F>& d) {
  std::set<std::pair<int, std::string>> out;
  for (const auto& t : allowed_types(f, d))
    out.insert({t.type, key(f, d.alphas[t.order[0]], d.alphas[t.order[1]], d.alphas[t.order[2]])});
  return out;
}

std::set<int> type_set(const std::vector<TypeRealization>& v) {
  std::set<int> s;
  for (const auto& t : v) s.insert(t.type);
  return s;
}

}  // namespace

TEST_CASE("skew parameters and group index") {
  auto p = skew_params(Q, dt(Q, 1, 2, 4));
  CHECK(p.p1 == Q.parse("1/2"));
  CHECK(p.p2 == r(4));
  CHECK(p.p3 == Q.parse("1/2"));
  auto one = skew_params(Q, dt(Q, 1, 1, 1));
  CHECK((one.p1 == r(1) && one.p2 == r(1) && one.p3 == r(1)));

  PrimeField f7(7);
  CHECK(group_index(f7, dt(f7, 1, 2, 4)) == 3);
  CHECK(group_index(Q, dt(Q, 1, 2, 4)) == 1);
  CHECK(group_index(Q, dt(Q, 1, 1, 5)) == 1);
  CHECK(group_index(PrimeField(13), dt(PrimeField(13), 1, 3, 9)) == 3);
  CHECK_ERRC(dt(Q, 1, 0, 2), Errc::ZeroParameter);
}

TEST_CASE("allowed types") {
  // (1, 1, -1): Types 1 and 7 via (1, 1, -1), Type 4, Type 5, Type 6 via (1, -1, 1).
  auto d = dt(Q, 1, 1, -1);
  CHECK(type_set(allowed_types(Q, d)) == std::set<int>{1, 2, 4, 5, 6, 7, 8});
  // (1, 2, 4): the ordering (1, 4, 2) has 2^2 = 1 * 4, so Types 1 and 7 occur.
  CHECK(type_set(allowed_types(Q, dt(Q, 1, 2, 4))) == std::set<int>{1, 2, 7, 8});
  CHECK(type_set(allowed_types(Q, dt(Q, 1, 3, 5))) == std::set<int>{2, 8});
  CHECK(type_set(allowed_types(Q, dt(Q, 2, 2, 2))) == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8});
  for (auto dd : {dt(Q, 1, 3, 5), dt(Q, 1, 2, 4)}) {
    std::size_t type2 = 0;
    for (const auto& t : allowed_types(Q, dd)) type2 += t.type == 2;
    CHECK(type2 == 6);
  }
}

TEST_CASE("allowed types agree with a commutation oracle") {
  for (auto d : {dt(Q, 1, 1, -1), dt(Q, 1, 2, 4), dt(Q, 1, 3, 5), dt(Q, 2, 2, 3), dt(Q, 2, 3, 2), dt(Q, 3, 2, 2),
                 dt(Q, 1, -1, -1), dt(Q, 4, 1, 2)}) {
    CHECK(realized(Q, d) == commuting_types(Q, d));
  }
  PrimeField f(7);
  for (auto d : {dt(f, 1, 2, 4), dt(f, 1, 1, 6), dt(f, 1, 3, 2), dt(f, 2, 3, 5)}) CHECK(realized(f, d) == commuting_types(f, d));
}

TEST_CASE("canonical triples") {
  auto d = dt(Q, 1, 3, 5);
  auto trs = canonical_triples(Q, d, r(3));
  CHECK(trs.size() == 6);
  for (const auto& c : trs) CHECK(c.type == 2);

  auto trs1 = canonical_triples(Q, dt(Q, 1, 1, -1), r(1));
  bool has4 = false;
  for (const auto& c : trs1) {
    if (c.type == 4) {
      has4 = true;
      CHECK(c.shape == CanonicalShape::Diagonal);
      CHECK(c.triple.g == Matrix<RationalField>::from_ints(Q, {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}));
    }
  }
  CHECK(has4);

  // Type 3's triple for scalar zeta reproduces the table.
  for (const auto& c : canonical_triples(Q, dt(Q, 1, 1, 1), r(1))) {
    auto h = build_from_triple(c.triple);
    if (c.type <= 7) CHECK(h == build_type(Q, c.type, r(1)));
  }

  CHECK_ERRC(canonical_triples(Q, d, r(0)), Errc::InvalidParameter);
}

TEST_CASE("canonical triples pass the full pipeline") {
  PrimeField f(7);
  auto run = [](const auto& field, const auto& d, const auto& q) {
    auto zeta = d.op(field);
    for (const auto& c : canonical_triples(field, d, q)) {
      auto h = build_from_triple(c.triple);
      CHECK(check_braid(h));
      CHECK(check_hecke(h));
      CHECK(commutes_with_zeta(h, zeta));
      CHECK(is_twisted_polynomial(twist(h, zeta), zeta));
    }
  };
  for (long long q : {1, 3, 5}) {
    run(Q, dt(Q, 1, 2, 4), r(q));
    run(Q, dt(Q, 1, 1, -1), r(q));
    run(Q, dt(Q, 2, 2, 2), r(q));
  }
  run(f, dt(f, 1, 2, 4), f.from_int(2));
  run(f, dt(f, 1, 2, 4), f.one());
}

TEST_CASE("class-count table") {
  PrimeField f7(7), f5(5);
  CHECK(count_classes(Q, sp(Q, "2", "3", "1/6"), QRegime::NotOne) == 6);
  CHECK(count_classes(Q, sp(Q, "2", "3", "1/6"), QRegime::One) == 1);
  CHECK(count_classes(Q, sp(Q, "2", "2", "1/4"), QRegime::NotOne) == 8);
  CHECK(count_classes(Q, sp(Q, "2", "2", "1/4"), QRegime::One) == 2);
  CHECK(count_classes(f7, sp(f7, "eps", "eps", "eps"), QRegime::NotOne) == 4);
  CHECK(count_classes(f7, sp(f7, "eps", "eps", "eps"), QRegime::One) == 2);
  CHECK(count_classes(f7, sp(f7, "2", "2", "2"), QRegime::NotOne) == 4);
  CHECK(count_classes(Q, sp(Q, "2", "1/2", "1"), QRegime::NotOne) == 3);
  CHECK(count_classes(Q, sp(Q, "2", "1/2", "1"), QRegime::One) == 3);
  CHECK(count_classes(Q, sp(Q, "-1", "-1", "1"), QRegime::NotOne) == 4);
  CHECK(count_classes(Q, sp(Q, "-1", "-1", "1"), QRegime::One) == 5);
  CHECK(count_classes(Q, sp(Q, "1", "1", "1"), QRegime::NotOne) == 2);
  CHECK(count_classes(Q, sp(Q, "1", "1", "1"), QRegime::One) == 6);

  CHECK_ERRC(sp(Q, "eps", "eps", "eps"), Errc::FieldLacksRoot);
  CHECK_ERRC(sp(f5, "eps", "eps", "eps"), Errc::FieldLacksRoot);
  CHECK_ERRC(count_classes(Q, sp(Q, "2", "2", "2"), QRegime::One), Errc::NoRowMatches);

  // Invariance under cyclic permutation.
  const char* rows[][3] = {{"2", "3", "1/6"}, {"2", "2", "1/4"}, {"2", "1/2", "1"}, {"-1", "-1", "1"}};
  for (auto& row : rows) {
    for (auto regime : {QRegime::NotOne, QRegime::One}) {
      auto a = count_classes(Q, sp(Q, row[0], row[1], row[2]), regime);
      CHECK(count_classes(Q, sp(Q, row[1], row[2], row[0]), regime) == a);
      CHECK(count_classes(Q, sp(Q, row[2], row[0], row[1]), regime) == a);
    }
  }
}

TEST_CASE("classify") {
  PrimeField f7(7);
  auto rep = classify(f7, dt(f7, 1, 2, 4), f7.from_int(2));
  CHECK(rep.gzeta_index == 3);
  CHECK(rep.row == TableRow::AllEps);
  CHECK(rep.count() == 4);
  CHECK(rep.counts_assume_closed_field);

  auto scalar = classify(Q, dt(Q, 1, 1, 1), r(1));
  CHECK(scalar.count() == 6);
  CHECK(scalar.types == std::vector<int>{3, 4, 5, 6, 7, 8});
  CHECK(classify(Q, dt(Q, 1, 1, 1), r(3)).count() == 2);
  CHECK(classify(Q, dt(Q, 1, 1, 1), r(3)).types == std::vector<int>{1, 2});

  auto neg = classify(Q, dt(Q, 1, 1, -1), r(5));
  CHECK(neg.row == TableRow::MinusOneMinusOne);
  CHECK(neg.count() == 4);
  CHECK(neg.types == std::vector<int>{1, 2});
  // Type 3 never appears for nonscalar zeta; Types 2 and 8 always do.
  for (auto d : {dt(Q, 1, 1, -1), dt(Q, 1, 2, 4), dt(Q, 1, 3, 5), dt(Q, 2, 2, 3)}) {
    auto types = type_set(allowed_types(Q, d));
    CHECK(types.count(3) == 0);
    CHECK(types.count(2) == 1);
    CHECK(types.count(8) == 1);
  }
}
