#include <random>

#include "hecke/matrix.hpp"
#include "support.hpp"

using namespace hecke;

namespace {

template <class F>
Matrix<F> random_matrix(const F& f, std::mt19937& gen, std::size_t r, std::size_t c) {
  Matrix<F> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(static_cast<long long>(gen() % 7) - 3);
  return m;
}

}  // namespace

TEST_CASE("kron basics") {
  RationalField q;
  auto i3 = Matrix<RationalField>::identity(q, 3);
  CHECK(kron(i3, i3) == Matrix<RationalField>::identity(q, 9));
  auto d = Matrix<RationalField>::diagonal(q, {q.from_int(2), q.from_int(3), q.from_int(5)});
  auto k = kron(d, i3);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(k(i, i) == q.from_int(i < 3 ? 2 : i < 6 ? 3 : 5));
  }
  CHECK(k.rows() == 9);
}

TEST_CASE("kron mixed-product rule over F7") {
  PrimeField f(7);
  std::mt19937 gen(7);
  for (int n = 0; n < 10; ++n) {
    auto a = random_matrix(f, gen, 3, 3), b = random_matrix(f, gen, 3, 3);
    auto c = random_matrix(f, gen, 3, 3), d = random_matrix(f, gen, 3, 3);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    CHECK(rank(kron(a, b)) == rank(a) * rank(b));
  }
}

TEST_CASE("span, sum and intersection") {
  RationalField q;
  auto s = span(q, {{q.from_int(1), q.zero(), q.zero()}, {q.from_int(2), q.zero(), q.zero()}}, 3);
  CHECK(s.dim() == 1);
  CHECK(s.basis() == Matrix<RationalField>::from_ints(q, {{1, 0, 0}}));
  CHECK(span<RationalField>(q, {}, 9).dim() == 0);
  CHECK_ERRC(span(q, {{q.one(), q.one()}}, 3), Errc::DimensionMismatch);

  CHECK(subspace_intersect(s, s) == s);
  CHECK(subspace_sum(s, s) == s);

  PrimeField f(7);
  std::mt19937 gen(11);
  for (int n = 0; n < 20; ++n) {
    auto u = Subspace<PrimeField>::row_span(random_matrix(f, gen, 1 + gen() % 5, 9));
    auto w = Subspace<PrimeField>::row_span(random_matrix(f, gen, 1 + gen() % 5, 9));
    auto sum = subspace_sum(u, w);
    auto cap = subspace_intersect(u, w);
    CHECK(sum.dim() + cap.dim() == u.dim() + w.dim());
    for (std::size_t r = 0; r < cap.dim(); ++r) {
      CHECK(u.contains(cap.basis().row(r)));
      CHECK(w.contains(cap.basis().row(r)));
    }
  }
  CHECK_ERRC(subspace_sum(Subspace<RationalField>(q, 3), Subspace<RationalField>(q, 4)), Errc::DimensionMismatch);
}

TEST_CASE("rref is canonical") {
  PrimeField f(5);
  std::mt19937 gen(3);
  for (int n = 0; n < 10; ++n) {
    auto m = random_matrix(f, gen, 4, 6);
    auto s = Subspace<PrimeField>::row_span(m);
    CHECK(Subspace<PrimeField>::row_span(s.basis()) == s);
    // A different spanning set of the same space gives the same basis.
    auto g = random_matrix(f, gen, 4, 4);
    if (determinant(g) == f.zero()) continue;
    CHECK(Subspace<PrimeField>::row_span(g * m) == s);
  }
}

TEST_CASE("solve_coords") {
  RationalField q;
  auto id = Matrix<RationalField>::identity(q, 3);
  auto c = solve_coords(id, {q.from_int(4), q.from_int(5), q.from_int(6)});
  REQUIRE(c);
  CHECK(*c == Vec<RationalField>{q.from_int(4), q.from_int(5), q.from_int(6)});
  auto b = Matrix<RationalField>::from_ints(q, {{1, 0, 0}, {0, 1, 0}});
  CHECK_FALSE(solve_coords(b, {q.zero(), q.zero(), q.one()}).has_value());

  PrimeField f(5);
  std::mt19937 gen(5);
  for (int n = 0; n < 20; ++n) {
    auto basis = random_matrix(f, gen, 3, 6);
    if (rank(basis) != 3) continue;
    Vec<PrimeField> coeff = {f.from_int(gen() % 5), f.from_int(gen() % 5), f.from_int(gen() % 5)};
    Vec<PrimeField> target(6, f.zero());
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t j = 0; j < 6; ++j) target[j] += coeff[r] * basis(r, j);
    auto got = solve_coords(basis, target);
    REQUIRE(got);
    CHECK(*got == coeff);
  }
}

TEST_CASE("determinant, inverse and nullspace") {
  RationalField q;
  auto m = Matrix<RationalField>::from_ints(q, {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(determinant(m) == q.from_int(18));
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix<RationalField>::identity(q, 3));
  auto sing = Matrix<RationalField>::from_ints(q, {{1, 2}, {2, 4}});
  CHECK_FALSE(inverse(sing).has_value());
  auto ker = nullspace(sing);
  CHECK(ker.rows() == 1);
  CHECK((sing * ker.transpose()).is_zero());
}
