#pragma once

// Shared constructions for the test binaries.

#include <random>

#include "hecke/hecke.hpp"

namespace fixtures {

using namespace hecke;

/// t = e1 ^ e2 and g = [[0, b, 0], [b, 0, 0], [0, 0, gamma]] with b = (q - 1)/2.
template <class F>
ParamTriple<F> shape_hyperbolic(const F& f, const typename F::Elem& q, long long gamma) {
  Matrix<F> g(f, 3, 3);
  typename F::Elem beta = (q - f.one()) / f.from_int(2);
  g(0, 1) = beta;
  g(1, 0) = beta;
  g(2, 2) = f.from_int(gamma);
  return {{f.one(), f.zero(), f.zero()}, std::move(g), q};
}

/// t = e1 ^ e2, g = diag(1, 0, gamma), q = 1.
template <class F>
ParamTriple<F> shape_diagonal(const F& f, long long gamma) {
  Matrix<F> g(f, 3, 3);
  g(0, 0) = f.one();
  g(2, 2) = f.from_int(gamma);
  return {{f.one(), f.zero(), f.zero()}, std::move(g), f.one()};
}

/// t = e1 ^ e2, g = e2 e3 + e3 e2, q = 1.
template <class F>
ParamTriple<F> shape_mixed(const F& f) {
  Matrix<F> g(f, 3, 3);
  g(1, 2) = f.one();
  g(2, 1) = f.one();
  return {{f.one(), f.zero(), f.zero()}, std::move(g), f.one()};
}

template <class F>
Matrix<F> random_matrix(const F& f, std::mt19937& gen, std::size_t r, std::size_t c) {
  Matrix<F> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(static_cast<long long>(gen() % 7) - 3);
  return m;
}

template <class F>
Matrix<F> random_invertible(const F& f, std::mt19937& gen) {
  for (;;) {
    auto m = random_matrix(f, gen, 3, 3);
    if (!f.is_zero(determinant(m))) return m;
  }
}

template <class F>
Vec<F> random_vector(const F& f, std::mt19937& gen) {
  return {f.from_int(static_cast<long long>(gen() % 7) - 3), f.from_int(static_cast<long long>(gen() % 7) - 3),
          f.from_int(static_cast<long long>(gen() % 7) - 3)};
}

template <class F>
TwistOperator<F> diag(const F& f, long long a1, long long a2, long long a3) {
  return TwistOperator<F>::diagonal(f, {f.from_int(a1), f.from_int(a2), f.from_int(a3)});
}

}  // namespace fixtures
