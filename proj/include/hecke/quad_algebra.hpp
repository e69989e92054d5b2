#pragma once

// Quadratic relation spaces I_2 in V (x) V, the twisted polynomial algebra
// S(V)_zeta, its Hilbert dimensions in low degree, and the degree-3 piece
// I_2 V  n  V I_2.

#include <cstddef>
#include <vector>

#include "hecke/hecke.hpp"

namespace hecke {

template <class F>
struct RelationSpace {
  Subspace<F> I2;  // in k^9

  friend bool operator==(const RelationSpace& a, const RelationSpace& b) { return a.I2 == b.I2; }
};

/// Column span of q Id - R. Throws WrongRank unless it is 3-dimensional.
template <class F>
RelationSpace<F> relations_of(const HeckeSymmetry<F>& h);

/// Span of zeta(e_i) (x) e_j - zeta(e_j) (x) e_i for i < j.
template <class F>
RelationSpace<F> twisted_relations(const TwistOperator<F>& zeta);

/// S(V, R) = S(V)_zeta as factor algebras of T(V).
template <class F>
bool is_twisted_polynomial(const HeckeSymmetry<F>& h, const TwistOperator<F>& zeta);

/// dim A_0, ..., dim A_max_deg for A = T(V) / (I_2); max_deg <= 4.
template <class F>
std::vector<std::size_t> hilbert_dims(const RelationSpace<F>& rel, std::size_t max_deg);

/// I_2 (x) V and V (x) I_2 inside k^27.
template <class F>
Subspace<F> left_degree3(const RelationSpace<F>& rel);
template <class F>
Subspace<F> right_degree3(const RelationSpace<F>& rel);

/// (I_2 V) n (V I_2) for I_2 = twisted_relations(zeta). Throws UnexpectedDimension
/// unless it is 1-dimensional.
template <class F>
Subspace<F> upsilon3(const TwistOperator<F>& zeta);

/// dim (I_2 V + V I_2).
template <class F>
std::size_t upsilon3_sum_dim(const TwistOperator<F>& zeta);

/// s_123(x y z) = y z x as a 27x27 permutation matrix.
template <class F>
Matrix<F> cyclic_shift(const F& f);

/// t = (Id (x) Id (x) psi) s_123 (t).
template <class F>
bool is_twisted_cyclic(const Vec<F>& t, const Matrix<F>& psi);

/// Twisted cyclicity of the generator of upsilon3(zeta) with psi = det(zeta) zeta^{-3}.
template <class F>
bool twisted_cyclicity_check(const TwistOperator<F>& zeta);

}  // namespace hecke
