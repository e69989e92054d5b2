#pragma once

// Linear forms l_xy, l'_xy on V attached to a Hecke symmetry R whose
// relation space is that of S(V)_zeta, and the identities they satisfy.
//
//   Y  = q Id - R,          Y' = (zeta^-1 (x) zeta^-1) Y (zeta (x) zeta)
//   l_xy(z)  = w~(x ^ Y (zeta(y) z)),   l'_xy(z) = w~(x ^ Y'(zeta(y) z))
//
// where x ^ w for w in I_2 is taken in the exterior-algebra structure carried
// by I_2 = span{x ^ y = zeta(x) y - zeta(y) x}, and w~ is normalized by
// w~(e1 ^ e2 ^ e3) = omega(e1, e2, e3) = omega_scale (default 1).

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "hecke/hecke.hpp"

namespace hecke {

template <class F>
using Covector = std::array<typename F::Elem, kDim>;

/// (f ^ g)(u, v) = f(u) g(v) - f(v) g(u), stored by its values on (e1,e2), (e1,e3), (e2,e3).
template <class F>
std::array<typename F::Elem, 3> wedge_forms(const Covector<F>& f, const Covector<F>& g);

template <class F>
struct EquivalenceReport {
  bool commutes = false;          // R (zeta (x) zeta) = (zeta (x) zeta) R
  bool y_prime_equals_y = false;  // Y' = Y
  bool y_prime_scalar = false;    // Y' = c Y
  bool ell_prime_scalar = false;  // l'_xy = c l_xy
  bool wedges_vanish = false;     // l_xy ^ l'_xy = 0
  std::optional<typename F::Elem> c;

  bool all() const { return commutes && y_prime_equals_y && y_prime_scalar && ell_prime_scalar && wedges_vanish; }
};

template <class F>
class FormsContext {
 public:
  using Elem = typename F::Elem;

  /// Throws ContextInvalid unless relations_of(R) equals the relations of S(V)_zeta.
  FormsContext(HeckeSymmetry<F> h, TwistOperator<F> zeta, Elem omega_scale);
  FormsContext(HeckeSymmetry<F> h, TwistOperator<F> zeta);

  /// No relation-space check; evaluation still throws ContextInvalid when some
  /// Y(zeta(y) z) leaves I_2.
  static FormsContext unchecked(HeckeSymmetry<F> h, TwistOperator<F> zeta);

  const F& field() const { return h_.field(); }
  const HeckeSymmetry<F>& hecke() const { return h_; }
  const TwistOperator<F>& zeta() const { return zeta_; }
  const Matrix<F>& Y() const { return Y_; }
  const Matrix<F>& Yprime() const { return Yp_; }
  /// Rows zeta-wedges e1^e2, e1^e3, e2^e3.
  const Matrix<F>& upsilon2_basis() const { return upsilon2_; }
  const Vec<F>& upsilon3_generator() const { return upsilon3_gen_; }
  const Elem& omega_scale() const { return omega_scale_; }

  Elem omega(const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) const;

  /// Scalar c with t = c (e1 ^ e2 ^ e3), times omega(e1,e2,e3). Throws NotInUpsilon3.
  Elem omega_tilde(const Vec<F>& t) const;

  /// w~(x ^ w) for w in I_2. Throws ContextInvalid if w is outside I_2.
  Elem pair_with_upsilon2(const Vec<F>& x, const Vec<F>& w) const;

  Covector<F> ell(const Vec<F>& x, const Vec<F>& y) const { return contract(L_, x, y); }
  Covector<F> ell_prime(const Vec<F>& x, const Vec<F>& y) const { return contract(Lp_, x, y); }

  /// Straight from the defining formula, without the precomputed basis table.
  Covector<F> ell_direct(const Vec<F>& x, const Vec<F>& y) const { return direct(Y_, x, y); }
  Covector<F> ell_prime_direct(const Vec<F>& x, const Vec<F>& y) const { return direct(Yp_, x, y); }

  /// Fixed pseudo-random vectors with entries in {0, 1, -1, 2}.
  std::vector<Vec<F>> sample_vectors(std::size_t count) const;

 private:
  FormsContext(HeckeSymmetry<F> h, TwistOperator<F> zeta, Elem omega_scale, bool check);

  using Table = std::array<Elem, kDim * kDim * kDim>;  // [i][j][k] -> l_{e_i e_j}(e_k)
  Covector<F> contract(const Table& table, const Vec<F>& x, const Vec<F>& y) const;
  Covector<F> direct(const Matrix<F>& y_op, const Vec<F>& x, const Vec<F>& y) const;
  Table tabulate(const Matrix<F>& y_op) const;

  HeckeSymmetry<F> h_;
  TwistOperator<F> zeta_;
  Elem omega_scale_;
  Matrix<F> Y_;
  Matrix<F> Yp_;
  Matrix<F> upsilon2_;
  Vec<F> upsilon3_gen_;
  Table L_;
  Table Lp_;
};

/// l'_xy(z) det(zeta) = l_{zeta x, zeta y}(zeta z).
template <class F>
bool check_zeta_transport_identity(const FormsContext<F>& ctx);

/// l_xy ^ l'_xy = l_xx ^ l'_yy.
template <class F>
bool check_wedge_swap_identity(const FormsContext<F>& ctx);

/// l_xy(x) = l_xx(y) and l'_xy(x) = l'_xx(y).
template <class F>
bool check_diagonal_swap_identity(const FormsContext<F>& ctx);

/// l_xy(z) - l_xz(y) = (q + 1) omega(x, y, z), and the same for l'.
template <class F>
bool check_skewsymmetrizer_identity(const FormsContext<F>& ctx);

/// (l_xy ^ l'_xz - l_xx ^ l'_yz)(u, v) = q omega(x,y,z) omega(x,u,v) on all
/// basis quintuples and sampled quintuples.
template <class F>
bool check_full_braid_identity(const FormsContext<F>& ctx);

/// l_xx ^ l_yy = 0 (the untwisted special case of the identity above).
template <class F>
bool check_untwisted_identity(const FormsContext<F>& ctx);

/// Evaluates the five equivalent conditions independently; throws
/// EquivalenceViolated if they disagree.
template <class F>
EquivalenceReport<F> equivalence_report(const FormsContext<F>& ctx);

/// dim span{l_xx}, from l_{e_i e_i} and the polarizations l_{(e_i+e_j)(e_i+e_j)}.
template <class F>
std::size_t dim_U(const FormsContext<F>& ctx);

/// {l_xy} spans V*, and neither a -> l_{a.} nor a -> l_{.a} has a kernel.
template <class F>
bool check_form_spans(const FormsContext<F>& ctx);

/// Neither a -> Y(a (x) .) nor a -> Y(. (x) a) has a kernel.
template <class F>
bool skewsymmetrizer_kernel_check(const FormsContext<F>& ctx);

/// R commutes with (zeta (x) zeta)^3.
template <class F>
bool commutes_with_zeta_cubed(const FormsContext<F>& ctx);

}  // namespace hecke
