#pragma once

// Hecke symmetries on a 3-dimensional space V, stored as 9x9 matrices.
//
// Basis convention: e_i (x) e_j sits at flat index 3 i + j (0-based), and
// R(k*3+l, i*3+j) is the coefficient of e_k (x) e_l in R(e_i (x) e_j). So the
// matrix acts on column vectors, and composition of operators is the matrix
// product in the usual order.

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hecke/field.hpp"
#include "hecke/matrix.hpp"

namespace hecke {

inline constexpr std::size_t kDim = 3;

constexpr std::size_t flat(std::size_t i, std::size_t j) { return kDim * i + j; }
constexpr std::size_t flat(std::size_t i, std::size_t j, std::size_t k) { return kDim * kDim * i + kDim * j + k; }

template <class F>
struct HeckeSymmetry {
  Matrix<F> R;
  typename F::Elem q;

  const F& field() const { return R.field(); }
  friend bool operator==(const HeckeSymmetry& a, const HeckeSymmetry& b) { return a.q == b.q && a.R == b.R; }
};

/// (t, g, q): bivector t = t12 e1^e2 + t13 e1^e3 + t23 e2^e3, symmetric form g, parameter q.
template <class F>
struct ParamTriple {
  std::array<typename F::Elem, 3> t;
  Matrix<F> g;
  typename F::Elem q;

  const F& field() const { return g.field(); }
  friend bool operator==(const ParamTriple& a, const ParamTriple& b) {
    return a.t == b.t && a.g == b.g && a.q == b.q;
  }
};

/// An invertible operator on V together with its inverse and determinant.
template <class F>
class TwistOperator {
 public:
  explicit TwistOperator(Matrix<F> zeta);

  static TwistOperator identity(const F& f) { return TwistOperator(Matrix<F>::identity(f, kDim)); }
  static TwistOperator diagonal(const F& f, const Vec<F>& alphas) {
    return TwistOperator(Matrix<F>::diagonal(f, alphas));
  }

  const F& field() const { return zeta_.field(); }
  const Matrix<F>& matrix() const { return zeta_; }
  const Matrix<F>& inverse_matrix() const { return inverse_; }
  const typename F::Elem& det() const { return det_; }
  TwistOperator inverse() const { return TwistOperator(inverse_); }
  /// zeta (x) zeta on V (x) V.
  Matrix<F> tensor_square() const { return kron(zeta_, zeta_); }

 private:
  Matrix<F> zeta_;
  Matrix<F> inverse_;
  typename F::Elem det_;
};

template <class F>
Vec<F> basis_vector(const F& f, std::size_t n, std::size_t i);

template <class F>
typename F::Elem bilinear(const Matrix<F>& g, const Vec<F>& x, const Vec<F>& y);

/// x (x) y - y (x) x.
template <class F>
Vec<F> wedge_id(const Vec<F>& x, const Vec<F>& y);

/// zeta(x) (x) y - zeta(y) (x) x.
template <class F>
Vec<F> wedge_zeta(const Matrix<F>& zeta, const Vec<F>& x, const Vec<F>& y);

/// Six-term alternating sum of zeta^2(.) (x) zeta(.) (x) (.) over permutations of x, y, z.
template <class F>
Vec<F> wedge3_zeta(const Matrix<F>& zeta, const Vec<F>& x, const Vec<F>& y, const Vec<F>& z);

/// Alternating matrix A with A(i,j) = t_ij for i < j.
template <class F>
Matrix<F> bivector_matrix(const F& f, const std::array<typename F::Elem, 3>& t);

template <class F>
std::array<typename F::Elem, 3> bivector_of(const Vec<F>& a, const Vec<F>& b);

/// Deterministic a, b with a ^ b = t, read off the first nonzero coordinate of t.
template <class F>
std::pair<Vec<F>, Vec<F>> factor_bivector(const F& f, const std::array<typename F::Elem, 3>& t);

/// g(a,a) g(b,b) - g(a,b)^2 for the chosen factorization t = a ^ b.
template <class F>
typename F::Elem delta(const std::array<typename F::Elem, 3>& t, const Matrix<F>& g);

template <class F>
typename F::Elem delta_of_vectors(const Vec<F>& a, const Vec<F>& b, const Matrix<F>& g);

/// Throws ZeroParameter, InvalidParameter or DeltaRelationViolated.
template <class F>
void validate_triple(const ParamTriple<F>& tr);

/// The operator R(xy) = (q-1)/2 xy + (q+1)/2 yx - g(x,y) a^b - x^Ty - y^Tx with
/// Tx = g(b,x) a - g(a,x) b, for t = a ^ b.
template <class F>
HeckeSymmetry<F> build_from_triple(const ParamTriple<F>& tr);

/// Same formula for an explicit pair a, b (no validation beyond char != 2).
template <class F>
HeckeSymmetry<F> build_from_vectors(const Vec<F>& a, const Vec<F>& b, const Matrix<F>& g,
                                    const typename F::Elem& q);

/// Both roots q = 1 +- 2 sqrt(-Delta) when the square root exists in the field.
template <class F>
std::vector<typename F::Elem> candidate_q(const std::array<typename F::Elem, 3>& t, const Matrix<F>& g);

/// Types 1..8 in their standard basis. Types 3..8 require q = 1.
template <class F>
HeckeSymmetry<F> build_type(const F& f, int type_id, const typename F::Elem& q);

template <class F>
HeckeSymmetry<F> flip(const F& f);

/// x (x) y -> zeta(y) (x) zeta^{-1}(x).
template <class F>
HeckeSymmetry<F> twisted_flip(const TwistOperator<F>& zeta);

template <class F>
bool check_braid(const HeckeSymmetry<F>& h);

template <class F>
bool check_hecke(const HeckeSymmetry<F>& h);

/// Full validation of a raw (R, q): shape, q != 0, the quadratic relation,
/// rank(q Id - R) = 3 and the braid equation.
template <class F>
HeckeSymmetry<F> make_hecke(Matrix<F> R, typename F::Elem q);

template <class F>
bool commutes(const Matrix<F>& a, const Matrix<F>& b);

template <class F>
bool commutes_with_zeta(const HeckeSymmetry<F>& h, const TwistOperator<F>& zeta);

/// (zeta (x) Id) R (zeta^{-1} (x) Id); both twist formulas are evaluated and
/// compared. Throws DoesNotCommute if zeta (x) zeta does not commute with R.
template <class F>
HeckeSymmetry<F> twist(const HeckeSymmetry<F>& h, const TwistOperator<F>& zeta);

/// (phi (x) phi) R (phi (x) phi)^{-1}. Throws Singular.
template <class F>
HeckeSymmetry<F> conjugate(const HeckeSymmetry<F>& h, const Matrix<F>& phi);

/// GL(V) action on triples: t -> phi t phi^T (as alternating matrix),
/// g -> phi^{-T} g phi^{-1}. Matches conjugate() on the built operators.
template <class F>
ParamTriple<F> act_on_triple(const TwistOperator<F>& phi, const ParamTriple<F>& tr);

/// c . (t, g, q) = (c t, c^{-1} g, q).
template <class F>
ParamTriple<F> scale_triple(const typename F::Elem& c, const ParamTriple<F>& tr);

/// If u = c v for a nonzero scalar c, returns c.
template <class F>
std::optional<typename F::Elem> proportionality(const F& f, const ParamTriple<F>& u, const ParamTriple<F>& v);

/// zeta . (t, g, q) lies in the k^x-orbit of (t, g, q).
template <class F>
bool is_zeta_stable(const TwistOperator<F>& zeta, const ParamTriple<F>& tr);

}  // namespace hecke
