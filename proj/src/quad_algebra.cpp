#include "hecke/quad_algebra.hpp"

#include <string>

namespace hecke {

template <class F>
RelationSpace<F> relations_of(const HeckeSymmetry<F>& h) {
  const F& f = h.field();
  auto rel = Subspace<F>::column_span(h.q * Matrix<F>::identity(f, kDim * kDim) - h.R);
  if (rel.dim() != kDim) {
    throw Error(Errc::WrongRank, "relation space has dimension " + std::to_string(rel.dim()) + ", expected 3");
  }
  return {std::move(rel)};
}

template <class F>
RelationSpace<F> twisted_relations(const TwistOperator<F>& zeta) {
  const F& f = zeta.field();
  std::vector<Vec<F>> gens;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = i + 1; j < kDim; ++j)
      gens.push_back(wedge_zeta(zeta.matrix(), basis_vector(f, kDim, i), basis_vector(f, kDim, j)));
  auto rel = span(f, gens, kDim * kDim);
  if (rel.dim() != kDim) throw Error(Errc::InternalInvariant, "twisted relations are not 3-dimensional");
  return {std::move(rel)};
}

template <class F>
bool is_twisted_polynomial(const HeckeSymmetry<F>& h, const TwistOperator<F>& zeta) {
  auto target = twisted_relations(zeta);
  auto rel = Subspace<F>::column_span(h.q * Matrix<F>::identity(h.field(), kDim * kDim) - h.R);
  return subspace_equal(rel, target.I2);
}

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

template <class F>
std::vector<std::size_t> hilbert_dims(const RelationSpace<F>& rel, std::size_t max_deg) {
  if (max_deg > 4) throw Error(Errc::InvalidParameter, "Hilbert dimensions are computed up to degree 4");
  const F& f = rel.I2.field();
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k <= max_deg; ++k) {
    const std::size_t total = power(kDim, k);
    if (k < 2) {
      dims.push_back(total);
      continue;
    }
    // Degree-k part of the ideal: sum over positions of V^{(x)i} (x) I_2 (x) V^{(x)(k-2-i)}.
    std::vector<Vec<F>> gens;
    for (std::size_t i = 0; i + 2 <= k; ++i) {
      const std::size_t left = power(kDim, i);
      const std::size_t right = power(kDim, k - 2 - i);
      for (std::size_t r = 0; r < rel.I2.dim(); ++r) {
        const Vec<F> w = rel.I2.basis().row(r);
        for (std::size_t a = 0; a < left; ++a)
          for (std::size_t b = 0; b < right; ++b)
            gens.push_back(kron<F>(kron<F>(basis_vector(f, left, a), w), basis_vector(f, right, b)));
      }
    }
    dims.push_back(total - span(f, gens, total).dim());
  }
  return dims;
}

template <class F>
Subspace<F> left_degree3(const RelationSpace<F>& rel) {
  const F& f = rel.I2.field();
  std::vector<Vec<F>> gens;
  for (std::size_t r = 0; r < rel.I2.dim(); ++r)
    for (std::size_t c = 0; c < kDim; ++c) gens.push_back(kron<F>(rel.I2.basis().row(r), basis_vector(f, kDim, c)));
  return span(f, gens, kDim * kDim * kDim);
}

template <class F>
Subspace<F> right_degree3(const RelationSpace<F>& rel) {
  const F& f = rel.I2.field();
  std::vector<Vec<F>> gens;
  for (std::size_t r = 0; r < rel.I2.dim(); ++r)
    for (std::size_t c = 0; c < kDim; ++c) gens.push_back(kron<F>(basis_vector(f, kDim, c), rel.I2.basis().row(r)));
  return span(f, gens, kDim * kDim * kDim);
}

template <class F>
Subspace<F> upsilon3(const TwistOperator<F>& zeta) {
  auto rel = twisted_relations(zeta);
  auto cap = subspace_intersect(left_degree3(rel), right_degree3(rel));
  if (cap.dim() != 1) {
    throw Error(Errc::UnexpectedDimension, "I2 V n V I2 has dimension " + std::to_string(cap.dim()));
  }
  return cap;
}

template <class F>
std::size_t upsilon3_sum_dim(const TwistOperator<F>& zeta) {
  auto rel = twisted_relations(zeta);
  return subspace_sum(left_degree3(rel), right_degree3(rel)).dim();
}

template <class F>
Matrix<F> cyclic_shift(const F& f) {
  Matrix<F> s(f, kDim * kDim * kDim, kDim * kDim * kDim);
  for (std::size_t x = 0; x < kDim; ++x)
    for (std::size_t y = 0; y < kDim; ++y)
      for (std::size_t z = 0; z < kDim; ++z) s(flat(y, z, x), flat(x, y, z)) = f.one();
  return s;
}

template <class F>
bool is_twisted_cyclic(const Vec<F>& t, const Matrix<F>& psi) {
  const F& f = psi.field();
  const Matrix<F> id = Matrix<F>::identity(f, kDim);
  const Matrix<F> op = kron(kron(id, id), psi) * cyclic_shift(f);
  return op * t == t;
}

template <class F>
bool twisted_cyclicity_check(const TwistOperator<F>& zeta) {
  const Matrix<F>& inv = zeta.inverse_matrix();
  const Matrix<F> psi = zeta.det() * (inv * (inv * inv));
  return is_twisted_cyclic(upsilon3(zeta).basis().row(0), psi);
}

#define QUAD_INSTANTIATE(F)                                                                        \
  template RelationSpace<F> relations_of<F>(const HeckeSymmetry<F>&);                              \
  template RelationSpace<F> twisted_relations<F>(const TwistOperator<F>&);                         \
  template bool is_twisted_polynomial<F>(const HeckeSymmetry<F>&, const TwistOperator<F>&);        \
  template std::vector<std::size_t> hilbert_dims<F>(const RelationSpace<F>&, std::size_t);         \
  template Subspace<F> left_degree3<F>(const RelationSpace<F>&);                                   \
  template Subspace<F> right_degree3<F>(const RelationSpace<F>&);                                  \
  template Subspace<F> upsilon3<F>(const TwistOperator<F>&);                                       \
  template std::size_t upsilon3_sum_dim<F>(const TwistOperator<F>&);                               \
  template Matrix<F> cyclic_shift<F>(const F&);                                                    \
  template bool is_twisted_cyclic<F>(const Vec<F>&, const Matrix<F>&);                             \
  template bool twisted_cyclicity_check<F>(const TwistOperator<F>&);

QUAD_INSTANTIATE(RationalField)
QUAD_INSTANTIATE(PrimeField)

#undef QUAD_INSTANTIATE

}  // namespace hecke
