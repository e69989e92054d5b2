#include "hecke/hecke.hpp"

#include <string>

namespace hecke {

template <class F>
TwistOperator<F>::TwistOperator(Matrix<F> zeta) : zeta_(zeta), inverse_(zeta), det_(zeta.field().zero()) {
  if (zeta_.rows() != kDim || zeta_.cols() != kDim) {
    throw Error(Errc::DimensionMismatch, "twisting operator must be 3x3");
  }
  auto inv = hecke::inverse(zeta_);
  if (!inv) throw Error(Errc::Singular, "twisting operator is not invertible");
  inverse_ = std::move(*inv);
  det_ = determinant(zeta_);
}

template <class F>
Vec<F> basis_vector(const F& f, std::size_t n, std::size_t i) {
  Vec<F> v(n, f.zero());
  v[i] = f.one();
  return v;
}

template <class F>
typename F::Elem bilinear(const Matrix<F>& g, const Vec<F>& x, const Vec<F>& y) {
  const F& f = g.field();
  typename F::Elem acc = f.zero();
  for (std::size_t i = 0; i < kDim; ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < kDim; ++j) acc += x[i] * g(i, j) * y[j];
  }
  return acc;
}

template <class F>
Vec<F> wedge_id(const Vec<F>& x, const Vec<F>& y) {
  Vec<F> xy = kron<F>(x, y);
  Vec<F> yx = kron<F>(y, x);
  for (std::size_t k = 0; k < xy.size(); ++k) xy[k] -= yx[k];
  return xy;
}

template <class F>
Vec<F> wedge_zeta(const Matrix<F>& zeta, const Vec<F>& x, const Vec<F>& y) {
  Vec<F> a = kron<F>(zeta * x, y);
  Vec<F> b = kron<F>(zeta * y, x);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

template <class F>
Vec<F> wedge3_zeta(const Matrix<F>& zeta, const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) {
  const F& f = zeta.field();
  Matrix<F> zeta2 = zeta * zeta;
  auto term = [&](const Vec<F>& u, const Vec<F>& v, const Vec<F>& w) {
    return kron<F>(kron<F>(zeta2 * u, zeta * v), w);
  };
  const std::array<Vec<F>, 6> terms = {term(x, y, z), term(y, z, x), term(z, x, y),
                                       term(x, z, y), term(y, x, z), term(z, y, x)};
  Vec<F> out(kDim * kDim * kDim, f.zero());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = terms[0][k] + terms[1][k] + terms[2][k] - terms[3][k] - terms[4][k] - terms[5][k];
  }
  return out;
}

template <class F>
Matrix<F> bivector_matrix(const F& f, const std::array<typename F::Elem, 3>& t) {
  Matrix<F> a(f, kDim, kDim);
  a(0, 1) = t[0];
  a(0, 2) = t[1];
  a(1, 2) = t[2];
  a(1, 0) = -t[0];
  a(2, 0) = -t[1];
  a(2, 1) = -t[2];
  return a;
}

template <class F>
std::array<typename F::Elem, 3> bivector_of(const Vec<F>& a, const Vec<F>& b) {
  return {a[0] * b[1] - a[1] * b[0], a[0] * b[2] - a[2] * b[0], a[1] * b[2] - a[2] * b[1]};
}

template <class F>
std::pair<Vec<F>, Vec<F>> factor_bivector(const F& f, const std::array<typename F::Elem, 3>& t) {
  const auto& [t12, t13, t23] = t;
  if (!f.is_zero(t12)) {
    typename F::Elem a3 = -(t23 / t12);
    return {Vec<F>{f.one(), f.zero(), a3}, Vec<F>{f.zero(), t12, t13}};
  }
  if (!f.is_zero(t13)) {
    typename F::Elem a2 = t23 / t13;
    return {Vec<F>{f.one(), a2, f.zero()}, Vec<F>{f.zero(), f.zero(), t13}};
  }
  if (!f.is_zero(t23)) return {Vec<F>{f.zero(), f.one(), f.zero()}, Vec<F>{f.zero(), f.zero(), t23}};
  throw Error(Errc::ZeroParameter, "the zero bivector has no factorization");
}

template <class F>
typename F::Elem delta_of_vectors(const Vec<F>& a, const Vec<F>& b, const Matrix<F>& g) {
  typename F::Elem gab = bilinear(g, a, b);
  return bilinear(g, a, a) * bilinear(g, b, b) - gab * gab;
}

template <class F>
typename F::Elem delta(const std::array<typename F::Elem, 3>& t, const Matrix<F>& g) {
  auto [a, b] = factor_bivector(g.field(), t);
  return delta_of_vectors(a, b, g);
}

template <class F>
void validate_triple(const ParamTriple<F>& tr) {
  const F& f = tr.field();
  if (tr.g.rows() != kDim || tr.g.cols() != kDim) throw Error(Errc::DimensionMismatch, "g must be 3x3");
  bool t_zero = f.is_zero(tr.t[0]) && f.is_zero(tr.t[1]) && f.is_zero(tr.t[2]);
  if (t_zero || tr.g.is_zero()) {
    throw Error(Errc::ZeroParameter, "t and g must be nonzero (t = 0 or g = 0 gives the flip)");
  }
  if (!(tr.g == tr.g.transpose())) throw Error(Errc::InvalidParameter, "g must be symmetric");
  if (f.is_zero(tr.q)) throw Error(Errc::InvalidParameter, "q must be nonzero");
  typename F::Elem lhs = (tr.q - f.one()) * (tr.q - f.one());
  typename F::Elem rhs = f.from_int(-4) * delta(tr.t, tr.g);
  if (!(lhs == rhs)) {
    throw Error(Errc::DeltaRelationViolated,
                "(q-1)^2 = " + f.format(lhs) + " but -4 Delta(t,g) = " + f.format(rhs));
  }
}

template <class F>
HeckeSymmetry<F> build_from_vectors(const Vec<F>& a, const Vec<F>& b, const Matrix<F>& g,
                                    const typename F::Elem& q) {
  const F& f = g.field();
  const typename F::Elem half = f.inv(f.from_int(2));
  const typename F::Elem c_xy = (q - f.one()) * half;
  const typename F::Elem c_yx = (q + f.one()) * half;
  const Vec<F> ab = wedge_id<F>(a, b);
  const Vec<F> ga = g * a;
  const Vec<F> gb = g * b;
  // T e_j = g(b, e_j) a - g(a, e_j) b
  std::array<Vec<F>, kDim> te;
  for (std::size_t j = 0; j < kDim; ++j) {
    te[j] = Vec<F>(kDim, f.zero());
    for (std::size_t k = 0; k < kDim; ++k) te[j][k] = gb[j] * a[k] - ga[j] * b[k];
  }
  Matrix<F> R(f, kDim * kDim, kDim * kDim);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      const Vec<F> ei = basis_vector(f, kDim, i);
      const Vec<F> ej = basis_vector(f, kDim, j);
      Vec<F> col(kDim * kDim, f.zero());
      col[flat(i, j)] += c_xy;
      col[flat(j, i)] += c_yx;
      const Vec<F> w1 = wedge_id<F>(ei, te[j]);
      const Vec<F> w2 = wedge_id<F>(ej, te[i]);
      for (std::size_t k = 0; k < col.size(); ++k) col[k] -= g(i, j) * ab[k] + w1[k] + w2[k];
      for (std::size_t k = 0; k < col.size(); ++k) R(k, flat(i, j)) = col[k];
    }
  }
  return {std::move(R), q};
}

template <class F>
HeckeSymmetry<F> build_from_triple(const ParamTriple<F>& tr) {
  validate_triple(tr);
  auto [a, b] = factor_bivector(tr.field(), tr.t);
  return build_from_vectors(a, b, tr.g, tr.q);
}

template <class F>
std::vector<typename F::Elem> candidate_q(const std::array<typename F::Elem, 3>& t, const Matrix<F>& g) {
  const F& f = g.field();
  auto root = f.sqrt(-delta(t, g));
  if (!root) return {};
  typename F::Elem two_root = f.from_int(2) * *root;
  typename F::Elem q1 = f.one() + two_root;
  typename F::Elem q2 = f.one() - two_root;
  std::vector<typename F::Elem> out;
  for (const auto& q : {q1, q2}) {
    if (f.is_zero(q)) continue;
    if (!out.empty() && out.front() == q) continue;
    out.push_back(q);
  }
  return out;
}

namespace {

// Writes R(x_i x_j) = sum coef * x_k x_l.
template <class F>
void set_image(Matrix<F>& R, std::size_t i, std::size_t j,
               std::initializer_list<std::pair<typename F::Elem, std::pair<std::size_t, std::size_t>>> terms) {
  for (const auto& [coef, kl] : terms) R(flat(kl.first, kl.second), flat(i, j)) += coef;
}

}  // namespace

template <class F>
HeckeSymmetry<F> build_type(const F& f, int type_id, const typename F::Elem& q) {
  if (type_id < 1 || type_id > 8) throw Error(Errc::InvalidParameter, "type must be in 1..8");
  if (f.is_zero(q)) throw Error(Errc::InvalidParameter, "q must be nonzero");
  const typename F::Elem one = f.one();
  if (type_id >= 3 && !(q == one)) {
    throw Error(Errc::InvalidParameter, "type " + std::to_string(type_id) + " requires q = 1");
  }
  using P = std::pair<std::size_t, std::size_t>;
  constexpr std::size_t x1 = 0, x2 = 1, x3 = 2;
  const typename F::Elem two = f.from_int(2);
  const typename F::Elem qm1 = q - one;
  Matrix<F> R(f, kDim * kDim, kDim * kDim);
  switch (type_id) {
    case 1:
    case 2:
    case 7:
      set_image<F>(R, x1, x1, {{q, P{x1, x1}}});
      set_image<F>(R, x1, x2, {{qm1, P{x1, x2}}, {one, P{x2, x1}}});
      set_image<F>(R, x1, x3, {{qm1, P{x1, x3}}, {one, P{x3, x1}}});
      set_image<F>(R, x2, x1, {{q, P{x1, x2}}});
      set_image<F>(R, x2, x2, {{q, P{x2, x2}}});
      set_image<F>(R, x2, x3, {{q, P{x3, x2}}});
      set_image<F>(R, x3, x1, {{q, P{x1, x3}}});
      set_image<F>(R, x3, x2, {{qm1, P{x3, x2}}, {one, P{x2, x3}}});
      if (type_id == 2) {
        set_image<F>(R, x3, x3, {{q, P{x3, x3}}});
      } else {
        set_image<F>(R, x3, x3, {{q, P{x3, x3}}, {-one, P{x1, x2}}, {one, P{x2, x1}}});
      }
      break;
    case 3:
    case 4:
    case 5:
      set_image<F>(R, x1, x1, {{one, P{x1, x1}}, {one, P{x1, x2}}, {-one, P{x2, x1}}});
      set_image<F>(R, x1, x2, {{one, P{x2, x1}}});
      set_image<F>(R, x1, x3, {{one, P{x3, x1}}, {-one, P{x2, x3}}, {one, P{x3, x2}}});
      set_image<F>(R, x2, x1, {{one, P{x1, x2}}});
      set_image<F>(R, x2, x2, {{one, P{x2, x2}}});
      set_image<F>(R, x2, x3, {{one, P{x3, x2}}});
      set_image<F>(R, x3, x1, {{one, P{x1, x3}}, {-one, P{x2, x3}}, {one, P{x3, x2}}});
      set_image<F>(R, x3, x2, {{one, P{x2, x3}}});
      if (type_id == 3) {
        set_image<F>(R, x3, x3, {{one, P{x3, x3}}, {two, P{x1, x3}}, {-two, P{x3, x1}}});
      } else if (type_id == 4) {
        set_image<F>(R, x3, x3, {{one, P{x3, x3}}, {-one, P{x1, x2}}, {one, P{x2, x1}}});
      } else {
        set_image<F>(R, x3, x3, {{one, P{x3, x3}}});
      }
      break;
    case 6:
    case 8:
      for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) R(flat(j, i), flat(i, j)) = one;
      if (type_id == 6) {
        R(flat(x1, x3), flat(x3, x3)) += two;
        R(flat(x3, x1), flat(x3, x3)) -= two;
      }
      break;
  }
  return {std::move(R), q};
}

template <class F>
HeckeSymmetry<F> flip(const F& f) {
  return build_type(f, 8, f.one());
}

template <class F>
HeckeSymmetry<F> twisted_flip(const TwistOperator<F>& zeta) {
  const F& f = zeta.field();
  Matrix<F> R(f, kDim * kDim, kDim * kDim);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      Vec<F> image = kron<F>(zeta.matrix().col(j), zeta.inverse_matrix().col(i));
      for (std::size_t k = 0; k < image.size(); ++k) R(k, flat(i, j)) = image[k];
    }
  }
  return {std::move(R), f.one()};
}

template <class F>
bool check_braid(const HeckeSymmetry<F>& h) {
  const F& f = h.field();
  const Matrix<F> id = Matrix<F>::identity(f, kDim);
  const Matrix<F> r1 = kron(h.R, id);
  const Matrix<F> r2 = kron(id, h.R);
  return r1 * (r2 * r1) == r2 * (r1 * r2);
}

template <class F>
bool check_hecke(const HeckeSymmetry<F>& h) {
  const F& f = h.field();
  const Matrix<F> id = Matrix<F>::identity(f, kDim * kDim);
  return ((h.R - h.q * id) * (h.R + id)).is_zero();
}

template <class F>
HeckeSymmetry<F> make_hecke(Matrix<F> R, typename F::Elem q) {
  const F& f = R.field();
  if (R.rows() != kDim * kDim || R.cols() != kDim * kDim) {
    throw Error(Errc::DimensionMismatch, "R must be 9x9");
  }
  if (f.is_zero(q)) throw Error(Errc::InvalidParameter, "q must be nonzero");
  HeckeSymmetry<F> h{std::move(R), std::move(q)};
  if (!check_hecke(h)) throw Error(Errc::InvalidParameter, "(R - q)(R + 1) != 0");
  std::size_t r = rank(h.q * Matrix<F>::identity(f, kDim * kDim) - h.R);
  if (r != kDim) throw Error(Errc::WrongRank, "rank(q Id - R) = " + std::to_string(r) + ", expected 3");
  if (!check_braid(h)) throw Error(Errc::InvalidParameter, "braid equation fails");
  return h;
}

template <class F>
bool commutes(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b == b * a;
}

template <class F>
bool commutes_with_zeta(const HeckeSymmetry<F>& h, const TwistOperator<F>& zeta) {
  return commutes(h.R, zeta.tensor_square());
}

template <class F>
HeckeSymmetry<F> twist(const HeckeSymmetry<F>& h, const TwistOperator<F>& zeta) {
  if (!commutes_with_zeta(h, zeta)) {
    throw Error(Errc::DoesNotCommute, "zeta (x) zeta does not commute with R");
  }
  const F& f = h.field();
  const Matrix<F> id = Matrix<F>::identity(f, kDim);
  Matrix<F> left = kron(zeta.matrix(), id) * (h.R * kron(zeta.inverse_matrix(), id));
  Matrix<F> right = kron(id, zeta.inverse_matrix()) * (h.R * kron(id, zeta.matrix()));
  if (!(left == right)) throw Error(Errc::InternalInvariant, "the two twist formulas disagree");
  return {std::move(left), h.q};
}

template <class F>
HeckeSymmetry<F> conjugate(const HeckeSymmetry<F>& h, const Matrix<F>& phi) {
  auto inv = inverse(phi);
  if (!inv) throw Error(Errc::Singular, "conjugating operator is not invertible");
  return {kron(phi, phi) * (h.R * kron(*inv, *inv)), h.q};
}

template <class F>
ParamTriple<F> act_on_triple(const TwistOperator<F>& phi, const ParamTriple<F>& tr) {
  const F& f = tr.field();
  Matrix<F> a = phi.matrix() * (bivector_matrix(f, tr.t) * phi.matrix().transpose());
  Matrix<F> g = phi.inverse_matrix().transpose() * (tr.g * phi.inverse_matrix());
  return {{a(0, 1), a(0, 2), a(1, 2)}, std::move(g), tr.q};
}

template <class F>
ParamTriple<F> scale_triple(const typename F::Elem& c, const ParamTriple<F>& tr) {
  const F& f = tr.field();
  return {{c * tr.t[0], c * tr.t[1], c * tr.t[2]}, f.inv(c) * tr.g, tr.q};
}

template <class F>
std::optional<typename F::Elem> proportionality(const F& f, const ParamTriple<F>& u, const ParamTriple<F>& v) {
  if (!(u.q == v.q)) return std::nullopt;
  for (std::size_t k = 0; k < 3; ++k) {
    if (f.is_zero(v.t[k])) continue;
    typename F::Elem c = u.t[k] / v.t[k];
    if (f.is_zero(c)) return std::nullopt;
    if (scale_triple(c, v) == u) return c;
    return std::nullopt;
  }
  return std::nullopt;
}

template <class F>
bool is_zeta_stable(const TwistOperator<F>& zeta, const ParamTriple<F>& tr) {
  return proportionality(tr.field(), act_on_triple(zeta, tr), tr).has_value();
}

#define HECKE_INSTANTIATE(F)                                                                                 \
  template class TwistOperator<F>;                                                                           \
  template Vec<F> basis_vector<F>(const F&, std::size_t, std::size_t);                                       \
  template F::Elem bilinear<F>(const Matrix<F>&, const Vec<F>&, const Vec<F>&);                              \
  template Vec<F> wedge_id<F>(const Vec<F>&, const Vec<F>&);                                                 \
  template Vec<F> wedge_zeta<F>(const Matrix<F>&, const Vec<F>&, const Vec<F>&);                             \
  template Vec<F> wedge3_zeta<F>(const Matrix<F>&, const Vec<F>&, const Vec<F>&, const Vec<F>&);             \
  template Matrix<F> bivector_matrix<F>(const F&, const std::array<F::Elem, 3>&);                            \
  template std::array<F::Elem, 3> bivector_of<F>(const Vec<F>&, const Vec<F>&);                              \
  template std::pair<Vec<F>, Vec<F>> factor_bivector<F>(const F&, const std::array<F::Elem, 3>&);            \
  template F::Elem delta<F>(const std::array<F::Elem, 3>&, const Matrix<F>&);                                \
  template F::Elem delta_of_vectors<F>(const Vec<F>&, const Vec<F>&, const Matrix<F>&);                      \
  template void validate_triple<F>(const ParamTriple<F>&);                                                   \
  template HeckeSymmetry<F> build_from_triple<F>(const ParamTriple<F>&);                                     \
  template HeckeSymmetry<F> build_from_vectors<F>(const Vec<F>&, const Vec<F>&, const Matrix<F>&,            \
                                                  const F::Elem&);                                           \
  template std::vector<F::Elem> candidate_q<F>(const std::array<F::Elem, 3>&, const Matrix<F>&);             \
  template HeckeSymmetry<F> build_type<F>(const F&, int, const F::Elem&);                                    \
  template HeckeSymmetry<F> flip<F>(const F&);                                                               \
  template HeckeSymmetry<F> twisted_flip<F>(const TwistOperator<F>&);                                        \
  template bool check_braid<F>(const HeckeSymmetry<F>&);                                                     \
  template bool check_hecke<F>(const HeckeSymmetry<F>&);                                                     \
  template HeckeSymmetry<F> make_hecke<F>(Matrix<F>, F::Elem);                                               \
  template bool commutes<F>(const Matrix<F>&, const Matrix<F>&);                                             \
  template bool commutes_with_zeta<F>(const HeckeSymmetry<F>&, const TwistOperator<F>&);                     \
  template HeckeSymmetry<F> twist<F>(const HeckeSymmetry<F>&, const TwistOperator<F>&);                      \
  template HeckeSymmetry<F> conjugate<F>(const HeckeSymmetry<F>&, const Matrix<F>&);                         \
  template ParamTriple<F> act_on_triple<F>(const TwistOperator<F>&, const ParamTriple<F>&);                  \
  template ParamTriple<F> scale_triple<F>(const F::Elem&, const ParamTriple<F>&);                            \
  template std::optional<F::Elem> proportionality<F>(const F&, const ParamTriple<F>&, const ParamTriple<F>&); \
  template bool is_zeta_stable<F>(const TwistOperator<F>&, const ParamTriple<F>&);

HECKE_INSTANTIATE(RationalField)
HECKE_INSTANTIATE(PrimeField)

#undef HECKE_INSTANTIATE

}  // namespace hecke
