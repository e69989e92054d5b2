#include "hecke/ell_forms.hpp"

#include <random>
#include <string>

#include "hecke/quad_algebra.hpp"

namespace hecke {

namespace {

constexpr std::uint32_t kSampleSeed = 0x5eed2011u;

constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kPairs = {{{0, 1}, {0, 2}, {1, 2}}};

template <class F>
typename F::Elem det3(const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) {
  return x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) + x[2] * (y[0] * z[1] - y[1] * z[0]);
}

template <class F>
typename F::Elem apply(const Covector<F>& f, const Vec<F>& v) {
  typename F::Elem s = f[0] * v[0];
  s += f[1] * v[1];
  s += f[2] * v[2];
  return s;
}

template <class F>
Vec<F> add(const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

// Basis vectors, e_i + e_j and a few sampled vectors: enough to detect
// failure of a quadratic identity in (x, y).
template <class F>
std::vector<Vec<F>> probe_vectors(const FormsContext<F>& ctx, std::size_t samples) {
  const F& f = ctx.field();
  std::vector<Vec<F>> out;
  for (std::size_t i = 0; i < kDim; ++i) out.push_back(basis_vector(f, kDim, i));
  for (auto [i, j] : kPairs) out.push_back(add<F>(out[i], out[j]));
  for (auto& v : ctx.sample_vectors(samples)) out.push_back(std::move(v));
  return out;
}

}  // namespace

template <class F>
std::array<typename F::Elem, 3> wedge_forms(const Covector<F>& f, const Covector<F>& g) {
  std::array<typename F::Elem, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    auto [u, v] = kPairs[k];
    out[k] = f[u] * g[v] - f[v] * g[u];
  }
  return out;
}

template <class F>
FormsContext<F>::FormsContext(HeckeSymmetry<F> h, TwistOperator<F> zeta, Elem omega_scale)
    : FormsContext(std::move(h), std::move(zeta), std::move(omega_scale), true) {}

template <class F>
FormsContext<F>::FormsContext(HeckeSymmetry<F> h, TwistOperator<F> zeta)
    : FormsContext(h, zeta, h.field().one(), true) {}

template <class F>
FormsContext<F> FormsContext<F>::unchecked(HeckeSymmetry<F> h, TwistOperator<F> zeta) {
  typename F::Elem one = h.field().one();
  return FormsContext(std::move(h), std::move(zeta), std::move(one), false);
}

template <class F>
FormsContext<F>::FormsContext(HeckeSymmetry<F> h, TwistOperator<F> zeta, Elem omega_scale, bool check)
    : h_(std::move(h)),
      zeta_(std::move(zeta)),
      omega_scale_(std::move(omega_scale)),
      Y_(h_.field(), kDim * kDim, kDim * kDim),
      Yp_(h_.field(), kDim * kDim, kDim * kDim),
      upsilon2_(h_.field(), 3, kDim * kDim) {
  const F& f = h_.field();
  if (!(zeta_.field() == f)) throw Error(Errc::FieldMismatch, "R and zeta live over different fields");
  if (f.is_zero(omega_scale_)) throw Error(Errc::ZeroParameter, "omega normalization must be nonzero");
  if (check && !is_twisted_polynomial(h_, zeta_)) {
    throw Error(Errc::ContextInvalid, "relations of R differ from those of S(V)_zeta");
  }
  Y_ = h_.q * Matrix<F>::identity(f, kDim * kDim) - h_.R;
  const TwistOperator<F> inv = zeta_.inverse();
  Yp_ = inv.tensor_square() * Y_ * zeta_.tensor_square();
  for (std::size_t r = 0; r < 3; ++r) {
    auto [i, j] = kPairs[r];
    const Vec<F> w = wedge_zeta(zeta_.matrix(), basis_vector(f, kDim, i), basis_vector(f, kDim, j));
    for (std::size_t c = 0; c < w.size(); ++c) upsilon2_(r, c) = w[c];
  }
  upsilon3_gen_ = wedge3_zeta(zeta_.matrix(), basis_vector(f, kDim, 0), basis_vector(f, kDim, 1),
                              basis_vector(f, kDim, 2));
  L_ = tabulate(Y_);
  Lp_ = tabulate(Yp_);
}

template <class F>
typename F::Elem FormsContext<F>::omega(const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) const {
  return omega_scale_ * det3<F>(x, y, z);
}

template <class F>
typename F::Elem FormsContext<F>::omega_tilde(const Vec<F>& t) const {
  if (t.size() != kDim * kDim * kDim) throw Error(Errc::DimensionMismatch, "expected a vector in V^(x)3");
  Matrix<F> gen(field(), 1, t.size());
  for (std::size_t c = 0; c < t.size(); ++c) gen(0, c) = upsilon3_gen_[c];
  auto coords = solve_coords(gen, t);
  if (!coords) throw Error(Errc::NotInUpsilon3, "tensor is not a multiple of e1 ^ e2 ^ e3");
  return (*coords)[0] * omega_scale_;
}

template <class F>
typename F::Elem FormsContext<F>::pair_with_upsilon2(const Vec<F>& x, const Vec<F>& w) const {
  auto coords = solve_coords(upsilon2_, w);
  if (!coords) throw Error(Errc::ContextInvalid, "Y(zeta(y) z) is not in the relation space of S(V)_zeta");
  const F& f = field();
  Elem s = f.zero();
  for (std::size_t r = 0; r < 3; ++r) {
    auto [i, j] = kPairs[r];
    s += (*coords)[r] * omega(x, basis_vector(f, kDim, i), basis_vector(f, kDim, j));
  }
  return s;
}

template <class F>
Covector<F> FormsContext<F>::direct(const Matrix<F>& y_op, const Vec<F>& x, const Vec<F>& y) const {
  const F& f = field();
  const Vec<F> zy = zeta_.matrix() * y;
  Covector<F> out;
  for (std::size_t k = 0; k < kDim; ++k) out[k] = pair_with_upsilon2(x, y_op * kron<F>(zy, basis_vector(f, kDim, k)));
  return out;
}

template <class F>
typename FormsContext<F>::Table FormsContext<F>::tabulate(const Matrix<F>& y_op) const {
  const F& f = field();
  Table t;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      const Covector<F> c = direct(y_op, basis_vector(f, kDim, i), basis_vector(f, kDim, j));
      for (std::size_t k = 0; k < kDim; ++k) t[(i * kDim + j) * kDim + k] = c[k];
    }
  }
  return t;
}

template <class F>
Covector<F> FormsContext<F>::contract(const Table& table, const Vec<F>& x, const Vec<F>& y) const {
  const F& f = field();
  Covector<F> out = {f.zero(), f.zero(), f.zero()};
  for (std::size_t i = 0; i < kDim; ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < kDim; ++j) {
      if (f.is_zero(y[j])) continue;
      const Elem xy = x[i] * y[j];
      for (std::size_t k = 0; k < kDim; ++k) out[k] += xy * table[(i * kDim + j) * kDim + k];
    }
  }
  return out;
}

template <class F>
std::vector<Vec<F>> FormsContext<F>::sample_vectors(std::size_t count) const {
  const F& f = field();
  std::mt19937 gen(kSampleSeed);
  static constexpr long long kValues[4] = {0, 1, -1, 2};
  std::vector<Vec<F>> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Vec<F> v;
    for (std::size_t i = 0; i < kDim; ++i) v.push_back(f.from_int(kValues[gen() % 4]));
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class F>
bool check_zeta_transport_identity(const FormsContext<F>& ctx) {
  const Matrix<F>& z = ctx.zeta().matrix();
  const auto& det = ctx.zeta().det();
  const auto vs = probe_vectors(ctx, 6);
  for (const auto& x : vs) {
    for (const auto& y : vs) {
      const Covector<F> lhs = ctx.ell_prime(x, y);
      const Covector<F> rhs = ctx.ell(z * x, z * y);
      for (const auto& w : vs) {
        if (!(apply<F>(lhs, w) * det == apply<F>(rhs, z * w))) return false;
      }
    }
  }
  return true;
}

template <class F>
bool check_wedge_swap_identity(const FormsContext<F>& ctx) {
  const auto vs = probe_vectors(ctx, 20);
  for (const auto& x : vs) {
    for (const auto& y : vs) {
      if (wedge_forms<F>(ctx.ell(x, y), ctx.ell_prime(x, y)) != wedge_forms<F>(ctx.ell(x, x), ctx.ell_prime(y, y)))
        return false;
    }
  }
  return true;
}

template <class F>
bool check_diagonal_swap_identity(const FormsContext<F>& ctx) {
  const auto vs = probe_vectors(ctx, 20);
  for (const auto& x : vs) {
    for (const auto& y : vs) {
      if (!(apply<F>(ctx.ell(x, y), x) == apply<F>(ctx.ell(x, x), y))) return false;
      if (!(apply<F>(ctx.ell_prime(x, y), x) == apply<F>(ctx.ell_prime(x, x), y))) return false;
    }
  }
  return true;
}

template <class F>
bool check_skewsymmetrizer_identity(const FormsContext<F>& ctx) {
  const typename F::Elem q1 = ctx.hecke().q + ctx.field().one();
  const auto vs = probe_vectors(ctx, 6);
  for (const auto& x : vs) {
    for (const auto& y : vs) {
      for (const auto& z : vs) {
        const typename F::Elem target = q1 * ctx.omega(x, y, z);
        if (!(apply<F>(ctx.ell(x, y), z) - apply<F>(ctx.ell(x, z), y) == target)) return false;
        if (!(apply<F>(ctx.ell_prime(x, y), z) - apply<F>(ctx.ell_prime(x, z), y) == target)) return false;
      }
    }
  }
  return true;
}

template <class F>
bool check_full_braid_identity(const FormsContext<F>& ctx) {
  const F& f = ctx.field();
  const typename F::Elem& q = ctx.hecke().q;
  auto holds = [&](const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) {
    const auto a = wedge_forms<F>(ctx.ell(x, y), ctx.ell_prime(x, z));
    const auto b = wedge_forms<F>(ctx.ell(x, x), ctx.ell_prime(y, z));
    const typename F::Elem s = q * ctx.omega(x, y, z);
    for (std::size_t k = 0; k < 3; ++k) {
      auto [u, v] = kPairs[k];
      if (!(a[k] - b[k] == s * ctx.omega(x, basis_vector(f, kDim, u), basis_vector(f, kDim, v)))) return false;
    }
    return true;
  };
  // The identity is bilinear in (u, v), so basis pairs cover every (u, v); x
  // enters quadratically, so x also runs over e_i + e_j and samples.
  const auto xs = probe_vectors(ctx, 20);
  const auto samples = ctx.sample_vectors(20);
  for (const auto& x : xs) {
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t k = 0; k < kDim; ++k)
        if (!holds(x, basis_vector(f, kDim, j), basis_vector(f, kDim, k))) return false;
  }
  for (std::size_t n = 0; n + 2 < samples.size(); ++n) {
    if (!holds(samples[n], samples[n + 1], samples[n + 2])) return false;
  }
  return true;
}

template <class F>
bool check_untwisted_identity(const FormsContext<F>& ctx) {
  const F& f = ctx.field();
  std::vector<Covector<F>> diag;
  for (const auto& x : probe_vectors(ctx, 20)) diag.push_back(ctx.ell(x, x));
  for (std::size_t a = 0; a < diag.size(); ++a) {
    for (std::size_t b = a + 1; b < diag.size(); ++b) {
      for (const auto& e : wedge_forms<F>(diag[a], diag[b]))
        if (!f.is_zero(e)) return false;
    }
  }
  return true;
}

template <class F>
EquivalenceReport<F> equivalence_report(const FormsContext<F>& ctx) {
  const F& f = ctx.field();
  EquivalenceReport<F> rep;
  rep.commutes = commutes_with_zeta(ctx.hecke(), ctx.zeta());
  rep.y_prime_equals_y = ctx.Yprime() == ctx.Y();

  // Y' = c Y, c read off the first nonzero entry of Y.
  std::optional<typename F::Elem> cy;
  for (std::size_t i = 0; i < ctx.Y().rows() && !cy; ++i)
    for (std::size_t j = 0; j < ctx.Y().cols() && !cy; ++j)
      if (!f.is_zero(ctx.Y()(i, j))) cy = ctx.Yprime()(i, j) / ctx.Y()(i, j);
  rep.y_prime_scalar = cy.has_value() && ctx.Yprime() == *cy * ctx.Y();

  // l' = c l on basis pairs; both sides are bilinear in (x, y).
  std::optional<typename F::Elem> cl;
  bool scalar = true;
  for (std::size_t i = 0; i < kDim && scalar; ++i) {
    for (std::size_t j = 0; j < kDim && scalar; ++j) {
      const Covector<F> l = ctx.ell(basis_vector(f, kDim, i), basis_vector(f, kDim, j));
      const Covector<F> lp = ctx.ell_prime(basis_vector(f, kDim, i), basis_vector(f, kDim, j));
      for (std::size_t k = 0; k < kDim && scalar; ++k) {
        if (!cl && !f.is_zero(l[k])) cl = lp[k] / l[k];
        if (cl) continue;
        if (!f.is_zero(lp[k])) scalar = false;
      }
    }
  }
  if (scalar && cl) {
    for (std::size_t i = 0; i < kDim && scalar; ++i)
      for (std::size_t j = 0; j < kDim && scalar; ++j) {
        const Covector<F> l = ctx.ell(basis_vector(f, kDim, i), basis_vector(f, kDim, j));
        const Covector<F> lp = ctx.ell_prime(basis_vector(f, kDim, i), basis_vector(f, kDim, j));
        for (std::size_t k = 0; k < kDim; ++k)
          if (!(lp[k] == *cl * l[k])) scalar = false;
      }
  }
  rep.ell_prime_scalar = scalar && cl.has_value();

  bool vanish = true;
  const auto vs = probe_vectors(ctx, 6);
  for (const auto& x : vs) {
    for (const auto& y : vs) {
      for (const auto& e : wedge_forms<F>(ctx.ell(x, y), ctx.ell_prime(x, y)))
        if (!f.is_zero(e)) vanish = false;
    }
  }
  rep.wedges_vanish = vanish;
  rep.c = cy ? cy : cl;

  const bool first = rep.commutes;
  if (rep.y_prime_equals_y != first || rep.y_prime_scalar != first || rep.ell_prime_scalar != first ||
      rep.wedges_vanish != first) {
    throw Error(Errc::EquivalenceViolated,
                std::string("conditions disagree: commutes=") + (rep.commutes ? "1" : "0") +
                    " Y'=Y=" + (rep.y_prime_equals_y ? "1" : "0") + " Y'=cY=" + (rep.y_prime_scalar ? "1" : "0") +
                    " l'=cl=" + (rep.ell_prime_scalar ? "1" : "0") + " l^l'=0=" + (rep.wedges_vanish ? "1" : "0"));
  }
  return rep;
}

template <class F>
std::size_t dim_U(const FormsContext<F>& ctx) {
  const F& f = ctx.field();
  std::vector<Vec<F>> rows;
  auto push = [&](const Vec<F>& x) {
    const Covector<F> c = ctx.ell(x, x);
    rows.push_back(Vec<F>(c.begin(), c.end()));
  };
  for (std::size_t i = 0; i < kDim; ++i) push(basis_vector(f, kDim, i));
  for (auto [i, j] : kPairs) push(add<F>(basis_vector(f, kDim, i), basis_vector(f, kDim, j)));
  return rank(Matrix<F>::from_rows(f, rows, kDim));
}

template <class F>
bool check_form_spans(const FormsContext<F>& ctx) {
  const F& f = ctx.field();
  Matrix<F> all(f, kDim * kDim, kDim);   // rows l_{e_i e_j}
  Matrix<F> left(f, kDim * kDim, kDim);  // column a: coefficients of l_{e_a .}
  Matrix<F> right(f, kDim * kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      const Covector<F> c = ctx.ell(basis_vector(f, kDim, i), basis_vector(f, kDim, j));
      for (std::size_t k = 0; k < kDim; ++k) {
        all(i * kDim + j, k) = c[k];
        left(j * kDim + k, i) = c[k];
        right(i * kDim + k, j) = c[k];
      }
    }
  }
  return rank(all) == kDim && rank(left) == kDim && rank(right) == kDim;
}

template <class F>
bool skewsymmetrizer_kernel_check(const FormsContext<F>& ctx) {
  const F& f = ctx.field();
  const std::size_t n = kDim * kDim;
  Matrix<F> left(f, kDim * n, kDim);
  Matrix<F> right(f, kDim * n, kDim);
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t j = 0; j < kDim; ++j) {
      const Vec<F> l = ctx.Y() * kron<F>(basis_vector(f, kDim, a), basis_vector(f, kDim, j));
      const Vec<F> r = ctx.Y() * kron<F>(basis_vector(f, kDim, j), basis_vector(f, kDim, a));
      for (std::size_t k = 0; k < n; ++k) {
        left(j * n + k, a) = l[k];
        right(j * n + k, a) = r[k];
      }
    }
  }
  return rank(left) == kDim && rank(right) == kDim;
}

template <class F>
bool commutes_with_zeta_cubed(const FormsContext<F>& ctx) {
  const Matrix<F> zz = ctx.zeta().tensor_square();
  return commutes(ctx.hecke().R, zz * zz * zz);
}

#define FORMS_INSTANTIATE(F)                                                                  \
  template class FormsContext<F>;                                                             \
  template std::array<F::Elem, 3> wedge_forms<F>(const Covector<F>&, const Covector<F>&);     \
  template bool check_zeta_transport_identity<F>(const FormsContext<F>&);                               \
  template bool check_wedge_swap_identity<F>(const FormsContext<F>&);                               \
  template bool check_diagonal_swap_identity<F>(const FormsContext<F>&);                               \
  template bool check_skewsymmetrizer_identity<F>(const FormsContext<F>&);                    \
  template bool check_full_braid_identity<F>(const FormsContext<F>&);                         \
  template bool check_untwisted_identity<F>(const FormsContext<F>&);                          \
  template EquivalenceReport<F> equivalence_report<F>(const FormsContext<F>&);                        \
  template std::size_t dim_U<F>(const FormsContext<F>&);                                      \
  template bool check_form_spans<F>(const FormsContext<F>&);                              \
  template bool skewsymmetrizer_kernel_check<F>(const FormsContext<F>&);                      \
  template bool commutes_with_zeta_cubed<F>(const FormsContext<F>&);

FORMS_INSTANTIATE(RationalField)
FORMS_INSTANTIATE(PrimeField)

#undef FORMS_INSTANTIATE

}  // namespace hecke
