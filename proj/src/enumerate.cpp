#include "hecke/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "hecke/ell_forms.hpp"
#include "hecke/quad_algebra.hpp"

namespace hecke {

namespace {

using Digits = std::array<std::uint32_t, 9>;
using IntMat = std::array<std::array<std::uint64_t, 3>, 3>;

// Flat positions of t and g entries inside Digits.
constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kTPairs = {{{0, 1}, {0, 2}, {1, 2}}};
constexpr std::array<std::pair<std::size_t, std::size_t>, 6> kGPairs = {{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};

TripleKey encode(const Digits& d, std::uint32_t p) {
  TripleKey k = 0;
  for (auto v : d) k = k * p + v;
  return k;
}

Digits decode(TripleKey k, std::uint32_t p) {
  Digits d{};
  for (std::size_t i = 9; i-- > 0;) {
    d[i] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  return d;
}

unsigned thread_count(const EnumerationOptions& opts) {
  unsigned n = opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads;
  return std::max(1u, n);
}

// Runs body(worker, begin, end) over [0, n) split into contiguous blocks.
template <class Body>
void parallel_blocks(std::size_t n, unsigned threads, Body body) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    body(0u, std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t lo = std::min(n, w * chunk), hi = std::min(n, lo + chunk);
    pool.emplace_back([=, &body] { body(w, lo, hi); });
  }
  for (auto& t : pool) t.join();
}

IntMat to_int(const Matrix<PrimeField>& m) {
  IntMat r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i][j] = m(i, j).value();
  return r;
}

// t -> phi A phi^T, g -> psi^T g psi with psi = phi^{-1}, on raw residues.
Digits act_raw(const IntMat& phi, const IntMat& psi, const Digits& d, std::uint64_t p) {
  std::uint64_t a[3][3] = {}, g[3][3] = {};
  for (std::size_t k = 0; k < 3; ++k) {
    auto [i, j] = kTPairs[k];
    a[i][j] = d[k];
    a[j][i] = (p - d[k]) % p;
  }
  for (std::size_t k = 0; k < 6; ++k) {
    auto [i, j] = kGPairs[k];
    g[i][j] = g[j][i] = d[3 + k];
  }
  auto conj = [p](const IntMat& l, const std::uint64_t (&m)[3][3], const IntMat& r, bool transpose_left) {
    std::array<std::array<std::uint64_t, 3>, 3> tmp{}, out{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < 3; ++k) s += (transpose_left ? l[k][i] : l[i][k]) * m[k][j];
        tmp[i][j] = s % p;
      }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < 3; ++k) s += tmp[i][k] * (transpose_left ? r[k][j] : r[j][k]);
        out[i][j] = s % p;
      }
    return out;
  };
  // phi A phi^T: right factor read transposed; psi^T g psi: left factor transposed.
  auto na = conj(phi, a, phi, false);
  auto ng = conj(psi, g, psi, true);
  Digits out{};
  for (std::size_t k = 0; k < 3; ++k) out[k] = static_cast<std::uint32_t>(na[kTPairs[k].first][kTPairs[k].second]);
  for (std::size_t k = 0; k < 6; ++k) out[3 + k] = static_cast<std::uint32_t>(ng[kGPairs[k].first][kGPairs[k].second]);
  return out;
}

Digits scale_raw(std::uint64_t c, std::uint64_t c_inv, const Digits& d, std::uint64_t p) {
  Digits out{};
  for (std::size_t k = 0; k < 3; ++k) out[k] = static_cast<std::uint32_t>(c * d[k] % p);
  for (std::size_t k = 3; k < 9; ++k) out[k] = static_cast<std::uint32_t>(c_inv * d[k] % p);
  return out;
}

struct DisjointSets {
  std::vector<std::size_t> parent, size;
  explicit DisjointSets(std::size_t n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

// Smallest key per class, in increasing order.
std::vector<TripleKey> representatives(DisjointSets& ds, const std::vector<TripleKey>& keys) {
  std::vector<char> seen(keys.size(), 0);
  std::vector<TripleKey> reps;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::size_t r = ds.find(i);
    if (seen[r]) continue;
    seen[r] = 1;
    reps.push_back(keys[i]);
  }
  return reps;
}

void check_prime(const PrimeField& f, const EnumerationOptions& opts) {
  if (f.characteristic() > opts.max_prime) {
    throw Error(Errc::FieldTooLarge, "p = " + std::to_string(f.characteristic()) + " exceeds the limit " +
                                         std::to_string(opts.max_prime));
  }
}

}  // namespace

TripleKey encode_triple(const ParamTriple<PrimeField>& tr) {
  const std::uint32_t p = tr.field().characteristic();
  Digits d{};
  for (std::size_t k = 0; k < 3; ++k) d[k] = tr.t[k].value();
  for (std::size_t k = 0; k < 6; ++k) d[3 + k] = tr.g(kGPairs[k].first, kGPairs[k].second).value();
  return encode(d, p);
}

ParamTriple<PrimeField> decode_triple(const PrimeField& f, TripleKey key, const ModInt& q) {
  const Digits d = decode(key, f.characteristic());
  Matrix<PrimeField> g(f, 3, 3);
  for (std::size_t k = 0; k < 6; ++k) {
    auto [i, j] = kGPairs[k];
    g(i, j) = g(j, i) = f.from_int(d[3 + k]);
  }
  return {{f.from_int(d[0]), f.from_int(d[1]), f.from_int(d[2])}, std::move(g), q};
}

ModInt primitive_root(const PrimeField& f) {
  const std::uint32_t p = f.characteristic();
  std::vector<std::uint32_t> factors;
  std::uint32_t n = p - 1;
  for (std::uint32_t r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    factors.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) factors.push_back(n);
  for (std::uint32_t c = 2; c < p; ++c) {
    bool gen = true;
    for (auto r : factors)
      if (f.from_int(c).pow((p - 1) / r) == f.one()) gen = false;
    if (gen) return f.from_int(c);
  }
  return f.one();  // p = 2 is excluded, so unreachable
}

std::vector<TripleKey> enumerate_P_zeta(const PrimeField& f, const DiagonalTwist<PrimeField>& d, const ModInt& q,
                                        const EnumerationOptions& opts) {
  check_prime(f, opts);
  if (f.is_zero(q)) throw Error(Errc::InvalidParameter, "q must be nonzero");
  const std::uint32_t p = f.characteristic();
  const ModInt target = (q - f.one()) * (q - f.one());
  const ModInt minus4 = f.from_int(-4);

  // zeta scales t_ij by a_i a_j and g_ij by 1/(a_i a_j), so a stable (t, g)
  // lives on the entries where a_i a_j equals one common value c.
  struct Block {
    std::vector<std::size_t> t_pos, g_pos;
  };
  std::vector<Block> blocks;
  std::vector<ModInt> cs;
  for (auto [i, j] : kTPairs) {
    ModInt c = d.alphas[i] * d.alphas[j];
    if (std::find(cs.begin(), cs.end(), c) != cs.end()) continue;
    cs.push_back(c);
    Block b;
    for (std::size_t k = 0; k < 3; ++k)
      if (d.alphas[kTPairs[k].first] * d.alphas[kTPairs[k].second] == c) b.t_pos.push_back(k);
    for (std::size_t k = 0; k < 6; ++k)
      if (d.alphas[kGPairs[k].first] * d.alphas[kGPairs[k].second] == c) b.g_pos.push_back(k);
    blocks.push_back(std::move(b));
  }

  auto power = [](std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
  };
  // Work items: (block, t counter) with the t counter nonzero.
  std::vector<std::pair<std::size_t, std::uint64_t>> items;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::uint64_t tc = 1; tc < power(p, blocks[b].t_pos.size()); ++tc) items.push_back({b, tc});

  const unsigned threads = thread_count(opts);
  std::vector<std::vector<TripleKey>> found(threads);
  parallel_blocks(items.size(), threads, [&](unsigned w, std::size_t lo, std::size_t hi) {
    for (std::size_t it = lo; it < hi; ++it) {
      const Block& blk = blocks[items[it].first];
      Digits dg{};
      std::uint64_t tc = items[it].second;
      for (auto pos : blk.t_pos) {
        dg[pos] = static_cast<std::uint32_t>(tc % p);
        tc /= p;
      }
      const std::array<ModInt, 3> t = {f.from_int(dg[0]), f.from_int(dg[1]), f.from_int(dg[2])};
      auto [a, b] = factor_bivector(f, t);
      const std::uint64_t g_count = power(p, blk.g_pos.size());
      for (std::uint64_t gc = 1; gc < g_count; ++gc) {
        std::uint64_t rest = gc;
        for (std::size_t k = 0; k < 6; ++k) dg[3 + k] = 0;
        for (auto pos : blk.g_pos) {
          dg[3 + pos] = static_cast<std::uint32_t>(rest % p);
          rest /= p;
        }
        ModInt g[3][3];
        for (std::size_t k = 0; k < 6; ++k) {
          auto [i, j] = kGPairs[k];
          g[i][j] = g[j][i] = f.from_int(dg[3 + k]);
        }
        auto form = [&](const Vec<PrimeField>& x, const Vec<PrimeField>& y) {
          ModInt s = f.zero();
          for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) s += x[i] * g[i][j] * y[j];
          return s;
        };
        const ModInt gab = form(a, b);
        const ModInt delta = form(a, a) * form(b, b) - gab * gab;
        if (minus4 * delta == target) found[w].push_back(encode(dg, p));
      }
    }
  });
  std::vector<TripleKey> keys;
  for (auto& v : found) keys.insert(keys.end(), v.begin(), v.end());
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<Matrix<PrimeField>> gzeta_generators(const PrimeField& f, const DiagonalTwist<PrimeField>& d) {
  const ModInt c = primitive_root(f);
  const auto& a = d.alphas;
  std::vector<Matrix<PrimeField>> gens;
  auto torus = [&](std::size_t i) {
    Matrix<PrimeField> m = Matrix<PrimeField>::identity(f, 3);
    m(i, i) = c;
    return m;
  };
  auto transvection = [&](std::size_t i, std::size_t j) {
    Matrix<PrimeField> m = Matrix<PrimeField>::identity(f, 3);
    m(i, j) = f.one();
    return m;
  };
  for (std::size_t i = 0; i < 3; ++i) gens.push_back(torus(i));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j && a[i] == a[j]) gens.push_back(transvection(i, j));

  if (group_index(f, d) == 3) {
    // phi e_k = e_{k+1}: phi zeta phi^-1 = diag(a3, a1, a2) = (a3/a1) zeta.
    Matrix<PrimeField> cyc(f, 3, 3);
    for (std::size_t k = 0; k < 3; ++k) cyc((k + 1) % 3, k) = f.one();
    const Matrix<PrimeField> zeta = Matrix<PrimeField>::diagonal(f, {a[0], a[1], a[2]});
    const auto inv = inverse(cyc);
    const ModInt ratio = a[2] / a[0];
    if (!(cyc * zeta * *inv == ratio * zeta)) {
      throw Error(Errc::InternalInvariant, "eigenspace 3-cycle does not rescale zeta");
    }
    gens.push_back(std::move(cyc));
  }
  return gens;
}

OrbitCounts orbit_counts(const PrimeField& f, const std::vector<TripleKey>& keys, const DiagonalTwist<PrimeField>& d,
                         const EnumerationOptions& opts) {
  check_prime(f, opts);
  const std::uint64_t p = f.characteristic();
  const ModInt c = primitive_root(f);
  const std::uint64_t cv = c.value(), cinv = f.inv(c).value();
  struct Gen {
    IntMat phi, psi;
  };
  std::vector<Gen> gens;
  for (const auto& m : gzeta_generators(f, d)) gens.push_back({to_int(m), to_int(*inverse(m))});

  auto index_of = [&](TripleKey k) {
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it == keys.end() || *it != k) throw Error(Errc::InternalInvariant, "P(zeta) is not closed under G(zeta)");
    return static_cast<std::size_t>(it - keys.begin());
  };

  // Edge targets computed in parallel; unions applied in index order.
  const std::size_t n = keys.size();
  const std::size_t stride = 1 + gens.size();
  std::vector<std::size_t> targets(n * stride);
  parallel_blocks(n, thread_count(opts), [&](unsigned, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Digits dg = decode(keys[i], static_cast<std::uint32_t>(p));
      targets[i * stride] = index_of(encode(scale_raw(cv, cinv, dg, p), static_cast<std::uint32_t>(p)));
      for (std::size_t g = 0; g < gens.size(); ++g) {
        targets[i * stride + 1 + g] =
            index_of(encode(act_raw(gens[g].phi, gens[g].psi, dg, p), static_cast<std::uint32_t>(p)));
      }
    }
  });

  DisjointSets kx(n), gz(n);
  for (std::size_t i = 0; i < n; ++i) {
    kx.unite(i, targets[i * stride]);
    for (std::size_t s = 0; s < stride; ++s) gz.unite(i, targets[i * stride + s]);
  }
  OrbitCounts out;
  out.kx_representatives = representatives(kx, keys);
  out.gzeta_representatives = representatives(gz, keys);
  out.kx_orbits = out.kx_representatives.size();
  out.gzeta_orbits = out.gzeta_representatives.size();
  return out;
}

TheoremTally check_representatives(const PrimeField& f, const std::vector<TripleKey>& reps,
                                   const DiagonalTwist<PrimeField>& d, const ModInt& q,
                                   const EnumerationOptions& opts) {
  const TwistOperator<PrimeField> zeta = d.op(f);
  const bool scalar = d.is_scalar();
  const unsigned threads = thread_count(opts);
  std::vector<TheoremTally> partial(threads);
  parallel_blocks(reps.size(), threads, [&](unsigned w, std::size_t lo, std::size_t hi) {
    TheoremTally& t = partial[w];
    for (std::size_t i = lo; i < hi; ++i) {
      ++t.checked;
      try {
        const auto h = build_from_triple(decode_triple(f, reps[i], q));
        if (!check_braid(h)) ++t.braid_failures;
        if (!check_hecke(h)) ++t.hecke_failures;
        if (!commutes_with_zeta(h, zeta)) {
          ++t.commute_failures;
          continue;
        }
        const auto hz = twist(h, zeta);
        if (!check_braid(hz) || !check_hecke(hz) || !(hz.q == q) || !is_twisted_polynomial(hz, zeta)) {
          ++t.twist_failures;
          continue;
        }
        const FormsContext<PrimeField> ctx(hz, zeta);
        if (!equivalence_report(ctx).all()) ++t.equivalence_failures;
        if (dim_U(ctx) != 1) ++t.dim_u_violations;
        if (scalar && !check_untwisted_identity(ctx)) ++t.untwisted_identity_failures;
      } catch (const Error&) {
        ++t.exceptions;
      }
    }
  });
  TheoremTally sum;
  for (const auto& t : partial) {
    sum.checked += t.checked;
    sum.braid_failures += t.braid_failures;
    sum.hecke_failures += t.hecke_failures;
    sum.commute_failures += t.commute_failures;
    sum.twist_failures += t.twist_failures;
    sum.equivalence_failures += t.equivalence_failures;
    sum.untwisted_identity_failures += t.untwisted_identity_failures;
    sum.dim_u_violations += t.dim_u_violations;
    sum.exceptions += t.exceptions;
  }
  return sum;
}

EnumerationReport empirical_theorem_check(const PrimeField& f, const DiagonalTwist<PrimeField>& d, const ModInt& q,
                                          const EnumerationOptions& opts) {
  const auto keys = enumerate_P_zeta(f, d, q, opts);
  const auto orbits = orbit_counts(f, keys, d, opts);
  EnumerationReport rep;
  rep.p = f.characteristic();
  rep.alphas = d.alphas;
  rep.q = q;
  rep.total_triples = keys.size();
  rep.kx_orbits = orbits.kx_orbits;
  rep.gzeta_orbits = orbits.gzeta_orbits;
  rep.gzeta_index = group_index(f, d);
  rep.tally = check_representatives(f, orbits.kx_representatives, d, q, opts);
  for (std::size_t i = 0; i < orbits.gzeta_representatives.size() && i < opts.max_samples; ++i)
    rep.samples.push_back(decode_triple(f, orbits.gzeta_representatives[i], q));

  const TableRow row = table_row(f, skew_params(f, d));
  const QRegime regime = q == f.one() ? QRegime::One : QRegime::NotOne;
  rep.table_row = std::string(row_name(row));
  rep.table_count = row_count(row, regime);
  rep.table_match = rep.table_count == rep.gzeta_orbits;
  rep.comparison_note = "exploratory: F_" + std::to_string(rep.p) + " is not algebraically closed";
  if (rep.p % 4 == 3) rep.comparison_note += "; -1 is not a square";
  if (rep.p % 3 == 2) rep.comparison_note += "; no primitive cube root of 1";
  return rep;
}

}  // namespace hecke
