#pragma once

// Independent brute-force filter for the zeta-stable parameter set over F_p.
// Plain integer arithmetic throughout; shares nothing with the library except
// the key layout (t12, t13, t23, g11, g12, g13, g22, g23, g33 in base p).
//
// Delta is computed from the second compound of g,
//   Delta = sum_{(ij),(kl)} t_ij t_kl (g_ik g_jl - g_il g_jk),
// rather than from a factorization t = a ^ b; zeta acts as a full matrix.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Mat = std::array<std::array<u64, 3>, 3>;

inline u64 md(long long v, u64 p) { return static_cast<u64>(((v % static_cast<long long>(p)) + static_cast<long long>(p)) % static_cast<long long>(p)); }

inline u64 pw(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline Mat mul(const Mat& a, const Mat& b, u64 p) {
  Mat c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      u64 s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s % p;
    }
  return c;
}

inline Mat transpose(const Mat& a) {
  Mat t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

// Inverse by the adjugate.
inline Mat inverse(const Mat& m, u64 p) {
  auto c = [&](int r0, int r1, int c0, int c1) {
    return md(static_cast<long long>(m[r0][c0] * m[r1][c1]) - static_cast<long long>(m[r0][c1] * m[r1][c0]), p);
  };
  Mat adj{};
  adj[0][0] = c(1, 2, 1, 2);
  adj[0][1] = md(-static_cast<long long>(c(0, 2, 1, 2)), p);
  adj[0][2] = c(0, 1, 1, 2);
  adj[1][0] = md(-static_cast<long long>(c(1, 2, 0, 2)), p);
  adj[1][1] = c(0, 2, 0, 2);
  adj[1][2] = md(-static_cast<long long>(c(0, 1, 0, 2)), p);
  adj[2][0] = c(1, 2, 0, 1);
  adj[2][1] = md(-static_cast<long long>(c(0, 2, 0, 1)), p);
  adj[2][2] = c(0, 1, 0, 1);
  u64 det = (m[0][0] * adj[0][0] + m[0][1] * adj[1][0] + m[0][2] * adj[2][0]) % p;
  u64 di = pw(det, p - 2, p);
  for (auto& row : adj)
    for (auto& e : row) e = e * di % p;
  return adj;
}

/// Sorted keys of all (t, g) with t, g nonzero, (q-1)^2 = -4 Delta, and
/// zeta . (t, g) = (c t, c^-1 g) for some c.
inline std::vector<u64> brute_force(u64 p, const Mat& zeta, u64 q) {
  const Mat zi = inverse(zeta, p);
  const Mat zit = transpose(zi);
  const Mat zt = transpose(zeta);
  const u64 target = (q + p - 1) % p * ((q + p - 1) % p) % p;
  const int ti[3] = {0, 0, 1}, tj[3] = {1, 2, 2};
  std::vector<u64> out;
  for (u64 tc = 1; tc < p * p * p; ++tc) {
    u64 t[3] = {tc / (p * p), tc / p % p, tc % p};
    Mat a{};
    for (int k = 0; k < 3; ++k) {
      a[ti[k]][tj[k]] = t[k];
      a[tj[k]][ti[k]] = (p - t[k]) % p;
    }
    const Mat na = mul(mul(zeta, a, p), zt, p);
    // c with zeta . t = c t, if any
    int lead = t[0] ? 0 : t[1] ? 1 : 2;
    u64 c = na[ti[lead]][tj[lead]] * pw(t[lead], p - 2, p) % p;
    bool eigen = c != 0;
    for (int k = 0; k < 3 && eigen; ++k) eigen = na[ti[k]][tj[k]] == c * t[k] % p;
    if (!eigen) continue;
    const u64 cinv = pw(c, p - 2, p);
    for (u64 gc = 1; gc < p * p * p * p * p * p; ++gc) {
      u64 gv[6];
      u64 rest = gc;
      for (int k = 5; k >= 0; --k) {
        gv[k] = rest % p;
        rest /= p;
      }
      Mat g = {{{gv[0], gv[1], gv[2]}, {gv[1], gv[3], gv[4]}, {gv[2], gv[4], gv[5]}}};
      // Delta via the second compound of g.
      long long delta = 0;
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
          long long minor = static_cast<long long>(g[ti[x]][ti[y]] * g[tj[x]][tj[y]]) -
                            static_cast<long long>(g[ti[x]][tj[y]] * g[tj[x]][ti[y]]);
          delta = static_cast<long long>(md(delta + static_cast<long long>(t[x] * t[y] % p) * md(minor, p), p));
        }
      if (md(-4 * delta, p) != target) continue;
      const Mat ng = mul(mul(zit, g, p), zi, p);
      bool stable = true;
      for (int i = 0; i < 3 && stable; ++i)
        for (int j = 0; j < 3 && stable; ++j) stable = ng[i][j] == cinv * g[i][j] % p;
      if (!stable) continue;
      u64 key = 0;
      for (int k = 0; k < 3; ++k) key = key * p + t[k];
      for (int k = 0; k < 6; ++k) key = key * p + gv[k];
      out.push_back(key);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Mat diag(u64 a, u64 b, u64 c) { return {{{a, 0, 0}, {0, b, 0}, {0, 0, c}}}; }

}  // namespace oracle
