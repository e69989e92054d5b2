#pragma once

// Exhaustive enumeration of the zeta-stable parameter set P(zeta) over a small
// prime field, orbit counting under k^x and G(zeta), and an empirical check
// of the structure results on every orbit.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hecke/classify.hpp"
#include "hecke/hecke.hpp"

namespace hecke {

/// Base-p packing of (t12, t13, t23, g11, g12, g13, g22, g23, g33), first
/// digit most significant, so key order is lexicographic order.
using TripleKey = std::uint64_t;

struct EnumerationOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  std::uint32_t max_prime = 13;
  std::size_t max_samples = 16;
};

TripleKey encode_triple(const ParamTriple<PrimeField>& tr);
ParamTriple<PrimeField> decode_triple(const PrimeField& f, TripleKey key, const ModInt& q);

/// Sorted keys of all (t, g) with t != 0, g != 0 symmetric, (q-1)^2 = -4 Delta
/// and zeta . (t, g, q) in k^x . (t, g, q). Throws FieldTooLarge above max_prime.
std::vector<TripleKey> enumerate_P_zeta(const PrimeField& f, const DiagonalTwist<PrimeField>& d, const ModInt& q,
                                        const EnumerationOptions& opts = {});

/// Generators of G(zeta) = {phi : phi zeta phi^-1 in k^x zeta} for diagonal zeta:
/// the centralizer (torus, or GL2/GL3 blocks via transvections) plus an
/// eigenspace 3-cycle in the cube-root case.
std::vector<Matrix<PrimeField>> gzeta_generators(const PrimeField& f, const DiagonalTwist<PrimeField>& d);

/// Smallest residue generating F_p^x.
ModInt primitive_root(const PrimeField& f);

struct OrbitCounts {
  std::size_t kx_orbits = 0;
  std::size_t gzeta_orbits = 0;
  std::vector<TripleKey> kx_representatives;     // smallest key per orbit, sorted
  std::vector<TripleKey> gzeta_representatives;  // smallest key per orbit, sorted
};

/// Union-find over the k^x action and the G(zeta) generators. `keys` must be
/// sorted and closed under both actions (InternalInvariant otherwise).
OrbitCounts orbit_counts(const PrimeField& f, const std::vector<TripleKey>& keys, const DiagonalTwist<PrimeField>& d,
                         const EnumerationOptions& opts = {});

struct TheoremTally {
  std::size_t checked = 0;  // k^x-orbit representatives; R is constant on k^x-orbits
  std::size_t braid_failures = 0;
  std::size_t hecke_failures = 0;
  std::size_t commute_failures = 0;
  std::size_t twist_failures = 0;  // R_zeta not a Hecke symmetry with relations of S(V)_zeta
  std::size_t equivalence_failures = 0;
  std::size_t untwisted_identity_failures = 0;  // scalar zeta only
  std::size_t dim_u_violations = 0;
  std::size_t exceptions = 0;

  std::size_t theorem_failures() const {
    return braid_failures + hecke_failures + commute_failures + twist_failures + equivalence_failures +
           untwisted_identity_failures + exceptions;
  }
};

struct EnumerationReport {
  std::uint32_t p = 0;
  std::array<ModInt, 3> alphas;
  ModInt q;
  std::size_t total_triples = 0;
  std::size_t kx_orbits = 0;
  std::size_t gzeta_orbits = 0;
  int gzeta_index = 1;
  TheoremTally tally;
  std::vector<ParamTriple<PrimeField>> samples;  // G(zeta)-orbit representatives

  // Comparison with the algebraically closed table; exploratory over F_p.
  std::string table_row;
  std::size_t table_count = 0;
  bool table_match = false;
  std::string comparison_note;

  std::size_t theorem_failures() const { return tally.theorem_failures(); }
  std::size_t dim_u_violations() const { return tally.dim_u_violations; }
};

/// Runs the per-triple checks on one representative per k^x-orbit.
TheoremTally check_representatives(const PrimeField& f, const std::vector<TripleKey>& reps,
                                   const DiagonalTwist<PrimeField>& d, const ModInt& q,
                                   const EnumerationOptions& opts = {});

/// enumerate_P_zeta + orbit_counts + check_representatives + table comparison.
EnumerationReport empirical_theorem_check(const PrimeField& f, const DiagonalTwist<PrimeField>& d, const ModInt& q,
                                          const EnumerationOptions& opts = {});

}  // namespace hecke
