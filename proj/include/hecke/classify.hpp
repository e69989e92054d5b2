#pragma once

// Hecke symmetries R with S(V,R) = S(V)_zeta for a diagonal zeta: which of
// the eight types occur, canonical parameter triples in an eigenbasis, the
// extra symmetry of the cube-root case, and the table of class counts.
//
// Type numbering follows the standard list: 1, 2 carry a parameter q != 0,
// the others have q = 1; Type 8 is the flip.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/hecke.hpp"

namespace hecke {

template <class F>
struct DiagonalTwist {
  std::array<typename F::Elem, 3> alphas;

  /// Throws ZeroParameter if some alpha vanishes.
  static DiagonalTwist make(const F& f, std::array<typename F::Elem, 3> alphas);
  TwistOperator<F> op(const F& f) const;
  bool is_scalar() const { return alphas[0] == alphas[1] && alphas[1] == alphas[2]; }
};

/// Relations x3 x2 = p1 x2 x3, x1 x3 = p2 x3 x1, x2 x1 = p3 x1 x2.
template <class F>
struct SkewParams {
  typename F::Elem p1, p2, p3;
};

/// p1 = a2/a3, p2 = a3/a1, p3 = a1/a2.
template <class F>
SkewParams<F> skew_params(const F& f, const DiagonalTwist<F>& d);

/// Parses one skew parameter; "eps" denotes the primitive cube root of 1 and
/// throws FieldLacksRoot when the field has none.
template <class F>
typename F::Elem parse_skew_param(const F& f, std::string_view text);

/// 3 if the eigenvalues are distinct and a1/a2 = a2/a3 = a3/a1 (a primitive
/// cube root of 1), else 1.
template <class F>
int group_index(const F& f, const DiagonalTwist<F>& d);

/// A type together with an ordering of the eigenbasis: the type's standard
/// basis vector x_k is e_{order[k]} (0-based).
struct TypeRealization {
  int type = 0;
  std::array<std::size_t, 3> order{};
};

/// Types that admit a zeta-eigenbasis, scanning all six orderings; orderings
/// with the same eigenvalue tuple are reported once.
template <class F>
std::vector<TypeRealization> allowed_types(const F& f, const DiagonalTwist<F>& d);

enum class QRegime { NotOne, One };

inline std::string_view regime_name(QRegime r) { return r == QRegime::One ? "q=1" : "q!=1"; }

/// Types with parameter q: {1, 2} for q != 1, {3..8} for q = 1.
inline bool type_in_regime(int type, QRegime r) { return r == QRegime::One ? type >= 3 : type <= 2; }

enum class CanonicalShape { Hyperbolic, Diagonal, Mixed, Type3 };

std::string_view shape_name(CanonicalShape s);

template <class F>
struct CanonicalTriple {
  int type = 0;
  std::array<std::size_t, 3> order{};
  CanonicalShape shape = CanonicalShape::Hyperbolic;
  ParamTriple<F> triple;
};

/// One triple per permitted (type, ordering) with the given q: t = x1 ^ x2 and
/// g in the type's canonical shape. Type 8 (the flip) has no triple. Each
/// triple is checked to satisfy the Delta relation and to be zeta-stable.
template <class F>
std::vector<CanonicalTriple<F>> canonical_triples(const F& f, const DiagonalTwist<F>& d, const typename F::Elem& q);

/// Rows of the class-count table.
enum class TableRow {
  Distinct,        // pairwise distinct, all != 1
  TwoEqual,        // two equal, third different, all != 1
  AllEps,          // all equal to a primitive cube root of 1
  OneIsOne,        // exactly one equal to 1, the other two distinct
  MinusOneMinusOne,  // (-1, -1, 1)
  AllOne,
};

std::string_view row_name(TableRow r);
std::size_t row_count(TableRow r, QRegime regime);

/// Matches exactly one row after cyclic normalization. Throws NoRowMatches if
/// p1 p2 p3 != 1 and FieldLacksRoot for the cube-root row over a field
/// without primitive cube roots.
template <class F>
TableRow table_row(const F& f, const SkewParams<F>& p);

template <class F>
std::size_t count_classes(const F& f, const SkewParams<F>& p, QRegime regime);

template <class F>
struct ClassReport {
  DiagonalTwist<F> twist;
  typename F::Elem q;
  QRegime regime = QRegime::NotOne;
  SkewParams<F> skew;
  int gzeta_index = 1;
  std::vector<TypeRealization> realizations;  // all q regimes
  std::vector<int> types;                     // permitted with this q
  std::vector<CanonicalTriple<F>> triples;
  TableRow row = TableRow::AllOne;
  std::size_t count_q_not_one = 0;
  std::size_t count_q_one = 0;
  /// The counts are the algebraically closed field values; over Q or F_p
  /// they are not asserted.
  bool counts_assume_closed_field = true;

  std::size_t count() const { return regime == QRegime::One ? count_q_one : count_q_not_one; }
};

template <class F>
ClassReport<F> classify(const F& f, const DiagonalTwist<F>& d, const typename F::Elem& q);

}  // namespace hecke
