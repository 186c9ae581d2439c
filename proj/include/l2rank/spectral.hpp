#pragma once

#include "l2rank/bigint.hpp"
#include "l2rank/group_ring.hpp"
#include "l2rank/integer_matrix.hpp"
#include "l2rank/quotients.hpp"

#include <optional>
#include <vector>

namespace l2rank {

/// Block matrix of size (rows*|Q|) x (cols*|Q|) in which entry sum c_w w
/// becomes sum c_w R(w), R(w) the permutation matrix with R(w)[e][e.w] = 1.
IntegerMatrix induce_regular_matrix(const GroupRingMatrix& m, const FiniteQuotient& q);

/// Nullity of the induced matrix divided by |Q|, computed exactly.
/// True when the image of `m` in the matrices over Z[Q] is self-adjoint.
bool image_self_adjoint(const GroupRingMatrix& m, const FiniteQuotient& q);

Rational normalized_kernel_dimension(const GroupRingMatrix& m, const FiniteQuotient& q);

struct SpectralAtom {
  double eigenvalue = 0.0;
  Rational mass;
};

/// Finite atomic measure with masses multiplicity/|Q|; total mass is the
/// block dimension of the (possibly squared) matrix.
struct SpectralMeasure {
  std::vector<SpectralAtom> atoms;  // increasing eigenvalue
  Rational total_mass;
  int quotient_order = 0;
  /// The image of the input in Z[Q] was not self-adjoint and adjoint(m) * m
  /// was used instead.
  bool squared = false;
  /// The eigenvalues absorbed into the exact zero atom were numerically
  /// small; false flags an eigensolver/nullity disagreement.
  bool zero_atom_consistent = true;

  Rational mass_at_zero() const;
  /// mu({|t| < eps}); equals mu([0, eps)) for positive matrices.
  Rational mass_below(double eps) const;
  double moment(int n) const;
};

inline constexpr double kEigenTolerance = 1e-9;

/// Eigenvalues come from a dense symmetric eigensolver; the atom at zero is
/// replaced by the exact normalized nullity.
SpectralMeasure spectral_measure(const GroupRingMatrix& m, const FiniteQuotient& q);

struct MomentComparison {
  /// Sum over diagonal entries of the identity coefficient of (m^n)_ii in Z[Q].
  Rational symbolic;
  /// Integral of t^n against the spectral measure.
  double numeric = 0.0;
  bool within_tolerance = false;
};

inline constexpr double kMomentTolerance = 1e-6;

/// Requires the image of `m` in Z[Q] to be self-adjoint; throws
/// InvalidArgument otherwise.
MomentComparison moment_check(const GroupRingMatrix& m, const FiniteQuotient& q, int n);

struct LogBoundRow {
  std::size_t measure = 0;
  double eps = 0.0;
  Rational at_zero;
  Rational below_eps;
  double rhs = 0.0;
  bool holds = false;
};

/// Checks mu([0,eps)) <= mu({0}) + C/|log eps| over a family and a grid.
struct LogBoundReport {
  double supplied_constant = 0.0;
  /// Least C for which every row holds.
  double minimal_constant = 0.0;
  bool holds = true;
  std::vector<LogBoundRow> rows;
};

LogBoundReport log_bound_report(const std::vector<SpectralMeasure>& measures, double constant,
                                const std::vector<double>& eps_grid);

struct Z1Estimate {
  /// dim ker of the induced relator Jacobian, normalized by |Q|.
  Rational cocycle_dimension;
  /// Same for the Jacobian extended by the Fox rows of the extension words.
  std::optional<Rational> extended_kernel_dimension;
};

Z1Estimate z1_dimension_estimate(const Presentation& p, const std::vector<Word>& extension_words,
                                 const FiniteQuotient& q);

}  // namespace l2rank
