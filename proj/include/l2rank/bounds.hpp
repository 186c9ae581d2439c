#pragma once

#include "l2rank/bigint.hpp"
#include "l2rank/presentation.hpp"
#include "l2rank/quotients.hpp"

#include <optional>
#include <string>
#include <vector>

namespace l2rank {

/// One piece of evidence behind a bound.
struct Certificate {
  std::string kind;  // "irreducibility", "generator_count", "normal_generation"
  std::string detail;
  int quotient_order = 0;  // 0 when no quotient is involved
  std::vector<std::string> witness_words;
};

/// Bounds on one quantity. `quantity` is "l2_betti1" or "normal_rank".
struct BoundReport {
  std::string quantity = "l2_betti1";
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  bool certified = false;
  /// Set when the only available conclusion is inconclusive.
  bool inconclusive = false;
  std::vector<Certificate> certificates;
  std::vector<std::string> notes;
};

/// Sum of 1/n_i over the torsion relators.
Rational sigma(const TorsionPresentation& tp);

enum class RelatorOrderStatus { certified, unknown };

struct IrreducibilityResult {
  std::vector<RelatorOrderStatus> relators;
  /// Order of the root image in the witnessing quotient, per relator (0 if none).
  std::vector<int> witness_order;
  std::vector<int> witness_quotient;  // index into the quotient list, -1 if none
  bool all_certified() const;
};

/// Relator i is certified when some quotient maps R_i to an element of order
/// exactly n_i. Never refutes.
IrreducibilityResult check_irreducibility(const TorsionPresentation& tp,
                                          const std::vector<FiniteQuotient>& quotients);

/// lower = |X| - 1 - sigma, certified only when the quotient witnesses every
/// relator order.
BoundReport pt_lower_bound(const TorsionPresentation& tp,
                           const std::optional<FiniteQuotient>& certificate);

/// As above, with each relator allowed its own witnessing quotient.
BoundReport pt_lower_bound(const TorsionPresentation& tp, const std::vector<FiniteQuotient>& pool);

/// upper = (number of generators) - 1.
BoundReport generator_bound(const Presentation& p);

/// Upper bound on normal rank from a quotient-triviality certificate. If
/// `l2_lower` is given, reports whether it is consistent with
/// b1^(2) <= nrk - 1.
BoundReport normal_rank_witness(const Presentation& p, const std::vector<Word>& witnesses,
                                int max_cosets,
                                const std::optional<Rational>& l2_lower = std::nullopt);

}  // namespace l2rank
