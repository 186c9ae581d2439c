#pragma once

#include "l2rank/bigint.hpp"
#include "l2rank/cosets.hpp"
#include "l2rank/presentation.hpp"

#include <vector>

namespace l2rank {

/// Images of points 0..d-1; composition is left to right (point^(gh) = (point^g)^h).
using Permutation = std::vector<int>;

inline constexpr int kDefaultOrderCap = 5000;

/// Surjection of a presentation onto a finite group Q, stored as the right
/// regular action of Q on itself.
///
/// Elements are numbered breadth-first from the identity (generators in
/// order, each followed by its inverse), so two quotients of the same
/// presentation have identical actions exactly when their kernels agree.
class FiniteQuotient {
 public:
  /// Quotient generated by the given permutation images. Throws
  /// InvalidArgument if a relator does not map to the identity and
  /// BudgetExceeded if the image group is larger than `order_cap`.
  static FiniteQuotient from_permutations(const Presentation& source,
                                          const std::vector<Permutation>& images,
                                          int order_cap = kDefaultOrderCap);

  /// Quotient whose Cayley action is `action` (any numbering); the action
  /// must be regular and satisfy the relators.
  static FiniteQuotient from_regular_action(const Presentation& source,
                                            const std::vector<Permutation>& action);

  const Presentation& source() const { return source_; }
  int order() const { return static_cast<int>(element_words_.size()); }
  const std::vector<Permutation>& regular_action() const { return action_; }
  /// Shortest representative (breadth-first) of element e.
  const Word& element_word(int e) const { return element_words_[static_cast<std::size_t>(e)]; }

  /// Element e.g for a generator or inverse letter.
  int act(int e, const Letter& l) const {
    return l.inverse ? inverse_action_[static_cast<std::size_t>(l.generator)][static_cast<std::size_t>(e)]
                     : action_[static_cast<std::size_t>(l.generator)][static_cast<std::size_t>(e)];
  }
  int act(int e, const Word& w) const;
  /// Image of a word; element 0 is the identity.
  int evaluate(const Word& w) const { return act(0, w); }
  int multiply(int a, int b) const { return act(a, element_word(b)); }
  int inverse(int e) const { return evaluate(element_word(e).inverse()); }
  int element_order(int e) const;

  /// Coset table of the kernel (cosets = elements).
  CosetTable kernel_table() const { return CosetTable::from_action(action_); }

  /// Same kernel.
  bool operator==(const FiniteQuotient& other) const { return action_ == other.action_; }

 private:
  Presentation source_;
  std::vector<Permutation> action_;
  std::vector<Permutation> inverse_action_;
  std::vector<Word> element_words_;
};

/// Distinct finite quotients arising from transitive actions of degree at
/// most `max_degree` (<= 12), ordered by increasing order. Subgroups are
/// enumerated degree by degree via backtracking coset-table search; the
/// search stops once `max_count` quotients are found.
std::vector<FiniteQuotient> search_finite_quotients(const Presentation& p, int max_degree,
                                                    int max_count,
                                                    int order_cap = kDefaultOrderCap);

/// Quotient with kernel ker(a) intersect ker(b): the subdirect image in a x b.
FiniteQuotient intersect_quotients(const FiniteQuotient& a, const FiniteQuotient& b,
                                   int order_cap = kDefaultOrderCap);

/// True if ker(finer) <= ker(coarser), checked by building the induced map
/// finer -> coarser and verifying it commutes with every generator.
bool factors_through(const FiniteQuotient& finer, const FiniteQuotient& coarser);

/// Nested chain N_1 > N_2 > ... of kernels with strictly increasing index.
struct QuotientChain {
  std::vector<FiniteQuotient> quotients;
  std::vector<int> indices;
  bool nested_certified = false;
  /// Set when an intersection exceeded the order cap and the chain stopped early.
  bool cap_reached = false;
};

/// Cumulative intersections of the nontrivial pool members in increasing
/// order, keeping only steps that grow the index; at most `length` entries.
QuotientChain build_chain(const Presentation& p, std::vector<FiniteQuotient> pool, int length,
                          int order_cap = kDefaultOrderCap);

struct BettiSample {
  int index = 0;
  int betti1 = 0;
  Rational ratio;
};

/// Sampled ratios b_1(N_i)/[G:N_i]. These are lower-bound evidence for the
/// first L2-Betti number; no limit is claimed and residual triviality of the
/// chain is never certified.
struct BettiEstimate {
  std::vector<BettiSample> samples;
  /// Maximum ratio over the tail half of the chain.
  Rational limsup_lower_bound;
  bool intersection_trivial_certified = false;
};

/// Per-quotient Betti numbers run on up to `jobs` threads.
BettiEstimate luck_estimate(const Presentation& p, const QuotientChain& chain, int jobs = 1);

}  // namespace l2rank
