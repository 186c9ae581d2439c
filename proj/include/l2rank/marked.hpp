#pragma once

#include "l2rank/bigint.hpp"
#include "l2rank/presentation.hpp"
#include "l2rank/quotients.hpp"

#include <optional>
#include <vector>

namespace l2rank {

/// The normal closure N of `relators` in the free group of rank n, i.e. the
/// marked group F_n / N.
struct MarkedGroup {
  int n = 1;
  std::vector<Word> relators;
  /// Longest conjugator |u| used when searching w = prod u r^{+-1} u^-1.
  int membership_budget = 2;

  Presentation presentation() const;
};

enum class Membership { member, non_member, unknown };

/// Semidecides w in N: positively by a breadth-first search over products
/// of bounded conjugates of relators, negatively by an abelian obstruction
/// or a finite quotient of F_n/N in which w survives.
class MembershipOracle {
 public:
  struct Options {
    int quotient_degree = 6;
    int quotient_count = 200;
    int max_states = 20000;
  };

  explicit MembershipOracle(const MarkedGroup& group);
  MembershipOracle(const MarkedGroup& group, const Options& options);

  Membership decide(const Word& w) const;

 private:
  bool separated(const Word& w) const;
  bool derived_from_relators(const Word& w) const;

  MarkedGroup group_;
  Options options_;
  std::vector<FiniteQuotient> quotients_;
  std::vector<Word> conjugates_;
  int relation_rank_ = 0;
  int max_relator_length_ = 0;
};

enum class DistanceKind { exact, interval, agreement };

/// d(N1, N2) = 2^-K where K is the largest radius with N1 and N2 agreeing on
/// the ball of radius K.
struct DistanceReport {
  DistanceKind kind = DistanceKind::interval;
  Rational lower;
  Rational upper;
  /// Balls of radius <= agreement_radius are certified to agree.
  int agreement_radius = 0;
  std::optional<int> disagreement_radius;
  std::optional<Word> disagreement_word;
  /// Which side contains the disagreement word (0 = first, 1 = second).
  int disagreement_side = -1;
  std::vector<Word> undecided;
  bool identical_relators = false;
};

DistanceReport marked_distance(const MarkedGroup& a, const MarkedGroup& b, int max_radius,
                               const MembershipOracle::Options& options = {});

}  // namespace l2rank
