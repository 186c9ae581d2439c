#include "l2rank/marked.hpp"

#include "l2rank/errors.hpp"
#include "l2rank/integer_matrix.hpp"

#include <deque>
#include <set>

namespace l2rank {

namespace {

// Least cyclic rotation of r or r^-1: equal keys mean equal normal closures
// of the single relator.
Word relator_key(const Word& r) {
  const Word reduced = r.cyclically_reduced();
  Word best = reduced;
  for (const Word& base : {reduced, reduced.inverse()})
    for (std::size_t k = 0; k < base.length(); ++k) best = std::min(best, base.rotated(k));
  return best;
}

std::set<Word> relator_keys(const MarkedGroup& g) {
  std::set<Word> keys;
  for (const Word& r : g.relators)
    if (!r.cyclically_reduced().empty()) keys.insert(relator_key(r));
  return keys;
}

IntegerMatrix exponent_rows(const std::vector<Word>& words, int n) {
  IntegerMatrix m = IntegerMatrix::Zero(static_cast<Eigen::Index>(words.size()), n);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (int j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), j) = words[i].exponent_sum(j);
  return m;
}

}  // namespace

Presentation MarkedGroup::presentation() const {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                                                      : "x" + std::to_string(i + 1));
  std::vector<Word> nonempty;
  for (const Word& r : relators)
    if (!r.cyclically_reduced().empty()) nonempty.push_back(r);
  return Presentation(std::move(names), std::move(nonempty));
}

MembershipOracle::MembershipOracle(const MarkedGroup& group)
    : MembershipOracle(group, Options{}) {}

MembershipOracle::MembershipOracle(const MarkedGroup& group, const Options& options)
    : group_(group), options_(options) {
  if (group.n < 1) throw InvalidArgument("marked group needs n >= 1");
  for (const Word& r : group.relators)
    if (r.rank() != group.n) throw InvalidArgument("marked group relator over the wrong alphabet");
  const Presentation p = group.presentation();
  quotients_ = search_finite_quotients(p, options.quotient_degree, options.quotient_count);
  relation_rank_ = exact_rank(exponent_rows(p.relators(), group.n));

  std::vector<Word> conjugators;
  for (int k = 0; k <= group.membership_budget; ++k)
    for (Word& u : words_of_length(group.n, k)) conjugators.push_back(std::move(u));
  std::set<Word> conjugates;
  for (const Word& r : p.relators()) {
    max_relator_length_ = std::max(max_relator_length_, static_cast<int>(r.length()));
    for (const Word& s : {r, r.inverse()})
      for (const Word& u : conjugators) conjugates.insert(u * s * u.inverse());
  }
  conjugates_.assign(conjugates.begin(), conjugates.end());
}

bool MembershipOracle::separated(const Word& w) const {
  std::vector<Word> rows = group_.presentation().relators();
  rows.push_back(w);
  if (exact_rank(exponent_rows(rows, group_.n)) > relation_rank_) return true;
  for (const FiniteQuotient& q : quotients_)
    if (q.evaluate(w) != 0) return true;
  return false;
}

bool MembershipOracle::derived_from_relators(const Word& w) const {
  if (w.empty()) return true;
  const std::size_t cap = w.length() + static_cast<std::size_t>(max_relator_length_);
  std::set<Word> seen{w};
  std::deque<Word> frontier{w};
  while (!frontier.empty() && static_cast<int>(seen.size()) < options_.max_states) {
    const Word x = std::move(frontier.front());
    frontier.pop_front();
    for (const Word& c : conjugates_) {
      Word y = x * c;
      if (y.empty()) return true;
      if (y.length() <= cap && seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return false;
}

Membership MembershipOracle::decide(const Word& w) const {
  if (w.rank() != group_.n) throw InvalidArgument("membership: word over the wrong alphabet");
  if (separated(w)) return Membership::non_member;
  if (derived_from_relators(w)) return Membership::member;
  return Membership::unknown;
}

DistanceReport marked_distance(const MarkedGroup& a, const MarkedGroup& b, int max_radius,
                               const MembershipOracle::Options& options) {
  if (a.n != b.n) throw InvalidArgument("marked_distance: groups have different generator counts");
  if (max_radius < 0) throw InvalidArgument("marked_distance: negative radius");
  const auto power_of_half = [](int k) { return Rational(1) / Rational(BigInt(1) << k); };

  DistanceReport report;
  if (relator_keys(a) == relator_keys(b)) {
    report.kind = DistanceKind::agreement;
    report.identical_relators = true;
    report.agreement_radius = max_radius;
    report.lower = 0;
    report.upper = power_of_half(max_radius);
    return report;
  }

  const MembershipOracle left(a, options), right(b, options);
  int agreed = 0;  // radius 0 holds only the identity, which lies in both
  for (int k = 1; k <= max_radius && !report.disagreement_radius; ++k) {
    bool all_decided = true;
    for (const Word& w : words_of_length(a.n, k)) {
      const Membership x = left.decide(w);
      const Membership y = right.decide(w);
      if (x == Membership::unknown || y == Membership::unknown) {
        all_decided = false;
        report.undecided.push_back(w);
      } else if (x != y) {
        report.disagreement_radius = k;
        report.disagreement_word = w;
        report.disagreement_side = x == Membership::member ? 0 : 1;
        break;
      }
    }
    if (!report.disagreement_radius && all_decided && agreed == k - 1) agreed = k;
  }

  report.agreement_radius = agreed;
  report.upper = power_of_half(agreed);
  if (report.disagreement_radius) {
    report.lower = power_of_half(*report.disagreement_radius - 1);
    report.kind = report.lower == report.upper ? DistanceKind::exact : DistanceKind::interval;
  } else {
    report.lower = 0;
    report.kind = agreed == max_radius ? DistanceKind::agreement : DistanceKind::interval;
  }
  return report;
}

}  // namespace l2rank
