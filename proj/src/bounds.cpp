#include "l2rank/bounds.hpp"

#include "l2rank/cosets.hpp"

namespace l2rank {

Rational sigma(const TorsionPresentation& tp) {
  Rational sum = 0;
  for (const TorsionRelator& r : tp.torsion_relators())
    sum += Rational(1) / Rational(BigInt(r.exponent));
  return sum;
}

bool IrreducibilityResult::all_certified() const {
  for (RelatorOrderStatus s : relators)
    if (s != RelatorOrderStatus::certified) return false;
  return true;
}

IrreducibilityResult check_irreducibility(const TorsionPresentation& tp,
                                          const std::vector<FiniteQuotient>& quotients) {
  IrreducibilityResult out;
  for (const TorsionRelator& r : tp.torsion_relators()) {
    RelatorOrderStatus status = RelatorOrderStatus::unknown;
    int best_order = 0;
    int witness = -1;
    for (std::size_t k = 0; k < quotients.size(); ++k) {
      const FiniteQuotient& q = quotients[k];
      if (q.source().num_generators() != tp.num_generators()) continue;
      const int order = q.element_order(q.evaluate(r.root));
      if (order == r.exponent) {
        status = RelatorOrderStatus::certified;
        best_order = order;
        witness = static_cast<int>(k);
        break;
      }
      best_order = std::max(best_order, order);
    }
    out.relators.push_back(status);
    out.witness_order.push_back(best_order);
    out.witness_quotient.push_back(witness);
  }
  return out;
}

BoundReport pt_lower_bound(const TorsionPresentation& tp,
                           const std::optional<FiniteQuotient>& certificate) {
  return pt_lower_bound(tp, certificate ? std::vector<FiniteQuotient>{*certificate}
                                        : std::vector<FiniteQuotient>{});
}

BoundReport pt_lower_bound(const TorsionPresentation& tp, const std::vector<FiniteQuotient>& pool) {
  BoundReport report;
  report.lower = Rational(BigInt(tp.num_generators() - 1)) - sigma(tp);
  if (*report.lower <= 0) report.notes.push_back("non-positive lower bound is vacuous");
  if (pool.empty()) {
    report.notes.push_back("relator orders not witnessed; bound assumes irreducibility");
    return report;
  }
  const IrreducibilityResult check = check_irreducibility(tp, pool);
  const Presentation& base = tp.base();
  for (std::size_t i = 0; i < check.relators.size(); ++i) {
    const TorsionRelator& r = tp.torsion_relators()[i];
    const bool certified = check.relators[i] == RelatorOrderStatus::certified;
    Certificate c;
    c.kind = "irreducibility";
    if (certified) c.quotient_order = pool[static_cast<std::size_t>(check.witness_quotient[i])].order();
    c.witness_words = {base.format(r.root)};
    c.detail = "exponent " + std::to_string(r.exponent) + ": " +
               (certified ? "root image has exactly this order"
                          : "largest root order seen dividing it is " + std::to_string(check.witness_order[i]));
    report.certificates.push_back(std::move(c));
  }
  report.certified = check.all_certified();
  if (!report.certified) report.notes.push_back("some relator orders are unwitnessed; bound not certified");
  return report;
}

BoundReport generator_bound(const Presentation& p) {
  BoundReport report;
  report.upper = Rational(BigInt(p.num_generators() - 1));
  report.certified = true;
  report.certificates.push_back({"generator_count",
                                 "d(G) <= " + std::to_string(p.num_generators()) +
                                     " presentation generators; d(G) itself is not computed",
                                 0,
                                 {}});
  return report;
}

BoundReport normal_rank_witness(const Presentation& p, const std::vector<Word>& witnesses,
                                int max_cosets, const std::optional<Rational>& l2_lower) {
  BoundReport report;
  report.quantity = "normal_rank";
  const TrivialityVerdict verdict = trivial_quotient_check(p, witnesses, max_cosets);
  Certificate c;
  c.kind = "normal_generation";
  for (const Word& w : witnesses) c.witness_words.push_back(p.format(w));
  if (verdict == TrivialityVerdict::inconclusive) {
    report.inconclusive = true;
    c.detail = "coset enumeration of the quotient by the witnesses did not close at 1 coset within " +
               std::to_string(max_cosets) + " cosets";
    report.certificates.push_back(std::move(c));
    return report;
  }
  report.upper = Rational(BigInt(static_cast<long long>(witnesses.size())));
  report.certified = true;
  c.detail = "quotient by the normal closure of the witnesses is trivial";
  report.certificates.push_back(std::move(c));
  if (l2_lower) {
    const bool consistent = *l2_lower <= *report.upper - 1;
    report.notes.push_back(std::string(consistent ? "consistent" : "inconsistent") +
                           " with b1^(2) <= nrk - 1 (expected only for torsion-free groups): lower " +
                           to_fraction_string(*l2_lower) + " vs nrk - 1 <= " +
                           to_fraction_string(*report.upper - 1));
  }
  return report;
}

}  // namespace l2rank
