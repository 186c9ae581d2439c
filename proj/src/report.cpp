#include "l2rank/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace l2rank {

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

Json matrix_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Betti1& h) {
  Json torsion = Json::array();
  for (const BigInt& t : h.torsion) torsion.push_back(to_json(t));
  return {{"rank", h.rank}, {"torsion", torsion}};
}

Json to_json(const SNFResult& snf) {
  Json diagonal = Json::array(), torsion = Json::array();
  for (const BigInt& d : snf.diagonal) diagonal.push_back(to_json(d));
  for (const BigInt& t : snf.torsion) torsion.push_back(to_json(t));
  return {{"diagonal", diagonal}, {"rank", snf.rank}, {"torsion", torsion}};
}

Json to_json(const BoundReport& report) {
  Json certificates = Json::array();
  for (const Certificate& c : report.certificates) {
    Json entry = {{"kind", c.kind}, {"detail", c.detail}};
    if (c.quotient_order > 0) entry["quotient_order"] = c.quotient_order;
    if (!c.witness_words.empty()) entry["witness_words"] = c.witness_words;
    certificates.push_back(std::move(entry));
  }
  Json out;
  out["quantity"] = report.quantity;
  out["lower"] = report.lower ? Json(to_fraction_string(*report.lower)) : Json(nullptr);
  out["upper"] = report.upper ? Json(to_fraction_string(*report.upper)) : Json(nullptr);
  out["certified"] = report.certified;
  out["inconclusive"] = report.inconclusive;
  out["certificates"] = certificates;
  out["notes"] = report.notes;
  return out;
}

Json coset_table_json(const Presentation& p, const CosetTable& t) {
  Json action = Json::object();
  for (int g = 0; g < t.num_generators(); ++g) {
    Json images = Json::array();
    for (int image : t.action()[static_cast<std::size_t>(g)]) images.push_back(image + 1);
    action[p.generator_names()[static_cast<std::size_t>(g)]] = images;
  }
  return {{"index", t.index()}, {"action", action}};
}

Json luck_report_json(const Presentation& p, const QuotientChain& chain, const BettiEstimate& estimate) {
  Json samples = Json::array();
  for (const BettiSample& s : estimate.samples)
    samples.push_back({{"index", s.index}, {"betti1", s.betti1}, {"ratio", to_fraction_string(s.ratio)}});
  return {{"presentation", p.to_string()},
          {"chain", samples},
          {"limsup_lower_bound", to_fraction_string(estimate.limsup_lower_bound)},
          {"intersection_trivial_certified", estimate.intersection_trivial_certified},
          {"nested_certified", chain.nested_certified},
          {"cap_reached", chain.cap_reached},
          {"limsup_rule", "maximum sampled ratio over the tail half of the chain"},
          {"interpretation", "sampled ratios are lower-bound evidence: b1^(2)(G) >= limsup b1(N_i)/[G:N_i]"}};
}

double rounded(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

Json spectral_json(const std::string& matrix_text, const SpectralMeasure& measure,
                   const std::map<int, MomentComparison>& moments) {
  Json atoms = Json::array();
  for (const SpectralAtom& a : measure.atoms)
    atoms.push_back(Json::array({rounded(a.eigenvalue), to_fraction_string(a.mass)}));
  Json moment_json = Json::object();
  for (const auto& [n, m] : moments)
    moment_json[std::to_string(n)] = {{"symbolic", to_fraction_string(m.symbolic)},
                                      {"numeric", rounded(m.numeric)},
                                      {"within_tolerance", m.within_tolerance}};
  return {{"matrix", matrix_text},
          {"quotient_order", measure.quotient_order},
          {"squared", measure.squared},
          {"total_mass", to_fraction_string(measure.total_mass)},
          {"kernel_dimension", to_fraction_string(measure.mass_at_zero())},
          {"zero_atom_consistent", measure.zero_atom_consistent},
          {"atoms", atoms},
          {"moments", moment_json}};
}

Json log_bound_json(const LogBoundReport& report) {
  Json rows = Json::array();
  for (const LogBoundRow& r : report.rows)
    rows.push_back({{"measure", r.measure},
                    {"eps", r.eps},
                    {"mu_zero", to_fraction_string(r.at_zero)},
                    {"mu_below_eps", to_fraction_string(r.below_eps)},
                    {"rhs", rounded(r.rhs)},
                    {"holds", r.holds}});
  return {{"constant", report.supplied_constant},
          {"minimal_constant", rounded(report.minimal_constant)},
          {"holds", report.holds},
          {"rows", rows}};
}

std::string log_bound_csv(const LogBoundReport& report) {
  std::ostringstream out;
  out.precision(12);
  out << "measure,eps,mu_zero,mu_below_eps,rhs,holds\n";
  for (const LogBoundRow& r : report.rows)
    out << r.measure << ',' << r.eps << ',' << to_fraction_string(r.at_zero) << ','
        << to_fraction_string(r.below_eps) << ',' << rounded(r.rhs) << ',' << (r.holds ? "true" : "false")
        << '\n';
  return out.str();
}

Json distance_json(const Presentation& names, const DistanceReport& report) {
  static const char* kinds[] = {"exact", "interval", "agreement"};
  Json undecided = Json::array();
  for (const Word& w : report.undecided) undecided.push_back(names.format(w));
  Json out = {{"kind", kinds[static_cast<int>(report.kind)]},
              {"lower", to_fraction_string(report.lower)},
              {"upper", to_fraction_string(report.upper)},
              {"agreement_radius", report.agreement_radius},
              {"disagreement_radius", report.disagreement_radius ? Json(*report.disagreement_radius) : Json(nullptr)},
              {"disagreement_word", report.disagreement_word ? Json(names.format(*report.disagreement_word)) : Json(nullptr)},
              {"identical_relators", report.identical_relators},
              {"undecided", undecided}};
  if (report.disagreement_word)
    out["disagreement_member_of"] = report.disagreement_side == 0 ? "first" : "second";
  if (report.kind == DistanceKind::agreement)
    out["note"] = "agreement up to the searched radius; not a proof that the normal subgroups are equal";
  return out;
}

}  // namespace l2rank
