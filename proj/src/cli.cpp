#include "l2rank/cli.hpp"

#include "l2rank/bounds.hpp"
#include "l2rank/errors.hpp"
#include "l2rank/fixtures.hpp"
#include "l2rank/fox.hpp"
#include "l2rank/homology.hpp"
#include "l2rank/marked.hpp"
#include "l2rank/report.hpp"
#include "l2rank/spectral.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace l2rank {

namespace {

struct Outcome {
  Json report;
  int status = kExitOk;
  std::optional<std::string> csv;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ParsedPresentation load_input(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) return parse_presentation(read_file(source));
  return load_fixture(std::filesystem::path(source).stem().string());
}

std::vector<ParsedPresentation> load_inputs(const RunConfig& cfg) {
  std::vector<ParsedPresentation> out;
  for (const std::string& source : cfg.inputs) out.push_back(load_input(source));
  for (const std::string& text : cfg.inline_presentations) out.push_back(parse_presentation(text));
  if (out.empty()) throw InvalidArgument(cfg.command + ": no input presentation given");
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Sum of terms "c*word", "word" or "c", joined by + and - at top level.
GroupRingElement parse_ring_element(const Presentation& p, std::string_view text) {
  GroupRingElement out(p.num_generators());
  std::vector<std::pair<int, std::string>> terms;
  int depth = 0, sign = 1;
  std::string current;
  char previous = '\0';
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == '+' || c == '-') && depth == 0 && previous != '^') {
      if (!trim(current).empty()) terms.emplace_back(sign, trim(current));
      sign = c == '-' ? -1 : 1;
      current.clear();
    } else {
      current += c;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) previous = c;
  }
  if (!trim(current).empty()) terms.emplace_back(sign, trim(current));
  if (terms.empty()) throw InvalidArgument("empty group ring element");
  for (const auto& [s, term] : terms) {
    if (term == "0") continue;
    if (all_digits(term)) {
      out.add_term(Word(p.num_generators()), BigInt(term) * s);
      continue;
    }
    BigInt coefficient = 1;
    std::string word = term;
    if (const auto star = term.find('*'); star != std::string::npos && all_digits(trim(term.substr(0, star)))) {
      coefficient = BigInt(trim(term.substr(0, star)));
      word = term.substr(star + 1);
    }
    out.add_term(parse_word(p, word), coefficient * s);
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char delimiter) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == delimiter) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

// "[e11, e12; e21, e22]"
GroupRingMatrix parse_ring_matrix(const Presentation& p, const std::string& text) {
  std::string body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw InvalidArgument("group ring matrix must be written [a, b; c, d]");
  body = body.substr(1, body.size() - 2);
  GroupRingMatrix m;
  bool first = true;
  for (const std::string& row_text : split(body, ';')) {
    std::vector<GroupRingElement> row;
    for (const std::string& entry : split(row_text, ',')) row.push_back(parse_ring_element(p, entry));
    if (first) {
      m = GroupRingMatrix(0, static_cast<int>(row.size()), p.num_generators());
      first = false;
    }
    m.append_row(row);
  }
  return m;
}

IntegerMatrix parse_integer_matrix(const std::string& text) {
  const Json rows = Json::parse(text);
  if (!rows.is_array() || rows.empty()) throw InvalidArgument("--matrix must be a JSON array of rows");
  IntegerMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw InvalidArgument("--matrix rows differ in length");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j].is_string() ? BigInt(rows[i][j].get<std::string>()) : BigInt(rows[i][j].get<long long>());
  }
  return m;
}

Json string_matrix(const GroupRingMatrix& m, const Presentation& p) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string(p.generator_names()));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Word> parse_words(const Presentation& p, const std::vector<std::string>& texts) {
  std::vector<Word> out;
  for (const std::string& t : texts) out.push_back(parse_word(p, t));
  return out;
}

bool is_hn_fixture(const RunConfig& cfg) {
  return !cfg.inputs.empty() && std::filesystem::path(cfg.inputs.front()).stem().string().rfind("hn_", 0) == 0;
}

constexpr const char* kHnNote =
    "fixture uses the smallest distinct primes; hyperbolicity of this presentation is not claimed";

const TorsionPresentation& require_torsion(const ParsedPresentation& in, const std::string& command) {
  if (!in.torsion)
    throw InvalidArgument(command + ": every relator must be written R^n with explicit n >= 1");
  return *in.torsion;
}

Outcome cmd_betti1(const RunConfig& cfg) {
  const Presentation p = load_inputs(cfg).front().presentation;
  Json report = to_json(betti1(p));
  report["perfect"] = is_perfect(p);
  return {report};
}

Outcome cmd_fox(const RunConfig& cfg) {
  const Presentation p = load_inputs(cfg).front().presentation;
  const JacobianBundle bundle = extend_jacobian(p, parse_words(p, cfg.extension_words));
  Json report = {{"presentation", p.to_string()},
                 {"jacobian", string_matrix(bundle.jacobian, p)},
                 {"augmented", matrix_json(augment_matrix(bundle.jacobian))}};
  if (!cfg.extension_words.empty()) {
    report["extension_words"] = cfg.extension_words;
    report["extended"] = string_matrix(bundle.extended, p);
    report["extended_augmented"] = matrix_json(augment_matrix(bundle.extended));
  }
  return {report};
}

Outcome cmd_snf(const RunConfig& cfg) {
  IntegerMatrix m = cfg.matrix.empty()
                        ? augment_matrix(fox_jacobian(load_inputs(cfg).front().presentation))
                        : parse_integer_matrix(cfg.matrix);
  Json report = to_json(smith_normal_form(m));
  report["matrix"] = matrix_json(m);
  return {report};
}

Outcome cmd_sigma(const RunConfig& cfg) {
  const ParsedPresentation in = load_inputs(cfg).front();
  const TorsionPresentation& tp = require_torsion(in, "sigma");
  Json exponents = Json::array();
  for (const TorsionRelator& r : tp.torsion_relators()) exponents.push_back(r.exponent);
  return {{{"presentation", in.presentation.to_string()},
           {"sigma", to_fraction_string(sigma(tp))},
           {"exponents", exponents}}};
}

Outcome cmd_pt_bound(const RunConfig& cfg) {
  const ParsedPresentation in = load_inputs(cfg).front();
  const TorsionPresentation& tp = require_torsion(in, "pt-bound");
  const auto pool = search_finite_quotients(in.presentation, cfg.max_degree, cfg.max_quotients, cfg.order_cap);
  BoundReport report = pt_lower_bound(tp, pool);
  const BoundReport upper = generator_bound(in.presentation);
  report.upper = upper.upper;
  report.certificates.insert(report.certificates.end(), upper.certificates.begin(), upper.certificates.end());
  if (is_hn_fixture(cfg)) report.notes.push_back(kHnNote);
  Json json = to_json(report);
  json["sigma"] = to_fraction_string(sigma(tp));
  return {json, report.certified ? kExitOk : kExitInconclusive};
}

Outcome cmd_nrk(const RunConfig& cfg) {
  const ParsedPresentation in = load_inputs(cfg).front();
  const Presentation& p = in.presentation;
  if (cfg.kill_words.empty()) throw InvalidArgument("nrk-check: give at least one --kill word");
  std::optional<Rational> l2_lower;
  if (in.torsion) l2_lower = Rational(BigInt(p.num_generators() - 1)) - sigma(*in.torsion);
  BoundReport report = normal_rank_witness(p, parse_words(p, cfg.kill_words), cfg.max_cosets, l2_lower);
  if (is_hn_fixture(cfg)) report.notes.push_back(kHnNote);
  return {to_json(report), report.inconclusive ? kExitInconclusive : kExitOk};
}

Outcome cmd_l2_approx(const RunConfig& cfg) {
  const Presentation p = load_inputs(cfg).front().presentation;
  const auto pool = search_finite_quotients(p, cfg.max_degree, cfg.max_quotients, cfg.order_cap);
  const QuotientChain chain = build_chain(p, pool, cfg.chain_length, cfg.order_cap);
  Outcome outcome;
  if (chain.quotients.empty()) {
    outcome.report = {{"presentation", p.to_string()},
                      {"chain", Json::array()},
                      {"limsup_lower_bound", nullptr},
                      {"intersection_trivial_certified", false},
                      {"note", "no nontrivial finite quotient found within the search budget"}};
    outcome.status = kExitInconclusive;
    return outcome;
  }
  const BettiEstimate estimate = luck_estimate(p, chain, cfg.jobs);
  outcome.report = luck_report_json(p, chain, estimate);
  if (chain.cap_reached) outcome.status = kExitInconclusive;
  std::string csv = "index,betti1,ratio\n";
  for (const BettiSample& s : estimate.samples)
    csv += std::to_string(s.index) + "," + std::to_string(s.betti1) + "," + to_fraction_string(s.ratio) + "\n";
  outcome.csv = csv;
  return outcome;
}

Outcome cmd_spectral(const RunConfig& cfg) {
  const Presentation p = load_inputs(cfg).front().presentation;
  const GroupRingMatrix m = cfg.matrix.empty() ? fox_jacobian(p) : parse_ring_matrix(p, cfg.matrix);
  const auto pool = search_finite_quotients(p, cfg.max_degree, cfg.max_quotients, cfg.order_cap);
  const FiniteQuotient* chosen = nullptr;
  for (const FiniteQuotient& q : pool)
    if (cfg.quotient_order > 0 ? q.order() == cfg.quotient_order : q.order() > 1) {
      chosen = &q;
      break;
    }
  if (!chosen) {
    Outcome none{{{"matrix", m.to_string(p.generator_names())},
                  {"note", "no matching finite quotient within the search budget"}}};
    none.status = kExitInconclusive;
    return none;
  }
  const SpectralMeasure measure = spectral_measure(m, *chosen);
  const GroupRingMatrix positive = measure.squared ? m.adjoint() * m : m;
  std::map<int, MomentComparison> moments;
  for (int n = 0; n <= cfg.moments; ++n) moments.emplace(n, moment_check(positive, *chosen, n));
  const LogBoundReport bound = log_bound_report({measure}, cfg.log_constant, cfg.eps_grid);
  const Z1Estimate z1 = z1_dimension_estimate(p, parse_words(p, cfg.extension_words), *chosen);

  Json report = spectral_json(m.to_string(p.generator_names()), measure, moments);
  report["log_bound"] = log_bound_json(bound);
  report["z1"] = {{"cocycle_dimension", to_fraction_string(z1.cocycle_dimension)},
                  {"extended_kernel_dimension",
                   z1.extended_kernel_dimension ? Json(to_fraction_string(*z1.extended_kernel_dimension))
                                                : Json(nullptr)},
                  {"assumption", "b0^(2)(G) = 0 (G infinite) is assumed, not checked"}};
  return {report, kExitOk, log_bound_csv(bound)};
}

Outcome cmd_dist(const RunConfig& cfg) {
  const auto inputs = load_inputs(cfg);
  if (inputs.size() != 2) throw InvalidArgument("dist: needs exactly two presentations");
  const Presentation& a = inputs[0].presentation;
  const Presentation& b = inputs[1].presentation;
  if (a.num_generators() != b.num_generators())
    throw InvalidArgument("dist: presentations have different generator counts");
  const MarkedGroup ga{a.num_generators(), a.relators(), cfg.membership_budget};
  const MarkedGroup gb{b.num_generators(), b.relators(), cfg.membership_budget};
  const DistanceReport report = marked_distance(ga, gb, cfg.max_radius);
  return {distance_json(a, report), report.kind == DistanceKind::interval ? kExitInconclusive : kExitOk};
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<Outcome(const RunConfig&)>> commands = {
      {"betti1", cmd_betti1},       {"fox", cmd_fox},        {"snf", cmd_snf},
      {"sigma", cmd_sigma},         {"pt-bound", cmd_pt_bound}, {"nrk-check", cmd_nrk},
      {"l2-approx", cmd_l2_approx}, {"spectral", cmd_spectral}, {"dist", cmd_dist}};
  const auto it = commands.find(cfg.command);
  if (it == commands.end()) {
    err << "unknown command '" << cfg.command << "'\n";
    return kExitError;
  }
  if (cfg.max_cosets < 1 || cfg.max_degree < 1 || cfg.chain_length < 1 || cfg.order_cap < 1 ||
      cfg.jobs < 1 || cfg.max_quotients < 1) {
    err << "budgets must be positive\n";
    return kExitError;
  }

  Outcome outcome;
  try {
    outcome = it->second(cfg);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  std::ostringstream rendered;
  switch (cfg.format) {
    case OutputFormat::json:
      rendered << outcome.report.dump(2) << '\n';
      break;
    case OutputFormat::text:
      flatten(outcome.report, "", rendered);
      break;
    case OutputFormat::csv:
      if (!outcome.csv) {
        err << cfg.command << ": csv output is not available for this command\n";
        return kExitError;
      }
      rendered << *outcome.csv;
      break;
  }
  if (cfg.output_path.empty()) {
    out << rendered.str();
  } else {
    std::ofstream file(cfg.output_path);
    if (!file) {
      err << "cannot write " << cfg.output_path << '\n';
      return kExitError;
    }
    file << rendered.str();
  }
  return outcome.status;
}

}  // namespace l2rank
