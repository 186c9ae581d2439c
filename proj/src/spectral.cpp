#include "l2rank/spectral.hpp"

#include "l2rank/errors.hpp"
#include "l2rank/fox.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace l2rank {

namespace {

void require_alphabet(const GroupRingMatrix& m, const FiniteQuotient& q) {
  if (m.rank() != q.source().num_generators())
    throw InvalidArgument("group ring matrix and quotient use different alphabets");
}

using GroupAlgebraElement = std::vector<BigInt>;  // coefficient per element of Q

GroupAlgebraElement project(const GroupRingElement& x, const FiniteQuotient& q) {
  GroupAlgebraElement out(static_cast<std::size_t>(q.order()), BigInt(0));
  for (const auto& [w, c] : x.terms()) out[static_cast<std::size_t>(q.evaluate(w))] += c;
  return out;
}

bool is_symmetric(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

}  // namespace

IntegerMatrix induce_regular_matrix(const GroupRingMatrix& m, const FiniteQuotient& q) {
  require_alphabet(m, q);
  const int order = q.order();
  IntegerMatrix out = IntegerMatrix::Zero(m.rows() * order, m.cols() * order);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      for (const auto& [w, c] : m(i, j).terms())
        for (int e = 0; e < order; ++e) out(i * order + e, j * order + q.act(e, w)) += c;
  return out;
}

bool image_self_adjoint(const GroupRingMatrix& m, const FiniteQuotient& q) {
  return is_symmetric(induce_regular_matrix(m, q));
}

Rational normalized_kernel_dimension(const GroupRingMatrix& m, const FiniteQuotient& q) {
  const IntegerMatrix induced = induce_regular_matrix(m, q);
  const long long nullity = induced.cols() - exact_rank(induced);
  return Rational(BigInt(nullity)) / Rational(BigInt(q.order()));
}

Rational SpectralMeasure::mass_at_zero() const {
  for (const SpectralAtom& a : atoms)
    if (a.eigenvalue == 0.0) return a.mass;
  return Rational(0);
}

Rational SpectralMeasure::mass_below(double eps) const {
  Rational sum = 0;
  for (const SpectralAtom& a : atoms)
    if (std::abs(a.eigenvalue) < eps) sum += a.mass;
  return sum;
}

double SpectralMeasure::moment(int n) const {
  double sum = 0.0;
  for (const SpectralAtom& a : atoms) sum += std::pow(a.eigenvalue, n) * to_double(a.mass);
  return sum;
}

SpectralMeasure spectral_measure(const GroupRingMatrix& m, const FiniteQuotient& q) {
  require_alphabet(m, q);
  SpectralMeasure measure;
  measure.quotient_order = q.order();
  IntegerMatrix induced = induce_regular_matrix(m, q);
  measure.squared = !is_symmetric(induced);
  if (measure.squared) induced = induce_regular_matrix(m.adjoint() * m, q);
  const Eigen::Index size = induced.rows();
  const Rational unit = Rational(1) / Rational(BigInt(q.order()));
  measure.total_mass = Rational(BigInt(measure.squared ? m.cols() : m.rows()));
  if (size == 0) return measure;

  const Eigen::Index nullity = size - exact_rank(induced);
  const Eigen::MatrixXd dense = induced.unaryExpr([](const BigInt& v) { return v.convert_to<double>(); });
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd eigenvalues = solver.eigenvalues();  // ascending
  const double scale = std::max(1.0, eigenvalues.cwiseAbs().maxCoeff());

  // The nullity smallest eigenvalues (in absolute value) form the zero atom.
  std::vector<double> values(eigenvalues.data(), eigenvalues.data() + size);
  std::sort(values.begin(), values.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b); });
  for (Eigen::Index i = 0; i < nullity; ++i)
    measure.zero_atom_consistent =
        measure.zero_atom_consistent && std::abs(values[static_cast<std::size_t>(i)]) <= 1e-6 * scale;
  std::vector<double> rest(values.begin() + nullity, values.end());
  std::sort(rest.begin(), rest.end());

  if (nullity > 0) measure.atoms.push_back({0.0, Rational(BigInt(nullity)) * unit});
  for (std::size_t i = 0; i < rest.size();) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < rest.size() && rest[j] - rest[i] <= kEigenTolerance * scale) sum += rest[j++];
    measure.atoms.push_back({sum / static_cast<double>(j - i),
                             Rational(BigInt(static_cast<long long>(j - i))) * unit});
    i = j;
  }
  std::stable_sort(measure.atoms.begin(), measure.atoms.end(),
                   [](const SpectralAtom& a, const SpectralAtom& b) { return a.eigenvalue < b.eigenvalue; });
  return measure;
}

MomentComparison moment_check(const GroupRingMatrix& m, const FiniteQuotient& q, int n) {
  require_alphabet(m, q);
  if (!image_self_adjoint(m, q)) throw InvalidArgument("moment_check: image of the matrix is not self-adjoint");
  if (n < 0) throw InvalidArgument("moment_check: negative moment");
  const std::size_t size = static_cast<std::size_t>(m.rows());
  const std::size_t order = static_cast<std::size_t>(q.order());

  std::vector<std::vector<int>> product(order, std::vector<int>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      product[a][b] = q.multiply(static_cast<int>(a), static_cast<int>(b));

  using AlgebraMatrix = std::vector<std::vector<GroupAlgebraElement>>;
  AlgebraMatrix base(size, std::vector<GroupAlgebraElement>(size));
  AlgebraMatrix power(size, std::vector<GroupAlgebraElement>(size, GroupAlgebraElement(order, BigInt(0))));
  for (std::size_t i = 0; i < size; ++i) {
    power[i][i][0] = 1;
    for (std::size_t j = 0; j < size; ++j)
      base[i][j] = project(m(static_cast<int>(i), static_cast<int>(j)), q);
  }
  for (int step = 0; step < n; ++step) {
    AlgebraMatrix next(size, std::vector<GroupAlgebraElement>(size, GroupAlgebraElement(order, BigInt(0))));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t k = 0; k < size; ++k)
        for (std::size_t j = 0; j < size; ++j)
          for (std::size_t a = 0; a < order; ++a) {
            if (power[i][k][a] == 0) continue;
            for (std::size_t b = 0; b < order; ++b)
              if (base[k][j][b] != 0)
                next[i][j][static_cast<std::size_t>(product[a][b])] += power[i][k][a] * base[k][j][b];
          }
    power = std::move(next);
  }

  MomentComparison out;
  BigInt trace = 0;
  for (std::size_t i = 0; i < size; ++i) trace += power[i][i][0];
  out.symbolic = Rational(trace);
  out.numeric = spectral_measure(m, q).moment(n);
  const double symbolic = to_double(out.symbolic);
  out.within_tolerance = std::abs(symbolic - out.numeric) <= kMomentTolerance * (1.0 + std::abs(symbolic));
  return out;
}

LogBoundReport log_bound_report(const std::vector<SpectralMeasure>& measures, double constant,
                                const std::vector<double>& eps_grid) {
  for (double eps : eps_grid)
    if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("log_bound_report: eps must lie in (0,1)");
  LogBoundReport report;
  report.supplied_constant = constant;
  for (std::size_t k = 0; k < measures.size(); ++k)
    for (double eps : eps_grid) {
      LogBoundRow row;
      row.measure = k;
      row.eps = eps;
      row.at_zero = measures[k].mass_at_zero();
      row.below_eps = measures[k].mass_below(eps);
      const double log_scale = std::abs(std::log(eps));
      row.rhs = to_double(row.at_zero) + constant / log_scale;
      row.holds = to_double(row.below_eps - row.at_zero) <= constant / log_scale;
      report.minimal_constant =
          std::max(report.minimal_constant, to_double(row.below_eps - row.at_zero) * log_scale);
      report.holds = report.holds && row.holds;
      report.rows.push_back(std::move(row));
    }
  return report;
}

Z1Estimate z1_dimension_estimate(const Presentation& p, const std::vector<Word>& extension_words,
                                 const FiniteQuotient& q) {
  if (q.source().num_generators() != p.num_generators())
    throw InvalidArgument("z1_dimension_estimate: quotient over a different alphabet");
  const JacobianBundle bundle = extend_jacobian(p, extension_words);
  Z1Estimate out;
  out.cocycle_dimension = normalized_kernel_dimension(bundle.jacobian, q);
  if (!extension_words.empty())
    out.extended_kernel_dimension = normalized_kernel_dimension(bundle.extended, q);
  return out;
}

}  // namespace l2rank
