#include "l2rank/errors.hpp"
#include "l2rank/fixtures.hpp"
#include "l2rank/fox.hpp"
#include "l2rank/spectral.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace l2rank;

namespace {

const Presentation z = Presentation::free(1);

FiniteQuotient cyclic(int n) { return FiniteQuotient::from_permutations(z, {oracle::rotation(n)}); }

GroupRingMatrix one_by_one(const GroupRingElement& e) {
  GroupRingMatrix m(1, 1, e.rank());
  m(0, 0) = e;
  return m;
}

GroupRingElement x_power(int k) { return GroupRingElement(z.generator(0).power(k)); }
const GroupRingElement one = GroupRingElement::scalar(1, 1);

IntegerMatrix ints(std::initializer_list<std::initializer_list<long long>> rows) {
  IntegerMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("regular induction") {
  CHECK(oracle::same(induce_regular_matrix(one_by_one(one + x_power(1)), cyclic(2)), ints({{1, 1}, {1, 1}})));
  CHECK(oracle::same(induce_regular_matrix(GroupRingMatrix(2, 3, 1), cyclic(4)), IntegerMatrix::Zero(8, 12)));

  const Presentation p = load_fixture("pslz").presentation;
  for (const FiniteQuotient& q : search_finite_quotients(p, 4, 10)) {
    const IntegerMatrix perm = induce_regular_matrix(one_by_one(GroupRingElement(parse_word(p, "a*b^-1"))), q);
    // A permutation matrix: exactly one unit entry in every row and column.
    std::vector<int> row_hits(static_cast<std::size_t>(q.order())), col_hits(static_cast<std::size_t>(q.order()));
    for (Eigen::Index i = 0; i < perm.rows(); ++i)
      for (Eigen::Index j = 0; j < perm.cols(); ++j) {
        CHECK((perm(i, j) == 0 || perm(i, j) == 1));
        if (perm(i, j) == 1) {
          ++row_hits[static_cast<std::size_t>(i)];
          ++col_hits[static_cast<std::size_t>(j)];
        }
      }
    for (int k = 0; k < q.order(); ++k) {
      CHECK(row_hits[static_cast<std::size_t>(k)] == 1);
      CHECK(col_hits[static_cast<std::size_t>(k)] == 1);
    }
  }
}

TEST_CASE("normalized kernel dimensions") {
  CHECK(normalized_kernel_dimension(one_by_one(one + x_power(1)), cyclic(2)) == make_rational(1, 2));
  for (int n = 1; n <= 8; ++n)
    CHECK(normalized_kernel_dimension(one_by_one(one - x_power(1)), cyclic(n)) == make_rational(1, n));
  CHECK(normalized_kernel_dimension(one_by_one(x_power(3)), cyclic(5)) == 0);
}

TEST_CASE("spectral measure of 1 + x over the group of order two") {
  const SpectralMeasure m = spectral_measure(one_by_one(one + x_power(1)), cyclic(2));
  CHECK_FALSE(m.squared);
  REQUIRE(m.atoms.size() == 2);
  CHECK(m.atoms[0].eigenvalue == 0.0);
  CHECK(m.atoms[0].mass == make_rational(1, 2));
  CHECK(m.atoms[1].eigenvalue == doctest::Approx(2.0));
  CHECK(m.atoms[1].mass == make_rational(1, 2));
}

TEST_CASE("zero and identity matrices") {
  const SpectralMeasure zero = spectral_measure(GroupRingMatrix(1, 1, 1), cyclic(3));
  REQUIRE(zero.atoms.size() == 1);
  CHECK(zero.atoms[0].eigenvalue == 0.0);
  CHECK(zero.atoms[0].mass == 1);

  const SpectralMeasure id = spectral_measure(GroupRingMatrix::identity(3, 1), cyclic(4));
  REQUIRE(id.atoms.size() == 1);
  CHECK(id.atoms[0].eigenvalue == doctest::Approx(1.0));
  CHECK(id.atoms[0].mass == 3);
}

TEST_CASE("squared measure of 1 + x matches the circulant spectrum") {
  for (int n = 3; n <= 12; ++n) {
    const SpectralMeasure m = spectral_measure(one_by_one(one + x_power(1)), cyclic(n));
    CHECK(m.squared);
    std::vector<double> expected = oracle::cyclic_one_plus_x_spectrum(n);
    std::sort(expected.begin(), expected.end());
    std::vector<double> got;
    for (const SpectralAtom& a : m.atoms) {
      const BigInt count = boost::multiprecision::numerator(a.mass * n);
      for (BigInt k = 0; k < count; ++k) got.push_back(a.eigenvalue);
    }
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-9));
  }
}

TEST_CASE("measure invariants on jacobians") {
  for (const char* name : {"pslz", "hn_3", "kt"}) {
    const Presentation p = load_fixture(name).presentation;
    const GroupRingMatrix jacobian = fox_jacobian(p);
    for (const FiniteQuotient& q : search_finite_quotients(p, 5, 6)) {
      const SpectralMeasure m = spectral_measure(jacobian, q);
      Rational total = 0;
      for (const SpectralAtom& a : m.atoms) {
        total += a.mass;
        if (m.squared) CHECK(a.eigenvalue >= -1e-9);
      }
      for (const SpectralAtom& a : spectral_measure(jacobian.adjoint() * jacobian, q).atoms)
        CHECK(a.eigenvalue >= -1e-9);
      CHECK(total == m.total_mass);
      CHECK(m.zero_atom_consistent);
      CHECK(m.mass_at_zero() == normalized_kernel_dimension(m.squared ? jacobian.adjoint() * jacobian : jacobian, q));
    }
  }
}

TEST_CASE("moments") {
  const GroupRingMatrix m = one_by_one(one + x_power(1));
  const MomentComparison second = moment_check(m, cyclic(2), 2);
  CHECK(second.symbolic == 2);
  CHECK(second.numeric == doctest::Approx(2.0));
  CHECK(second.within_tolerance);
  CHECK(moment_check(m, cyclic(2), 1).symbolic == 1);
  CHECK(moment_check(GroupRingMatrix::identity(3, 1), cyclic(5), 0).symbolic == 3);
  CHECK_THROWS_AS(moment_check(m, cyclic(3), 1), InvalidArgument);
}

TEST_CASE("log bound examples") {
  SpectralMeasure delta;
  delta.atoms = {{0.0, Rational(1)}};
  delta.total_mass = 1;
  for (double c : {0.0, 0.5, 3.0}) CHECK(log_bound_report({delta}, c, {0.5, 0.1}).holds);

  SpectralMeasure split;
  split.atoms = {{0.0, make_rational(1, 2)}, {2.0, make_rational(1, 2)}};
  split.total_mass = 1;
  const LogBoundReport r = log_bound_report({split}, 0.0, {0.1});
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].below_eps == make_rational(1, 2));
  CHECK(r.rows[0].rhs == doctest::Approx(0.5));
  CHECK(r.holds);
  CHECK(r.minimal_constant == 0.0);

  CHECK_THROWS_AS(log_bound_report({split}, 1.0, {1.5}), InvalidArgument);
}

TEST_CASE("log bound constant for the cyclic family") {
  const std::vector<double> grid{0.5, 0.1, 0.01};
  std::vector<SpectralMeasure> family;
  for (int n = 1; n <= 30; ++n) family.push_back(spectral_measure(one_by_one(one + x_power(1)), cyclic(n)));
  const double expected = oracle::cyclic_log_constant(30, grid);
  const LogBoundReport r = log_bound_report(family, expected, grid);
  CHECK(r.minimal_constant == doctest::Approx(expected).epsilon(1e-12));
  CHECK(r.minimal_constant == doctest::Approx(2.0 * std::log(10.0) / 11.0).epsilon(1e-12));
  CHECK(r.holds);
  CHECK_FALSE(log_bound_report(family, expected * 0.99, grid).holds);
}

TEST_CASE("cocycle dimension estimates") {
  const Presentation f2 = Presentation::free(2);
  for (const FiniteQuotient& q : search_finite_quotients(f2, 3, 6)) {
    const Z1Estimate plain = z1_dimension_estimate(f2, {}, q);
    CHECK(plain.cocycle_dimension == 2);
    const Z1Estimate extended = z1_dimension_estimate(f2, {f2.generator(0), f2.generator(1)}, q);
    REQUIRE(extended.extended_kernel_dimension);
    CHECK(*extended.extended_kernel_dimension == 0);
  }

  const Presentation p = load_fixture("pslz").presentation;
  const FiniteQuotient s3 = FiniteQuotient::from_permutations(p, {oracle::cycle(3, {0, 1}), oracle::cycle(3, {0, 1, 2})});
  CHECK(z1_dimension_estimate(p, {}, s3).cocycle_dimension == make_rational(7, 6));

  for (int n = 1; n <= 5; ++n)
    CHECK(z1_dimension_estimate(Presentation::free(1), {}, cyclic(n)).cocycle_dimension == 1);
}

}
