#include "l2rank/errors.hpp"
#include "l2rank/fixtures.hpp"
#include "l2rank/quotients.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace l2rank;

namespace {

FiniteQuotient cyclic(const Presentation& p, int n) {
  return FiniteQuotient::from_permutations(p, std::vector<Permutation>(static_cast<std::size_t>(p.num_generators()),
                                                                       oracle::rotation(n)));
}

void check_regular(const FiniteQuotient& q) {
  const int order = q.order();
  for (const Word& r : q.source().relators()) CHECK(q.evaluate(r) == 0);
  std::vector<oracle::Perm> gens;
  for (const Permutation& p : q.regular_action()) gens.push_back(p);
  CHECK(oracle::group_order(gens) == static_cast<std::size_t>(order));
  // Only the identity fixes a point.
  for (int e = 1; e < order; ++e)
    for (int x = 0; x < order; ++x) CHECK(q.act(x, q.element_word(e)) != x);
}

}  // namespace

TEST_SUITE("quotients") {

TEST_CASE("search finds the symmetric quotient of the modular group") {
  const Presentation p = load_fixture("pslz").presentation;
  const auto found = search_finite_quotients(p, 3, 50);
  CHECK(std::any_of(found.begin(), found.end(), [](const FiniteQuotient& q) { return q.order() == 6; }));
  for (const FiniteQuotient& q : found) check_regular(q);
}

TEST_CASE("cyclic quotients of the integers") {
  const auto found = search_finite_quotients(Presentation::free(1), 5, 50);
  std::vector<int> orders;
  for (const FiniteQuotient& q : found) orders.push_back(q.order());
  CHECK(orders == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("perfect group has no small solvable image") {
  const Presentation kt = load_fixture("kt").presentation;
  for (const FiniteQuotient& q : search_finite_quotients(kt, 4, 50)) CHECK(q.order() == 1);
  // Degree 5 admits A5; any image found there must itself be perfect, so never of
  // order 2..59.
  for (const FiniteQuotient& q : search_finite_quotients(kt, 5, 50)) {
    CHECK((q.order() == 1 || q.order() >= 60));
    check_regular(q);
  }
}

TEST_CASE("search output is regular, sorted and duplicate free") {
  const Presentation p = load_fixture("hn_3").presentation;
  const auto found = search_finite_quotients(p, 5, 30);
  for (std::size_t i = 0; i < found.size(); ++i) {
    check_regular(found[i]);
    if (i) CHECK(found[i - 1].order() <= found[i].order());
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(found[i] == found[j]);
  }
}

TEST_CASE("relator violations are rejected") {
  const Presentation p = load_fixture("pslz").presentation;
  CHECK_THROWS_AS(FiniteQuotient::from_permutations(p, {oracle::rotation(3), oracle::rotation(3)}), InvalidArgument);
  CHECK_THROWS_AS(FiniteQuotient::from_permutations(p, {oracle::rotation(2)}), InvalidArgument);
}

TEST_CASE("order cap") {
  const Presentation f2 = Presentation::free(2);
  CHECK_THROWS_AS(FiniteQuotient::from_permutations(f2, {oracle::rotation(5), oracle::cycle(5, {0, 1})}, 50),
                  BudgetExceeded);
}

TEST_CASE("element orders") {
  const Presentation p = load_fixture("pslz").presentation;
  const FiniteQuotient s3 = FiniteQuotient::from_permutations(p, {oracle::cycle(3, {0, 1}), oracle::cycle(3, {0, 1, 2})});
  CHECK(s3.element_order(0) == 1);
  CHECK(s3.element_order(s3.evaluate(p.generator(0))) == 2);
  CHECK(s3.element_order(s3.evaluate(p.generator(1))) == 3);
  CHECK(s3.element_order(s3.evaluate(parse_word(p, "a*b"))) == 2);
  for (int e = 0; e < s3.order(); ++e) CHECK(s3.multiply(e, s3.inverse(e)) == 0);
}

TEST_CASE("intersections") {
  const Presentation z = Presentation::free(1);
  const FiniteQuotient two = cyclic(z, 2), three = cyclic(z, 3), one = cyclic(z, 1);
  CHECK(intersect_quotients(two, three).order() == 6);
  CHECK(intersect_quotients(two, two) == two);
  CHECK(intersect_quotients(one, three) == three);

  const Presentation p = load_fixture("pslz").presentation;
  for (const FiniteQuotient& q : search_finite_quotients(p, 4, 10)) CHECK(intersect_quotients(q, q) == q);
}

TEST_CASE("factoring through") {
  const Presentation z = Presentation::free(1);
  const FiniteQuotient six = cyclic(z, 6);
  CHECK(factors_through(six, cyclic(z, 2)));
  CHECK(factors_through(six, cyclic(z, 3)));
  CHECK_FALSE(factors_through(cyclic(z, 4), cyclic(z, 3)));
}

TEST_CASE("chains from cyclic quotients") {
  const Presentation z = Presentation::free(1);
  const QuotientChain chain = build_chain(z, {cyclic(z, 2), cyclic(z, 3), cyclic(z, 5)}, 3);
  CHECK(chain.indices == std::vector<int>{2, 6, 30});
  CHECK(chain.nested_certified);

  const QuotientChain single = build_chain(z, {cyclic(z, 4)}, 3);
  CHECK(single.indices == std::vector<int>{4});
}

TEST_CASE("chain in the modular group is strictly increasing and nested") {
  const Presentation p = load_fixture("pslz").presentation;
  const QuotientChain chain = build_chain(p, search_finite_quotients(p, 6, 64), 4);
  REQUIRE(chain.indices.size() >= 2);
  for (std::size_t i = 1; i < chain.indices.size(); ++i) {
    CHECK(chain.indices[i] > chain.indices[i - 1]);
    CHECK(factors_through(chain.quotients[i], chain.quotients[i - 1]));
  }
  CHECK(chain.nested_certified);
}

TEST_CASE("betti ratios of free groups") {
  const Presentation f2 = Presentation::free(2);
  const QuotientChain chain = build_chain(f2, search_finite_quotients(f2, 4, 40), 4);
  const BettiEstimate estimate = luck_estimate(f2, chain);
  REQUIRE(!estimate.samples.empty());
  for (const BettiSample& s : estimate.samples)
    CHECK(s.ratio == make_rational(oracle::schreier_rank(2, s.index), s.index));
  CHECK_FALSE(estimate.intersection_trivial_certified);
}

TEST_CASE("betti ratios of the modular group") {
  const Presentation p = load_fixture("pslz").presentation;
  const FiniteQuotient s3 = FiniteQuotient::from_permutations(p, {oracle::cycle(3, {0, 1}), oracle::cycle(3, {0, 1, 2})});
  const FiniteQuotient a5 = FiniteQuotient::from_permutations(
      p, {oracle::compose(oracle::cycle(5, {0, 1}), oracle::cycle(5, {2, 3})), oracle::cycle(5, {0, 2, 4})});
  const BettiEstimate s3_estimate = luck_estimate(p, build_chain(p, {s3}, 1));
  CHECK(s3_estimate.samples.front().ratio == make_rational(1, 3));
  const BettiEstimate a5_estimate = luck_estimate(p, build_chain(p, {a5}, 1));
  CHECK(a5_estimate.samples.front().ratio == make_rational(11, 60));
  for (const BettiSample& s : a5_estimate.samples) CHECK(s.ratio == make_rational(1, 6) + make_rational(1, s.index));
}

TEST_CASE("finite group ratio vanishes") {
  const Presentation p = parse_presentation("< x | x^2 >").presentation;
  const BettiEstimate estimate = luck_estimate(p, build_chain(p, {cyclic(p, 2)}, 1));
  CHECK(estimate.samples.front().ratio == 0);
}

TEST_CASE("parallel estimates match sequential ones") {
  const Presentation p = load_fixture("pslz").presentation;
  const QuotientChain chain = build_chain(p, search_finite_quotients(p, 5, 64), 3);
  const BettiEstimate one = luck_estimate(p, chain, 1), many = luck_estimate(p, chain, 3);
  REQUIRE(one.samples.size() == many.samples.size());
  for (std::size_t i = 0; i < one.samples.size(); ++i) CHECK(one.samples[i].ratio == many.samples[i].ratio);
  CHECK(one.limsup_lower_bound == many.limsup_lower_bound);
}

}
