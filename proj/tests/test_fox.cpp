#include "l2rank/fixtures.hpp"
#include "l2rank/fox.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace l2rank;

namespace {

GroupRingElement el(const Presentation& p, const char* word, long long c = 1) {
  return GroupRingElement(parse_word(p, word), c);
}

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

// Sum_j (dw/dx_j)(x_j - 1).
GroupRingElement fundamental_sum(const Word& w) {
  GroupRingElement total(w.rank());
  for (int j = 0; j < w.rank(); ++j)
    total += fox_derivative(w, j) * (GroupRingElement(Word::generator(w.rank(), j)) -
                                     GroupRingElement::scalar(w.rank(), 1));
  return total;
}

}  // namespace

TEST_SUITE("foxcalc") {

TEST_CASE("derivatives of short words") {
  const Presentation xy({"x", "y"}, {});
  CHECK(fox_derivative(parse_word(xy, "x*y"), 0) == GroupRingElement::scalar(2, 1));
  CHECK(fox_derivative(parse_word(xy, "x^-1"), 0) == -el(xy, "x^-1"));
  CHECK(fox_derivative(parse_word(xy, "y"), 0).is_zero());
  CHECK(fox_derivative(Word(2), 1).is_zero());
}

TEST_CASE("derivative entry of the perfect fixture") {
  const Presentation kt = load_fixture("kt").presentation;
  CHECK(augmentation(fox_derivative(kt.relators()[0], 0)) == -1);
}

TEST_CASE("jacobian of the modular group") {
  const Presentation p = load_fixture("pslz").presentation;
  const GroupRingMatrix j = fox_jacobian(p);
  REQUIRE(j.rows() == 2);
  REQUIRE(j.cols() == 2);
  const GroupRingElement one = GroupRingElement::scalar(2, 1);
  CHECK(j(0, 0) == one + el(p, "a"));
  CHECK(j(0, 1).is_zero());
  CHECK(j(1, 0).is_zero());
  CHECK(j(1, 1) == one + el(p, "b") + el(p, "b^2"));
  CHECK(oracle::same(augment_matrix(j), ints({{2, 0}, {0, 3}})));
}

TEST_CASE("jacobian of a free presentation is empty") {
  const GroupRingMatrix j = fox_jacobian(Presentation::free(1));
  CHECK(j.rows() == 0);
  CHECK(j.cols() == 1);
}

TEST_CASE("augmented jacobian of the perfect fixture") {
  const Presentation kt = load_fixture("kt").presentation;
  CHECK(oracle::same(augment_matrix(fox_jacobian(kt)), ints({{-1, 2}, {2, -5}})));
  CHECK(oracle::same(augmented_jacobian(kt).to_dense(), ints({{-1, 2}, {2, -5}})));
}

TEST_CASE("augmenting a zero matrix") {
  CHECK(oracle::same(augment_matrix(GroupRingMatrix(2, 3, 1)), IntegerMatrix::Zero(2, 3)));
}

TEST_CASE("jacobian rows are fox derivatives") {
  const Presentation p = load_fixture("hn_3").presentation;
  const GroupRingMatrix j = fox_jacobian(p);
  for (int r = 0; r < p.num_relators(); ++r)
    for (int c = 0; c < p.num_generators(); ++c)
      CHECK(j(r, c) == fox_derivative(p.relators()[static_cast<std::size_t>(r)], c));
}

TEST_CASE("extending the jacobian") {
  const Presentation p = load_fixture("pslz").presentation;
  const JacobianBundle plain = extend_jacobian(p, {});
  CHECK(plain.extended == plain.jacobian);

  const JacobianBundle bundle = extend_jacobian(p, {parse_word(p, "a*b")});
  REQUIRE(bundle.extended.rows() == 3);
  for (int c = 0; c < 2; ++c)
    for (int r = 0; r < 2; ++r) CHECK(bundle.extended(r, c) == bundle.jacobian(r, c));
  CHECK(bundle.extended(2, 0) == GroupRingElement::scalar(2, 1));
  CHECK(bundle.extended(2, 1) == el(p, "a"));

  const Presentation f3 = Presentation::free(3);
  const JacobianBundle basis = extend_jacobian(f3, {f3.generator(1)});
  REQUIRE(basis.extended.rows() == 1);
  CHECK(basis.extended(0, 0).is_zero());
  CHECK(basis.extended(0, 1) == GroupRingElement::scalar(3, 1));
  CHECK(basis.extended(0, 2).is_zero());
}

TEST_CASE("fundamental formula on random words") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int rank = 1 + trial % 4;
    const Word w = oracle::random_word(rng, rank, 12);
    CHECK(fundamental_sum(w) == GroupRingElement(w) - GroupRingElement::scalar(rank, 1));
  }
}

TEST_CASE("product rule") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = oracle::random_word(rng, 2, 8), v = oracle::random_word(rng, 2, 8);
    for (int j = 0; j < 2; ++j)
      CHECK(fox_derivative(u * v, j) == fox_derivative(u, j) + fox_derivative(v, j).left_translate(u));
  }
}

}
