#include "l2rank/errors.hpp"
#include "l2rank/marked.hpp"

#include <doctest.h>

using namespace l2rank;

namespace {

MarkedGroup group(std::initializer_list<const char*> relators) {
  const Presentation names({"a", "b"}, {});
  MarkedGroup g;
  g.n = 2;
  for (const char* r : relators) g.relators.push_back(parse_word(names, r));
  return g;
}

Word w(const char* text) { return parse_word(Presentation({"a", "b"}, {}), text); }

}  // namespace

TEST_SUITE("marked") {

TEST_CASE("membership decisions") {
  const MembershipOracle oracle(group({"a^2", "b^3"}));
  CHECK(oracle.decide(Word(2)) == Membership::member);
  CHECK(oracle.decide(w("a^2")) == Membership::member);
  CHECK(oracle.decide(w("b*a^2*b^-1")) == Membership::member);
  CHECK(oracle.decide(w("b^-3")) == Membership::member);
  CHECK(oracle.decide(w("a")) == Membership::non_member);
  CHECK(oracle.decide(w("a*b")) == Membership::non_member);
  CHECK(oracle.decide(w("b^4")) == Membership::non_member);
}

TEST_CASE("abelian obstruction separates infinite-order words") {
  const MembershipOracle oracle(group({"a"}));
  CHECK(oracle.decide(w("b")) == Membership::non_member);
  CHECK(oracle.decide(w("b*a*b^-1")) == Membership::member);
}

TEST_CASE("distance between normal closures of torsion relators") {
  for (int radius = 3; radius <= 6; ++radius) {
    const DistanceReport r = marked_distance(group({"a^2", "b^3"}), group({"a^2", "b^4"}), radius);
    CHECK(r.kind == DistanceKind::exact);
    CHECK(r.lower == make_rational(1, 4));
    CHECK(r.upper == make_rational(1, 4));
    CHECK(r.agreement_radius == 2);
    REQUIRE(r.disagreement_radius);
    CHECK(*r.disagreement_radius == 3);
    CHECK(*r.disagreement_word == w("b^3"));
  }
}

TEST_CASE("distance when the balls already differ at radius one") {
  // Radius 0 agrees, radius 1 separates a: the largest agreeing radius is 0.
  const DistanceReport r = marked_distance(group({"a"}), group({"b"}), 3);
  CHECK(r.kind == DistanceKind::exact);
  CHECK(r.agreement_radius == 0);
  CHECK(*r.disagreement_radius == 1);
  CHECK(r.upper == 1);
}

TEST_CASE("identical relator sets") {
  const DistanceReport r = marked_distance(group({"a^2", "b^3"}), group({"b^-3", "a^2"}), 4);
  CHECK(r.kind == DistanceKind::agreement);
  CHECK(r.identical_relators);
  CHECK(r.lower == 0);
  CHECK(r.upper == make_rational(1, 16));
}

TEST_CASE("invalid inputs") {
  MarkedGroup bad;
  bad.n = 0;
  CHECK_THROWS_AS(MembershipOracle{bad}, InvalidArgument);
  MarkedGroup one;
  one.n = 1;
  CHECK_THROWS_AS(marked_distance(one, group({}), 2), InvalidArgument);
  CHECK_THROWS_AS(marked_distance(group({}), group({}), -1), InvalidArgument);
}

}
