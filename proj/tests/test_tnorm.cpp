#include <doctest.h>

#include "latnorm/fixtures.hpp"
#include "latnorm/io.hpp"
#include "latnorm/search.hpp"
#include "latnorm/tnorm.hpp"
#include "oracles.hpp"

using namespace latnorm;

namespace {

Elem at(const Lattice& l, std::string_view s) { return *l.find(s); }

void agree_with_oracle(const Lattice& l, const BinaryOp& t) {
  const auto r = check_operator(l, t);
  const auto o = oracle::axioms(l, t);
  CHECK(r.is_tnorm() == o.tnorm());
  CHECK(r.is_tsubnorm() == o.tsubnorm());
  CHECK(r.associative.holds == o.associative);
  CHECK(r.commutative.holds == o.commutative);
  CHECK(r.bounded_by_meet.holds == o.bounded);
  CHECK(r.annihilating.holds == o.annihilating);
  // monotonicity in the second argument is enough under commutativity
  if (o.commutative) CHECK(r.monotone.holds == o.monotone);
  CHECK(r.left_continuous.holds == o.left_continuous);
}

}  // namespace

TEST_CASE("meet and drastic product") {
  for (const auto& name : fixtures::catalog()) {
    const auto l = fixtures::lattice(name);
    const auto m = check_operator(l, meet_op(l));
    CHECK(m.is_tnorm());
    CHECK(m.left_continuous.holds == is_distributive(l).holds);
    const auto d = check_operator(l, drastic_op(l));
    CHECK(d.is_tnorm());
    CHECK(idempotents(l, meet_op(l)).size() == l.size());
  }
  // On 2^2 the drastic product is not left-continuous: T(x, x v y) = x, T(x,x) v T(x,y) = 0.
  const auto b2 = fixtures::lattice("bool2");
  const auto r = check_operator(b2, drastic_op(b2));
  CHECK_FALSE(r.left_continuous.holds);
  CHECK(r.left_continuous.witness == std::vector<Elem>{at(b2, "x"), at(b2, "x"), at(b2, "y")});
}

TEST_CASE("axiom witnesses") {
  const auto l = fixtures::lattice("chain3");
  const Elem m = at(l, "m");
  {
    const auto r = check_operator(l, constant_op(l, m));
    CHECK_FALSE(r.neutral_top.holds);
    CHECK(r.neutral_top.witness == std::vector<Elem>{0});
    CHECK_FALSE(r.annihilating.holds);
    CHECK_FALSE(r.bounded_by_meet.holds);
    CHECK(r.bounded_by_meet.witness == std::vector<Elem>{0, 0});
    CHECK_FALSE(r.strong.holds);
  }
  {
    auto t = meet_op(l);
    t.set(m, l.top(), l.bottom());
    const auto r = check_operator(l, t);
    CHECK_FALSE(r.commutative.holds);
    CHECK(r.commutative.witness == std::vector<Elem>{m, l.top()});
  }
  {
    // row m reads m, 0, m
    auto t = meet_op(l);
    t.set(m, 0, m);
    t.set(m, m, 0);
    const auto r = check_operator(l, t);
    CHECK_FALSE(r.monotone.holds);
    CHECK(r.monotone.witness == std::vector<Elem>{m, 0, m});
  }
}

TEST_CASE("table 3 is a left-continuous t-subnorm, not strong") {
  const auto l = fixtures::lattice("fig2");
  const auto t = parse_op(l, fixtures::table_source(3));
  const auto r = check_operator(l, t);
  CHECK(r.is_left_continuous_tsubnorm());
  CHECK_FALSE(r.strong.holds);
  CHECK(idempotents(l, t) == std::vector<Elem>{l.bottom(), at(l, "b")});
}

TEST_CASE("table 5 on [b,g]") {
  const auto fig3 = fixtures::lattice("fig3");
  const auto sub = interval_sublattice(fig3, at(fig3, "b"), at(fig3, "g"));
  const auto t = parse_op(sub.lattice, fixtures::table_source(5));
  CHECK(t.size() == 5);
  const auto r = check_operator(sub.lattice, t);
  CHECK(r.is_left_continuous_tsubnorm());
  CHECK_FALSE(r.is_strong_tsubnorm());
}

TEST_CASE("checker agrees with the naive oracle on random operators") {
  std::mt19937_64 rng(99);
  for (const auto& l : oracle::generated_lattices(40, 17, 7)) {
    for (int i = 0; i < 25; ++i) agree_with_oracle(l, oracle::random_symmetric_op(l, rng));
    agree_with_oracle(l, meet_op(l));
    agree_with_oracle(l, drastic_op(l));
  }
}

TEST_CASE("every t-norm is bounded by the meet and annihilating") {
  std::size_t tnorms = 0;
  for (const auto& name : {"chain3", "chain4", "bool2", "m3", "n5", "fig2"}) {
    const auto l = fixtures::lattice(name);
    for (const auto& t : search_lc_tnorms(l).found) {
      const auto r = check_operator(l, t);
      CHECK(r.bounded_by_meet.holds);
      CHECK(r.annihilating.holds);
      ++tnorms;
    }
  }
  CHECK(tnorms > 10);
}

TEST_CASE("half-open closure and restrictions") {
  const auto fig3 = fixtures::lattice("fig3");
  const auto t9 = parse_op(fig3, fixtures::table_source(9));
  const Elem a = at(fig3, "a"), g = at(fig3, "g"), b = at(fig3, "b");
  CHECK(closed_on_halfopen(fig3, t9, g, fig3.top()).holds == false);  // T(e,f) = g leaves (g,1]
  CHECK(closed_on_halfopen(fig3, t9, a, g).holds);
  CHECK_THROWS_AS(closed_on_halfopen(fig3, t9, at(fig3, "e"), at(fig3, "f")), Error);

  const auto ag = interval_sublattice(fig3, a, g);
  const auto block = restrict_halfopen(ag, t9);
  CHECK(block(*ag.local(a), *ag.local(g)) == *ag.local(a));
  CHECK(block(*ag.local(g), *ag.local(g)) == *ag.local(b));

  const auto g1 = interval_sublattice(fig3, g, fig3.top());
  try {
    restrict_to(g1, t9);
    FAIL("T(g,g) = b lies outside [g,1]");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
    CHECK(e.witness() == std::vector<Elem>{g, g});
  }
  const auto low = interval_sublattice(fig3, fig3.bottom(), a);
  CHECK(restrict_to(low, t9) == meet_op(low.lattice));
}
