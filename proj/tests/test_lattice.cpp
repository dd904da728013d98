#include <doctest.h>

#include <algorithm>

#include "latnorm/fixtures.hpp"
#include "latnorm/lattice.hpp"
#include "oracles.hpp"

using namespace latnorm;

namespace {

Lattice build(std::vector<std::string> names, std::vector<std::pair<std::string, std::string>> covers) {
  std::vector<CoverPair> pairs;
  auto idx = [&](const std::string& s) {
    return static_cast<Elem>(std::find(names.begin(), names.end(), s) - names.begin());
  };
  for (auto& [a, b] : covers) pairs.emplace_back(idx(a), idx(b));
  return Lattice::from_covers(std::move(names), pairs);
}

Elem at(const Lattice& l, std::string_view s) { return *l.find(s); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ValidationError;
}

}  // namespace

TEST_CASE("fig2 joins and meets") {
  const auto l = fixtures::lattice("fig2");
  CHECK(l.size() == 6);
  CHECK(l.join(at(l, "c"), at(l, "d")) == l.top());
  CHECK(l.meet(at(l, "c"), at(l, "d")) == at(l, "b"));
  CHECK(l.bottom() == at(l, "0"));
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { build({"0", "x", "y"}, {{"0", "x"}, {"0", "y"}}); }) == ErrorCode::NoBounds);
  CHECK(code_of([] { build({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorCode::NotAPoset);
  CHECK(code_of([] { build({"a", "a"}, {}); }) == ErrorCode::DuplicateEntry);

  // Two incomparable midpoints u, v with two incomparable common upper
  // bounds p, q: u v v does not exist.
  const std::vector<std::string> names{"0", "u", "v", "p", "q", "1"};
  try {
    build(names, {{"0", "u"}, {"0", "v"}, {"u", "p"}, {"u", "q"}, {"v", "p"}, {"v", "q"}, {"p", "1"}, {"q", "1"}});
    FAIL("expected NotALattice");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotALattice);
    REQUIRE(e.witness().size() == 2);
    // Independent check: the witness pair really lacks a least upper bound or
    // greatest lower bound, by scanning the closure by hand.
    const auto u = e.witness()[0], v = e.witness()[1];
    CHECK(((u == 1 && v == 2) || (u == 3 && v == 4)));
  }
}

TEST_CASE("bound_of") {
  const auto fig1 = fixtures::lattice("fig1");
  const std::vector<Elem> ce{at(fig1, "c"), at(fig1, "e")};
  CHECK(bound_of(fig1, ce, Bound::Join) == fig1.top());
  const std::vector<Elem> single{at(fig1, "d")};
  CHECK(bound_of(fig1, single, Bound::Join) == at(fig1, "d"));
  CHECK(code_of([&] { bound_of(fig1, std::vector<Elem>{}, Bound::Meet); }) == ErrorCode::EmptySet);

  const auto fig3 = fixtures::lattice("fig3");
  const std::vector<Elem> ef{at(fig3, "e"), at(fig3, "f")};
  CHECK(bound_of(fig3, ef, Bound::Meet) == at(fig3, "g"));
}

TEST_CASE("bound_of does not depend on enumeration order") {
  for (const auto& l : oracle::generated_lattices(30, 7)) {
    oracle::for_small_subsets(l.size(), 3, [&](const std::vector<Elem>& s) {
      auto perm = s;
      const auto j = bound_of(l, perm, Bound::Join);
      const auto m = bound_of(l, perm, Bound::Meet);
      while (std::next_permutation(perm.begin(), perm.end())) {
        CHECK(bound_of(l, perm, Bound::Join) == j);
        CHECK(bound_of(l, perm, Bound::Meet) == m);
      }
      CHECK(j == oracle::join_all(l, s));
    });
  }
}

TEST_CASE("distributivity") {
  const auto m3 = fixtures::lattice("m3");
  const auto d = is_distributive(m3);
  CHECK_FALSE(d.holds);
  CHECK(d.witness == std::vector<Elem>{at(m3, "x"), at(m3, "y"), at(m3, "z")});
  CHECK(is_distributive(fixtures::lattice("chain3")).holds);
  CHECK(is_distributive(fixtures::lattice("fig2")).holds);
  CHECK_FALSE(is_distributive(fixtures::lattice("n5")).holds);
  CHECK(is_distributive(fixtures::lattice("bool3")).holds);
}

TEST_CASE("completely join-irreducible elements") {
  const auto fig2 = fixtures::lattice("fig2");
  CHECK(completely_join_irreducibles(fig2) ==
        std::vector<Elem>{at(fig2, "a"), at(fig2, "b"), at(fig2, "c"), at(fig2, "d")});
  const auto chain3 = fixtures::lattice("chain3");
  CHECK(completely_join_irreducibles(chain3) == std::vector<Elem>{at(chain3, "m"), chain3.top()});
  const auto fig1 = fixtures::lattice("fig1");
  CHECK_FALSE(is_completely_join_irreducible(fig1, fig1.top()));
  CHECK_FALSE(is_completely_join_irreducible(fig1, fig1.bottom()));
}

TEST_CASE("interval sublattices") {
  const auto fig3 = fixtures::lattice("fig3");
  const auto bg = interval_sublattice(fig3, at(fig3, "b"), at(fig3, "g"));
  CHECK(bg.lattice.size() == 5);
  CHECK(bg.lattice.names() == std::vector<std::string>{"b", "c", "d", "h", "g"});
  CHECK(bg.host(bg.lattice.bottom()) == at(fig3, "b"));
  CHECK(bg.host(bg.lattice.top()) == at(fig3, "g"));

  const auto full = interval_sublattice(fig3, fig3.bottom(), fig3.top());
  CHECK(full.lattice == fig3);

  const auto fig1 = fixtures::lattice("fig1");
  const auto b1 = interval_sublattice(fig1, at(fig1, "b"), fig1.top());
  CHECK(b1.lattice.names() == std::vector<std::string>{"b", "c", "d", "1"});
  CHECK(b1.lattice.covers().size() == 4);
  CHECK(code_of([&] { interval_sublattice(fig1, at(fig1, "c"), at(fig1, "e")); }) == ErrorCode::NotComparable);
}

TEST_CASE("interval sublattices agree with the host") {
  for (const auto& l : oracle::generated_lattices(25, 11)) {
    for (Elem a = 0; a < l.size(); ++a)
      for (Elem b = 0; b < l.size(); ++b) {
        if (!l.leq(a, b)) continue;
        const auto s = interval_sublattice(l, a, b);
        for (Elem x = 0; x < s.lattice.size(); ++x)
          for (Elem y = 0; y < s.lattice.size(); ++y) {
            CHECK(s.host(s.lattice.join(x, y)) == l.join(s.host(x), s.host(y)));
            CHECK(s.host(s.lattice.meet(x, y)) == l.meet(s.host(x), s.host(y)));
          }
      }
  }
}

TEST_CASE("chains and linear sums") {
  const auto fig1 = fixtures::lattice("fig1");
  const auto chain = make_chain(fig1, {fig1.bottom(), at(fig1, "a"), at(fig1, "b"), fig1.top()});
  const auto r = check_linear_sum(fig1, chain);
  CHECK_FALSE(r.holds);
  CHECK(r.witness == std::vector<Elem>{at(fig1, "e"), at(fig1, "a")});

  const auto fig2 = fixtures::lattice("fig2");
  CHECK(check_linear_sum(fig2, make_chain(fig2, {fig2.bottom(), at(fig2, "b"), fig2.top()})).holds);
  const auto c4 = fixtures::lattice("chain4");
  CHECK(check_linear_sum(c4, make_chain(c4, {0, 1, 2, 3})).holds);

  CHECK(code_of([&] { make_chain(fig2, {at(fig2, "a"), fig2.top()}); }) == ErrorCode::InvalidChain);
  CHECK(code_of([&] { make_chain(fig2, {fig2.bottom(), at(fig2, "c"), at(fig2, "d"), fig2.top()}); }) ==
        ErrorCode::InvalidChain);
}

TEST_CASE("semi-linear sums") {
  const auto fig3 = fixtures::lattice("fig3");
  CHECK(check_semi_linear_sum(fig3, IntervalFamily{{{at(fig3, "b"), at(fig3, "g")}}}).holds());
  const IntervalFamily two{{{fig3.bottom(), at(fig3, "a")}, {at(fig3, "g"), fig3.top()}}};
  CHECK(check_semi_linear_sum(fig3, two).holds());
  CHECK(two.has_upper_gap(fig3) == false);
  CHECK(two.has_lower_gap(fig3) == false);

  const auto fig1 = fixtures::lattice("fig1");
  const auto r = check_semi_linear_sum(
      fig1, IntervalFamily{{{fig1.bottom(), at(fig1, "a")}, {at(fig1, "a"), at(fig1, "b")}, {at(fig1, "b"), fig1.top()}}});
  CHECK(r.nonempty.holds);
  CHECK(r.ordered.holds);
  CHECK(r.disjoint.holds);
  CHECK_FALSE(r.comparable.holds);
  CHECK(r.comparable.witness.front() == at(fig1, "e"));

  const auto empty = check_semi_linear_sum(fig3, IntervalFamily{{{at(fig3, "b"), at(fig3, "b")}}});
  CHECK_FALSE(empty.nonempty.holds);
}

TEST_CASE("lattice invariants on bundled and generated lattices") {
  std::vector<Lattice> all;
  for (const auto& name : fixtures::catalog()) all.push_back(fixtures::lattice(name));
  for (auto& l : oracle::generated_lattices(60, 3)) all.push_back(std::move(l));

  for (const auto& l : all) {
    const std::size_t n = l.size();
    for (Elem x = 0; x < n; ++x) {
      CHECK(l.leq(l.bottom(), x));
      CHECK(l.leq(x, l.top()));
      CHECK(l.join(x, x) == x);
      for (Elem y = 0; y < n; ++y) {
        REQUIRE(l.join(x, y) == oracle::order_lub(l, x, y));
        REQUIRE(l.meet(x, y) == oracle::order_glb(l, x, y));
        CHECK(l.join(x, y) == l.join(y, x));
        CHECK(l.meet(x, l.join(x, y)) == x);
        CHECK(l.join(x, l.meet(x, y)) == x);
        for (Elem z = 0; z < n; ++z) {
          CHECK(l.join(l.join(x, y), z) == l.join(x, l.join(y, z)));
          CHECK(l.meet(l.meet(x, y), z) == l.meet(x, l.meet(y, z)));
        }
      }
    }
    // covers are exactly the strict pairs with nothing strictly between
    std::vector<CoverPair> reduction;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (!l.lt(x, y)) continue;
        bool between = false;
        for (Elem z = 0; z < n; ++z) between = between || (l.lt(x, z) && l.lt(z, y));
        if (!between) reduction.emplace_back(x, y);
      }
    CHECK(reduction == l.covers());
    // linear extension respects the order
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (l.lt(x, y)) CHECK(l.rank(x) < l.rank(y));
    // completely join-irreducible iff exactly one lower cover
    for (Elem x = 0; x < n; ++x) CHECK(is_completely_join_irreducible(l, x) == (l.lower_covers(x).size() == 1));
    // binary distributivity agrees with the n-ary identity on subsets of size <= 3
    bool nary = true;
    for (Elem a = 0; a < n; ++a)
      oracle::for_small_subsets(n, 3, [&](const std::vector<Elem>& s) {
        std::vector<Elem> meets;
        for (Elem x : s) meets.push_back(l.meet(a, x));
        if (l.meet(a, oracle::join_all(l, s)) != oracle::join_all(l, meets)) nary = false;
      });
    CHECK(is_distributive(l).holds == nary);
    // sublattices rebuild cleanly
    const auto whole = interval_sublattice(l, l.bottom(), l.top());
    CHECK(whole.lattice == l);
  }
}

TEST_CASE("order-matrix construction matches covers") {
  const auto fig3 = fixtures::lattice("fig3");
  std::vector<bool> leq(fig3.size() * fig3.size());
  for (Elem x = 0; x < fig3.size(); ++x)
    for (Elem y = 0; y < fig3.size(); ++y) leq[x * fig3.size() + y] = fig3.leq(x, y);
  CHECK(Lattice::from_order(fig3.names(), leq) == fig3);
  leq[1 * fig3.size() + 0] = true;  // a <= 0 breaks antisymmetry
  CHECK(code_of([&] { Lattice::from_order(fig3.names(), leq); }) == ErrorCode::NotAPoset);
}
