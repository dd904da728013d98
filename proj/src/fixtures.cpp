#include "latnorm/fixtures.hpp"

#include <algorithm>
#include <map>

#include "latnorm/io.hpp"
#include "latnorm/search.hpp"

namespace latnorm::fixtures {

namespace {

constexpr std::string_view kFig1 = R"(# non-distributive lattice without a left-continuous t-norm
elements 0 a b c d e 1
covers
0 a
0 e
a b
b c
b d
e d
c 1
d 1
end
)";

constexpr std::string_view kFig2 = R"(elements 0 a b c d 1
covers
0 a
a b
b c
b d
c 1
d 1
end
)";

constexpr std::string_view kFig3 = R"(elements 0 a b c d h g e f 1
covers
0 a
a b
b c
b d
b h
c g
d g
h g
g e
g f
e 1
f 1
end
)";

constexpr std::string_view kM3 = R"(elements 0 x y z 1
covers
0 x
0 y
0 z
x 1
y 1
z 1
end
)";

constexpr std::string_view kN5 = R"(elements 0 a b c 1
covers
0 a
a b
b 1
0 c
c 1
end
)";

constexpr std::string_view kChain2 = "elements 0 1\ncovers\n0 1\nend\n";
constexpr std::string_view kChain3 = "elements 0 m 1\ncovers\n0 m\nm 1\nend\n";
constexpr std::string_view kChain4 = "elements 0 p q 1\ncovers\n0 p\np q\nq 1\nend\n";
constexpr std::string_view kChain5 = "elements 0 p q r 1\ncovers\n0 p\np q\nq r\nr 1\nend\n";
constexpr std::string_view kBool2 = "elements 0 x y 1\ncovers\n0 x\n0 y\nx 1\ny 1\nend\n";

constexpr std::string_view kBool3 = R"(elements 0 x y z xy xz yz 1
covers
0 x
0 y
0 z
x xy
x xz
y xy
y yz
z xz
z yz
xy 1
xz 1
yz 1
end
)";

// fig2
constexpr std::string_view kTable1 = "0 -> 0\na -> 0\nb -> 0\nc -> c\nd -> d\n1 -> 1\n";
constexpr std::string_view kTable2 = "0 -> 0\na -> 0\nb -> b\nc -> b\nd -> b\n1 -> b\n";
constexpr std::string_view kTable3 = R"(op 6
0 0 0 0 0 0
0 0 0 0 0 0
0 0 b b b b
0 0 b b b b
0 0 b b b b
0 0 b b b b
)";

// fig1
constexpr std::string_view kTable4 = "0 -> 0\na -> 0\nb -> 0\nc -> c\nd -> e\ne -> e\n1 -> 1\n";

// [b, g] of fig3, host index order b c d h g
constexpr std::string_view kTable5 = R"(op 5
b b b b b
b b b b b
b b b b b
b b b b b
b b b b b
)";

// [0, b] of fig3
constexpr std::string_view kTable6 = "0 -> 0\na -> 0\nb -> a\n";

// fig3 as printed
constexpr std::string_view kTable7 = R"(op 10
0 0 0 0 0 0 0 0 0 0
0 0 a a a a a a a a
0 a a b b b b b b b
0 a b b b b b c c c
0 a b b b b b d d d
0 a b b b b b h h h
0 a b b b b b g g g
0 a b c d h g e g e
0 a b c d h g g f f
0 a b c d h g e f 1
)";

// [a, g] of fig3, host index order a b c d h g
constexpr std::string_view kTable8 = "a -> a\nb -> b\nc -> b\nd -> b\nh -> b\ng -> b\n";

constexpr std::string_view kTable9 = R"(op 10
0 0 0 0 0 0 0 0 0 0
0 a a a a a a a a a
0 a b b b b b b b b
0 a b b b b b c c c
0 a b b b b b d d d
0 a b b b b b h h h
0 a b b b b b g g g
0 a b c d h g e g e
0 a b c d h g g f f
0 a b c d h g e f 1
)";

constexpr std::string_view kExample41 = R"(interval b g
summand 1 op 5
b b b b b
b b b b b
b b b b b
b b b b b
b b b b b
top meet
gap 0 map
0 -> 0
a -> 0
b -> a
end
)";

constexpr std::string_view kExample42 = R"(interval 0 a
interval g 1
summand 1 meet
summand 2 meet
gap 1 map
a -> a
b -> b
c -> b
d -> b
h -> b
g -> b
end
)";

const std::map<std::string, std::string_view, std::less<>>& sources() {
  static const std::map<std::string, std::string_view, std::less<>> m{
      {"fig1", kFig1},     {"fig2", kFig2},     {"fig3", kFig3},     {"m3", kM3},
      {"n5", kN5},         {"chain2", kChain2}, {"chain3", kChain3}, {"chain4", kChain4},
      {"chain5", kChain5}, {"bool2", kBool2},   {"bool3", kBool3},
  };
  return m;
}

Elem at(const Lattice& l, std::string_view label) {
  auto e = l.find(label);
  if (!e) throw Error(ErrorCode::UnknownElement, "no element '" + std::string(label) + "'");
  return *e;
}

std::string names_of(const Lattice& l, const std::vector<Elem>& xs) {
  std::string out = "(";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + l.name(xs[k]);
  return out + ")";
}

std::string set_of(const Lattice& l, const std::vector<Elem>& xs) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + l.name(xs[k]);
  return out + "}";
}

class Builder {
 public:
  explicit Builder(std::string id) { r_.id = std::move(id); }
  void summary(std::string s) { r_.summary = std::move(s); }
  bool check(std::string name, bool passed, std::string detail = {}) {
    r_.checks.push_back({std::move(name), passed, std::move(detail)});
    return passed;
  }
  void erratum(std::string s) { r_.errata.push_back(std::move(s)); }
  FixtureReport done() { return std::move(r_); }

 private:
  FixtureReport r_;
};

void roundtrip_lattice(Builder& b, const Lattice& l) {
  const auto text = serialize_lattice(l);
  b.check("lattice file round-trips", parse_lattice(text) == l && serialize_lattice(parse_lattice(text)) == text);
}

void roundtrip_map(Builder& b, const Lattice& l, const UnaryMap& f, const std::string& what) {
  b.check(what + " round-trips", parse_map(l, serialize_map(l, f)) == f);
}

void roundtrip_op(Builder& b, const Lattice& l, const BinaryOp& op, const std::string& what) {
  b.check(what + " round-trips", parse_op(l, serialize_op(l, op)) == op);
}

void shape(Builder& b, const Lattice& l, std::size_t elems, std::size_t covers) {
  b.check("element count", l.size() == elems, std::to_string(l.size()) + " elements");
  b.check("cover count", l.covers().size() == covers, std::to_string(l.covers().size()) + " covers");
  roundtrip_lattice(b, l);
}

void exact_table(Builder& b, const Lattice& l, const BinaryOp& computed, std::string_view expected_text,
                 const std::string& what) {
  const auto expected = parse_op(l, expected_text);
  const auto got = serialize_op(l, computed);
  const auto diff = differing_cells(computed, expected);
  b.check(what + " reproduced byte-for-byte", got == serialize_op(l, expected),
          std::to_string(l.size() * l.size() - diff.size()) + "/" + std::to_string(l.size() * l.size()) +
              " cells agree");
}

FixtureReport run_fig1() {
  Builder b("fig1");
  b.summary("seven-element lattice whose top is the join of c and e");
  const auto l = lattice("fig1");
  shape(b, l, 7, 8);
  const std::vector<Elem> ce{at(l, "c"), at(l, "e")};
  b.check("c v e = 1", bound_of(l, ce, Bound::Join) == l.top());
  b.check("top is not completely join-irreducible", !is_completely_join_irreducible(l, l.top()));
  const auto lin = check_linear_sum(l, make_chain(l, {l.bottom(), at(l, "a"), at(l, "b"), l.top()}));
  b.check("not a linear sum of (0,a,b,1), witness (e,a)",
          !lin.holds && lin.witness == std::vector<Elem>{at(l, "e"), at(l, "a")}, names_of(l, lin.witness));
  return b.done();
}

FixtureReport run_fig2() {
  Builder b("fig2");
  b.summary("six-element lattice with c v d = 1");
  const auto l = lattice("fig2");
  shape(b, l, 6, 6);
  const Elem c = at(l, "c"), d = at(l, "d");
  b.check("c v d = 1", l.join(c, d) == l.top());
  b.check("c ^ d = b", l.meet(c, d) == at(l, "b"));
  b.check("distributive", is_distributive(l).holds);
  const auto cji = completely_join_irreducibles(l);
  b.check("completely join-irreducibles are {a,b,c,d}",
          cji == std::vector<Elem>{at(l, "a"), at(l, "b"), c, d}, set_of(l, cji));
  b.check("linear sum of (0,b,1)", check_linear_sum(l, make_chain(l, {l.bottom(), at(l, "b"), l.top()})).holds);
  return b.done();
}

FixtureReport run_fig3() {
  Builder b("fig3");
  b.summary("ten-element lattice used by both semi-linear examples");
  const auto l = lattice("fig3");
  shape(b, l, 10, 12);
  const std::vector<Elem> ef{at(l, "e"), at(l, "f")};
  b.check("e ^ f = g", bound_of(l, ef, Bound::Meet) == at(l, "g"));
  const auto sub = interval_sublattice(l, at(l, "b"), at(l, "g"));
  b.check("[b,g] has five elements", sub.lattice.size() == 5, set_of(l, sub.to_host));
  b.check("semi-linear sum of {[b,g]}",
          check_semi_linear_sum(l, IntervalFamily{{{at(l, "b"), at(l, "g")}}}).holds());
  b.check("semi-linear sum of {[0,a],[g,1]}",
          check_semi_linear_sum(l, IntervalFamily{{{l.bottom(), at(l, "a")}, {at(l, "g"), l.top()}}}).holds());
  return b.done();
}

FixtureReport run_m3() {
  Builder b("m3");
  b.summary("the diamond with three atoms");
  const auto l = lattice("m3");
  shape(b, l, 5, 6);
  const auto d = is_distributive(l);
  b.check("not distributive, witness (x,y,z)",
          !d.holds && d.witness == std::vector<Elem>{at(l, "x"), at(l, "y"), at(l, "z")}, names_of(l, d.witness));
  return b.done();
}

FixtureReport run_chain(const std::string& id, std::size_t n) {
  Builder b(id);
  b.summary(std::to_string(n) + "-element chain");
  const auto l = lattice(id);
  shape(b, l, n, n - 1);
  b.check("distributive", is_distributive(l).holds);
  auto cji = completely_join_irreducibles(l);
  std::vector<Elem> nonbottom;
  for (Elem x = 0; x < l.size(); ++x)
    if (x != l.bottom()) nonbottom.push_back(x);
  b.check("every non-bottom element is completely join-irreducible", cji == nonbottom, set_of(l, cji));
  const auto found = search_lc_tnorms(l);
  const bool has_m = std::find(found.found.begin(), found.found.end(), meet_op(l)) != found.found.end();
  const bool has_d = std::find(found.found.begin(), found.found.end(), drastic_op(l)) != found.found.end();
  b.check("search finds the meet and the drastic product", has_m && has_d && found.exhausted,
          std::to_string(found.count) + " left-continuous t-norms");
  return b.done();
}

FixtureReport run_ex11() {
  Builder b("ex1.1");
  b.summary("no left-continuous t-norm exists on fig1");
  const auto l = lattice("fig1");
  const auto r = search_lc_tnorms(l);
  b.check("search is exhaustive", r.exhausted);
  b.check("no operator found", r.found.empty() && r.count == 0,
          std::to_string(r.stats.nodes) + " nodes expanded");
  return b.done();
}

FixtureReport run_tab1() {
  Builder b("tab1");
  b.summary("an f-mapping on fig2 whose image meet differs from the host meet");
  const auto l = lattice("fig2");
  const auto f = parse_map(l, table_source(1));
  roundtrip_map(b, l, f, "map");
  b.check("is an f-mapping", check_fmapping(l, f).is_fmapping());
  const auto image = image_lattice(l, f);
  const Elem c = at(l, "c"), d = at(l, "d");
  b.check("image is {0,c,d,1}", image.elements() == std::vector<Elem>{l.bottom(), c, d, l.top()},
          set_of(l, image.elements()));
  b.check("image meet of c and d is 0", image_meet(image, c, d) == l.bottom());
  b.check("host meet of c and d is b", l.meet(c, d) == at(l, "b"));
  return b.done();
}

FixtureReport run_ex31() {
  Builder b("ex3.1");
  b.summary("a weak f-mapping on fig2 induces a left-continuous t-subnorm");
  const auto l = lattice("fig2");
  const auto f = parse_map(l, table_source(2));
  roundtrip_map(b, l, f, "map");
  const auto report = check_weak_fmapping(l, f);
  b.check("is a weak f-mapping", report.is_weak_fmapping());
  b.check("is not an f-mapping (f(1) = b)", !report.is_fmapping());
  const auto t = subnorm_from_weak_fmap(l, f);
  roundtrip_op(b, l, t, "operator");
  exact_table(b, l, t, table_source(3), "table 3");
  b.check("is a left-continuous t-subnorm", check_operator(l, t).is_left_continuous_tsubnorm());
  return b.done();
}

FixtureReport run_ex32() {
  Builder b("ex3.2");
  b.summary("without a completely join-irreducible top the f-mapping construction fails");
  {
    const auto l = lattice("fig1");
    const auto f = parse_map(l, table_source(4));
    b.check("fig1 map is an f-mapping", check_fmapping(l, f).is_fmapping());
    const auto t = tnorm_from_fmap(l, f);
    const auto r = check_operator(l, t);
    const auto& w = r.left_continuous.witness;
    const bool top_pair = !r.left_continuous.holds && w.size() == 3 && l.join(w[1], w[2]) == l.top();
    b.check("fig1: left-continuity fails on a pair joining to 1", top_pair, names_of(l, w));
    b.check("fig1: the remaining t-norm axioms hold", r.is_tnorm());
  }
  {
    const auto l = lattice("fig2");
    const auto f = parse_map(l, table_source(1));
    const auto t = tnorm_from_fmap(l, f);
    const auto r = check_operator(l, t);
    const auto& w = r.left_continuous.witness;
    b.check("fig2: left-continuity fails", !r.left_continuous.holds, names_of(l, w));
    b.check("fig2: value at (c,d) is the image meet 0", t(at(l, "c"), at(l, "d")) == l.bottom());
  }
  return b.done();
}

FixtureReport run_ex41() {
  Builder b("ex4.1");
  b.summary("semi-linear sum of {[b,g]} on fig3 with a constant summand and a gap map on [0,b]");
  const auto l = lattice("fig3");
  const auto file = parse_decomposition(l, example41_source());
  const auto d = to_semilinear_decomposition(l, file);

  const auto sub0 = interval_sublattice(l, l.bottom(), at(l, "b"));
  const auto f0 = parse_map(sub0.lattice, table_source(6));
  roundtrip_map(b, sub0.lattice, f0, "gap map");
  const auto sub1 = interval_sublattice(l, at(l, "b"), at(l, "g"));
  const auto t1 = parse_op(sub1.lattice, table_source(5));
  roundtrip_op(b, sub1.lattice, t1, "summand");
  b.check("summand is a left-continuous t-subnorm", check_operator(sub1.lattice, t1).is_left_continuous_tsubnorm());

  const auto f0_report = check_weak_fmapping(sub0.lattice, f0);
  const auto& idem = f0_report.idempotent;
  if (b.check("gap map fails idempotence at b", !idem.holds && idem.witness == std::vector<Elem>{2},
              idem.holds ? "" : names_of(sub0.lattice, idem.witness)))
    b.erratum("the gap map on [0,b] is not idempotent: f0(f0(b)) = f0(a) = 0, f0(b) = a");

  const auto t = ordinal_sum_semilinear(l, d, GapMapPolicy::FormulaOnly);
  exact_table(b, l, t, serialize_op(l, corrected_table7(l)), "corrected table 7");
  const auto printed = parse_op(l, table_source(7));
  roundtrip_op(b, l, printed, "printed table");
  const auto diff = differing_cells(t, printed);
  const Elem a = at(l, "a"), bb = at(l, "b");
  const bool two_cells = diff == std::vector<std::pair<Elem, Elem>>{{a, bb}, {bb, a}} && t(a, bb) == l.bottom() &&
                         printed(a, bb) == a;
  b.check("printed table differs exactly at (a,b) and (b,a)", two_cells,
          std::to_string(100 - diff.size()) + "/100 cells agree");
  const auto printed_report = check_operator(l, printed);
  const bool assoc_witness = !printed_report.associative.holds &&
                             printed_report.associative.witness == std::vector<Elem>{a, bb, bb};
  b.check("printed table breaks associativity at (a,b,b)", assoc_witness,
          names_of(l, printed_report.associative.witness));
  if (two_cells && assoc_witness) {
    b.erratum("cell (a,b): printed a, constructed 0");
    b.erratum("cell (b,a): printed a, constructed 0");
  }
  const auto r = check_operator(l, t);
  const Elem c = at(l, "c");
  const bool breaks = !r.associative.holds && r.associative.witness == std::vector<Elem>{a, c, c};
  if (b.check("constructed operator breaks associativity at (a,c,c)", breaks, names_of(l, r.associative.witness)))
    b.erratum("the constructed operator is not a t-norm: T(T(a,c),c) = T(a,c) = a, T(a,T(c,c)) = T(a,b) = 0");
  b.check("constructed operator satisfies the other t-norm axioms and left-continuity",
          r.neutral_top.holds && r.monotone.holds && r.commutative.holds && r.left_continuous.holds);

  const auto rr = check_restriction(l, d, t, 0);
  b.check("restriction to [b,g] differs from the summand at (b,b)",
          !rr.restriction_matches && rr.mismatch == std::vector<Elem>{bb, bb} && t(bb, bb) == a,
          names_of(l, rr.mismatch));
  b.check("gap map is not an f-mapping, as the criterion predicts",
          rr.criterion == RestrictionCriterion::GapMapIsFMapping && !rr.criterion_holds && rr.agrees());
  return b.done();
}

FixtureReport run_ex42() {
  Builder b("ex4.2");
  b.summary("semi-linear sum of {[0,a],[g,1]} on fig3 with a gap map on [a,g]");
  const auto l = lattice("fig3");
  const auto d = to_semilinear_decomposition(l, parse_decomposition(l, example42_source()));
  const auto sub = interval_sublattice(l, at(l, "a"), at(l, "g"));
  const auto f1 = parse_map(sub.lattice, table_source(8));
  roundtrip_map(b, sub.lattice, f1, "gap map");
  b.check("gap map is a weak f-mapping", check_weak_fmapping(sub.lattice, f1).is_weak_fmapping());
  const auto t = ordinal_sum_semilinear(l, d);
  roundtrip_op(b, l, t, "operator");
  exact_table(b, l, t, table_source(9), "table 9");
  const auto r = check_operator(l, t);
  const Elem c = at(l, "c"), e = at(l, "e"), f = at(l, "f");
  if (b.check("table 9 breaks associativity at (c,e,f)",
              !r.associative.holds && r.associative.witness == std::vector<Elem>{c, e, f},
              names_of(l, r.associative.witness)))
    b.erratum("table 9 is not a t-norm: T(T(c,e),f) = T(c,f) = c, T(c,T(e,f)) = T(c,g) = b");
  b.check("table 9 satisfies the other t-norm axioms and left-continuity",
          r.neutral_top.holds && r.monotone.holds && r.commutative.holds && r.left_continuous.holds);
  const auto census = search_lc_tnorms(l);
  b.check("search certifies that fig3 has no left-continuous t-norm", census.exhausted && census.count == 0,
          std::to_string(census.stats.nodes) + " nodes expanded");
  const auto r1 = check_restriction(l, d, t, 0);
  b.check("restriction to [0,a] equals the first summand", r1.restriction_matches && r1.agrees());
  const auto r2 = check_restriction(l, d, t, 1);
  const Elem g = at(l, "g");
  b.check("restriction to [g,1] differs at (g,g), as the criterion predicts",
          !r2.restriction_matches && r2.mismatch == std::vector<Elem>{g, g} && t(g, g) == at(l, "b") && r2.agrees(),
          names_of(l, r2.mismatch));
  return b.done();
}

FixtureReport run_prop31() {
  Builder b("prop3.1");
  b.summary("idempotents of the f-mapping t-norm are exactly the image");
  std::size_t lattices = 0, maps = 0, failures = 0;
  for (const auto& name : catalog()) {
    const auto l = lattice(name);
    if (!is_completely_join_irreducible(l, l.top())) continue;
    ++lattices;
    for (const auto& f : enumerate_weak_fmappings(l, true).maps) {
      ++maps;
      const auto t = tnorm_from_fmap(l, f);
      if (idempotents(l, t) != fixed_points(l, f) || !check_operator(l, t).is_left_continuous_tnorm()) ++failures;
    }
  }
  b.check("idempotents equal the image for every f-mapping", failures == 0 && maps > 0,
          std::to_string(maps) + " f-mappings on " + std::to_string(lattices) + " lattices, " +
              std::to_string(failures) + " failures");
  return b.done();
}

FixtureReport run_rem312() {
  Builder b("rem3.1-2");
  b.summary("the diamond has no f-mapping");
  const auto l = lattice("m3");
  const auto r = enumerate_weak_fmappings(l, true);
  b.check("f-mapping enumeration is exhaustive and empty", r.exhausted && r.count == 0);
  const auto weak = enumerate_weak_fmappings(l, false);
  const bool has_zero =
      std::find(weak.maps.begin(), weak.maps.end(), UnaryMap::constant(l.size(), l.bottom())) != weak.maps.end();
  b.check("the constant-bottom map is a weak f-mapping", has_zero,
          std::to_string(weak.count) + " weak f-mappings");
  return b.done();
}

FixtureReport run_rem315() {
  Builder b("rem3.1-5");
  b.summary("the image of an f-mapping is its fixed-point set and a join-sublattice");
  const auto l = lattice("fig2");
  const auto f = parse_map(l, table_source(1));
  const auto image = image_lattice(l, f);
  b.check("image equals the fixed points", image.elements() == fixed_points(l, f));
  bool join_closed = true;
  for (Elem u : image.elements())
    for (Elem v : image.elements()) join_closed = join_closed && image.join(u, v) == l.join(u, v);
  b.check("image joins are host joins", join_closed);
  b.check("image is not a sublattice", !image.is_sublattice_of_host());
  return b.done();
}

}  // namespace

const std::vector<std::string>& catalog() {
  static const std::vector<std::string> names{"chain2", "chain3", "chain4", "bool2", "m3", "n5",
                                              "chain5", "fig2",   "fig1",   "bool3", "fig3"};
  return names;
}

std::string_view lattice_source(std::string_view name) {
  const auto& m = sources();
  auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorCode::UnknownFixture, "no bundled lattice '" + std::string(name) + "'");
  return it->second;
}

Lattice lattice(std::string_view name) { return parse_lattice(lattice_source(name)); }

std::string_view table_source(int number) {
  static constexpr std::string_view tables[] = {kTable1, kTable2, kTable3, kTable4, kTable5,
                                                kTable6, kTable7, kTable8, kTable9};
  if (number < 1 || number > 9) throw Error(ErrorCode::UnknownFixture, "no table " + std::to_string(number));
  return tables[number - 1];
}

std::string_view example41_source() { return kExample41; }
std::string_view example42_source() { return kExample42; }

BinaryOp corrected_table7(const Lattice& fig3) {
  auto op = parse_op(fig3, kTable7);
  const Elem a = at(fig3, "a"), b = at(fig3, "b");
  op.set(a, b, fig3.bottom());
  op.set(b, a, fig3.bottom());
  return op;
}

std::vector<std::pair<Elem, Elem>> differing_cells(const BinaryOp& a, const BinaryOp& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::SizeMismatch, "tables differ in size");
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (a(x, y) != b(x, y)) out.emplace_back(x, y);
  return out;
}

bool FixtureReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.passed; });
}

nlohmann::json FixtureReport::to_json() const {
  auto cs = nlohmann::json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"id", id}, {"summary", summary}, {"passed", passed()}, {"checks", cs}, {"errata", errata}};
}

std::string FixtureReport::to_text() const {
  std::string out = id + ": " + summary + "\n";
  for (const auto& c : checks) {
    out += std::string(c.passed ? "  ok    " : "  FAIL  ") + c.name;
    if (!c.detail.empty()) out += " [" + c.detail + "]";
    out += '\n';
  }
  for (const auto& e : errata) out += "  erratum: " + e + '\n';
  out += passed() ? "PASS\n" : "FAIL\n";
  return out;
}

const std::vector<std::string>& fixture_ids() {
  static const std::vector<std::string> ids{"fig1",  "fig2",  "fig3",  "m3",    "chain2",  "chain3",
                                            "ex1.1", "tab1",  "ex3.1", "ex3.2", "ex4.1",   "ex4.2",
                                            "prop3.1", "rem3.1-2", "rem3.1-5"};
  return ids;
}

FixtureReport run_fixture(std::string_view id) {
  if (id == "fig1") return run_fig1();
  if (id == "fig2") return run_fig2();
  if (id == "fig3") return run_fig3();
  if (id == "m3") return run_m3();
  if (id == "chain2") return run_chain("chain2", 2);
  if (id == "chain3") return run_chain("chain3", 3);
  if (id == "ex1.1") return run_ex11();
  if (id == "tab1") return run_tab1();
  if (id == "ex3.1") return run_ex31();
  if (id == "ex3.2") return run_ex32();
  if (id == "ex4.1") return run_ex41();
  if (id == "ex4.2") return run_ex42();
  if (id == "prop3.1") return run_prop31();
  if (id == "rem3.1-2") return run_rem312();
  if (id == "rem3.1-5") return run_rem315();
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + std::string(id) + "'");
}

}  // namespace latnorm::fixtures
