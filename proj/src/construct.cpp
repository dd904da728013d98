#include "latnorm/construct.hpp"

#include <algorithm>
#include <sstream>

namespace latnorm {

namespace {

std::string failing_conditions(const FMapReport& r, bool need_top) {
  std::vector<std::string> names;
  if (need_top && !r.top_preserving.holds) names.emplace_back("top-preserving");
  if (!r.contractive.holds) names.emplace_back("contractive");
  if (!r.idempotent.holds) names.emplace_back("idempotent");
  if (!r.join_preserving.holds) names.emplace_back("join-preserving");
  if (!r.image_is_lattice.holds) names.emplace_back("image-is-lattice");
  else if (!r.image_distributive.holds) names.emplace_back("image-distributive");
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

bool annihilating_on(const Sublattice& sub, const BinaryOp& op) {
  const Elem low = sub.lattice.bottom();
  for (Elem y = 0; y < sub.lattice.size(); ++y)
    if (op(low, y) != low) return false;
  return true;
}

std::string interval_name(const Lattice& l, ClosedInterval c) {
  return "[" + l.name(c.lower) + ", " + l.name(c.upper) + "]";
}

void require_summand(const Lattice& l, const Sublattice& sub, const BinaryOp& op, ClosedInterval c,
                     const char* what) {
  if (op.size() != sub.lattice.size())
    throw Error(ErrorCode::InvalidDecomposition,
                std::string(what) + " on " + interval_name(l, c) + " has size " + std::to_string(op.size()) +
                    ", interval has " + std::to_string(sub.lattice.size()) + " elements",
                {c.lower, c.upper});
  if (!annihilating_on(sub, op))
    throw Error(ErrorCode::InvalidDecomposition,
                std::string(what) + " on " + interval_name(l, c) + " is not annihilating", {c.lower, c.upper});
}

/// Meet structure on the value set of a gap map, in the gap's local indices.
struct GapImage {
  std::vector<Elem> values;
  std::vector<std::optional<Elem>> position;
  std::optional<Lattice> lattice;

  Elem meet(Elem u, Elem v) const { return values[lattice->meet(*position[u], *position[v])]; }
};

GapImage gap_image(const Lattice& host, const Sublattice& sub, const UnaryMap& f, ClosedInterval c,
                   GapMapPolicy policy) {
  if (f.size() != sub.lattice.size())
    throw Error(ErrorCode::InvalidDecomposition, "gap map on " + interval_name(host, c) + " has the wrong size",
                {c.lower, c.upper});
  for (Elem v : f.table)
    if (v >= sub.lattice.size()) throw Error(ErrorCode::UnknownElement, "gap map value out of range");
  if (policy == GapMapPolicy::RequireWeakFMapping) {
    auto report = check_weak_fmapping(sub.lattice, f);
    if (!report.is_weak_fmapping())
      throw MapConditionError(ErrorCode::InvalidDecomposition,
                              "gap map on " + interval_name(host, c) +
                                  " is not a weak f-mapping: " + failing_conditions(report, false),
                              report);
  }
  GapImage g;
  g.values = f.table;
  std::sort(g.values.begin(), g.values.end());
  g.values.erase(std::unique(g.values.begin(), g.values.end()), g.values.end());
  g.position.resize(sub.lattice.size());
  for (std::size_t i = 0; i < g.values.size(); ++i) g.position[g.values[i]] = i;
  auto induced = induced_poset(sub.lattice, g.values);
  if (!induced.lattice)
    throw Error(ErrorCode::InvalidDecomposition,
                "image of the gap map on " + interval_name(host, c) + " is not a lattice",
                {sub.host(induced.witness[0]), sub.host(induced.witness[1])});
  g.lattice = std::move(induced.lattice);
  return g;
}

enum class BlockKind { Summand, Top, Gap, LowerGap };

struct Block {
  BlockKind kind;
  ClosedInterval span;
  Sublattice sub;
  const BinaryOp* op = nullptr;
  const UnaryMap* map = nullptr;
  std::optional<GapImage> image;

  Elem eval(Elem x, Elem y) const {
    const Elem lx = *sub.local(x);
    const Elem ly = *sub.local(y);
    if (op) return sub.host((*op)(lx, ly));
    return sub.host(image->meet((*map)(lx), (*map)(ly)));
  }
};

/// Assigns each element to the unique half-open block containing it.
std::vector<std::optional<std::size_t>> assign_blocks(const Lattice& l, const std::vector<Block>& blocks) {
  std::vector<std::optional<std::size_t>> owner(l.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Elem x = 0; x < l.size(); ++x) {
      if (!(l.lt(blocks[b].span.lower, x) && l.leq(x, blocks[b].span.upper))) continue;
      if (owner[x])
        throw Error(ErrorCode::InvalidDecomposition, "element '" + l.name(x) + "' lies in two blocks", {x});
      owner[x] = b;
    }
  }
  return owner;
}

BinaryOp assemble(const Lattice& l, const std::vector<Block>& blocks) {
  const auto owner = assign_blocks(l, blocks);
  return BinaryOp::from_function(l.size(), [&](Elem x, Elem y) {
    if (owner[x] && owner[y] && *owner[x] == *owner[y]) return blocks[*owner[x]].eval(x, y);
    return l.meet(x, y);
  });
}

Check chain_blocks_valid(const Lattice& l, const Chain& chain) { return check_linear_sum(l, chain); }

}  // namespace

BinaryOp subnorm_from_weak_fmap(const Lattice& l, const UnaryMap& f) {
  auto report = check_weak_fmapping(l, f);
  if (!report.is_weak_fmapping())
    throw MapConditionError(ErrorCode::NotWeakFMapping, "not a weak f-mapping: " + failing_conditions(report, false),
                            report);
  const auto image = image_lattice(l, f);
  return BinaryOp::from_function(l.size(), [&](Elem x, Elem y) { return image.meet(f(x), f(y)); });
}

BinaryOp tnorm_from_fmap(const Lattice& l, const UnaryMap& f) {
  auto report = check_fmapping(l, f);
  if (!report.is_fmapping())
    throw MapConditionError(ErrorCode::NotFMapping, "not an f-mapping: " + failing_conditions(report, true), report);
  const auto image = image_lattice(l, f);
  return BinaryOp::from_function(l.size(), [&](Elem x, Elem y) {
    if (x == l.top() || y == l.top()) return l.meet(x, y);
    return image.meet(f(x), f(y));
  });
}

BinaryOp ordinal_sum_chain(const Lattice& l, const ChainDecomposition& d) {
  const auto& pts = d.chain.points;
  if (auto lin = chain_blocks_valid(l, d.chain); !lin.holds)
    throw Error(ErrorCode::InvalidDecomposition,
                "not a linear sum: '" + l.name(lin.witness[0]) + "' is incomparable with chain point '" +
                    l.name(lin.witness[1]) + "'",
                lin.witness);
  if (d.summands.size() + 1 != pts.size())
    throw Error(ErrorCode::InvalidDecomposition, "need one summand per chain interval");
  std::vector<Block> blocks;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const ClosedInterval c{pts[i], pts[i + 1]};
    auto sub = interval_sublattice(l, c.lower, c.upper);
    require_summand(l, sub, d.summands[i], c, "summand");
    blocks.push_back(Block{BlockKind::Summand, c, std::move(sub), &d.summands[i], nullptr, std::nullopt});
  }
  return assemble(l, blocks);
}

BinaryOp ordinal_sum_semilinear(const Lattice& l, const SemiLinearDecomposition& d, GapMapPolicy policy) {
  const auto& iv = d.family.intervals;
  if (iv.empty()) throw Error(ErrorCode::InvalidDecomposition, "empty interval family");
  for (const auto& c : iv)
    if (c.lower >= l.size() || c.upper >= l.size())
      throw Error(ErrorCode::UnknownElement, "interval endpoint out of range");
  const auto report = check_semi_linear_sum(l, d.family);
  if (!report.holds()) {
    const char* which = !report.nonempty.holds   ? "(a_i, b_i] nonempty"
                        : !report.ordered.holds  ? "b_i <= a_j for i < j"
                        : !report.disjoint.holds ? "open intervals disjoint"
                                                 : "endpoints comparable with every element";
    throw Error(ErrorCode::InvalidDecomposition, std::string("not a semi-linear sum: fails ") + which);
  }
  if (d.summands.size() != iv.size()) throw Error(ErrorCode::InvalidDecomposition, "need one summand per interval");
  if (d.gap_maps.size() + 1 != iv.size() && !(d.gap_maps.empty() && iv.size() == 1))
    throw Error(ErrorCode::InvalidDecomposition, "need one gap-map slot between consecutive intervals");

  std::vector<Block> blocks;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    auto sub = interval_sublattice(l, iv[i].lower, iv[i].upper);
    require_summand(l, sub, d.summands[i], iv[i], "summand");
    blocks.push_back(Block{BlockKind::Summand, iv[i], std::move(sub), &d.summands[i], nullptr, std::nullopt});
  }

  const ClosedInterval upper{iv.back().upper, l.top()};
  if (d.family.has_upper_gap(l)) {
    if (!d.top_op) throw Error(ErrorCode::MissingTopOp, "b_n < 1 requires an operator on " + interval_name(l, upper));
    auto sub = interval_sublattice(l, upper.lower, upper.upper);
    require_summand(l, sub, *d.top_op, upper, "top operator");
    blocks.push_back(Block{BlockKind::Top, upper, std::move(sub), &*d.top_op, nullptr, std::nullopt});
  } else if (d.top_op) {
    throw Error(ErrorCode::InvalidDecomposition, "b_n = 1 leaves no room for a top operator");
  }

  auto add_gap = [&](BlockKind kind, ClosedInterval c, const std::optional<UnaryMap>& map) {
    if (!l.lt(c.lower, c.upper)) {
      if (map) throw Error(ErrorCode::InvalidDecomposition, "degenerate gap " + interval_name(l, c) + " takes no map");
      return;
    }
    if (!map) throw Error(ErrorCode::MissingGapMap, "gap " + interval_name(l, c) + " needs a weak f-mapping");
    auto sub = interval_sublattice(l, c.lower, c.upper);
    auto image = gap_image(l, sub, *map, c, policy);
    blocks.push_back(Block{kind, c, std::move(sub), nullptr, &*map, std::move(image)});
  };
  add_gap(BlockKind::LowerGap, ClosedInterval{l.bottom(), iv.front().lower}, d.lower_gap_map);
  for (std::size_t i = 0; i + 1 < iv.size(); ++i)
    add_gap(BlockKind::Gap, ClosedInterval{iv[i].upper, iv[i + 1].lower}, d.gap_maps[i]);

  return assemble(l, blocks);
}

BinaryOp corollary41_construct(const Lattice& l, const Chain& chain, const std::vector<UnaryMap>& gap_maps,
                               const BinaryOp& top_op) {
  const auto& pts = chain.points;
  if (gap_maps.size() + 2 != pts.size())
    throw Error(ErrorCode::InvalidDecomposition, "need a weak f-mapping for every interval but the last");
  ChainDecomposition d{chain, {}};
  for (std::size_t i = 0; i < gap_maps.size(); ++i) {
    const auto sub = interval_sublattice(l, pts[i], pts[i + 1]);
    if (gap_maps[i].size() != sub.lattice.size())
      throw Error(ErrorCode::InvalidDecomposition, "gap map has the wrong size", {pts[i], pts[i + 1]});
    d.summands.push_back(subnorm_from_weak_fmap(sub.lattice, gap_maps[i]));
  }
  d.summands.push_back(top_op);
  return ordinal_sum_chain(l, d);
}

BinaryOp saminger_sum(const Lattice& l, const std::vector<ClosedInterval>& intervals,
                      const std::vector<BinaryOp>& ops) {
  if (intervals.size() != ops.size()) throw Error(ErrorCode::InvalidIntervals, "need one operator per interval");
  std::vector<Sublattice> subs;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto c = intervals[i];
    if (c.lower >= l.size() || c.upper >= l.size() || !l.leq(c.lower, c.upper))
      throw Error(ErrorCode::InvalidIntervals, "interval " + std::to_string(i + 1) + " is not ordered");
    subs.push_back(interval_sublattice(l, c.lower, c.upper));
    if (ops[i].size() != subs.back().lattice.size())
      throw Error(ErrorCode::InvalidIntervals, "operator " + std::to_string(i + 1) + " has the wrong size");
  }
  return BinaryOp::from_function(l.size(), [&](Elem x, Elem y) {
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (subs[i].contains(x) && subs[i].contains(y))
        return subs[i].host(ops[i](*subs[i].local(x), *subs[i].local(y)));
    return l.meet(x, y);
  });
}

std::vector<BinaryOp> extract_summands(const Lattice& l, const BinaryOp& op, const Chain& chain) {
  if (op.size() != l.size()) throw Error(ErrorCode::SizeMismatch, "operator size differs from lattice size");
  if (auto lin = check_linear_sum(l, chain); !lin.holds)
    throw Error(ErrorCode::InvalidDecomposition, "lattice is not a linear sum of the chain", lin.witness);
  const auto& pts = chain.points;
  std::vector<std::optional<std::size_t>> owner(l.size());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    for (Elem x = 0; x < l.size(); ++x)
      if (l.lt(pts[i], x) && l.leq(x, pts[i + 1])) owner[x] = i;

  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y) {
      const bool same = owner[x] && owner[y] && *owner[x] == *owner[y];
      if (!same && op(x, y) != l.meet(x, y))
        throw Error(ErrorCode::NotOrdinalSumShape,
                    "T(" + l.name(x) + ", " + l.name(y) + ") differs from the meet across blocks", {x, y});
    }

  std::vector<BinaryOp> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto sub = interval_sublattice(l, pts[i], pts[i + 1]);
    try {
      out.push_back(restrict_halfopen(sub, op));
    } catch (const Error& e) {
      throw Error(ErrorCode::NotOrdinalSumShape, "block value leaves its interval", e.witness());
    }
  }
  return out;
}

SumClassification classify_chain_summands(const Lattice& l, const ChainDecomposition& d) {
  SumClassification out;
  const auto& pts = d.chain.points;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto sub = interval_sublattice(l, pts[i], pts[i + 1]);
    const auto r = check_operator(sub.lattice, d.summands.at(i));
    SummandVerdict v{{pts[i], pts[i + 1]}, i + 2 == pts.size(), false};
    v.satisfied = v.requires_tnorm ? r.is_left_continuous_tnorm() : r.is_left_continuous_tsubnorm();
    out.predicts_lc_tnorm = out.predicts_lc_tnorm && v.satisfied;
    out.summands.push_back(v);
  }
  return out;
}

SumClassification classify_semilinear_summands(const Lattice& l, const SemiLinearDecomposition& d) {
  SumClassification out;
  const auto& iv = d.family.intervals;
  const bool upper_gap = d.family.has_upper_gap(l);
  auto add = [&](ClosedInterval c, const BinaryOp& op, bool requires_tnorm) {
    const auto sub = interval_sublattice(l, c.lower, c.upper);
    const auto r = check_operator(sub.lattice, op);
    SummandVerdict v{c, requires_tnorm, requires_tnorm ? r.is_left_continuous_tnorm() : r.is_left_continuous_tsubnorm()};
    out.predicts_lc_tnorm = out.predicts_lc_tnorm && v.satisfied;
    out.summands.push_back(v);
  };
  for (std::size_t i = 0; i < iv.size(); ++i) add(iv[i], d.summands.at(i), !upper_gap && i + 1 == iv.size());
  if (upper_gap) {
    if (!d.top_op) throw Error(ErrorCode::MissingTopOp, "b_n < 1 requires a top operator");
    add({iv.back().upper, l.top()}, *d.top_op, true);
  }
  return out;
}

RestrictionReport check_restriction(const Lattice& l, const SemiLinearDecomposition& d, const BinaryOp& op,
                                    std::size_t k) {
  const auto& iv = d.family.intervals;
  if (k >= iv.size())
    throw Error(ErrorCode::IndexOutOfRange,
                "interval index " + std::to_string(k + 1) + " out of range 1.." + std::to_string(iv.size()));
  RestrictionReport r;
  const auto sub = interval_sublattice(l, iv[k].lower, iv[k].upper);
  const auto& summand = d.summands.at(k);
  r.restriction_matches = true;
  for (Elem i = 0; i < sub.lattice.size() && r.restriction_matches; ++i)
    for (Elem j = 0; j < sub.lattice.size(); ++j)
      if (op(sub.host(i), sub.host(j)) != sub.host(summand(i, j))) {
        r.restriction_matches = false;
        r.mismatch = {sub.host(i), sub.host(j)};
        break;
      }

  auto gap_is_fmapping = [&](ClosedInterval c, const std::optional<UnaryMap>& map) {
    if (!map) throw Error(ErrorCode::MissingGapMap, "gap " + interval_name(l, c) + " needs a map");
    const auto gap = interval_sublattice(l, c.lower, c.upper);
    return check_fmapping(gap.lattice, *map).is_fmapping();
  };

  if (k == 0) {
    if (d.family.has_lower_gap(l)) {
      r.criterion = RestrictionCriterion::GapMapIsFMapping;
      r.criterion_holds = gap_is_fmapping({l.bottom(), iv[0].lower}, d.lower_gap_map);
    }
    return r;
  }
  if (l.lt(iv[k - 1].upper, iv[k].lower)) {
    r.criterion = RestrictionCriterion::GapMapIsFMapping;
    r.criterion_holds = gap_is_fmapping({iv[k - 1].upper, iv[k].lower}, d.gap_maps.at(k - 1));
  } else {
    r.criterion = RestrictionCriterion::PrecedingSummandStrong;
    const auto prev = interval_sublattice(l, iv[k - 1].lower, iv[k - 1].upper);
    r.criterion_holds = check_operator(prev.lattice, d.summands.at(k - 1)).is_left_continuous_strong_tsubnorm();
  }
  return r;
}

}  // namespace latnorm
