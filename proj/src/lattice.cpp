#include "latnorm/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace latnorm {

namespace {

void require_distinct(const std::vector<std::string>& names) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(ErrorCode::SyntaxError, "empty element label");
    if (!seen.insert(n).second) throw Error(ErrorCode::DuplicateEntry, "duplicate element label '" + n + "'");
  }
}

}  // namespace

Lattice Lattice::from_covers(std::vector<std::string> names, std::span<const CoverPair> covers) {
  require_distinct(names);
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorCode::NoBounds, "empty carrier");

  std::vector<bool> leq(n * n, false);
  for (Elem x = 0; x < n; ++x) leq[x * n + x] = true;
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw Error(ErrorCode::UnknownElement, "cover references unknown element");
    if (lo == hi) throw Error(ErrorCode::NotAPoset, "element '" + names[lo] + "' covers itself", {lo, lo});
    leq[lo * n + hi] = true;
  }
  // Warshall closure.
  for (Elem k = 0; k < n; ++k)
    for (Elem i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (Elem j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = true;

  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (leq[x * n + y] && leq[y * n + x])
        throw Error(ErrorCode::NotAPoset, "cycle through '" + names[x] + "' and '" + names[y] + "'", {x, y});

  return from_order(std::move(names), leq);
}

Lattice Lattice::from_order(std::vector<std::string> names, const std::vector<bool>& leq) {
  require_distinct(names);
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorCode::NoBounds, "empty carrier");
  if (leq.size() != n * n) throw Error(ErrorCode::SizeMismatch, "order matrix has wrong size");

  auto le = [&](Elem x, Elem y) { return static_cast<bool>(leq[x * n + y]); };
  for (Elem x = 0; x < n; ++x) {
    if (!le(x, x)) throw Error(ErrorCode::NotAPoset, "order is not reflexive at '" + names[x] + "'", {x});
    for (Elem y = 0; y < n; ++y) {
      if (x != y && le(x, y) && le(y, x))
        throw Error(ErrorCode::NotAPoset, "order is not antisymmetric", {x, y});
      for (Elem z = 0; z < n; ++z)
        if (le(x, y) && le(y, z) && !le(x, z))
          throw Error(ErrorCode::NotAPoset, "order is not transitive", {x, y, z});
    }
  }

  Lattice l;
  l.names_ = std::move(names);
  l.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n * n; ++i) l.leq_[i] = leq[i] ? 1 : 0;

  auto find_bound = [&](bool lower) -> std::optional<Elem> {
    for (Elem x = 0; x < n; ++x) {
      bool all = true;
      for (Elem y = 0; y < n && all; ++y) all = lower ? le(x, y) : le(y, x);
      if (all) return x;
    }
    return std::nullopt;
  };
  const auto bottom = find_bound(true);
  const auto top = find_bound(false);
  if (!bottom) throw Error(ErrorCode::NoBounds, "no bottom element");
  if (!top) throw Error(ErrorCode::NoBounds, "no top element");
  l.bottom_ = *bottom;
  l.top_ = *top;

  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  std::vector<Elem> bounds;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      for (int pass = 0; pass < 2; ++pass) {
        const bool upper = pass == 0;
        bounds.clear();
        for (Elem u = 0; u < n; ++u)
          if (upper ? (le(x, u) && le(y, u)) : (le(u, x) && le(u, y))) bounds.push_back(u);
        std::optional<Elem> best;
        for (Elem u : bounds) {
          const bool extremal = std::all_of(bounds.begin(), bounds.end(),
                                            [&](Elem v) { return upper ? le(u, v) : le(v, u); });
          if (extremal) {
            best = u;
            break;
          }
        }
        if (!best) {
          std::ostringstream msg;
          msg << "'" << l.names_[x] << "' and '" << l.names_[y] << "' have no "
              << (upper ? "least upper" : "greatest lower") << " bound";
          throw Error(ErrorCode::NotALattice, msg.str(), {x, y});
        }
        auto& table = upper ? l.join_ : l.meet_;
        table[x * n + y] = table[y * n + x] = *best;
      }
    }
  }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (x == y || !le(x, y)) continue;
      bool cover = true;
      for (Elem z = 0; z < n && cover; ++z)
        if (z != x && z != y && le(x, z) && le(z, y)) cover = false;
      if (cover) l.covers_.emplace_back(x, y);
    }

  // |down-set| strictly increases along the order, so sorting by it gives a
  // linear extension.
  std::vector<std::size_t> down(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (le(y, x)) ++down[x];
  l.linear_extension_.resize(n);
  std::iota(l.linear_extension_.begin(), l.linear_extension_.end(), Elem{0});
  std::stable_sort(l.linear_extension_.begin(), l.linear_extension_.end(),
                   [&](Elem a, Elem b) { return down[a] < down[b]; });
  l.rank_.resize(n);
  for (std::size_t i = 0; i < n; ++i) l.rank_[l.linear_extension_[i]] = i;
  return l;
}

std::optional<Elem> Lattice::find(std::string_view label) const {
  for (Elem x = 0; x < size(); ++x)
    if (names_[x] == label) return x;
  return std::nullopt;
}

std::vector<Elem> Lattice::lower_covers(Elem x) const {
  std::vector<Elem> out;
  for (const auto& [lo, hi] : covers_)
    if (hi == x) out.push_back(lo);
  return out;
}

Elem bound_of(const Lattice& lattice, std::span<const Elem> set, Bound kind) {
  if (set.empty()) throw Error(ErrorCode::EmptySet, "bound of an empty set");
  Elem acc = set.front();
  for (Elem x : set.subspan(1)) acc = kind == Bound::Join ? lattice.join(acc, x) : lattice.meet(acc, x);
  return acc;
}

Check is_distributive(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (lattice.meet(a, lattice.join(b, c)) != lattice.join(lattice.meet(a, b), lattice.meet(a, c)))
          return Check::fail({a, b, c});
  return Check::pass();
}

bool is_completely_join_irreducible(const Lattice& lattice, Elem x) {
  Elem below = lattice.bottom();
  for (Elem y = 0; y < lattice.size(); ++y)
    if (lattice.lt(y, x)) below = lattice.join(below, y);
  return below != x;
}

std::vector<Elem> completely_join_irreducibles(const Lattice& lattice) {
  std::vector<Elem> out;
  for (Elem x = 0; x < lattice.size(); ++x)
    if (is_completely_join_irreducible(lattice, x)) out.push_back(x);
  return out;
}

Sublattice interval_sublattice(const Lattice& lattice, Elem a, Elem b) {
  if (!lattice.leq(a, b))
    throw Error(ErrorCode::NotComparable,
                "interval [" + lattice.name(a) + ", " + lattice.name(b) + "] is not ordered", {a, b});
  std::vector<Elem> to_host;
  std::vector<std::optional<Elem>> from_host(lattice.size());
  std::vector<std::string> names;
  for (Elem x = 0; x < lattice.size(); ++x) {
    if (lattice.leq(a, x) && lattice.leq(x, b)) {
      from_host[x] = to_host.size();
      to_host.push_back(x);
      names.push_back(lattice.name(x));
    }
  }
  const std::size_t m = to_host.size();
  std::vector<bool> leq(m * m);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) leq[i * m + j] = lattice.leq(to_host[i], to_host[j]);
  return Sublattice{Lattice::from_order(std::move(names), leq), std::move(to_host), std::move(from_host)};
}

Chain make_chain(const Lattice& lattice, std::vector<Elem> points) {
  if (points.size() < 2) throw Error(ErrorCode::InvalidChain, "a chain needs at least the bottom and the top");
  for (Elem p : points)
    if (p >= lattice.size()) throw Error(ErrorCode::UnknownElement, "chain point out of range");
  if (points.front() != lattice.bottom() || points.back() != lattice.top())
    throw Error(ErrorCode::InvalidChain, "chain must start at the bottom and end at the top");
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    if (!lattice.lt(points[i], points[i + 1]))
      throw Error(ErrorCode::InvalidChain,
                  "chain points '" + lattice.name(points[i]) + "' and '" + lattice.name(points[i + 1]) +
                      "' are not strictly increasing",
                  {points[i], points[i + 1]});
  return Chain{std::move(points)};
}

Check check_linear_sum(const Lattice& lattice, const Chain& chain) {
  for (Elem x = 0; x < lattice.size(); ++x)
    for (Elem c : chain.points)
      if (!lattice.comparable(x, c)) return Check::fail({x, c});
  return Check::pass();
}

bool IntervalFamily::has_lower_gap(const Lattice& lattice) const {
  return !intervals.empty() && intervals.front().lower != lattice.bottom();
}

bool IntervalFamily::has_upper_gap(const Lattice& lattice) const {
  return !intervals.empty() && intervals.back().upper != lattice.top();
}

SemiLinearReport check_semi_linear_sum(const Lattice& lattice, const IntervalFamily& family) {
  SemiLinearReport r;
  const auto& iv = family.intervals;
  for (std::size_t i = 0; i < iv.size() && r.nonempty.holds; ++i)
    if (!lattice.lt(iv[i].lower, iv[i].upper)) r.nonempty = Check::fail({i});

  for (std::size_t i = 0; i < iv.size() && r.ordered.holds; ++i)
    for (std::size_t j = i + 1; j < iv.size(); ++j)
      if (!lattice.leq(iv[i].upper, iv[j].lower)) {
        r.ordered = Check::fail({i, j});
        break;
      }

  auto in_open = [&](Elem x, const ClosedInterval& c) { return lattice.lt(c.lower, x) && lattice.lt(x, c.upper); };
  for (std::size_t i = 0; i < iv.size() && r.disjoint.holds; ++i)
    for (std::size_t j = i + 1; j < iv.size() && r.disjoint.holds; ++j)
      for (Elem x = 0; x < lattice.size(); ++x)
        if (in_open(x, iv[i]) && in_open(x, iv[j])) {
          r.disjoint = Check::fail({i, j, x});
          break;
        }

  for (Elem x = 0; x < lattice.size() && r.comparable.holds; ++x)
    for (const auto& c : iv) {
      if (!lattice.comparable(x, c.lower)) {
        r.comparable = Check::fail({x, c.lower});
        break;
      }
      if (!lattice.comparable(x, c.upper)) {
        r.comparable = Check::fail({x, c.upper});
        break;
      }
    }
  return r;
}

}  // namespace latnorm
