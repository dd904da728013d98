#pragma once

// Naive reference implementations used to cross-check the library. They
// share no code with it beyond the Lattice accessors leq/join/meet, which
// are themselves cross-checked against order_lub/order_glb below.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "latnorm/generate.hpp"
#include "latnorm/lattice.hpp"
#include "latnorm/maps.hpp"
#include "latnorm/tnorm.hpp"

namespace oracle {

using latnorm::BinaryOp;
using latnorm::Elem;
using latnorm::Lattice;
using latnorm::UnaryMap;

/// Least upper bound by scanning the order relation.
inline std::optional<Elem> order_lub(const Lattice& l, Elem x, Elem y) {
  std::optional<Elem> best;
  for (Elem c = 0; c < l.size(); ++c) {
    if (!l.leq(x, c) || !l.leq(y, c)) continue;
    bool least = true;
    for (Elem d = 0; d < l.size(); ++d)
      if (l.leq(x, d) && l.leq(y, d) && !l.leq(c, d)) least = false;
    if (least) best = c;
  }
  return best;
}

inline std::optional<Elem> order_glb(const Lattice& l, Elem x, Elem y) {
  std::optional<Elem> best;
  for (Elem c = 0; c < l.size(); ++c) {
    if (!l.leq(c, x) || !l.leq(c, y)) continue;
    bool greatest = true;
    for (Elem d = 0; d < l.size(); ++d)
      if (l.leq(d, x) && l.leq(d, y) && !l.leq(d, c)) greatest = false;
    if (greatest) best = c;
  }
  return best;
}

/// Calls fn on every nonempty subset of the carrier with at most k elements.
inline void for_small_subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<Elem>&)>& fn) {
  std::vector<Elem> cur;
  std::function<void(Elem)> rec = [&](Elem start) {
    if (!cur.empty()) fn(cur);
    if (cur.size() == k) return;
    for (Elem x = start; x < n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

inline Elem join_all(const Lattice& l, const std::vector<Elem>& s) {
  Elem acc = l.bottom();
  for (Elem x : s) acc = *order_lub(l, acc, x);
  return acc;
}

/// T(a, V S) = V T(a, s) for every a and nonempty S with |S| <= 3, in the
/// second argument.
inline bool subset_left_continuous(const Lattice& l, const BinaryOp& t, std::size_t max_subset = 3) {
  bool ok = true;
  for (Elem a = 0; a < l.size() && ok; ++a)
    for_small_subsets(l.size(), max_subset, [&](const std::vector<Elem>& s) {
      std::vector<Elem> images;
      for (Elem x : s) images.push_back(t(a, x));
      if (t(a, join_all(l, s)) != join_all(l, images)) ok = false;
    });
  return ok;
}

struct Axioms {
  bool neutral = true, monotone = true, commutative = true, associative = true, bounded = true,
       annihilating = true, left_continuous = true;
  bool tnorm() const { return neutral && monotone && commutative && associative; }
  bool tsubnorm() const { return monotone && commutative && associative && bounded; }
};

/// Direct transcription of the axioms, monotonicity in both arguments,
/// left-continuity over subsets of size <= 3.
inline Axioms axioms(const Lattice& l, const BinaryOp& t) {
  Axioms a;
  const std::size_t n = l.size();
  for (Elem x = 0; x < n; ++x) {
    if (t(l.top(), x) != x || t(x, l.top()) != x) a.neutral = false;
    if (t(l.bottom(), x) != l.bottom()) a.annihilating = false;
    for (Elem y = 0; y < n; ++y) {
      if (t(x, y) != t(y, x)) a.commutative = false;
      if (!l.leq(t(x, y), x) || !l.leq(t(x, y), y)) a.bounded = false;
      for (Elem z = 0; z < n; ++z) {
        if (t(t(x, y), z) != t(x, t(y, z))) a.associative = false;
        if (l.leq(y, z) && (!l.leq(t(x, y), t(x, z)) || !l.leq(t(y, x), t(z, x)))) a.monotone = false;
      }
    }
  }
  a.left_continuous = subset_left_continuous(l, t);
  return a;
}

/// Weak f-mapping by definition, checked without the library.
inline bool weak_fmapping(const Lattice& l, const std::vector<Elem>& f) {
  const std::size_t n = l.size();
  for (Elem x = 0; x < n; ++x) {
    if (!l.leq(f[x], x) || f[f[x]] != f[x]) return false;
    for (Elem y = 0; y < n; ++y)
      if (f[*order_lub(l, x, y)] != *order_lub(l, f[x], f[y])) return false;
  }
  std::vector<Elem> image(f);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  // Lattice in the induced order: every pair has a least upper and greatest
  // lower bound inside the image.
  auto bound = [&](Elem u, Elem v, bool upper) -> std::optional<Elem> {
    std::optional<Elem> best;
    for (Elem c : image) {
      const bool is_bound = upper ? (l.leq(u, c) && l.leq(v, c)) : (l.leq(c, u) && l.leq(c, v));
      if (!is_bound) continue;
      bool extreme = true;
      for (Elem d : image) {
        const bool d_bound = upper ? (l.leq(u, d) && l.leq(v, d)) : (l.leq(d, u) && l.leq(d, v));
        if (d_bound && !(upper ? l.leq(c, d) : l.leq(d, c))) extreme = false;
      }
      if (extreme) best = c;
    }
    return best;
  };
  for (Elem u : image)
    for (Elem v : image)
      if (!bound(u, v, true) || !bound(u, v, false)) return false;
  for (Elem u : image)
    for (Elem v : image)
      for (Elem w : image)
        if (*bound(u, *bound(v, w, true), false) != *bound(*bound(u, v, false), *bound(u, w, false), true))
          return false;
  return true;
}

/// Every map on the carrier (n^n of them) filtered by weak_fmapping.
inline std::vector<UnaryMap> all_weak_fmappings(const Lattice& l, bool require_top) {
  const std::size_t n = l.size();
  std::vector<UnaryMap> out;
  std::vector<Elem> f(n, 0);
  while (true) {
    if ((!require_top || f[l.top()] == l.top()) && weak_fmapping(l, f)) out.push_back(UnaryMap{f});
    std::size_t i = n;
    while (i > 0 && ++f[i - 1] == n) f[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// Deterministic stream of generated lattices.
inline std::vector<Lattice> generated_lattices(std::size_t count, std::uint64_t seed = 20261015,
                                               std::size_t max_size = 12) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> k_dist(2, 5);
  std::vector<Lattice> out;
  while (out.size() < count) {
    const unsigned k = k_dist(rng);
    std::uniform_int_distribution<std::size_t> draws(1, k + 1);
    auto l = latnorm::random_meet_closed_lattice(rng, k, draws(rng));
    if (l.size() >= 2 && l.size() <= max_size) out.push_back(std::move(l));
  }
  return out;
}

/// Uniformly random symmetric operator with neutral top and absorbing bottom.
inline BinaryOp random_symmetric_op(const Lattice& l, std::mt19937_64& rng) {
  const std::size_t n = l.size();
  std::uniform_int_distribution<Elem> pick(0, n - 1);
  std::vector<Elem> cells(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x; y < n; ++y) {
      Elem v;
      if (x == l.top()) v = y;
      else if (y == l.top()) v = x;
      else if (x == l.bottom() || y == l.bottom()) v = l.bottom();
      else v = pick(rng);
      cells[x * n + y] = cells[y * n + x] = v;
    }
  return BinaryOp(n, std::move(cells));
}

}  // namespace oracle
