#include "latnorm/tnorm.hpp"

namespace latnorm {

BinaryOp::BinaryOp(std::size_t n, std::vector<Elem> cells) : n_(n), cells_(std::move(cells)) {
  if (cells_.size() != n * n) throw Error(ErrorCode::SizeMismatch, "operator table is not square");
  for (Elem v : cells_)
    if (v >= n) throw Error(ErrorCode::UnknownElement, "operator value out of range");
}

BinaryOp meet_op(const Lattice& l) {
  return BinaryOp::from_function(l.size(), [&](Elem x, Elem y) { return l.meet(x, y); });
}

BinaryOp drastic_op(const Lattice& l) {
  return BinaryOp::from_function(l.size(), [&](Elem x, Elem y) {
    return (x == l.top() || y == l.top()) ? l.meet(x, y) : l.bottom();
  });
}

BinaryOp constant_op(const Lattice& l, Elem value) {
  return BinaryOp::from_function(l.size(), [&](Elem, Elem) { return value; });
}

AxiomReport check_operator(const Lattice& l, const BinaryOp& t) {
  if (t.size() != l.size()) throw Error(ErrorCode::SizeMismatch, "operator size differs from lattice size");
  const std::size_t n = l.size();
  const Elem top = l.top();
  const Elem bot = l.bottom();
  AxiomReport r;

  for (Elem x = 0; x < n; ++x)
    if (t(top, x) != x) {
      r.neutral_top = Check::fail({x});
      break;
    }
  for (Elem y = 0; y < n; ++y)
    if (t(bot, y) != bot) {
      r.annihilating = Check::fail({y});
      break;
    }
  if (t(top, top) != top) r.strong = Check::fail({top});

  for (Elem x = 0; x < n && r.commutative.holds; ++x)
    for (Elem y = 0; y < n; ++y)
      if (t(x, y) != t(y, x)) {
        r.commutative = Check::fail({x, y});
        break;
      }
  for (Elem x = 0; x < n && r.bounded_by_meet.holds; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!l.leq(t(x, y), l.meet(x, y))) {
        r.bounded_by_meet = Check::fail({x, y});
        break;
      }

  bool mono = true, assoc = true, lc = true;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (mono && l.leq(y, z) && !l.leq(t(x, y), t(x, z))) {
          r.monotone = Check::fail({x, y, z});
          mono = false;
        }
        if (assoc && t(t(x, y), z) != t(x, t(y, z))) {
          r.associative = Check::fail({x, y, z});
          assoc = false;
        }
        if (lc && t(x, l.join(y, z)) != l.join(t(x, y), t(x, z))) {
          r.left_continuous = Check::fail({x, y, z});
          lc = false;
        }
      }
  return r;
}

std::vector<Elem> idempotents(const Lattice& l, const BinaryOp& t) {
  std::vector<Elem> out;
  for (Elem x = 0; x < l.size(); ++x)
    if (t(x, x) == x) out.push_back(x);
  return out;
}

Check closed_on_halfopen(const Lattice& l, const BinaryOp& t, Elem a, Elem b) {
  if (!l.leq(a, b))
    throw Error(ErrorCode::NotComparable, "(" + l.name(a) + ", " + l.name(b) + "] is not an interval", {a, b});
  auto inside = [&](Elem x) { return l.lt(a, x) && l.leq(x, b); };
  for (Elem x = 0; x < l.size(); ++x) {
    if (!inside(x)) continue;
    for (Elem y = 0; y < l.size(); ++y)
      if (inside(y) && !inside(t(x, y))) return Check::fail({x, y});
  }
  return Check::pass();
}

BinaryOp restrict_to(const Sublattice& sub, const BinaryOp& t) {
  const std::size_t m = sub.lattice.size();
  std::vector<Elem> cells(m * m);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      const Elem v = t(sub.host(i), sub.host(j));
      const auto local = sub.local(v);
      if (!local) throw Error(ErrorCode::ValidationError, "operator leaves the interval", {sub.host(i), sub.host(j)});
      cells[i * m + j] = *local;
    }
  return BinaryOp(m, std::move(cells));
}

BinaryOp restrict_halfopen(const Sublattice& sub, const BinaryOp& t) {
  const std::size_t m = sub.lattice.size();
  const Elem low = sub.lattice.bottom();
  std::vector<Elem> cells(m * m, low);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      if (i == low || j == low) continue;
      const Elem v = t(sub.host(i), sub.host(j));
      const auto local = sub.local(v);
      if (!local)
        throw Error(ErrorCode::ValidationError, "block value leaves the interval", {sub.host(i), sub.host(j)});
      cells[i * m + j] = *local;
    }
  return BinaryOp(m, std::move(cells));
}

}  // namespace latnorm
