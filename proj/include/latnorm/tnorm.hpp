#pragma once

#include <compare>
#include <vector>

#include "latnorm/lattice.hpp"

namespace latnorm {

/// A total binary operator on a lattice carrier, stored row-major with the
/// first argument selecting the row.
class BinaryOp {
 public:
  BinaryOp() = default;
  BinaryOp(std::size_t n, std::vector<Elem> cells);

  template <class F>
  static BinaryOp from_function(std::size_t n, F&& fn) {
    std::vector<Elem> cells(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) cells[x * n + y] = fn(x, y);
    return BinaryOp(n, std::move(cells));
  }

  Elem operator()(Elem x, Elem y) const { return cells_[x * n_ + y]; }
  void set(Elem x, Elem y, Elem v) { cells_[x * n_ + y] = v; }
  std::size_t size() const noexcept { return n_; }
  const std::vector<Elem>& cells() const noexcept { return cells_; }

  friend auto operator<=>(const BinaryOp&, const BinaryOp&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> cells_;
};

/// The strongest t-norm, x ^ y.
BinaryOp meet_op(const Lattice& lattice);
/// The weakest t-norm: x ^ y when one argument is the top, else the bottom.
BinaryOp drastic_op(const Lattice& lattice);
BinaryOp constant_op(const Lattice& lattice, Elem value);

/// Verdicts for every axiom and derived property. Every axiom is evaluated
/// even after another fails; each failure names the first failing tuple in
/// index order.
struct AxiomReport {
  Check neutral_top;      ///< (a) T(1, x) = x.                  Witness: (x).
  Check monotone;         ///< (b) y <= z => T(x, y) <= T(x, z). Witness: (x, y, z).
  Check commutative;      ///< (c) T(x, y) = T(y, x).            Witness: (x, y).
  Check associative;      ///< (d) T(T(x, y), z) = T(x, T(y, z)). Witness: (x, y, z).
  Check bounded_by_meet;  ///< (e) T(x, y) <= x ^ y.             Witness: (x, y).
  Check annihilating;     ///< T(0, y) = 0.                      Witness: (y).
  Check strong;           ///< T(1, 1) = 1.                      Witness: (1).
  Check left_continuous;  ///< T(a, x v y) = T(a, x) v T(a, y).  Witness: (a, x, y).

  bool is_tnorm() const { return neutral_top.holds && monotone.holds && commutative.holds && associative.holds; }
  bool is_tsubnorm() const {
    return monotone.holds && commutative.holds && associative.holds && bounded_by_meet.holds;
  }
  bool is_strong_tsubnorm() const { return is_tsubnorm() && strong.holds; }
  bool is_left_continuous_tnorm() const { return is_tnorm() && left_continuous.holds; }
  bool is_left_continuous_tsubnorm() const { return is_tsubnorm() && left_continuous.holds; }
  bool is_left_continuous_strong_tsubnorm() const { return is_strong_tsubnorm() && left_continuous.holds; }
};

/// Left-continuity is tested on binary joins, which on a finite lattice is
/// equivalent to distributing over every nonempty join.
AxiomReport check_operator(const Lattice& lattice, const BinaryOp& op);

/// Elements with T(x, x) = x.
std::vector<Elem> idempotents(const Lattice& lattice, const BinaryOp& op);

/// Whether T maps (a, b]^2 into (a, b]. Throws NotComparable unless a <= b.
/// Witness: (x, y).
Check closed_on_halfopen(const Lattice& lattice, const BinaryOp& op, Elem a, Elem b);

/// Restriction of a host operator to an interval sublattice. Throws
/// ValidationError, witness (x, y) in host indices, when some value leaves
/// the interval.
BinaryOp restrict_to(const Sublattice& sub, const BinaryOp& op);

/// Restriction of T to the block (a, b]^2, completed by T'(a, y) = T'(x, a) = a,
/// as an operator on the interval sublattice [a, b]. Block values must lie in
/// [a, b]; otherwise throws ValidationError with the host witness (x, y).
BinaryOp restrict_halfopen(const Sublattice& sub, const BinaryOp& op);

}  // namespace latnorm
