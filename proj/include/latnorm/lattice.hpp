#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latnorm/error.hpp"

namespace latnorm {

using CoverPair = std::pair<Elem, Elem>;

/// A finite bounded lattice over the dense carrier {0, ..., n-1}.
///
/// All order-theoretic relations are tabulated at construction; a Lattice is
/// immutable afterwards and every query is O(1) or a small scan. Because the
/// carrier is finite, the lattice is complete: every nonempty subset has a
/// join and a meet, and the empty join is the bottom.
class Lattice {
 public:
  /// Builds from a cover relation (lower, upper). Redundant pairs are
  /// accepted and reduced away. Throws NotAPoset on cycles, NoBounds when no
  /// global minimum or maximum exists, and NotALattice (witness pair) when
  /// some pair lacks a least upper or greatest lower bound.
  static Lattice from_covers(std::vector<std::string> names, std::span<const CoverPair> covers);

  /// Builds from a full order matrix (row-major, leq[x * n + y] means x <= y).
  /// The matrix must already be reflexive and transitive.
  static Lattice from_order(std::vector<std::string> names, const std::vector<bool>& leq);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Elem x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Elem> find(std::string_view label) const;

  bool leq(Elem x, Elem y) const { return leq_[x * size() + y] != 0; }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  bool comparable(Elem x, Elem y) const { return leq(x, y) || leq(y, x); }
  Elem join(Elem x, Elem y) const { return join_[x * size() + y]; }
  Elem meet(Elem x, Elem y) const { return meet_[x * size() + y]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  /// Transitive reduction of the order, sorted by (lower, upper).
  const std::vector<CoverPair>& covers() const noexcept { return covers_; }
  std::vector<Elem> lower_covers(Elem x) const;

  /// Elements sorted so that x precedes y whenever x < y (ties by index).
  const std::vector<Elem>& linear_extension() const noexcept { return linear_extension_; }
  /// Position of x in linear_extension().
  std::size_t rank(Elem x) const { return rank_[x]; }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

 private:
  Lattice() = default;

  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  std::vector<CoverPair> covers_;
  std::vector<Elem> linear_extension_;
  std::vector<std::size_t> rank_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

enum class Bound { Join, Meet };

/// Iterated binary join or meet of a nonempty set. Throws EmptySet.
Elem bound_of(const Lattice& lattice, std::span<const Elem> set, Bound kind);

/// Binary distributivity a ^ (b v c) = (a ^ b) v (a ^ c). On a finite lattice
/// this is equivalent to join-infinite distributivity. Witness: (a, b, c).
Check is_distributive(const Lattice& lattice);

/// x is completely join-irreducible iff x differs from the join of its strict
/// down-set. The bottom is never completely join-irreducible.
bool is_completely_join_irreducible(const Lattice& lattice, Elem x);
std::vector<Elem> completely_join_irreducibles(const Lattice& lattice);

/// Closed interval [a, b] as a lattice of its own, with the host embedding.
/// Element order follows host index order.
struct Sublattice {
  Lattice lattice;
  std::vector<Elem> to_host;
  std::vector<std::optional<Elem>> from_host;

  Elem host(Elem local) const { return to_host.at(local); }
  std::optional<Elem> local(Elem host_elem) const { return from_host.at(host_elem); }
  bool contains(Elem host_elem) const { return from_host.at(host_elem).has_value(); }
};

/// Throws NotComparable unless a <= b.
Sublattice interval_sublattice(const Lattice& lattice, Elem a, Elem b);

/// A chain 0 = c_1 < c_2 < ... < c_n = 1.
struct Chain {
  std::vector<Elem> points;
};

/// Validates a chain specification against the lattice. Throws InvalidChain.
Chain make_chain(const Lattice& lattice, std::vector<Elem> points);

/// The lattice is a linear sum of the chain's consecutive intervals iff every
/// element is comparable with every chain point. Witness: (x, c).
Check check_linear_sum(const Lattice& lattice, const Chain& chain);

struct ClosedInterval {
  Elem lower;
  Elem upper;

  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

struct IntervalFamily {
  std::vector<ClosedInterval> intervals;

  bool has_lower_gap(const Lattice& lattice) const;
  bool has_upper_gap(const Lattice& lattice) const;
};

/// Per-condition verdicts for a semi-linear sum.
struct SemiLinearReport {
  Check nonempty;    ///< (a_i, b_i] is nonempty. Witness: (i).
  Check ordered;     ///< b_i <= a_j for i < j. Witness: (i, j).
  Check disjoint;    ///< open intervals pairwise disjoint. Witness: (i, j, x).
  Check comparable;  ///< every x comparable with all endpoints. Witness: (x, endpoint).

  bool holds() const { return nonempty.holds && ordered.holds && disjoint.holds && comparable.holds; }
};

SemiLinearReport check_semi_linear_sum(const Lattice& lattice, const IntervalFamily& family);

}  // namespace latnorm
