#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "latnorm/lattice.hpp"

namespace latnorm {

/// Result-count limit for enumerations: kUnlimited keeps everything, 0 counts
/// without retaining results.
inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// A total self-map on a lattice's carrier, in table form.
struct UnaryMap {
  std::vector<Elem> table;

  Elem operator()(Elem x) const { return table[x]; }
  std::size_t size() const noexcept { return table.size(); }

  static UnaryMap identity(std::size_t n);
  static UnaryMap constant(std::size_t n, Elem value);

  friend auto operator<=>(const UnaryMap&, const UnaryMap&) = default;
};

/// Verdicts for the five defining conditions of an f-mapping plus the
/// order-preservation consequence. All conditions are evaluated even after
/// a failure.
struct FMapReport {
  Check top_preserving;     ///< (i)   f(1) = 1. Witness: (1).
  Check contractive;        ///< (ii)  f(x) <= x. Witness: (x).
  Check idempotent;         ///< (iii) f(f(x)) = f(x). Witness: (x).
  Check join_preserving;    ///< (iv)  f(x v y) = f(x) v f(y). Witness: (x, y).
  Check image_is_lattice;   ///< (v)   the value set is a lattice in the induced order. Witness: (u, v).
  Check image_distributive; ///< (v)   ... and that lattice is distributive. Witness: (u, v, w).
  Check order_preserving;   ///< x <= y implies f(x) <= f(y). Witness: (x, y).

  bool is_weak_fmapping() const {
    return contractive.holds && idempotent.holds && join_preserving.holds && image_is_lattice.holds &&
           image_distributive.holds;
  }
  bool is_fmapping() const { return is_weak_fmapping() && top_preserving.holds; }
};

/// Full report on f; both entry points evaluate every condition, they differ
/// only in which verdict a caller is expected to read.
FMapReport check_weak_fmapping(const Lattice& lattice, const UnaryMap& f);
FMapReport check_fmapping(const Lattice& lattice, const UnaryMap& f);

/// The value set of a map viewed as a poset under the host order, when that
/// poset is a lattice. Joins and meets are taken inside the subset, so the
/// meet of two image elements can sit strictly below their host meet.
class ImageLattice {
 public:
  ImageLattice(const Lattice& host, std::vector<Elem> subset, Lattice induced);

  /// Host indices of the image, ascending.
  const std::vector<Elem>& elements() const noexcept { return subset_; }
  /// The image as a lattice in its own right (local indices, host labels).
  const Lattice& lattice() const noexcept { return induced_; }

  bool contains(Elem host_elem) const { return local_.at(host_elem).has_value(); }
  Elem to_host(Elem local) const { return subset_.at(local); }
  std::optional<Elem> to_local(Elem host_elem) const { return local_.at(host_elem); }

  /// Meet/join within the image, host indices in and out. Throws NotInImage.
  Elem meet(Elem u, Elem v) const;
  Elem join(Elem u, Elem v) const;

  bool is_distributive() const noexcept { return distributive_; }
  bool is_sublattice_of_host() const noexcept { return sublattice_; }

 private:
  Elem local_or_throw(Elem host_elem) const;

  std::vector<Elem> subset_;
  std::vector<std::optional<Elem>> local_;
  Lattice induced_;
  bool distributive_ = false;
  bool sublattice_ = false;
};

/// The subset of the host as an induced poset. Returns the lattice, or the
/// first pair (host indices) lacking a bound inside the subset.
struct InducedPoset {
  std::optional<Lattice> lattice;
  std::vector<Elem> witness;
};
InducedPoset induced_poset(const Lattice& host, const std::vector<Elem>& subset);

/// Requires f idempotent (NotIdempotent) and its image to be a lattice under
/// the induced order (NotALatticeInducedPoset).
ImageLattice image_lattice(const Lattice& lattice, const UnaryMap& f);

/// Greatest element of the image below both u and v. Throws NotInImage.
Elem image_meet(const ImageLattice& image, Elem u, Elem v);

std::vector<Elem> fixed_points(const Lattice& lattice, const UnaryMap& f);

/// The two-valued map sending the top to itself and everything else to the
/// bottom. Throws TopNotCJI, witness (x, y) with x, y < 1 and x v y = 1.
UnaryMap canonical_fmapping(const Lattice& lattice);

struct MapEnumeration {
  std::vector<UnaryMap> maps;  ///< lexicographic by table
  std::size_t count = 0;       ///< number of maps found (including unretained ones)
  bool exhausted = true;       ///< false when truncated by the result limit
};

/// Every weak f-mapping (every f-mapping when require_top) on the lattice.
/// Elements are assigned in index order with values in increasing index
/// order, so maps are produced lexicographically. With a finite nonzero
/// max_results the search stops as soon as it finds one map beyond the
/// limit, reporting exhausted = false; 0 counts every map and keeps none.
MapEnumeration enumerate_weak_fmappings(const Lattice& lattice, bool require_top,
                                        std::size_t max_results = kUnlimited);

}  // namespace latnorm
