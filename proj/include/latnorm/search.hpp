#pragma once

#include <cstdint>
#include <vector>

#include "latnorm/maps.hpp"
#include "latnorm/tnorm.hpp"

namespace latnorm {

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned_bound = 0;       ///< values excluded by T(x, y) <= x ^ y
  std::uint64_t pruned_monotone = 0;
  std::uint64_t pruned_left_continuity = 0;
  std::uint64_t pruned_associativity = 0;
  std::uint64_t leaf_rejections = 0;    ///< complete tables failing the post-hoc check

  SearchStats& operator+=(const SearchStats& o);
};

struct SearchResult {
  std::vector<BinaryOp> found;  ///< sorted lexicographically by table
  std::size_t count = 0;        ///< operators found, retained or not
  bool exhausted = true;        ///< the whole space was covered
  SearchStats stats;
};

struct SearchOptions {
  /// kUnlimited keeps everything; 0 counts without keeping tables. With a
  /// finite limit the search stops at the first operator beyond it.
  std::size_t max_results = kUnlimited;
  /// Workers splitting the tree by the first cell's value. Results are
  /// identical for every worker count.
  unsigned workers = 1;
};

/// Complete backtracking search for left-continuous t-norms. Top row and
/// column are fixed to the identity, bottom row and column to the bottom;
/// the remaining symmetric cells are assigned by decreasing x v y with
/// domains below x ^ y, pruning on monotonicity, binary left-continuity and
/// associativity over assigned cells. Every emitted table is re-verified with
/// check_operator.
SearchResult search_lc_tnorms(const Lattice& lattice, const SearchOptions& options = {});

/// Independent oracle for |L| <= 4: enumerates every symmetric table that has
/// the top as neutral element and filters with check_operator. Throws
/// TooLarge beyond four elements.
SearchResult brute_force_lc_tnorms(const Lattice& lattice);

}  // namespace latnorm
