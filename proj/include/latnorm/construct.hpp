#pragma once

#include <optional>
#include <vector>

#include "latnorm/lattice.hpp"
#include "latnorm/maps.hpp"
#include "latnorm/tnorm.hpp"

namespace latnorm {

/// Raised when a map handed to a construction fails its required conditions.
/// Carries the full condition report.
class MapConditionError : public Error {
 public:
  MapConditionError(ErrorCode code, const std::string& message, FMapReport report)
      : Error(code, message), report_(std::move(report)) {}
  const FMapReport& report() const noexcept { return report_; }

 private:
  FMapReport report_;
};

/// T(x, y) = f(x) ^ f(y), the meet taken inside Im(f). Always a
/// left-continuous t-subnorm; strong when f preserves the top.
/// Throws MapConditionError(NotWeakFMapping).
BinaryOp subnorm_from_weak_fmap(const Lattice& lattice, const UnaryMap& f);

/// T(x, y) = x ^ y when the top is an argument, otherwise f(x) ^ f(y) inside
/// Im(f). A left-continuous t-norm whenever the top is completely
/// join-irreducible; that hypothesis is not enforced here.
/// Throws MapConditionError(NotFMapping).
BinaryOp tnorm_from_fmap(const Lattice& lattice, const UnaryMap& f);

/// A linear-sum decomposition: summands[i] acts on [c_i, c_{i+1}], in the
/// local indices of interval_sublattice(c_i, c_{i+1}).
struct ChainDecomposition {
  Chain chain;
  std::vector<BinaryOp> summands;
};

/// Ordinal sum over a chain: T_i on the block (c_i, c_{i+1}]^2, meet
/// elsewhere. Throws InvalidDecomposition if the lattice is not a linear sum
/// of the chain, a summand has the wrong size, or a summand is not
/// annihilating on its interval.
BinaryOp ordinal_sum_chain(const Lattice& lattice, const ChainDecomposition& d);

/// Semi-linear decomposition. Every operator and map is expressed in the
/// local indices of the closed interval it acts on:
///   summands[i]      on [a_i, b_i]
///   top_op           on [b_n, 1]          (present iff b_n < 1)
///   lower_gap_map    on [0, a_1]          (present iff 0 < a_1)
///   gap_maps[i]      on [b_i, a_{i+1}]    (present iff b_i < a_{i+1})
struct SemiLinearDecomposition {
  IntervalFamily family;
  std::vector<BinaryOp> summands;
  std::optional<BinaryOp> top_op;
  std::optional<UnaryMap> lower_gap_map;
  std::vector<std::optional<UnaryMap>> gap_maps;
};

enum class GapMapPolicy {
  /// Gap maps must pass the weak f-mapping check.
  RequireWeakFMapping,
  /// Evaluate the formula as written: the only requirement is that each gap
  /// map's value set is a lattice in the induced order, so its inner meet is
  /// defined.
  FormulaOnly,
};

/// Five-branch ordinal sum over a semi-linear decomposition:
///   T_{n+1} on (b_n, 1]^2, T_i on (a_i, b_i]^2, f_i(x) ^ f_i(y) on
///   (b_i, a_{i+1}]^2, f_0(x) ^ f_0(y) on (0, a_1]^2, x ^ y otherwise,
/// with gap meets taken inside the image of the gap map.
/// Throws InvalidDecomposition, MissingTopOp, MissingGapMap.
BinaryOp ordinal_sum_semilinear(const Lattice& lattice, const SemiLinearDecomposition& d,
                                GapMapPolicy policy = GapMapPolicy::RequireWeakFMapping);

/// Chain ordinal sum whose lower blocks are induced by weak f-mappings:
/// gap_maps[i] acts on [c_i, c_{i+1}] for every interval but the last, and
/// top_op acts on the last interval [c_{n-1}, 1].
BinaryOp corollary41_construct(const Lattice& lattice, const Chain& chain, const std::vector<UnaryMap>& gap_maps,
                               const BinaryOp& top_op);

/// The classic ordinal sum: ops[i] on the closed square [a_i, b_i]^2 (first
/// listed interval wins on shared cells), meet elsewhere. No axiom is
/// guaranteed; callers run check_operator. Throws InvalidIntervals.
BinaryOp saminger_sum(const Lattice& lattice, const std::vector<ClosedInterval>& intervals,
                      const std::vector<BinaryOp>& ops);

/// Recovers the chain summands T_i(x, y) = T(x, y) on (c_i, c_{i+1}]^2 and
/// c_i elsewhere on [c_i, c_{i+1}]. Throws NotOrdinalSumShape, witness (x, y),
/// when T differs from the meet on some cross-block cell or a block value
/// leaves its interval.
std::vector<BinaryOp> extract_summands(const Lattice& lattice, const BinaryOp& op, const Chain& chain);

/// What the left-continuous t-norm characterisation requires of each summand.
struct SummandVerdict {
  ClosedInterval interval;
  bool requires_tnorm = false;  ///< the summand containing the top
  bool satisfied = false;
};

struct SumClassification {
  std::vector<SummandVerdict> summands;
  bool predicts_lc_tnorm = true;
};

/// Non-top summands must be left-continuous t-subnorms, the top summand a
/// left-continuous t-norm.
SumClassification classify_chain_summands(const Lattice& lattice, const ChainDecomposition& d);
/// Same shape for a semi-linear decomposition: T_1..T_n and, if b_n < 1, T_{n+1}.
SumClassification classify_semilinear_summands(const Lattice& lattice, const SemiLinearDecomposition& d);

enum class RestrictionCriterion {
  Vacuous,                 ///< first interval with a_1 = 0
  GapMapIsFMapping,        ///< preceding gap map must preserve its top
  PrecedingSummandStrong,  ///< preceding summand must be a left-continuous strong t-subnorm
};

struct RestrictionReport {
  bool restriction_matches = false;   ///< T on [a_i, b_i]^2 equals T_i
  std::vector<Elem> mismatch;         ///< first differing (x, y), host indices
  RestrictionCriterion criterion = RestrictionCriterion::Vacuous;
  bool criterion_holds = true;

  bool agrees() const { return restriction_matches == criterion_holds; }
};

/// Compares T restricted to [a_i, b_i] with T_i (0-based interval index) and
/// evaluates the structural criterion that should be equivalent to it.
/// Throws IndexOutOfRange.
RestrictionReport check_restriction(const Lattice& lattice, const SemiLinearDecomposition& d, const BinaryOp& op,
                                    std::size_t interval);

}  // namespace latnorm
