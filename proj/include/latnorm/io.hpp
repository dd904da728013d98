#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "latnorm/construct.hpp"
#include "latnorm/lattice.hpp"
#include "latnorm/maps.hpp"
#include "latnorm/search.hpp"
#include "latnorm/tnorm.hpp"

namespace latnorm {

/// A parse failure. line() is 1-based, 0 when the failure is not tied to a
/// line; cause() holds the underlying validation code for ValidationError.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& message, ErrorCode cause,
             std::vector<Elem> witness = {})
      : Error(code, line ? "line " + std::to_string(line) + ": " + message : message, std::move(witness)),
        line_(line),
        cause_(cause) {}
  std::size_t line() const noexcept { return line_; }
  ErrorCode cause() const noexcept { return cause_; }

 private:
  std::size_t line_;
  ErrorCode cause_;
};

struct ParseOptions {
  /// Accept an `order` block (full 0/1 matrix) in place of `covers`.
  bool allow_order_matrix = false;
};

// Lattice file:
//   elements <label>+
//   covers
//   <lower> <upper>        one cover per line
//   end
// Map file: one `<x> -> <y>` line per element.
// Operator file: `op <n>` followed by n rows of n labels, row = first argument.
// '#' starts a comment everywhere.
Lattice parse_lattice(std::string_view text, const ParseOptions& options = {});
UnaryMap parse_map(const Lattice& lattice, std::string_view text);
BinaryOp parse_op(const Lattice& lattice, std::string_view text);

std::string serialize_lattice(const Lattice& lattice);
std::string serialize_map(const Lattice& lattice, const UnaryMap& f);
std::string serialize_op(const Lattice& lattice, const BinaryOp& op);

/// Hasse diagram as a DOT digraph, edges lower -> upper in cover order.
std::string export_dot(const Lattice& lattice);

/// Decomposition file, the input of the ordinal-sum constructions:
///   chain <c_1> ... <c_n>          chain constructions (thm41, cor41)
///   interval <a> <b>               repeated in order (thm42, saminger)
///   summand <i> <spec>             1-based interval index
///   top <spec>                     [b_n, 1] (thm42) or last chain interval (cor41)
///   gap <i> map ... end            thm42: 0 = [0, a_1], i = [b_i, a_{i+1}];
///                                  cor41: i = [c_i, c_{i+1}]
/// where <spec> is `meet`, `drastic`, `bottom`, or `op <m>` followed by m
/// rows of host labels over the interval, in host index order.
struct DecompositionFile {
  std::optional<std::vector<Elem>> chain;
  std::vector<ClosedInterval> intervals;
  std::map<std::size_t, BinaryOp> summands;  ///< by 1-based index, interval-local
  std::optional<BinaryOp> top;
  std::map<std::size_t, UnaryMap> gaps;      ///< interval-local
};

DecompositionFile parse_decomposition(const Lattice& lattice, std::string_view text);

ChainDecomposition to_chain_decomposition(const Lattice& lattice, const DecompositionFile& file);
SemiLinearDecomposition to_semilinear_decomposition(const Lattice& lattice, const DecompositionFile& file);

/// Maps and operators are printed with element labels.
nlohmann::json labels(const Lattice& lattice, const std::vector<Elem>& elems);
nlohmann::json to_json(const Lattice& lattice, const Check& check);
nlohmann::json to_json(const Lattice& lattice, const AxiomReport& report);
nlohmann::json to_json(const Lattice& lattice, const FMapReport& report);
nlohmann::json to_json(const Lattice& lattice, const SemiLinearReport& report);
nlohmann::json to_json(const Lattice& lattice, const BinaryOp& op);
nlohmann::json to_json(const Lattice& lattice, const UnaryMap& f);
nlohmann::json to_json(const Lattice& lattice, const SearchResult& result);

}  // namespace latnorm
