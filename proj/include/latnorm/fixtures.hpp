#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latnorm/construct.hpp"
#include "latnorm/lattice.hpp"
#include "latnorm/maps.hpp"
#include "latnorm/tnorm.hpp"

namespace latnorm::fixtures {

/// Bundled lattices, in the lattice file grammar.
const std::vector<std::string>& catalog();
std::string_view lattice_source(std::string_view name);  ///< throws UnknownFixture
Lattice lattice(std::string_view name);

/// Tables 1 to 9 in the map or operator grammar. Tables 5, 6 and 8 are
/// written over their interval sublattices; 7 is the table as printed.
std::string_view table_source(int number);  ///< throws UnknownFixture

/// Decomposition files for the two semi-linear examples on fig3.
std::string_view example41_source();
std::string_view example42_source();

/// Table 7 with the two cells that the construction actually produces.
BinaryOp corrected_table7(const Lattice& fig3);

/// Cells (x, y) where the tables differ, row-major order.
std::vector<std::pair<Elem, Elem>> differing_cells(const BinaryOp& a, const BinaryOp& b);

struct FixtureCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FixtureReport {
  std::string id;
  std::string summary;
  std::vector<FixtureCheck> checks;
  std::vector<std::string> errata;  ///< disagreements with the printed source, each confirmed by a check

  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

const std::vector<std::string>& fixture_ids();
FixtureReport run_fixture(std::string_view id);  ///< throws UnknownFixture

}  // namespace latnorm::fixtures
