#include "latnorm/generate.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace latnorm {

Lattice random_meet_closed_lattice(std::mt19937_64& rng, unsigned k, std::size_t draws) {
  if (k < 1 || k > 5) throw Error(ErrorCode::TooLarge, "generator supports 1 <= k <= 5");
  const unsigned full = (1u << k) - 1;
  std::uniform_int_distribution<unsigned> pick(0, full);
  std::set<unsigned> sets{full};
  for (std::size_t i = 0; i < draws; ++i) sets.insert(pick(rng));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<unsigned> now(sets.begin(), sets.end());
    for (unsigned a : now)
      for (unsigned b : now) grew = sets.insert(a & b).second || grew;
  }
  std::vector<unsigned> elems(sets.begin(), sets.end());
  std::stable_sort(elems.begin(), elems.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  const std::size_t n = elems.size();
  std::vector<std::string> names;
  for (unsigned s : elems) {
    std::string label;
    for (unsigned bit = k; bit-- > 0;) label += (s >> bit) & 1u ? '1' : '0';
    names.push_back(std::move(label));
  }
  std::vector<bool> leq(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = (elems[i] & ~elems[j]) == 0;
  return Lattice::from_order(std::move(names), leq);
}

}  // namespace latnorm
