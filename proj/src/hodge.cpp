#include "meshlap/hodge.hpp"

#include <stdexcept>
#include <string>

namespace meshlap {

void validate_blade(const BasisBlade& blade) {
  if (blade.dim < 0) throw std::invalid_argument("blade dimension must be nonnegative");
  if (blade.sign != 1 && blade.sign != -1) throw std::invalid_argument("blade sign must be +1 or -1");
  int prev = 0;
  for (int i : blade.indices) {
    if (i < 1 || i > blade.dim)
      throw std::invalid_argument("blade index " + std::to_string(i) + " out of range 1.." +
                                  std::to_string(blade.dim));
    if (i <= prev)
      throw std::invalid_argument("blade indices must be strictly increasing, got repeated or unsorted index " +
                                  std::to_string(i));
    prev = i;
  }
}

BasisBlade hodge_star(const BasisBlade& blade) {
  validate_blade(blade);

  BasisBlade dual;
  dual.dim = blade.dim;
  dual.indices.reserve(blade.dim - blade.grade());

  // Complement of the index set, and the parity of [i1..ik, j1..j_{m-k}]:
  // every pair (i, j) with i > j is an inversion, so count, for each i in the
  // blade, the complement indices smaller than it.
  long inversions = 0;
  std::size_t at = 0;
  for (int j = 1; j <= blade.dim; ++j) {
    if (at < blade.indices.size() && blade.indices[at] == j) {
      ++at;
    } else {
      dual.indices.push_back(j);
    }
  }
  for (int i : blade.indices) {
    for (int j : dual.indices) {
      if (j < i) ++inversions;
    }
  }

  dual.sign = (inversions % 2 == 0) ? blade.sign : -blade.sign;
  return dual;
}

} // namespace meshlap
