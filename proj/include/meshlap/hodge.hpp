#pragma once

#include <vector>

namespace meshlap {

// Basis k-blade of an oriented orthonormal basis of R^m: a signed wedge
// e_{i1} ^ ... ^ e_{ik} with 1 <= i1 < ... < ik <= m. The empty index list is
// the scalar blade (k = 0).
struct BasisBlade {
  int dim = 0;                  // m
  std::vector<int> indices;     // strictly increasing, values in 1..m
  int sign = 1;                 // +1 or -1

  int grade() const { return static_cast<int>(indices.size()); }
  bool operator==(const BasisBlade& o) const = default;
};

// Throws std::invalid_argument if indices are out of range, duplicated, or
// not sorted, or if sign is not +-1.
void validate_blade(const BasisBlade& blade);

// Hodge star: maps a k-blade to the complementary (m-k)-blade, signed by the
// parity of the merge permutation [i1..ik, j1..j_{m-k}] relative to identity.
// *(e_1 ^ ... ^ e_m) = 1 and *(1) = e_1 ^ ... ^ e_m.
BasisBlade hodge_star(const BasisBlade& blade);

} // namespace meshlap
