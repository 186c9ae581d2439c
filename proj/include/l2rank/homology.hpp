#pragma once

#include "l2rank/bigint.hpp"
#include "l2rank/presentation.hpp"

#include <vector>

namespace l2rank {

/// First homology H_1(G, Z) = Z^rank + sum of Z/t for t in torsion.
struct Betti1 {
  int rank = 0;
  std::vector<BigInt> torsion;
};

/// Reads H_1 off the Smith normal form of the augmented Fox Jacobian.
Betti1 betti1(const Presentation& p);

/// Free rank of H_1 only, by sparse exact elimination; no torsion.
int betti1_rank(const Presentation& p);

bool is_perfect(const Presentation& p);

}  // namespace l2rank
