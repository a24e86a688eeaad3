#pragma once

#include <gmpxx.h>

#include <vector>

namespace qell {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Nonzero invariant factors of the row lattice (positive, each dividing the
// next). The cokernel of the rows in Z^cols is Z^(cols - size) plus the
// cyclic groups of the factors.
std::vector<mpz_class> smith_invariants(IntMatrix rows);

}  // namespace qell
