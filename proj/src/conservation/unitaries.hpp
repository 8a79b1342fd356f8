#pragma once

#include "exact/hamiltonian.hpp"

namespace hca {

/// Exact admissibility of a Gaussian-integer matrix as a CA symmetry:
/// unitary (U^dag U = I), commuting with H, and integer-entried (true by
/// construction of the type).
struct UnitaryVerdict {
  bool unitary = false;
  bool commutes = false;
  bool gaussian_entries = true;
  bool admissible() const { return unitary && commutes && gaussian_entries; }
};

UnitaryVerdict admissible_unitary_check(const GaussMatrix& u,
                                        const HamiltonianSpec& spec);

/// Exhaustive search over signed-phase permutation matrices (one entry from
/// {1, i, -1, -i} per row and column) -- the only Gaussian-integer matrices
/// with unit-norm rows that can be unitary. Returns those commuting with H.
std::vector<GaussMatrix> enumerate_admissible_unitaries(
    const HamiltonianSpec& spec, int max_dim = 6);

}  // namespace hca
