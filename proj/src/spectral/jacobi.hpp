#pragma once

#include "spectral/linalg.hpp"

namespace hca {

struct EigenSystem {
  std::vector<double> eps;             // ascending
  std::vector<ComplexVector> vectors;  // orthonormal, vectors[k] for eps[k]
};

/// Full spectrum of a complex Hermitian matrix via cyclic Jacobi sweeps on
/// the 2N x 2N real-symmetric embedding [[S, -A], [A, S]] (H = S + iA).
/// Each eigenvalue of H appears twice in the embedding; the doubled real
/// eigenvectors are reduced back to N complex ones by clusterwise
/// Gram-Schmidt, which also handles exact degeneracies.
///
/// Off-diagonal threshold 1e-14 * ||H||_F, at most 100 sweeps.
EigenSystem eigensolve_hermitian(const ComplexMatrix& h);

}  // namespace hca
