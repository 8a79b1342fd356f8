#pragma once

#include "dynamics/trajectory.hpp"

namespace hca {

/// Second-order leapfrog update:
///   x_{n+1} = x_{n-1} + c_n (S p_n + A x_n)
///   p_{n+1} = p_{n-1} - c_n (S x_n - A p_n)
///   tau_{n+1} = tau_{n-1} + c_n
///   pi_{n+1} = pi_{n-1} + H_{n+1} - H_{n-1}
/// The new x, p are computed first; the pi update then uses the fresh
/// Hamiltonian value, the only ordering consistent with the scheme.
CaState step_forward(const CaState& prev, const CaState& curr,
                     const HamiltonianSpec& spec, const LapseSequence& lapse);

/// Exact inverse of step_forward: recovers state n-1 from (n+1, n).
CaState step_backward(const CaState& next, const CaState& curr,
                      const HamiltonianSpec& spec, const LapseSequence& lapse);

/// Iterates step_forward M times from the initial pair; returns the
/// trajectory of length M + 2.
Trajectory evolve(const HamiltonianSpec& spec, const LapseSequence& lapse,
                  const CaState& s0, const CaState& s1, long long steps);

}  // namespace hca
