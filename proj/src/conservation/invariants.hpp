#pragma once

#include "dynamics/trajectory.hpp"

namespace hca {

/// Staggered invariant Q_G(n) = psi_n^dag G psi_{n+1} + psi_{n+1}^dag G psi_n.
/// Step-to-step constancy of Q_G is the discrete conservation law for any
/// self-adjoint G commuting with H. Exact integer.
Int staggered_invariant(const Trajectory& traj, const GaussMatrix& g,
                        long long n);

/// Core form on raw state vectors; g_psi_b must be G psi_b. For self-adjoint
/// G the two summands are conjugate, so Q = 2 Re(psi_a^dag G psi_b).
Int staggered_invariant_core(const GaussVector& psi_a,
                             const GaussVector& g_psi_b);

struct ConservedReport {
  std::string g_label;
  std::vector<std::pair<long long, Int>> values;  // (n, Q_G(n))
  Int max_violation{0};
  long long first_violation_step = -1;  // -1 when exactly conserved
};

/// Evaluates Q_G over the whole trajectory. Requires [G,H] = 0 (otherwise
/// the theorem does not apply and the call is refused) and self-adjoint G.
ConservedReport check_theorem_a(const Trajectory& traj, const GaussMatrix& g,
                                const std::string& label = "G");

struct CommutantFamily {
  std::vector<std::string> labels;
  std::vector<GaussMatrix> members;
};

/// Powers {I, H, H^2, ..., H^degree} with exact duplicates removed. Every
/// member is self-adjoint and commutes with H by construction.
CommutantFamily generate_commutant(const HamiltonianSpec& spec, int degree);

/// Verifies the product rule of the staggered derivative
///   O_{n+1} O'_{n+1} - O_{n-1} O'_{n-1}
///     = (1/2) (dO_n [O'_{n+1} + O'_{n-1}] + [O_{n+1} + O_{n-1}] dO'_n)
/// at every interior index.
bool leibniz_identity_check(const std::vector<Int>& o,
                            const std::vector<Int>& o_prime);

/// Two-time function on the grid: C_G(n1, n2) = Re(psi_{n1}^dag G psi_{n2}).
/// Coincides with Q_G via 2 C_G(n, n+1) = Q_G(n).
Int two_time_discrete(const Trajectory& traj, const GaussMatrix& g,
                      long long n1, long long n2);

}  // namespace hca
