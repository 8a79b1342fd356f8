#pragma once

#include "spectral/dispersion.hpp"

namespace hca {

/// Doubler-free companion state: psi1 = sum_a e^{-i E_a l} <v_a, psi0> v_a.
/// Leapfrog evolution started from (psi0, psi1) contains only
/// principal-branch modes. Requires every mode inside or at the band edge.
std::pair<ComplexVector, ComplexVector> principal_pair(const ComplexMatrix& h,
                                                       const ComplexVector& psi0,
                                                       double l, long long c = 2);

/// psi(t) = sum_a e^{-i E_a t} <v_a, psi0> v_a with the deformed energies
/// E_a = arcsin(c eps_a / 2) / l. At grid times t = n l this reproduces the
/// leapfrog iteration from principal_pair.
std::vector<ComplexVector> evolve_bandlimited_exact(
    const ComplexMatrix& h, const ComplexVector& psi0, double l,
    const std::vector<double>& times, long long c = 2);

/// Undeformed evolution psi(t) = sum_a e^{-i eps_a t} <v_a, psi0> v_a.
std::vector<ComplexVector> evolve_standard_qm(const ComplexMatrix& h_phys,
                                              const ComplexVector& psi0,
                                              const std::vector<double>& times);

/// sup over a uniform grid on [0, T] of the pointwise infinity-norm gap
/// between the bandlimited evolution (dimensionless matrix l H_phys, c = 2)
/// and the standard one. Requires l * spectral_radius(H_phys) < 1.
double deformation_error(const ComplexMatrix& h_phys, const ComplexVector& psi0,
                         double l, double t_final);

/// Least-squares slope of log(deformation_error) against log(l) over a
/// strictly decreasing list of at least three scales.
double convergence_order(const ComplexMatrix& h_phys, const ComplexVector& psi0,
                         const std::vector<double>& l_list, double t_final);

/// Per-mode magnitude of the doubler-branch coefficient in the pair
/// (psi0, psi1); NaN for band-edge modes where the branches coincide.
std::vector<double> doubler_content(const ComplexMatrix& h,
                                    const ComplexVector& psi0,
                                    const ComplexVector& psi1, double l,
                                    long long c = 2);

}  // namespace hca
