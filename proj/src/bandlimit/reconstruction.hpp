#pragma once

#include "bandlimit/sampled_wave.hpp"

namespace hca {

/// Truncated sampling series sum_n psi_n sinc(omega_max (t - t_n)) over the
/// stored window, componentwise; exact at interior grid points up to
/// rounding because the kernel is a Kronecker delta on the grid.
ComplexVector sinc_reconstruct(const SampledWave& wave, double t);

/// Infinity norm of [psi(t+l) - psi(t-l)]/2 + i (c/2) H psi(t) on the
/// reconstructed wave. Vanishes up to window truncation when the samples
/// obey the leapfrog recurrence; the truncation tail decays like one over
/// the distance to the window edges (in grid units).
double mod_schrodinger_residual(const SampledWave& wave, const ComplexMatrix& h,
                                long long c, double t, long long margin);

/// Magnitude of psi^*(t) G s(t) + s^*(t) G psi(t) with the band-limited
/// translation form s = [psi(t+l) - psi(t-l)]/(2i). Requires [G,H] = 0
/// within 1e-12 (relative); near zero on recurrence-consistent waves.
double continuum_conservation_check(const SampledWave& wave,
                                    const ComplexMatrix& g,
                                    const ComplexMatrix& h, long long c,
                                    double t, long long margin);

/// Two-time function C_G(t1, t2) = Re( psi^dag(t1) G psi(t2) ) on the
/// reconstructed wave.
double two_time_continuum(const SampledWave& wave, const ComplexMatrix& g,
                          double t1, double t2, long long margin);

/// Evaluates C_I(t, t + l') along the decreasing offsets and extrapolates
/// polynomially to l' -> 0; the limit is the reconstructed equal-time norm
/// psi^dag(t) psi(t).
double coincidence_norm(const SampledWave& wave, double t,
                        const std::vector<double>& l_sequence,
                        long long margin);

/// True when t lies at least `margin` grid units inside the sample window.
bool in_trusted_region(const SampledWave& wave, double t, long long margin);

}  // namespace hca
