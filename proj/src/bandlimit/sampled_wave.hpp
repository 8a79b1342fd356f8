#pragma once

#include "dynamics/trajectory.hpp"
#include "spectral/linalg.hpp"

namespace hca {

/// Finite window of complex samples psi(t_n) on the uniform grid t_n = n l,
/// carrying bandwidth omega_max = pi / l. Reconstruction away from the grid
/// is by truncated sinc interpolation; accuracy near the window edges is
/// truncation-limited, so consumers state a trust margin in grid units.
struct SampledWave {
  double l = 1.0;
  long long n0 = 0;
  std::vector<ComplexVector> samples;  // samples[i] is psi at n = n0 + i

  int dim() const { return samples.empty() ? 0 : static_cast<int>(samples[0].size()); }
  long long n1() const { return n0 + static_cast<long long>(samples.size()) - 1; }
  double omega_max() const { return M_PI / l; }
  double grid_time(long long n) const { return static_cast<double>(n) * l; }

  static SampledWave from_samples(double l, long long n0,
                                  std::vector<ComplexVector> samples);

  /// Converts an exactly-evolved trajectory into float samples. Refuses
  /// non-constant lapse, any sample beyond 2^53, and trajectories whose
  /// spectrum has a mode strictly outside the stability band (exponential
  /// growth cannot be bandlimited).
  static SampledWave from_trajectory(const Trajectory& traj, double l);
};

/// CSV with columns n, t, re(psi_0), im(psi_0), ...; a leading comment row
/// records l and the window bounds.
void write_wave_csv(const SampledWave& wave, const std::string& path);
SampledWave read_wave_csv(const std::string& path);

}  // namespace hca
