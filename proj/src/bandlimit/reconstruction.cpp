#include "bandlimit/reconstruction.hpp"

#include <cmath>

namespace hca {

namespace {

double sinc_kernel(double u) {
  if (std::abs(u) < 1e-8) {
    double u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
  }
  return std::sin(u) / u;
}

void require_trusted(const SampledWave& wave, double t, long long margin) {
  if (margin < 1)
    fail(ErrorCode::InvalidArgument, "trust margin must be >= 1");
  if (!in_trusted_region(wave, t, margin))
    fail(ErrorCode::OutsideTrustedRegion,
         "query time " + std::to_string(t) + " is within " +
             std::to_string(margin) + " grid units of the window edge");
}

}  // namespace

bool in_trusted_region(const SampledWave& wave, double t, long long margin) {
  return t >= wave.grid_time(wave.n0 + margin) &&
         t <= wave.grid_time(wave.n1() - margin);
}

ComplexVector sinc_reconstruct(const SampledWave& wave, double t) {
  if (wave.samples.empty()) fail(ErrorCode::EmptyWindow, "empty sample window");
  if (!std::isfinite(t)) fail(ErrorCode::NonFiniteTime, "non-finite query time");
  const double omega = wave.omega_max();
  ComplexVector out(wave.dim(), Complex(0.0, 0.0));
  for (std::size_t k = 0; k < wave.samples.size(); ++k) {
    double tn = wave.grid_time(wave.n0 + static_cast<long long>(k));
    double kernel = sinc_kernel(omega * (t - tn));
    const ComplexVector& row = wave.samples[k];
    for (std::size_t i = 0; i < row.size(); ++i) out[i] += kernel * row[i];
  }
  return out;
}

double mod_schrodinger_residual(const SampledWave& wave, const ComplexMatrix& h,
                                long long c, double t, long long margin) {
  require_trusted(wave, t, margin);
  require_same_dim(static_cast<std::size_t>(h.dim()),
                   static_cast<std::size_t>(wave.dim()),
                   "mod_schrodinger_residual");
  ComplexVector ahead = sinc_reconstruct(wave, t + wave.l);
  ComplexVector behind = sinc_reconstruct(wave, t - wave.l);
  ComplexVector here = h.mul(sinc_reconstruct(wave, t));
  const double half_c = 0.5 * static_cast<double>(c);
  double worst = 0.0;
  for (std::size_t i = 0; i < here.size(); ++i) {
    Complex r = 0.5 * (ahead[i] - behind[i]) + Complex(0.0, half_c) * here[i];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double continuum_conservation_check(const SampledWave& wave,
                                    const ComplexMatrix& g,
                                    const ComplexMatrix& h, long long c,
                                    double t, long long margin) {
  require_trusted(wave, t, margin);
  require_same_dim(static_cast<std::size_t>(g.dim()),
                   static_cast<std::size_t>(wave.dim()),
                   "continuum_conservation_check");
  ComplexMatrix h_eff = h.scaled(0.5 * static_cast<double>(c));
  double scale = std::max(1.0, frobenius_norm(g) * frobenius_norm(h_eff));
  if (commutator_norm(g, h_eff) > 1e-12 * scale)
    fail(ErrorCode::NotCommuting, "[G,H] != 0 within 1e-12");

  ComplexVector psi = sinc_reconstruct(wave, t);
  ComplexVector ahead = sinc_reconstruct(wave, t + wave.l);
  ComplexVector behind = sinc_reconstruct(wave, t - wave.l);
  ComplexVector s(psi.size());
  const Complex inv_2i(0.0, -0.5);  // 1/(2i)
  for (std::size_t i = 0; i < s.size(); ++i)
    s[i] = (ahead[i] - behind[i]) * inv_2i;
  // psi^* G s + (s applied to psi^*) G psi; the second slot applies the
  // same translation form to the conjugated wave.
  Complex total = inner(psi, g.mul(s));
  ComplexVector g_psi = g.mul(psi);
  for (std::size_t i = 0; i < s.size(); ++i)
    total += (std::conj(ahead[i]) - std::conj(behind[i])) * inv_2i * g_psi[i];
  return std::abs(total);
}

double two_time_continuum(const SampledWave& wave, const ComplexMatrix& g,
                          double t1, double t2, long long margin) {
  require_trusted(wave, t1, margin);
  require_trusted(wave, t2, margin);
  require_same_dim(static_cast<std::size_t>(g.dim()),
                   static_cast<std::size_t>(wave.dim()), "two_time_continuum");
  ComplexVector a = sinc_reconstruct(wave, t1);
  ComplexVector b = g.mul(sinc_reconstruct(wave, t2));
  return inner(a, b).real();
}

double coincidence_norm(const SampledWave& wave, double t,
                        const std::vector<double>& l_sequence,
                        long long margin) {
  if (l_sequence.empty())
    fail(ErrorCode::InvalidArgument, "empty offset sequence");
  for (std::size_t i = 0; i < l_sequence.size(); ++i) {
    if (!(l_sequence[i] > 0.0))
      fail(ErrorCode::InvalidArgument, "offsets must be positive");
    if (i > 0 && !(l_sequence[i] < l_sequence[i - 1]))
      fail(ErrorCode::InvalidArgument, "offsets must decrease strictly");
  }
  require_trusted(wave, t, margin);
  require_trusted(wave, t + l_sequence.front(), margin);

  ComplexVector psi_t = sinc_reconstruct(wave, t);
  std::vector<double> xs = l_sequence;
  std::vector<double> ys;
  for (double lp : l_sequence)
    ys.push_back(inner(psi_t, sinc_reconstruct(wave, t + lp)).real());

  // Neville extrapolation of C_I(t, t + l') to l' = 0.
  for (std::size_t level = 1; level < xs.size(); ++level)
    for (std::size_t i = 0; i + level < xs.size(); ++i)
      ys[i] = ((0.0 - xs[i + level]) * ys[i] - (0.0 - xs[i]) * ys[i + 1]) /
              (xs[i] - xs[i + level]);
  return ys[0];
}

}  // namespace hca
