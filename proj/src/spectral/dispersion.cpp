#include "spectral/dispersion.hpp"

#include <cmath>
#include <limits>

namespace hca {

DispersionValue dispersion_E(double eps, double l, long long c) {
  if (!(l > 0.0)) fail(ErrorCode::InvalidArgument, "l must be positive");
  double eff = 0.5 * static_cast<double>(c) * eps;
  if (std::abs(eff) > 1.0)
    return {false, std::numeric_limits<double>::quiet_NaN()};
  return {true, std::asin(eff) / l};
}

double dispersion_series_check(double eps, double l) {
  if (!(l > 0.0)) fail(ErrorCode::InvalidArgument, "l must be positive");
  if (std::abs(eps) > 0.5)
    fail(ErrorCode::OutOfRange,
         "series expansion validated only for |eps| <= 0.5");
  return std::abs(std::asin(eps) / l - (eps / l) * (1.0 + eps * eps / 6.0));
}

ModeRoots mode_roots(double eps, long long c) {
  double u = 0.5 * static_cast<double>(c) * eps;
  double disc = 1.0 - u * u;
  ModeRoots r;
  if (disc >= 0.0) {
    double root = std::sqrt(disc);
    r.plus = Complex(root, -u);
    r.minus = Complex(-root, -u);
  } else {
    double root = std::sqrt(-disc);  // principal sqrt of a negative real
    r.plus = Complex(0.0, root - u);
    r.minus = Complex(0.0, -root - u);
  }
  return r;
}

ModeStability classify_mode(double eps, long long c) {
  double band = std::abs(0.5 * static_cast<double>(c) * eps);
  if (std::abs(band - 1.0) <= 1e-12) return ModeStability::Marginal;
  return band < 1.0 ? ModeStability::Stable : ModeStability::Unstable;
}

SpectralData spectral_analysis(const ComplexMatrix& h, double l, long long c) {
  if (!(l > 0.0)) fail(ErrorCode::InvalidArgument, "l must be positive");
  EigenSystem sys = eigensolve_hermitian(h);
  SpectralData data;
  data.eps = std::move(sys.eps);
  data.vectors = std::move(sys.vectors);
  data.l = l;
  data.c = c;
  for (double e : data.eps) {
    data.energies.push_back(dispersion_E(e, l, c));
    data.roots.push_back(mode_roots(e, c));
    data.stability.push_back(classify_mode(e, c));
  }
  return data;
}

}  // namespace hca
