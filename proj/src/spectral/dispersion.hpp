#pragma once

#include "spectral/jacobi.hpp"

namespace hca {

/// Deformed energy E = arcsin(c eps / 2) / l on the principal branch,
/// defined while |c eps / 2| <= 1. Outside the band the mode is unstable
/// and carries no real energy; that is a value, not an error.
struct DispersionValue {
  bool stable = false;
  double energy = 0.0;  // NaN when unstable
};

DispersionValue dispersion_E(double eps, double l, long long c = 2);

/// |arcsin(eps)/l - (eps/l)(1 + eps^2/6)|, the deviation of the dispersion
/// from its cubic expansion. Valid for |eps| <= 0.5.
double dispersion_series_check(double eps, double l);

/// Roots of lambda^2 + i c eps lambda - 1 = 0, the one-mode characteristic
/// polynomial of the leapfrog recurrence. lambda_plus -> e^{-iEl} on the
/// principal branch; lambda_minus is the doubler/unstable companion with
/// lambda_plus * lambda_minus = -1.
struct ModeRoots {
  Complex plus;
  Complex minus;
};

ModeRoots mode_roots(double eps, long long c);

enum class ModeStability { Stable, Marginal, Unstable };

/// Strictly inside the band, at the band edge (|c eps/2| = 1 within 1e-12,
/// where the recurrence becomes non-diagonalizable), or outside it.
ModeStability classify_mode(double eps, long long c);

struct SpectralData {
  std::vector<double> eps;
  std::vector<ComplexVector> vectors;
  std::vector<DispersionValue> energies;
  std::vector<ModeRoots> roots;
  std::vector<ModeStability> stability;
  double l = 1.0;
  long long c = 2;
};

SpectralData spectral_analysis(const ComplexMatrix& h, double l,
                               long long c = 2);

}  // namespace hca
