#include "spectral/propagation.hpp"

#include <cmath>
#include <limits>

namespace hca {

namespace {

struct ModeDecomposition {
  EigenSystem sys;
  ComplexVector coeff;  // <v_a, psi0>
};

ModeDecomposition decompose(const ComplexMatrix& h, const ComplexVector& psi0) {
  ModeDecomposition d;
  d.sys = eigensolve_hermitian(h);
  require_same_dim(psi0.size(), d.sys.vectors.size(), "mode decomposition");
  for (const auto& v : d.sys.vectors) d.coeff.push_back(inner(v, psi0));
  return d;
}

ComplexVector assemble(const ModeDecomposition& d,
                       const std::vector<double>& phases_times_t) {
  const std::size_t n = d.sys.vectors.size();
  ComplexVector out(n, Complex(0.0, 0.0));
  for (std::size_t a = 0; a < n; ++a) {
    Complex factor = std::exp(Complex(0.0, -phases_times_t[a])) * d.coeff[a];
    for (std::size_t i = 0; i < n; ++i) out[i] += factor * d.sys.vectors[a][i];
  }
  return out;
}

std::vector<double> deformed_energies_or_fail(const ModeDecomposition& d,
                                              double l, long long c) {
  std::vector<double> energies;
  for (double e : d.sys.eps) {
    DispersionValue dv = dispersion_E(e, l, c);
    if (!dv.stable)
      fail(ErrorCode::UnstableSpectrum,
           "mode outside the stability band: c*eps/2 = " +
               std::to_string(0.5 * static_cast<double>(c) * e));
    energies.push_back(dv.energy);
  }
  return energies;
}

}  // namespace

std::pair<ComplexVector, ComplexVector> principal_pair(const ComplexMatrix& h,
                                                       const ComplexVector& psi0,
                                                       double l, long long c) {
  ModeDecomposition d = decompose(h, psi0);
  std::vector<double> energies = deformed_energies_or_fail(d, l, c);
  std::vector<double> phases;
  for (double e : energies) phases.push_back(e * l);
  return {psi0, assemble(d, phases)};
}

std::vector<ComplexVector> evolve_bandlimited_exact(
    const ComplexMatrix& h, const ComplexVector& psi0, double l,
    const std::vector<double>& times, long long c) {
  ModeDecomposition d = decompose(h, psi0);
  std::vector<double> energies = deformed_energies_or_fail(d, l, c);
  std::vector<ComplexVector> out;
  out.reserve(times.size());
  for (double t : times) {
    std::vector<double> phases;
    for (double e : energies) phases.push_back(e * t);
    out.push_back(assemble(d, phases));
  }
  return out;
}

std::vector<ComplexVector> evolve_standard_qm(const ComplexMatrix& h_phys,
                                              const ComplexVector& psi0,
                                              const std::vector<double>& times) {
  ModeDecomposition d = decompose(h_phys, psi0);
  std::vector<ComplexVector> out;
  out.reserve(times.size());
  for (double t : times) {
    std::vector<double> phases;
    for (double e : d.sys.eps) phases.push_back(e * t);
    out.push_back(assemble(d, phases));
  }
  return out;
}

double deformation_error(const ComplexMatrix& h_phys, const ComplexVector& psi0,
                         double l, double t_final) {
  if (!(l > 0.0) || !(t_final > 0.0))
    fail(ErrorCode::InvalidArgument, "l and T must be positive");
  ModeDecomposition d = decompose(h_phys, psi0);
  double radius = 0.0;
  for (double e : d.sys.eps) radius = std::max(radius, std::abs(e));
  if (!(l * radius < 1.0))
    fail(ErrorCode::StabilityViolated,
         "l * spectral_radius(H) = " + std::to_string(l * radius) +
             " is not below 1");

  const int grid = 256;
  double worst = 0.0;
  for (int k = 0; k <= grid; ++k) {
    double t = t_final * static_cast<double>(k) / grid;
    std::vector<double> ph_band, ph_std;
    for (double e : d.sys.eps) {
      ph_band.push_back(std::asin(l * e) / l * t);
      ph_std.push_back(e * t);
    }
    ComplexVector band = assemble(d, ph_band);
    ComplexVector std_ev = assemble(d, ph_std);
    for (std::size_t i = 0; i < band.size(); ++i)
      worst = std::max(worst, std::abs(band[i] - std_ev[i]));
  }
  return worst;
}

double convergence_order(const ComplexMatrix& h_phys, const ComplexVector& psi0,
                         const std::vector<double>& l_list, double t_final) {
  if (l_list.size() < 3)
    fail(ErrorCode::TooFewScales, "convergence order needs >= 3 scales");
  for (std::size_t i = 1; i < l_list.size(); ++i)
    if (!(l_list[i] < l_list[i - 1]))
      fail(ErrorCode::InvalidArgument, "l_list must be strictly decreasing");

  std::vector<double> xs, ys;
  for (double l : l_list) {
    double err = deformation_error(h_phys, psi0, l, t_final);
    if (err <= 0.0)
      fail(ErrorCode::InvalidArgument,
           "zero deformation error, no slope to fit (H = 0?)");
    xs.push_back(std::log(l));
    ys.push_back(std::log(err));
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

std::vector<double> doubler_content(const ComplexMatrix& h,
                                    const ComplexVector& psi0,
                                    const ComplexVector& psi1, double l,
                                    long long c) {
  (void)l;
  ModeDecomposition d = decompose(h, psi0);
  std::vector<double> content;
  for (std::size_t a = 0; a < d.sys.vectors.size(); ++a) {
    Complex z0 = d.coeff[a];
    Complex z1 = inner(d.sys.vectors[a], psi1);
    ModeRoots r = mode_roots(d.sys.eps[a], c);
    if (std::abs(r.plus - r.minus) < 1e-9) {
      content.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    Complex a_minus = (z1 - r.plus * z0) / (r.minus - r.plus);
    content.push_back(std::abs(a_minus));
  }
  return content;
}

}  // namespace hca
