#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dynamics/leapfrog.hpp"
#include "scenario/random_gen.hpp"
#include "spectral/propagation.hpp"

using namespace hca;

namespace {

ComplexMatrix sigma_x_f() {
  ComplexMatrix m(2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}

ComplexMatrix random_hermitian(Rng& rng, int dim, double scale) {
  auto unit = [&] { return (rng.uniform(0, 2000000) - 1000000) / 1e6; };
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m.at(i, i) = scale * unit();
    for (int j = i + 1; j < dim; ++j) {
      Complex z(scale * unit(), scale * unit());
      m.at(i, j) = z;
      m.at(j, i) = std::conj(z);
    }
  }
  return m;
}

// Reference propagation: float leapfrog psi_{n+1} = psi_{n-1} - i c H psi_n.
std::vector<ComplexVector> float_leapfrog(const ComplexMatrix& h,
                                          const ComplexVector& psi0,
                                          const ComplexVector& psi1,
                                          long long c, long long steps) {
  std::vector<ComplexVector> states = {psi0, psi1};
  for (long long k = 0; k < steps; ++k) {
    ComplexVector hpsi = h.mul(states.back());
    ComplexVector next = states[states.size() - 2];
    for (std::size_t i = 0; i < next.size(); ++i)
      next[i] -= Complex(0.0, static_cast<double>(c)) * hpsi[i];
    states.push_back(std::move(next));
  }
  return states;
}

}  // namespace

TEST_CASE("eigensolve_hermitian worked examples") {
  EigenSystem sx = eigensolve_hermitian(sigma_x_f());
  REQUIRE(sx.eps.size() == 2);
  CHECK(sx.eps[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(sx.eps[1] == doctest::Approx(1.0).epsilon(1e-12));
  // Eigenvectors (1, -+1)/sqrt(2) up to phase.
  CHECK(std::abs(inner(sx.vectors[0],
                       ComplexVector{Complex(M_SQRT1_2, 0),
                                     Complex(-M_SQRT1_2, 0)})) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(inner(sx.vectors[1],
                       ComplexVector{Complex(M_SQRT1_2, 0),
                                     Complex(M_SQRT1_2, 0)})) ==
        doctest::Approx(1.0).epsilon(1e-10));

  ComplexMatrix zero(3);
  EigenSystem z = eigensolve_hermitian(zero);
  for (double e : z.eps) CHECK(e == 0.0);

  ComplexMatrix diag(3);
  diag.at(0, 0) = 1.0;
  diag.at(1, 1) = 2.0;
  diag.at(2, 2) = 3.0;
  EigenSystem d = eigensolve_hermitian(diag);
  for (int i = 0; i < 3; ++i) {
    CHECK(d.eps[i] == doctest::Approx(i + 1.0).epsilon(1e-12));
    CHECK(std::abs(d.vectors[i][i]) == doctest::Approx(1.0).epsilon(1e-12));
  }

  ComplexMatrix bad(2);
  bad.at(0, 1) = Complex(1.0, 0.0);
  bad.at(1, 0) = Complex(0.5, 0.0);
  CHECK_THROWS_AS(eigensolve_hermitian(bad), Error);
}

TEST_CASE("eigensolve residual, orthonormality and J-pairing on random input") {
  Rng rng = make_rng(41, 0);
  for (int trial = 0; trial < 100; ++trial) {
    int dim = static_cast<int>(rng.uniform(1, 8));
    ComplexMatrix h = random_hermitian(rng, dim, 3.0);
    double scale = std::max(1.0, frobenius_norm(h));
    EigenSystem sys = eigensolve_hermitian(h);
    REQUIRE(static_cast<int>(sys.eps.size()) == dim);
    for (int a = 0; a < dim; ++a) {
      ComplexVector hv = h.mul(sys.vectors[a]);
      double res = 0.0;
      for (int i = 0; i < dim; ++i)
        res += std::norm(hv[i] - sys.eps[a] * sys.vectors[a][i]);
      CHECK(std::sqrt(res) <= 1e-10 * scale);
      for (int b = 0; b < dim; ++b) {
        double expected = a == b ? 1.0 : 0.0;
        CHECK(std::abs(inner(sys.vectors[a], sys.vectors[b]) - expected) <=
              1e-10);
      }
      if (a > 0) CHECK(sys.eps[a] >= sys.eps[a - 1]);
    }

    // Embedding pair structure: for v = a + ib an eigenvector of H, both
    // (a; b) and J(a; b) = (-b; a) are eigenvectors of the real embedding.
    for (int a = 0; a < dim; ++a) {
      std::vector<double> u(2 * dim), ju(2 * dim);
      for (int i = 0; i < dim; ++i) {
        u[i] = sys.vectors[a][i].real();
        u[dim + i] = sys.vectors[a][i].imag();
        ju[i] = -sys.vectors[a][i].imag();
        ju[dim + i] = sys.vectors[a][i].real();
      }
      auto embed_mul = [&](const std::vector<double>& w) {
        std::vector<double> out(2 * dim, 0.0);
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) {
            double s = h.at(i, j).real(), t = h.at(i, j).imag();
            out[i] += s * w[j] - t * w[dim + j];
            out[dim + i] += t * w[j] + s * w[dim + j];
          }
        return out;
      };
      for (const auto& w : {u, ju}) {
        std::vector<double> mw = embed_mul(w);
        double res = 0.0;
        for (int i = 0; i < 2 * dim; ++i)
          res += (mw[i] - sys.eps[a] * w[i]) * (mw[i] - sys.eps[a] * w[i]);
        CHECK(std::sqrt(res) <= 1e-9 * scale);
      }
    }
  }
}

TEST_CASE("dispersion_E: band interior, edge, and instability marker") {
  DispersionValue edge = dispersion_E(1.0, 1.0, 2);
  CHECK(edge.stable);
  CHECK(edge.energy == doctest::Approx(M_PI / 2).epsilon(1e-12));

  CHECK(dispersion_E(0.0, 1.0).energy == 0.0);

  DispersionValue mid = dispersion_E(0.5, 1.0, 2);
  CHECK(mid.energy == doctest::Approx(0.5235987755982989).epsilon(1e-12));

  DispersionValue bad = dispersion_E(1.5, 1.0, 2);
  CHECK_FALSE(bad.stable);
  CHECK(std::isnan(bad.energy));

  // Rescaling l: E = arcsin(eps)/l.
  CHECK(dispersion_E(0.5, 0.25, 2).energy ==
        doctest::Approx(4 * 0.5235987755982989).epsilon(1e-12));
}

TEST_CASE("dispersion_series_check against frozen values") {
  CHECK(dispersion_series_check(0.0, 1.0) == 0.0);
  // arcsin(0.1) - 0.1 (1 + 0.01/6) = 7.5449...e-7, inside the 8.25e-7 bound.
  double dev01 = dispersion_series_check(0.1, 1.0);
  CHECK(dev01 == doctest::Approx(7.544948931e-7).epsilon(1e-6));
  CHECK(dev01 <= 1.1 * (3.0 / 40.0) * std::pow(0.1, 5));
  // At the validation edge the tail beyond the quintic term is visible:
  // the true deviation is 2.7654...e-3.
  double dev05 = dispersion_series_check(0.5, 1.0);
  CHECK(dev05 == doctest::Approx(2.765442265e-3).epsilon(1e-9));
  CHECK_THROWS_AS(dispersion_series_check(0.6, 1.0), Error);
}

TEST_CASE("mode_roots: product, band edge, instability") {
  ModeRoots flat = mode_roots(0.0, 2);
  CHECK(flat.plus == Complex(1.0, 0.0));
  CHECK(flat.minus == Complex(-1.0, 0.0));

  ModeRoots edge = mode_roots(1.0, 2);
  CHECK(std::abs(edge.plus - Complex(0.0, -1.0)) <= 1e-12);
  CHECK(std::abs(edge.minus - Complex(0.0, -1.0)) <= 1e-12);

  ModeRoots wild = mode_roots(2.0, 2);
  CHECK(std::abs(wild.minus) ==
        doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-12));

  Rng rng = make_rng(42, 0);
  for (int k = 0; k < 500; ++k) {
    double eps = (rng.uniform(0, 2000) - 1000) / 250.0;  // [-4, 4]
    long long c = rng.uniform(1, 3);
    ModeRoots r = mode_roots(eps, c);
    CHECK(std::abs(r.plus * r.minus + Complex(1.0, 0.0)) <= 1e-12);
    double band = std::abs(0.5 * static_cast<double>(c) * eps);
    if (band < 1.0 - 1e-9) {
      CHECK(std::abs(std::abs(r.plus) - 1.0) <= 1e-12);
      CHECK(std::abs(std::abs(r.minus) - 1.0) <= 1e-12);
      // lambda_plus = e^{-iEl} on the principal branch.
      double el = std::asin(band);
      Complex expected = std::exp(Complex(0.0, -(eps >= 0 ? el : -el)));
      CHECK(std::abs(r.plus - expected) <= 1e-12);
    } else if (band > 1.0 + 1e-9) {
      // Principal sqrt puts the growing root in lambda_minus for eps > 0
      // and lambda_plus for eps < 0; either way the pair straddles 1.
      double grow = std::max(std::abs(r.plus), std::abs(r.minus));
      double decay = std::min(std::abs(r.plus), std::abs(r.minus));
      CHECK(grow > 1.0);
      CHECK(decay < 1.0);
      if (eps > 0) CHECK(std::abs(r.minus) == grow);
    }
    CHECK(classify_mode(eps, c) ==
          (band < 1.0 - 1e-12
               ? ModeStability::Stable
               : (band > 1.0 + 1e-12 ? ModeStability::Unstable
                                     : ModeStability::Marginal)));
  }
}

TEST_CASE("principal_pair") {
  ComplexMatrix zero(2);
  ComplexVector psi0 = {Complex(0.3, 0.1), Complex(-0.2, 0.7)};
  auto [a0, a1] = principal_pair(zero, psi0, 1.0, 2);
  for (int i = 0; i < 2; ++i) CHECK(std::abs(a1[i] - psi0[i]) <= 1e-14);

  // sigma_x symmetric mode: psi1 = e^{-i pi/2} psi0 = -i psi0 at the edge.
  ComplexVector sym = {Complex(M_SQRT1_2, 0.0), Complex(M_SQRT1_2, 0.0)};
  auto [b0, b1] = principal_pair(sigma_x_f(), sym, 1.0, 2);
  for (int i = 0; i < 2; ++i)
    CHECK(std::abs(b1[i] - Complex(0.0, -1.0) * sym[i]) <= 1e-12);

  // Stationary eigenmode: psi1 = e^{-iEl} v for an eigenvector v.
  ComplexMatrix h = sigma_x_f().scaled(0.5);
  EigenSystem sys = eigensolve_hermitian(h);
  auto [c0, c1] = principal_pair(h, sys.vectors[0], 1.0, 2);
  Complex phase = std::exp(Complex(0.0, -std::asin(sys.eps[0])));
  for (int i = 0; i < 2; ++i)
    CHECK(std::abs(c1[i] - phase * sys.vectors[0][i]) <= 1e-12);

  ComplexMatrix wild(1);
  wild.at(0, 0) = 2.0;
  CHECK_THROWS_AS(principal_pair(wild, ComplexVector{Complex(1.0, 0.0)}, 1.0, 2),
                  Error);
}

TEST_CASE("evolve_bandlimited_exact: period and grid consistency") {
  // Symmetric sigma_x mode has E = pi/2 at l=1, so period 2 pi / E = 4.
  ComplexVector sym = {Complex(M_SQRT1_2, 0.0), Complex(M_SQRT1_2, 0.0)};
  auto states = evolve_bandlimited_exact(sigma_x_f(), sym, 1.0,
                                         {0.0, 4.0});
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(states[0][i] - sym[i]) <= 1e-14);
    CHECK(std::abs(states[1][i] - sym[i]) <= 1e-12);
  }

  // Grid agreement with the float leapfrog over 1000 steps.
  Rng rng = make_rng(43, 0);
  ComplexMatrix h = random_hermitian(rng, 3, 0.3);
  ComplexVector psi0 = {Complex(0.5, 0.0), Complex(0.1, -0.4), Complex(0.0, 0.6)};
  auto [p0, p1] = principal_pair(h, psi0, 1.0, 2);
  auto lf = float_leapfrog(h, p0, p1, 2, 1000);
  std::vector<double> times;
  for (int n = 0; n <= 1001; ++n) times.push_back(static_cast<double>(n));
  auto exact = evolve_bandlimited_exact(h, psi0, 1.0, times, 2);
  double worst = 0.0;
  for (std::size_t n = 0; n < lf.size(); ++n)
    for (int i = 0; i < 3; ++i)
      worst = std::max(worst, std::abs(lf[n][i] - exact[n][i]));
  CHECK(worst <= 1e-9);
}

TEST_CASE("evolve_standard_qm: Pauli rotation and unitarity") {
  ComplexVector e0 = {Complex(1.0, 0.0), Complex(0.0, 0.0)};
  auto rot = evolve_standard_qm(sigma_x_f(), e0, {0.0, M_PI / 2});
  CHECK(std::abs(rot[1][0]) <= 1e-12);
  CHECK(std::abs(rot[1][1] - Complex(0.0, -1.0)) <= 1e-12);

  Rng rng = make_rng(44, 0);
  ComplexMatrix h = random_hermitian(rng, 4, 2.0);
  ComplexVector psi0 = {Complex(0.5, 0.5), Complex(-0.5, 0.0),
                        Complex(0.0, 0.5), Complex(0.0, 0.0)};
  std::vector<double> times = {0.0, 0.7, 1.9, 5.3};
  auto states = evolve_standard_qm(h, psi0, times);
  for (const auto& s : states)
    CHECK(norm2(s) == doctest::Approx(norm2(psi0)).epsilon(1e-12));
}

TEST_CASE("deformation_error matches the single-mode closed form") {
  // One mode eps_phys = 1: sup error = 2 |sin(Delta t / 2)| with
  // Delta = arcsin(l)/l - 1, increasing on [0, T].
  ComplexMatrix h(1);
  h.at(0, 0) = 1.0;
  ComplexVector psi0 = {Complex(1.0, 0.0)};
  double l = 0.1, t_final = 10.0;
  double delta = std::asin(l) / l - 1.0;
  double oracle = 2.0 * std::abs(std::sin(0.5 * delta * t_final));
  double measured = deformation_error(h, psi0, l, t_final);
  CHECK(measured == doctest::Approx(oracle).epsilon(1e-6));
  CHECK(measured == doctest::Approx(0.016742).epsilon(1e-3));

  // Halving l divides the error by about four.
  double half = deformation_error(h, psi0, l / 2, t_final);
  CHECK(measured / half == doctest::Approx(4.0).epsilon(0.1));

  CHECK_THROWS_AS(deformation_error(h, psi0, 1.5, t_final), Error);
}

TEST_CASE("convergence_order is ~2 for single-mode and generic H") {
  ComplexMatrix h1(1);
  h1.at(0, 0) = 1.0;
  ComplexVector e1 = {Complex(1.0, 0.0)};
  std::vector<double> ls = {0.1, 0.05, 0.025};
  double order1 = convergence_order(h1, e1, ls, 10.0);
  CHECK(order1 >= 1.8);
  CHECK(order1 <= 2.2);

  Rng rng = make_rng(45, 0);
  ComplexMatrix h4 = random_hermitian(rng, 4, 1.5);
  ComplexVector psi0 = {Complex(0.5, 0.0), Complex(0.5, 0.0),
                        Complex(0.0, 0.5), Complex(0.0, -0.5)};
  double order4 = convergence_order(h4, psi0, ls, 10.0);
  CHECK(order4 >= 1.8);
  CHECK(order4 <= 2.2);

  CHECK_THROWS_AS(convergence_order(h1, e1, {0.1, 0.05}, 10.0), Error);
  CHECK_THROWS_AS(convergence_order(h1, e1, {0.05, 0.1, 0.2}, 10.0), Error);
}

TEST_CASE("doubler content: principal pairs are clean, reversed pairs are not") {
  Rng rng = make_rng(46, 0);
  ComplexMatrix h = random_hermitian(rng, 3, 0.3);
  ComplexVector psi0 = {Complex(0.7, 0.0), Complex(0.0, 0.5), Complex(0.2, -0.3)};
  auto [p0, p1] = principal_pair(h, psi0, 1.0, 2);
  for (double a : doubler_content(h, p0, p1, 1.0, 2)) CHECK(a <= 1e-10);
  // Swapping the pair populates the doubler branch.
  auto content = doubler_content(h, p1, p0, 1.0, 2);
  bool some = false;
  for (double a : content) some = some || a > 1e-3;
  CHECK(some);
}

TEST_CASE("float leapfrog reproduces the integer automaton below 2^53") {
  // Integer S = [[2]] grows fast but stays below 2^53 for 20 steps.
  HamiltonianSpec spec = HamiltonianSpec::build(IntMatrix(1, {2}), IntMatrix(1));
  CaState s0, s1;
  s0.n = 0;
  s0.x = {Int(1)};
  s0.p = {Int(0)};
  s1 = s0;
  s1.n = 1;
  Trajectory traj = evolve(spec, LapseSequence::constant(2), s0, s1, 20);
  auto lf = float_leapfrog(to_float(spec), {Complex(1.0, 0.0)},
                           {Complex(1.0, 0.0)}, 2, 20);
  for (long long n = 0; n <= 21; ++n) {
    const CaState& s = traj.at(n);
    CHECK(lf[static_cast<std::size_t>(n)][0] ==
          Complex(to_double_checked(s.x[0]), to_double_checked(s.p[0])));
  }
}
