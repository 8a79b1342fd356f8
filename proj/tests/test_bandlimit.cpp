#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "bandlimit/reconstruction.hpp"
#include "dynamics/leapfrog.hpp"
#include "scenario/random_gen.hpp"

using namespace hca;

namespace {

HamiltonianSpec sigma_x() {
  return HamiltonianSpec::build(IntMatrix(2, {0, 1, 1, 0}), IntMatrix(2));
}

CaState state(long long n, IntVector x, IntVector p) {
  CaState s;
  s.n = n;
  s.x = std::move(x);
  s.p = std::move(p);
  s.tau = make_int(n);
  s.pi = Rational(0);
  return s;
}

// The bounded sigma_x cycle psi_n = (-i)^n (1,1), sampled over `count`
// grid points starting at n = 0.
SampledWave sigma_x_wave(long long count, double l = 1.0) {
  Trajectory traj = evolve(sigma_x(), LapseSequence::constant(2),
                           state(0, {Int(1), Int(1)}, {Int(0), Int(0)}),
                           state(1, {Int(0), Int(0)}, {Int(-1), Int(-1)}),
                           count - 2);
  return SampledWave::from_trajectory(traj, l);
}

ComplexMatrix sigma_x_f() {
  ComplexMatrix m(2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}

// Exact window-truncation remainder of the recurrence residual for the
// sigma_x cycle: shifting the three reconstruction sums leaves exactly four
// boundary terms, everything interior cancels through the recurrence.
//   R(t) = (1/2)[psi_{n0} k(n0-1) + psi_{n0-1} k(n0)
//                - psi_{n1+1} k(n1) - psi_{n1} k(n1+1)],
// with k(m) = sinc(omega (t - m l)) and psi_m = (-i)^m (1,1).
double residual_boundary_oracle(const SampledWave& wave, double t) {
  auto kernel = [&](long long m) {
    double u = wave.omega_max() * (t - wave.grid_time(m));
    return std::abs(u) < 1e-12 ? 1.0 : std::sin(u) / u;
  };
  auto phase = [](long long m) {
    switch (((m % 4) + 4) % 4) {
      case 0: return Complex(1.0, 0.0);
      case 1: return Complex(0.0, -1.0);
      case 2: return Complex(-1.0, 0.0);
      default: return Complex(0.0, 1.0);
    }
  };
  long long n0 = wave.n0, n1 = wave.n1();
  Complex r = 0.5 * (phase(n0) * kernel(n0 - 1) + phase(n0 - 1) * kernel(n0) -
                     phase(n1 + 1) * kernel(n1) - phase(n1) * kernel(n1 + 1));
  return std::abs(r);  // per component; both components carry the same value
}

}  // namespace

TEST_CASE("sinc_reconstruct: grid delta property and edge cases") {
  SampledWave wave = sigma_x_wave(512);
  double fidelity = 0.0;
  for (long long n = wave.n0 + 1; n < wave.n1(); ++n) {
    ComplexVector rec = sinc_reconstruct(wave, wave.grid_time(n));
    const ComplexVector& ref = wave.samples[static_cast<std::size_t>(n - wave.n0)];
    for (int i = 0; i < wave.dim(); ++i)
      fidelity = std::max(fidelity, std::abs(rec[i] - ref[i]));
  }
  CHECK(fidelity <= 1e-12);

  // All-zero samples reconstruct to zero everywhere.
  SampledWave zero = SampledWave::from_samples(
      1.0, 0, std::vector<ComplexVector>(32, ComplexVector(1, Complex(0, 0))));
  for (double t : {0.0, 3.7, 15.5, 31.0})
    CHECK(std::abs(sinc_reconstruct(zero, t)[0]) == 0.0);

  // Single unit sample queried half a grid step away: sinc(pi/2) = 2/pi.
  std::vector<ComplexVector> one(1, ComplexVector(1, Complex(1.0, 0.0)));
  SampledWave spike = SampledWave::from_samples(1.0, 0, one);
  CHECK(std::abs(sinc_reconstruct(spike, 0.5)[0] - 2.0 / M_PI) <= 1e-12);

  CHECK_THROWS_AS(sinc_reconstruct(spike, std::nan("")), Error);
}

TEST_CASE("sinc_reconstruct is linear in the samples") {
  Rng rng = make_rng(51, 0);
  auto random_wave = [&](int count, int dim) {
    std::vector<ComplexVector> samples;
    for (int n = 0; n < count; ++n) {
      ComplexVector row(dim);
      for (int i = 0; i < dim; ++i)
        row[i] = Complex((rng.uniform(0, 2000) - 1000) / 500.0,
                         (rng.uniform(0, 2000) - 1000) / 500.0);
      samples.push_back(std::move(row));
    }
    return SampledWave::from_samples(0.5, 0, std::move(samples));
  };
  SampledWave a = random_wave(64, 2);
  SampledWave b = random_wave(64, 2);
  std::vector<ComplexVector> sum_samples = a.samples;
  for (std::size_t n = 0; n < sum_samples.size(); ++n)
    for (int i = 0; i < 2; ++i) sum_samples[n][i] += b.samples[n][i];
  SampledWave sum = SampledWave::from_samples(0.5, 0, std::move(sum_samples));
  for (int k = 0; k < 50; ++k) {
    double t = (rng.uniform(0, 63000)) / 1000.0 * 0.5;
    ComplexVector ra = sinc_reconstruct(a, t);
    ComplexVector rb = sinc_reconstruct(b, t);
    ComplexVector rs = sinc_reconstruct(sum, t);
    for (int i = 0; i < 2; ++i)
      CHECK(std::abs(rs[i] - (ra[i] + rb[i])) <= 1e-12);
  }
}

TEST_CASE("from_trajectory guards its preconditions") {
  // Unstable spectrum: S = [[2]] has |c eps / 2| = 2.
  HamiltonianSpec wild = HamiltonianSpec::build(IntMatrix(1, {2}), IntMatrix(1));
  Trajectory grow = evolve(wild, LapseSequence::constant(2),
                           state(0, {Int(1)}, {Int(0)}),
                           state(1, {Int(1)}, {Int(0)}), 8);
  try {
    SampledWave::from_trajectory(grow, 1.0);
    FAIL("expected UnstableSpectrum");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnstableSpectrum);
  }

  // Non-constant lapse is rejected by the sampling bridge.
  LapseSequence varying = LapseSequence::constant(2);
  varying.set(3, Int(4));
  Trajectory t2 = evolve(sigma_x(), varying,
                         state(0, {Int(1), Int(1)}, {Int(0), Int(0)}),
                         state(1, {Int(0), Int(0)}, {Int(-1), Int(-1)}), 8);
  try {
    SampledWave::from_trajectory(t2, 1.0);
    FAIL("expected NonConstantLapse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonConstantLapse);
  }

  // Samples beyond 2^53 fail loudly. H = 0 keeps the spectrum stable, so
  // plant an oversized integer in the initial data directly.
  HamiltonianSpec flat = HamiltonianSpec::build(IntMatrix(1), IntMatrix(1));
  CaState big0 = state(0, {(Int(1) << 54)}, {Int(0)});
  CaState big1 = state(1, {Int(0)}, {Int(0)});
  Trajectory t3 = evolve(flat, LapseSequence::constant(2), big0, big1, 4);
  try {
    SampledWave::from_trajectory(t3, 1.0);
    FAIL("expected FloatOverflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FloatOverflow);
  }
}

TEST_CASE("recurrence residual equals the boundary-truncation oracle") {
  SampledWave wave = sigma_x_wave(512);
  ComplexMatrix h = sigma_x_f();
  Rng rng = make_rng(52, 0);
  for (int k = 0; k < 40; ++k) {
    long long m = rng.uniform(wave.n0 + 64, wave.n1() - 65);
    double t = (static_cast<double>(m) + 0.5) * wave.l;
    double measured = mod_schrodinger_residual(wave, h, 2, t, 64);
    double oracle = residual_boundary_oracle(wave, t);
    CHECK(measured == doctest::Approx(oracle).epsilon(1e-6));
    // Window truncation keeps the residual near 1/(pi * distance).
    CHECK(measured < 1e-2);
    CHECK(measured > 1e-5);
  }

  // Zero wave: residual identically zero.
  SampledWave zero = SampledWave::from_samples(
      1.0, 0, std::vector<ComplexVector>(64, ComplexVector(2, Complex(0, 0))));
  CHECK(mod_schrodinger_residual(zero, h, 2, 32.25, 4) == 0.0);

  CHECK_THROWS_AS(mod_schrodinger_residual(wave, h, 2, 1.5, 64), Error);
}

TEST_CASE("a recurrence violation shows up in the residual near the site") {
  SampledWave wave = sigma_x_wave(512);
  ComplexMatrix h = sigma_x_f();
  double t = 255.5;
  double baseline = mod_schrodinger_residual(wave, h, 2, t, 64);
  wave.samples[256][0] += Complex(1.0, 0.0);  // break the recurrence at n=256
  double broken = mod_schrodinger_residual(wave, h, 2, t, 64);
  CHECK(broken > 100.0 * baseline);
  CHECK(broken > 0.1);
}

TEST_CASE("residual decreases like 1/margin as the window grows") {
  // Windows of 8K samples probed at margin K, K in {64, 256}: the
  // log-log slope against K must sit in [0.7, 1.3].
  std::vector<double> ks = {64.0, 256.0};
  std::vector<double> rs;
  ComplexMatrix h = sigma_x_f();
  for (double kd : ks) {
    long long k = static_cast<long long>(kd);
    SampledWave wave = sigma_x_wave(8 * k);
    Rng rng = make_rng(53, static_cast<std::uint64_t>(k));
    double worst = 0.0;
    for (int q = 0; q < 40; ++q) {
      long long m = rng.uniform(wave.n0 + k, wave.n1() - k - 1);
      double t = (static_cast<double>(m) + 0.5) * wave.l;
      worst = std::max(worst, mod_schrodinger_residual(wave, h, 2, t, k));
    }
    rs.push_back(worst);
  }
  double slope = std::log(rs[0] / rs[1]) / std::log(ks[1] / ks[0]);
  CHECK(slope >= 0.7);
  CHECK(slope <= 1.3);
}

TEST_CASE("continuum conservation check") {
  SampledWave wave = sigma_x_wave(512);
  ComplexMatrix h = sigma_x_f();
  ComplexMatrix id = ComplexMatrix::identity(2);

  // On-grid times use exact samples; the grid identity makes the value 0
  // in exact integer-valued doubles.
  for (long long m : {100LL, 200LL, 301LL}) {
    CHECK(continuum_conservation_check(wave, id, h, 2, wave.grid_time(m), 64) <=
          1e-12);
    CHECK(continuum_conservation_check(wave, h, h, 2, wave.grid_time(m), 64) <=
          1e-12);
  }
  // Off-grid the value is truncation-limited, same scale as the residual.
  Rng rng = make_rng(54, 0);
  for (int q = 0; q < 20; ++q) {
    long long m = rng.uniform(wave.n0 + 64, wave.n1() - 65);
    double t = (static_cast<double>(m) + 0.5) * wave.l;
    CHECK(continuum_conservation_check(wave, id, h, 2, t, 64) <= 5e-2);
    CHECK(continuum_conservation_check(wave, h, h, 2, t, 64) <= 5e-2);
  }

  // Zero wave: exactly zero.
  SampledWave zero = SampledWave::from_samples(
      1.0, 0, std::vector<ComplexVector>(64, ComplexVector(2, Complex(0, 0))));
  CHECK(continuum_conservation_check(zero, id, h, 2, 32.25, 4) == 0.0);

  // sigma_z does not commute with sigma_x.
  ComplexMatrix sz(2);
  sz.at(0, 0) = 1.0;
  sz.at(1, 1) = -1.0;
  try {
    continuum_conservation_check(wave, sz, h, 2, 255.5, 64);
    FAIL("expected NotCommuting");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCommuting);
  }
}

TEST_CASE("two_time_continuum: coincidence, symmetry, translation on grid") {
  SampledWave wave = sigma_x_wave(512);
  ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix h = sigma_x_f();

  for (long long m : {80LL, 129LL, 254LL}) {
    double t = wave.grid_time(m);
    // Coincidence: C(t,t) = |psi(t)|^2 = 2 on this cycle.
    CHECK(two_time_continuum(wave, id, t, t, 64) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // Grid translation invariance C(t-l, t) = C(t, t+l) is exact on grid.
    CHECK(two_time_continuum(wave, id, t - wave.l, t, 64) ==
          doctest::Approx(two_time_continuum(wave, id, t, t + wave.l, 64))
              .epsilon(1e-14));
    CHECK(two_time_continuum(wave, h, t - wave.l, t, 64) ==
          doctest::Approx(two_time_continuum(wave, h, t, t + wave.l, 64))
              .epsilon(1e-14));
  }

  Rng rng = make_rng(55, 0);
  for (int q = 0; q < 20; ++q) {
    // Keep t1 +- l inside the trusted region [64, 447].
    double t1 = (rng.uniform(65, 445) + 0.3) * wave.l;
    double t2 = (rng.uniform(64, 445) + 0.8) * wave.l;
    CHECK(two_time_continuum(wave, h, t1, t2, 64) ==
          doctest::Approx(two_time_continuum(wave, h, t2, t1, 64)).epsilon(1e-12));
    // Off grid the translation property holds to the truncation scale.
    CHECK(std::abs(two_time_continuum(wave, id, t1 - wave.l, t1, 64) -
                   two_time_continuum(wave, id, t1, t1 + wave.l, 64)) <= 5e-2);
  }
  CHECK_THROWS_AS(two_time_continuum(wave, id, 1.0, 255.0, 64), Error);
}

TEST_CASE("coincidence_norm extrapolates the equal-time norm") {
  // Low-energy single mode: psi_n = e^{-i E n l} (1,1)/sqrt(2) with
  // sin(E l) = 1e-4. The translation-invariant two-time function is
  // C_I(t, t+l') = cos(E l'), so the extrapolated limit is the norm 1.
  const double l = 1.0;
  const double el = std::asin(1e-4);
  const long long count = 512;
  std::vector<ComplexVector> samples;
  for (long long n = 0; n < count; ++n) {
    Complex a = std::exp(Complex(0.0, -el * static_cast<double>(n))) *
                Complex(M_SQRT1_2, 0.0);
    samples.push_back({a, a});
  }
  SampledWave wave = SampledWave::from_samples(l, 0, std::move(samples));

  double t = wave.grid_time(256);  // on-grid anchor: exact sample there
  std::vector<double> offsets = {l / 2, l / 4, l / 8, l / 16, l / 32};
  double limit = coincidence_norm(wave, t, offsets, 64);
  CHECK(limit == doctest::Approx(1.0).epsilon(1e-6));

  // Rescaled wave with C_I(t, t+l) = 1: the limit is 1/cos(E l), still 1
  // within 1e-6 because the mode is deep inside the band.
  double c_at_l = two_time_continuum(wave, ComplexMatrix::identity(2), t,
                                     t + l, 64);
  double scale = 1.0 / std::sqrt(c_at_l);
  for (auto& row : wave.samples)
    for (auto& z : row) z *= scale;
  CHECK(two_time_continuum(wave, ComplexMatrix::identity(2), t, t + l, 64) ==
        doctest::Approx(1.0).epsilon(1e-12));
  double limit2 = coincidence_norm(wave, t, offsets, 64);
  CHECK(limit2 == doctest::Approx(1.0).epsilon(1e-6));

  CHECK_THROWS_AS(coincidence_norm(wave, t, {l / 4, l / 2}, 64), Error);
  CHECK_THROWS_AS(coincidence_norm(wave, t, {}, 64), Error);
}

TEST_CASE("wave CSV round trip") {
  SampledWave wave = sigma_x_wave(32, 0.5);
  auto path = std::filesystem::temp_directory_path() / "hca_wave_test.csv";
  write_wave_csv(wave, path.string());
  SampledWave readback = read_wave_csv(path.string());
  CHECK(readback.l == wave.l);
  CHECK(readback.n0 == wave.n0);
  REQUIRE(readback.samples.size() == wave.samples.size());
  for (std::size_t n = 0; n < wave.samples.size(); ++n)
    for (int i = 0; i < wave.dim(); ++i)
      CHECK(readback.samples[n][i] == wave.samples[n][i]);
  std::filesystem::remove(path);
}
