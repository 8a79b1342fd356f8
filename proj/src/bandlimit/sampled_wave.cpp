#include "bandlimit/sampled_wave.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "spectral/jacobi.hpp"

namespace hca {

SampledWave SampledWave::from_samples(double l, long long n0,
                                      std::vector<ComplexVector> samples) {
  if (!(l > 0.0)) fail(ErrorCode::InvalidArgument, "l must be positive");
  if (samples.empty()) fail(ErrorCode::EmptyWindow, "no samples");
  const std::size_t dim = samples[0].size();
  if (dim == 0) fail(ErrorCode::EmptyWindow, "zero-dimensional samples");
  for (const auto& s : samples) {
    require_same_dim(s.size(), dim, "sample window");
    for (const Complex& z : s)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        fail(ErrorCode::InvalidArgument, "non-finite sample");
  }
  SampledWave w;
  w.l = l;
  w.n0 = n0;
  w.samples = std::move(samples);
  return w;
}

SampledWave SampledWave::from_trajectory(const Trajectory& traj, double l) {
  if (!traj.lapse().is_constant())
    fail(ErrorCode::NonConstantLapse,
         "sampling bridge requires a constant lapse");
  const long long c = traj.lapse().base().get_si();
  EigenSystem sys = eigensolve_hermitian(to_float(traj.spec()));
  for (double eps : sys.eps) {
    double band = std::abs(0.5 * static_cast<double>(c) * eps);
    if (band > 1.0 + 1e-9)
      fail(ErrorCode::UnstableSpectrum,
           "trajectory spectrum leaves the stability band (|c*eps/2| = " +
               std::to_string(band) +
           "); exponentially growing samples cannot be bandlimited");
  }
  std::vector<ComplexVector> samples;
  samples.reserve(traj.length());
  for (const CaState& s : traj.states()) {
    ComplexVector row(s.x.size());
    for (std::size_t i = 0; i < s.x.size(); ++i)
      row[i] = Complex(to_double_checked(s.x[i]), to_double_checked(s.p[i]));
    samples.push_back(std::move(row));
  }
  return from_samples(l, traj.first_index(), std::move(samples));
}

void write_wave_csv(const SampledWave& wave, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open for writing: " + path);
  out.precision(17);
  out << "# l=" << wave.l << " n0=" << wave.n0 << " n1=" << wave.n1() << "\n";
  out << "n,t";
  for (int i = 0; i < wave.dim(); ++i) out << ",re_psi" << i << ",im_psi" << i;
  out << "\n";
  for (std::size_t k = 0; k < wave.samples.size(); ++k) {
    long long n = wave.n0 + static_cast<long long>(k);
    out << n << ',' << wave.grid_time(n);
    for (const Complex& z : wave.samples[k])
      out << ',' << z.real() << ',' << z.imag();
    out << "\n";
  }
  if (!out) fail(ErrorCode::IoError, "write failed: " + path);
}

SampledWave read_wave_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# l=", 0) != 0)
    fail(ErrorCode::ParseError, "missing wave metadata row in " + path);
  double l = 0.0;
  long long n0 = 0, n1 = 0;
  if (std::sscanf(line.c_str(), "# l=%lf n0=%lld n1=%lld", &l, &n0, &n1) != 3)
    fail(ErrorCode::ParseError, "bad wave metadata row in " + path);
  if (!std::getline(in, line))
    fail(ErrorCode::ParseError, "missing wave header row in " + path);

  std::vector<ComplexVector> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
    if (cells.size() < 4 || cells.size() % 2 != 0)
      fail(ErrorCode::ParseError, "bad wave row: " + line);
    ComplexVector row;
    for (std::size_t i = 2; i + 1 < cells.size(); i += 2)
      row.emplace_back(cells[i], cells[i + 1]);
    samples.push_back(std::move(row));
  }
  return SampledWave::from_samples(l, n0, std::move(samples));
}

}  // namespace hca
