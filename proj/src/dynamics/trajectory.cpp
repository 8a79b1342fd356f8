#include "dynamics/trajectory.hpp"

#include <fstream>
#include <sstream>

namespace hca {

Trajectory Trajectory::from_states(HamiltonianSpec spec, LapseSequence lapse,
                                   std::vector<CaState> states) {
  if (states.size() < 2)
    fail(ErrorCode::TooShort, "trajectory needs at least two states");
  for (std::size_t i = 0; i < states.size(); ++i) {
    const CaState& s = states[i];
    require_same_dim(static_cast<std::size_t>(spec.dim()), s.x.size(),
                     "trajectory state x");
    require_same_dim(s.x.size(), s.p.size(), "trajectory state p");
    if (i > 0 && s.n != states[i - 1].n + 1)
      fail(ErrorCode::NonConsecutiveStates,
           "trajectory state indices must be consecutive");
  }
  return Trajectory(std::move(spec), std::move(lapse), std::move(states));
}

const CaState& Trajectory::at(long long n) const {
  if (!contains(n)) fail(ErrorCode::OutOfRange, "state index out of range");
  return states_[static_cast<std::size_t>(n - first_index())];
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open for writing: " + path);
  const int dim = traj.spec().dim();
  out << "n";
  for (int i = 0; i < dim; ++i) out << ",x_" << i;
  for (int i = 0; i < dim; ++i) out << ",p_" << i;
  out << ",tau,pi\n";
  for (const CaState& s : traj.states()) {
    out << s.n;
    for (int i = 0; i < dim; ++i) out << ',' << int_to_string(s.x[i]);
    for (int i = 0; i < dim; ++i) out << ',' << int_to_string(s.p[i]);
    out << ',' << int_to_string(s.tau) << ',' << rational_to_string(s.pi)
        << '\n';
  }
  if (!out) fail(ErrorCode::IoError, "write failed: " + path);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

Trajectory read_trajectory_csv(const std::string& path,
                               const HamiltonianSpec& spec,
                               const LapseSequence& lapse) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line))
    fail(ErrorCode::ParseError, "empty trajectory file: " + path);
  auto header = split_csv_line(line);
  const std::size_t dim = static_cast<std::size_t>(spec.dim());
  if (header.size() != 2 * dim + 3 || header[0] != "n")
    fail(ErrorCode::ParseError,
         "trajectory header does not match spec dimension in " + path);

  std::vector<CaState> states;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != 2 * dim + 3)
      fail(ErrorCode::ParseError, "bad trajectory row: " + line);
    CaState s;
    s.n = std::stoll(cells[0]);
    s.x.resize(dim);
    s.p.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) s.x[i] = parse_int(cells[1 + i]);
    for (std::size_t i = 0; i < dim; ++i)
      s.p[i] = parse_int(cells[1 + dim + i]);
    s.tau = parse_int(cells[1 + 2 * dim]);
    s.pi = parse_rational(cells[2 + 2 * dim]);
    states.push_back(std::move(s));
  }
  return Trajectory::from_states(spec, lapse, std::move(states));
}

}  // namespace hca
