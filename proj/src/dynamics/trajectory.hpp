#pragma once

#include <map>
#include <optional>

#include "exact/hamiltonian.hpp"

namespace hca {

/// One automaton time slice: step index n, integer coordinates x and
/// momenta p, the dynamical time tau and its conjugate pi. pi is kept as an
/// exact rational because the Hamiltonian increment driving it can be a
/// half-integer; everything else is a strict integer.
struct CaState {
  long long n = 0;
  IntVector x;
  IntVector p;
  Int tau{0};
  Rational pi{0};

  GaussVector psi() const { return pack_psi(x, p); }
  bool operator==(const CaState& o) const {
    return n == o.n && x == o.x && p == o.p && tau == o.tau && pi == o.pi;
  }
};

/// Lapse values c_n: a constant with optional per-step overrides.
class LapseSequence {
 public:
  LapseSequence() = default;
  static LapseSequence constant(Int c) {
    LapseSequence l;
    l.base_ = std::move(c);
    return l;
  }

  const Int& at(long long n) const {
    auto it = overrides_.find(n);
    return it == overrides_.end() ? base_ : it->second;
  }
  void set(long long n, Int c) { overrides_[n] = std::move(c); }

  bool is_constant() const { return overrides_.empty(); }
  const Int& base() const { return base_; }

 private:
  Int base_{2};  // tau-dot = 2 is the default used by the sampling bridge
  std::map<long long, Int> overrides_;
};

/// Ordered states at consecutive indices under a fixed spec and lapse.
/// evolve() produces trajectories whose interior triples satisfy the
/// equations of motion exactly; trajectories loaded or assembled by hand
/// carry no such guarantee and are exactly what the checking operations
/// are for.
class Trajectory {
 public:
  static Trajectory from_states(HamiltonianSpec spec, LapseSequence lapse,
                                std::vector<CaState> states);

  const HamiltonianSpec& spec() const { return spec_; }
  const LapseSequence& lapse() const { return lapse_; }
  const std::vector<CaState>& states() const { return states_; }
  std::vector<CaState>& mutable_states() { return states_; }

  long long first_index() const { return states_.front().n; }
  long long last_index() const { return states_.back().n; }
  std::size_t length() const { return states_.size(); }

  const CaState& at(long long n) const;
  bool contains(long long n) const {
    return n >= first_index() && n <= last_index();
  }

 private:
  Trajectory(HamiltonianSpec spec, LapseSequence lapse,
             std::vector<CaState> states)
      : spec_(std::move(spec)), lapse_(std::move(lapse)),
        states_(std::move(states)) {}

  HamiltonianSpec spec_;
  LapseSequence lapse_;
  std::vector<CaState> states_;
};

/// CSV with columns n, x_0..x_{N-1}, p_0..p_{N-1}, tau, pi; exact decimal
/// strings, half-integers as "k/2".
void write_trajectory_csv(const Trajectory& traj, const std::string& path);
Trajectory read_trajectory_csv(const std::string& path,
                               const HamiltonianSpec& spec,
                               const LapseSequence& lapse);

}  // namespace hca
