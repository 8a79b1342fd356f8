#include "dynamics/leapfrog.hpp"

namespace hca {

namespace {

void check_pair(const CaState& a, const CaState& b, const HamiltonianSpec& spec) {
  require_same_dim(static_cast<std::size_t>(spec.dim()), a.x.size(), "step state");
  require_same_dim(a.x.size(), a.p.size(), "step state");
  require_same_dim(a.x.size(), b.x.size(), "step state pair");
  require_same_dim(b.x.size(), b.p.size(), "step state");
}

CaState advance(const CaState& from, const CaState& mid, const Int& c,
                const HamiltonianSpec& spec, long long new_n, int direction) {
  // direction +1: from = n-1, mid = n, result = n+1 (and -1 for the reverse).
  CaState out;
  out.n = new_n;
  const int dim = spec.dim();
  IntVector sp = spec.s().mul(mid.p);
  IntVector ax = spec.a().mul(mid.x);
  IntVector sx = spec.s().mul(mid.x);
  IntVector ap = spec.a().mul(mid.p);
  out.x.resize(dim);
  out.p.resize(dim);
  for (int i = 0; i < dim; ++i) {
    out.x[i] = from.x[i] + direction * c * (sp[i] + ax[i]);
    out.p[i] = from.p[i] - direction * c * (sx[i] - ap[i]);
  }
  out.tau = from.tau + direction * c;
  out.pi = from.pi + h_value_xp(spec, out.x, out.p) - h_value_xp(spec, from.x, from.p);
  return out;
}

}  // namespace

CaState step_forward(const CaState& prev, const CaState& curr,
                     const HamiltonianSpec& spec, const LapseSequence& lapse) {
  check_pair(prev, curr, spec);
  if (prev.n != curr.n - 1)
    fail(ErrorCode::NonConsecutiveStates, "step_forward: states not consecutive");
  return advance(prev, curr, lapse.at(curr.n), spec, curr.n + 1, +1);
}

CaState step_backward(const CaState& next, const CaState& curr,
                      const HamiltonianSpec& spec, const LapseSequence& lapse) {
  check_pair(next, curr, spec);
  if (next.n != curr.n + 1)
    fail(ErrorCode::NonConsecutiveStates, "step_backward: states not consecutive");
  return advance(next, curr, lapse.at(curr.n), spec, curr.n - 1, -1);
}

Trajectory evolve(const HamiltonianSpec& spec, const LapseSequence& lapse,
                  const CaState& s0, const CaState& s1, long long steps) {
  if (steps < 0) fail(ErrorCode::InvalidArgument, "evolve: steps must be >= 0");
  check_pair(s0, s1, spec);
  if (s1.n != s0.n + 1)
    fail(ErrorCode::NonConsecutiveStates, "evolve: initial states not consecutive");
  std::vector<CaState> states;
  states.reserve(static_cast<std::size_t>(steps) + 2);
  states.push_back(s0);
  states.push_back(s1);
  // Rolling Hamiltonian values keep this at one quadratic-form evaluation
  // per step; the pi update needs H at n+1 and n-1.
  Rational h_prev = h_value_xp(spec, s0.x, s0.p);
  Rational h_curr = h_value_xp(spec, s1.x, s1.p);
  const int dim = spec.dim();
  for (long long k = 0; k < steps; ++k) {
    const CaState& prev = states[states.size() - 2];
    const CaState& curr = states[states.size() - 1];
    const Int& c = lapse.at(curr.n);
    CaState next;
    next.n = curr.n + 1;
    IntVector sp = spec.s().mul(curr.p);
    IntVector ax = spec.a().mul(curr.x);
    IntVector sx = spec.s().mul(curr.x);
    IntVector ap = spec.a().mul(curr.p);
    next.x.resize(dim);
    next.p.resize(dim);
    for (int i = 0; i < dim; ++i) {
      next.x[i] = prev.x[i] + c * (sp[i] + ax[i]);
      next.p[i] = prev.p[i] - c * (sx[i] - ap[i]);
    }
    next.tau = prev.tau + c;
    Rational h_next = h_value_xp(spec, next.x, next.p);
    next.pi = prev.pi + h_next - h_prev;
    h_prev = std::move(h_curr);
    h_curr = std::move(h_next);
    states.push_back(std::move(next));
  }
  return Trajectory::from_states(spec, lapse, std::move(states));
}

}  // namespace hca
