#include "conservation/invariants.hpp"

namespace hca {

namespace {

void require_self_adjoint(const GaussMatrix& g) {
  if (!g.is_self_adjoint())
    fail(ErrorCode::NotSelfAdjoint, "G must be self-adjoint");
}

}  // namespace

Int staggered_invariant_core(const GaussVector& psi_a,
                             const GaussVector& g_psi_b) {
  require_same_dim(psi_a.size(), g_psi_b.size(), "staggered_invariant");
  Int acc(0);
  for (std::size_t i = 0; i < psi_a.size(); ++i)
    acc += psi_a[i].re * g_psi_b[i].re + psi_a[i].im * g_psi_b[i].im;
  return 2 * acc;
}

Int staggered_invariant(const Trajectory& traj, const GaussMatrix& g,
                        long long n) {
  if (!traj.contains(n) || !traj.contains(n + 1))
    fail(ErrorCode::OutOfRange, "staggered invariant needs states n and n+1");
  require_self_adjoint(g);
  require_same_dim(g.dim(), traj.spec().dim(), "staggered_invariant");
  return staggered_invariant_core(traj.at(n).psi(), g.mul(traj.at(n + 1).psi()));
}

ConservedReport check_theorem_a(const Trajectory& traj, const GaussMatrix& g,
                                const std::string& label) {
  require_self_adjoint(g);
  require_same_dim(g.dim(), traj.spec().dim(), "check_theorem_a");
  if (!commutator(g, traj.spec().h()).is_zero())
    fail(ErrorCode::NotCommuting,
         "[G,H] != 0: Theorem A does not apply to this G");

  ConservedReport report;
  report.g_label = label;
  const auto& states = traj.states();
  GaussVector g_psi = g.mul(states[1].psi());
  report.values.reserve(states.size() - 1);
  report.values.emplace_back(states[0].n,
                             staggered_invariant_core(states[0].psi(), g_psi));
  for (std::size_t i = 2; i < states.size(); ++i) {
    g_psi = g.mul(states[i].psi());
    Int q = staggered_invariant_core(states[i - 1].psi(), g_psi);
    Int violation = abs(q - report.values.back().second);
    if (violation != 0) {
      if (report.first_violation_step < 0)
        report.first_violation_step = states[i - 1].n;
      if (violation > report.max_violation)
        report.max_violation = violation;
    }
    report.values.emplace_back(states[i - 1].n, std::move(q));
  }
  return report;
}

CommutantFamily generate_commutant(const HamiltonianSpec& spec, int degree) {
  if (degree < 0)
    fail(ErrorCode::InvalidArgument, "commutant degree must be >= 0");
  CommutantFamily family;
  GaussMatrix power = GaussMatrix::identity(spec.dim());
  for (int d = 0; d <= degree; ++d) {
    if (d > 0) power = power.mul(spec.h());
    bool dup = false;
    for (const auto& m : family.members)
      if (m == power) {
        dup = true;
        break;
      }
    if (!dup) {
      family.labels.push_back(d == 0 ? "I" : (d == 1 ? "H" : "H^" + std::to_string(d)));
      family.members.push_back(power);
    }
  }
  return family;
}

bool leibniz_identity_check(const std::vector<Int>& o,
                            const std::vector<Int>& o_prime) {
  if (o.size() != o_prime.size())
    fail(ErrorCode::DimensionMismatch, "sequences must have equal length");
  if (o.size() < 3)
    fail(ErrorCode::TooShort, "Leibniz check needs length >= 3");
  for (std::size_t n = 1; n + 1 < o.size(); ++n) {
    Int lhs2 = 2 * (o[n + 1] * o_prime[n + 1] - o[n - 1] * o_prime[n - 1]);
    Int rhs2 = (o[n + 1] - o[n - 1]) * (o_prime[n + 1] + o_prime[n - 1]) +
               (o[n + 1] + o[n - 1]) * (o_prime[n + 1] - o_prime[n - 1]);
    if (lhs2 != rhs2) return false;
  }
  return true;
}

Int two_time_discrete(const Trajectory& traj, const GaussMatrix& g,
                      long long n1, long long n2) {
  if (!traj.contains(n1) || !traj.contains(n2))
    fail(ErrorCode::OutOfRange, "two_time_discrete indices out of range");
  require_self_adjoint(g);
  require_same_dim(g.dim(), traj.spec().dim(), "two_time_discrete");
  GaussInt z = dot_conj(traj.at(n1).psi(), g.mul(traj.at(n2).psi()));
  return z.re;  // C = Re(psi1^dag G psi2); 2C is the paper's symmetric sum
}

}  // namespace hca
