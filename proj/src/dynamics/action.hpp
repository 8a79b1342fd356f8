#pragma once

#include "dynamics/trajectory.hpp"

namespace hca {

/// The two equivalent action forms. They generate the same equations of
/// motion and differ by a pure boundary term; interior variations agree
/// exactly. XpForm is the phase-space sum, PsiForm the complex bilinear
/// one with Im(psi_n^* psi_{n-1}) replacing (p_n + p_{n-1})·dx_n.
enum class ActionForm { XpForm, PsiForm };

enum class VarKind { X, P, Tau, Pi };

/// Action of a finite trajectory, summed over adjacent pairs:
///   sum_m [(p_m + p_{m-1})·dx_m + (pi_m + pi_{m-1}) dtau_m - A_m],
///   A_m = dtau_m (H_m + H_{m-1}) + c_m pi_m.
Rational discrete_action(const Trajectory& traj);

/// Eq-13-style action with the Im(psi^* psi') kinetic term and the
/// Hamiltonian evaluated through the psi quadratic form.
Rational psi_action(const Trajectory& traj);

/// True when the trajectory's action is an integer (the half-integer
/// Hamiltonian terms can make it a proper half-integer otherwise).
bool is_integer_valued(const Trajectory& traj);

/// Symmetric variation [S(f + delta) - S(f - delta)] / 2 of the action
/// under shifting one variable at one interior site. Only the two action
/// terms touching the site are evaluated; all others cancel identically.
/// This is the deliberately plain reference implementation.
Rational vary_action(const Trajectory& traj, long long site, VarKind kind,
                     int component, const Int& delta,
                     ActionForm form = ActionForm::XpForm);

struct StationarityEntry {
  long long n;
  VarKind kind;
  int component;  // meaningful for X and P
  Rational value;
};

/// Every interior (site, variable) whose unit symmetric variation of the
/// phase-space action is nonzero; empty exactly when the trajectory
/// satisfies the discrete equations of motion.
std::vector<StationarityEntry> stationarity_report(const Trajectory& traj);

// ---------------------------------------------------------------------
// Cached variation engine. Evaluates the same shifted-action differences
// as vary_action but from per-state matrix-product caches, so a full scan
// over a long trajectory costs O(1) big-integer products per variation
// instead of a fresh quadratic form. Cross-checked against vary_action in
// the test suite.

struct StateCache {
  IntVector sx, sp, ax, ap;  // S x, S p, A x, A p
  GaussVector psi;           // x + i p
  GaussVector hpsi;          // H psi
  Rational h_xp, h_psi;      // both Hamiltonian-value routes
};

StateCache make_state_cache(const HamiltonianSpec& spec, const CaState& s);

struct PairTerms {
  Rational xp, psi;  // action term at index m for both forms
};

PairTerms pair_terms(const CaState& a, const StateCache& ca, const CaState& b,
                     const StateCache& cb, const Int& c_m);

struct VariationPair {
  Rational xp, psi;
};

/// All caches refer to the consecutive states a = s_{n-1}, b = s_n,
/// c = s_{n+1}; t_n and t_n1 are the unshifted action terms at n and n+1.
VariationPair vary_site_cached(const HamiltonianSpec& spec, const CaState& a,
                               const StateCache& ca, const CaState& b,
                               const StateCache& cb, const CaState& c,
                               const StateCache& cc, const PairTerms& t_n,
                               const PairTerms& t_n1, const Int& c_n,
                               const Int& c_n1, VarKind kind, int component,
                               const Int& delta);

const char* var_kind_name(VarKind kind);

}  // namespace hca
