#include "dynamics/action.hpp"

namespace hca {

namespace {

Int int_dot(const IntVector& a, const IntVector& b) {
  Int acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Im(psi_b^* psi_a) = x_b . p_a - p_b . x_a
Int im_bilinear(const CaState& b, const CaState& a) {
  return int_dot(b.x, a.p) - int_dot(b.p, a.x);
}

// Action term at index m, pair (a = state m-1, b = state m), from scratch.
Rational term_at(const HamiltonianSpec& spec, const CaState& a,
                 const CaState& b, const Int& c_m, ActionForm form) {
  Int dtau = b.tau - a.tau;
  Rational h_a, h_b;
  Rational kinetic;
  if (form == ActionForm::XpForm) {
    Int acc(0);
    for (std::size_t i = 0; i < b.x.size(); ++i)
      acc += (b.p[i] + a.p[i]) * (b.x[i] - a.x[i]);
    kinetic = Rational(acc);
    h_a = h_value_xp(spec, a.x, a.p);
    h_b = h_value_xp(spec, b.x, b.p);
  } else {
    kinetic = Rational(im_bilinear(b, a));
    h_a = h_value_psi(spec, a.psi());
    h_b = h_value_psi(spec, b.psi());
  }
  return kinetic + (b.pi + a.pi) * Rational(dtau) -
         (Rational(dtau) * (h_b + h_a) + Rational(c_m) * b.pi);
}

Rational action_sum(const Trajectory& traj, ActionForm form) {
  if (traj.length() < 2) fail(ErrorCode::TooShort, "action needs >= 2 states");
  const auto& states = traj.states();
  Rational total(0);
  for (std::size_t i = 1; i < states.size(); ++i)
    total += term_at(traj.spec(), states[i - 1], states[i],
                     traj.lapse().at(states[i].n), form);
  return total;
}

}  // namespace

Rational discrete_action(const Trajectory& traj) {
  return action_sum(traj, ActionForm::XpForm);
}

Rational psi_action(const Trajectory& traj) {
  return action_sum(traj, ActionForm::PsiForm);
}

bool is_integer_valued(const Trajectory& traj) {
  return discrete_action(traj).get_den() == 1;
}

Rational vary_action(const Trajectory& traj, long long site, VarKind kind,
                     int component, const Int& delta, ActionForm form) {
  if (delta == 0) fail(ErrorCode::ZeroVariation, "variation with delta = 0");
  if (site <= traj.first_index() || site >= traj.last_index())
    fail(ErrorCode::BoundarySite, "variation site must be strictly interior");
  if ((kind == VarKind::X || kind == VarKind::P) &&
      (component < 0 || component >= traj.spec().dim()))
    fail(ErrorCode::OutOfRange, "variation component out of range");

  const CaState& a = traj.at(site - 1);
  const CaState& c = traj.at(site + 1);
  const Int& c_n = traj.lapse().at(site);
  const Int& c_n1 = traj.lapse().at(site + 1);

  auto local_sum = [&](const Int& shift) -> Rational {
    CaState b = traj.at(site);
    switch (kind) {
      case VarKind::X: b.x[component] += shift; break;
      case VarKind::P: b.p[component] += shift; break;
      case VarKind::Tau: b.tau += shift; break;
      case VarKind::Pi: b.pi += Rational(shift); break;
    }
    return term_at(traj.spec(), a, b, c_n, form) +
           term_at(traj.spec(), b, c, c_n1, form);
  };

  return (local_sum(delta) - local_sum(-delta)) / 2;
}

StateCache make_state_cache(const HamiltonianSpec& spec, const CaState& s) {
  StateCache cache;
  cache.sx = spec.s().mul(s.x);
  cache.sp = spec.s().mul(s.p);
  cache.ax = spec.a().mul(s.x);
  cache.ap = spec.a().mul(s.p);
  cache.psi = s.psi();
  cache.hpsi = spec.h().mul(cache.psi);
  Int quad = int_dot(s.x, cache.sx) + int_dot(s.p, cache.sp);
  cache.h_xp = half_of(quad) + Rational(int_dot(s.p, cache.ax));
  GaussInt form = dot_conj(cache.psi, cache.hpsi);
  if (form.im != 0)
    fail(ErrorCode::Internal, "non-real psi quadratic form in state cache");
  cache.h_psi = half_of(form.re);
  return cache;
}

PairTerms pair_terms(const CaState& a, const StateCache& ca, const CaState& b,
                     const StateCache& cb, const Int& c_m) {
  Rational dtau = Rational(b.tau - a.tau);
  Rational shared = (b.pi + a.pi) * dtau - Rational(c_m) * b.pi;
  Int kin_xp(0);
  for (std::size_t i = 0; i < b.x.size(); ++i)
    kin_xp += (b.p[i] + a.p[i]) * (b.x[i] - a.x[i]);
  PairTerms t;
  t.xp = Rational(kin_xp) + shared - dtau * (cb.h_xp + ca.h_xp);
  t.psi = Rational(im_bilinear(b, a)) + shared - dtau * (cb.h_psi + ca.h_psi);
  return t;
}

VariationPair vary_site_cached(const HamiltonianSpec& spec, const CaState& a,
                               const StateCache& ca, const CaState& b,
                               const StateCache& cb, const CaState& c,
                               const StateCache& cc, const PairTerms& t_n,
                               const PairTerms& t_n1, const Int& c_n,
                               [[maybe_unused]] const Int& c_n1, VarKind kind,
                               int component, const Int& delta) {
  if (delta == 0) fail(ErrorCode::ZeroVariation, "variation with delta = 0");
  const Rational dtau_n = Rational(b.tau - a.tau);
  const Rational dtau_n1 = Rational(c.tau - b.tau);
  const int g = component;

  // Shifted action terms t_n(+-delta), t_n1(+-delta) for both forms; each
  // case adds the exact increments of the pieces the shift touches.
  auto eval = [&](const Int& v) -> PairTerms {
    Rational sv = Rational(v);
    PairTerms out = {t_n.xp, t_n.psi};
    Rational o_n1_xp = t_n1.xp, o_n1_psi = t_n1.psi;
    switch (kind) {
      case VarKind::X: {
        // H(x + v e_g, p) - H(x, p), both evaluation routes.
        Rational dh_xp =
            Rational(v * (cb.sx[g] - cb.ap[g])) + half_of(v * v * spec.s().at(g, g));
        Rational dh_psi = Rational(v * cb.hpsi[g].re) +
                          half_of(v * v * spec.s().at(g, g));
        out.xp += Rational(v * (b.p[g] + a.p[g])) - dtau_n * dh_xp;
        o_n1_xp += -Rational(v * (c.p[g] + b.p[g])) - dtau_n1 * dh_xp;
        out.psi += Rational(v * a.p[g]) - dtau_n * dh_psi;
        o_n1_psi += -Rational(v * c.p[g]) - dtau_n1 * dh_psi;
        break;
      }
      case VarKind::P: {
        Rational dh_xp =
            Rational(v * (cb.sp[g] + cb.ax[g])) + half_of(v * v * spec.s().at(g, g));
        Rational dh_psi = Rational(v * cb.hpsi[g].im) +
                          half_of(v * v * spec.s().at(g, g));
        out.xp += Rational(v * (b.x[g] - a.x[g])) - dtau_n * dh_xp;
        o_n1_xp += Rational(v * (c.x[g] - b.x[g])) - dtau_n1 * dh_xp;
        out.psi += -Rational(v * a.x[g]) - dtau_n * dh_psi;
        o_n1_psi += Rational(v * c.x[g]) - dtau_n1 * dh_psi;
        break;
      }
      case VarKind::Tau: {
        out.xp += sv * (b.pi + a.pi) - sv * (cb.h_xp + ca.h_xp);
        o_n1_xp += -sv * (c.pi + b.pi) + sv * (cc.h_xp + cb.h_xp);
        out.psi += sv * (b.pi + a.pi) - sv * (cb.h_psi + ca.h_psi);
        o_n1_psi += -sv * (c.pi + b.pi) + sv * (cc.h_psi + cb.h_psi);
        break;
      }
      case VarKind::Pi: {
        Rational d = sv * (dtau_n - Rational(c_n));
        out.xp += d;
        out.psi += d;
        o_n1_xp += sv * dtau_n1;
        o_n1_psi += sv * dtau_n1;
        break;
      }
    }
    out.xp += o_n1_xp;
    out.psi += o_n1_psi;
    return out;
  };

  PairTerms plus = eval(delta);
  PairTerms minus = eval(-delta);
  return {(plus.xp - minus.xp) / 2, (plus.psi - minus.psi) / 2};
}

std::vector<StationarityEntry> stationarity_report(const Trajectory& traj) {
  if (traj.length() < 3)
    fail(ErrorCode::TooShort, "stationarity needs >= 3 states");
  std::vector<StationarityEntry> entries;
  const auto& states = traj.states();
  const HamiltonianSpec& spec = traj.spec();
  const int dim = spec.dim();
  const Int one(1);

  StateCache ca = make_state_cache(spec, states[0]);
  StateCache cb = make_state_cache(spec, states[1]);
  PairTerms t_n = pair_terms(states[0], ca, states[1], cb,
                             traj.lapse().at(states[1].n));
  for (std::size_t i = 1; i + 1 < states.size(); ++i) {
    const CaState& a = states[i - 1];
    const CaState& b = states[i];
    const CaState& c = states[i + 1];
    StateCache cc = make_state_cache(spec, c);
    const Int& c_n = traj.lapse().at(b.n);
    const Int& c_n1 = traj.lapse().at(c.n);
    PairTerms t_n1 = pair_terms(b, cb, c, cc, c_n1);

    auto probe = [&](VarKind kind, int comp) {
      VariationPair v = vary_site_cached(spec, a, ca, b, cb, c, cc, t_n, t_n1,
                                         c_n, c_n1, kind, comp, one);
      if (v.xp != 0) entries.push_back({b.n, kind, comp, v.xp});
    };
    for (int g = 0; g < dim; ++g) probe(VarKind::X, g);
    for (int g = 0; g < dim; ++g) probe(VarKind::P, g);
    probe(VarKind::Tau, 0);
    probe(VarKind::Pi, 0);

    ca = std::move(cb);
    cb = std::move(cc);
    t_n = std::move(t_n1);
  }
  return entries;
}

const char* var_kind_name(VarKind kind) {
  switch (kind) {
    case VarKind::X: return "x";
    case VarKind::P: return "p";
    case VarKind::Tau: return "tau";
    case VarKind::Pi: return "pi";
  }
  return "?";
}

}  // namespace hca
