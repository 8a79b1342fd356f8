#include "hca/hca.h"

#include <cstring>

#include "conservation/invariants.hpp"
#include "conservation/unitaries.hpp"
#include "dynamics/action.hpp"
#include "dynamics/leapfrog.hpp"
#include "scenario/json_format.hpp"
#include "scenario/runner.hpp"
#include "spectral/dispersion.hpp"

struct hca_hamiltonian {
  hca::HamiltonianSpec spec;
};

struct hca_trajectory {
  hca::Trajectory traj;
};

struct hca_run_result {
  hca::RunReport report;
  std::string report_json;
};

namespace {

thread_local std::string g_last_error;

hca_status map_code(hca::ErrorCode code) {
  using hca::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return HCA_ERROR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return HCA_ERROR_DIMENSION_MISMATCH;
    case ErrorCode::NotSymmetric: return HCA_ERROR_NOT_SYMMETRIC;
    case ErrorCode::NotAntisymmetric: return HCA_ERROR_NOT_ANTISYMMETRIC;
    case ErrorCode::NotSelfAdjoint: return HCA_ERROR_NOT_SELF_ADJOINT;
    case ErrorCode::NotCommuting: return HCA_ERROR_NOT_COMMUTING;
    case ErrorCode::NonConsecutiveStates: return HCA_ERROR_NON_CONSECUTIVE_STATES;
    case ErrorCode::TooShort: return HCA_ERROR_TOO_SHORT;
    case ErrorCode::BoundarySite: return HCA_ERROR_BOUNDARY_SITE;
    case ErrorCode::ZeroVariation: return HCA_ERROR_ZERO_VARIATION;
    case ErrorCode::OutOfRange: return HCA_ERROR_OUT_OF_RANGE;
    case ErrorCode::DimensionTooLarge: return HCA_ERROR_DIMENSION_TOO_LARGE;
    case ErrorCode::EmptyWindow: return HCA_ERROR_EMPTY_WINDOW;
    case ErrorCode::NonFiniteTime: return HCA_ERROR_NON_FINITE_TIME;
    case ErrorCode::OutsideTrustedRegion: return HCA_ERROR_OUTSIDE_TRUSTED_REGION;
    case ErrorCode::NotHermitian: return HCA_ERROR_NOT_HERMITIAN;
    case ErrorCode::NoConvergence: return HCA_ERROR_NO_CONVERGENCE;
    case ErrorCode::UnstableSpectrum: return HCA_ERROR_UNSTABLE_SPECTRUM;
    case ErrorCode::StabilityViolated: return HCA_ERROR_STABILITY_VIOLATED;
    case ErrorCode::TooFewScales: return HCA_ERROR_TOO_FEW_SCALES;
    case ErrorCode::FloatOverflow: return HCA_ERROR_FLOAT_OVERFLOW;
    case ErrorCode::NonConstantLapse: return HCA_ERROR_NON_CONSTANT_LAPSE;
    case ErrorCode::ParseError: return HCA_ERROR_PARSE;
    case ErrorCode::IoError: return HCA_ERROR_IO;
    case ErrorCode::ConfigError: return HCA_ERROR_CONFIG;
    case ErrorCode::Internal: return HCA_ERROR_INTERNAL;
  }
  return HCA_ERROR_INTERNAL;
}

template <typename F>
hca_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return HCA_OK;
  } catch (const hca::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HCA_ERROR_INTERNAL;
  }
}

hca_status require(bool condition, const char* message) {
  if (condition) return HCA_OK;
  g_last_error = message;
  return HCA_ERROR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hca::IntVector parse_vector(const char* const* entries, int dim,
                            const char* what) {
  hca::IntVector v;
  for (int i = 0; i < dim; ++i) {
    if (entries[i] == nullptr)
      hca::fail(hca::ErrorCode::InvalidArgument,
                std::string(what) + " entry is NULL");
    v.push_back(hca::parse_int(entries[i]));
  }
  return v;
}

}  // namespace

extern "C" {

const char* hca_version(void) { return "0.1.0"; }

const char* hca_status_name(hca_status status) {
  switch (status) {
    case HCA_OK: return "OK";
    case HCA_ERROR_INVALID_ARGUMENT: return "InvalidArgument";
    case HCA_ERROR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case HCA_ERROR_NOT_SYMMETRIC: return "NotSymmetric";
    case HCA_ERROR_NOT_ANTISYMMETRIC: return "NotAntisymmetric";
    case HCA_ERROR_NOT_SELF_ADJOINT: return "NotSelfAdjoint";
    case HCA_ERROR_NOT_COMMUTING: return "NotCommuting";
    case HCA_ERROR_NON_CONSECUTIVE_STATES: return "NonConsecutiveStates";
    case HCA_ERROR_TOO_SHORT: return "TooShort";
    case HCA_ERROR_BOUNDARY_SITE: return "BoundarySite";
    case HCA_ERROR_ZERO_VARIATION: return "ZeroVariation";
    case HCA_ERROR_OUT_OF_RANGE: return "OutOfRange";
    case HCA_ERROR_DIMENSION_TOO_LARGE: return "DimensionTooLarge";
    case HCA_ERROR_EMPTY_WINDOW: return "EmptyWindow";
    case HCA_ERROR_NON_FINITE_TIME: return "NonFiniteTime";
    case HCA_ERROR_OUTSIDE_TRUSTED_REGION: return "OutsideTrustedRegion";
    case HCA_ERROR_NOT_HERMITIAN: return "NotHermitian";
    case HCA_ERROR_NO_CONVERGENCE: return "NoConvergence";
    case HCA_ERROR_UNSTABLE_SPECTRUM: return "UnstableSpectrum";
    case HCA_ERROR_STABILITY_VIOLATED: return "StabilityViolated";
    case HCA_ERROR_TOO_FEW_SCALES: return "TooFewScales";
    case HCA_ERROR_FLOAT_OVERFLOW: return "FloatOverflow";
    case HCA_ERROR_NON_CONSTANT_LAPSE: return "NonConstantLapse";
    case HCA_ERROR_PARSE: return "ParseError";
    case HCA_ERROR_IO: return "IoError";
    case HCA_ERROR_CONFIG: return "ConfigError";
    case HCA_ERROR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* hca_last_error(void) { return g_last_error.c_str(); }

void hca_string_free(char* s) { std::free(s); }

hca_status hca_hamiltonian_create(int32_t dim, const char* const* s_entries,
                                  const char* const* a_entries,
                                  hca_hamiltonian** out) {
  if (hca_status st = require(out != nullptr && s_entries != nullptr &&
                                  a_entries != nullptr && dim >= 1,
                              "hca_hamiltonian_create: bad arguments");
      st != HCA_OK)
    return st;
  return guarded([&] {
    hca::IntMatrix s(dim), a(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const char* sv = s_entries[i * dim + j];
        const char* av = a_entries[i * dim + j];
        if (sv == nullptr || av == nullptr)
          hca::fail(hca::ErrorCode::InvalidArgument, "matrix entry is NULL");
        s.at(i, j) = hca::parse_int(sv);
        a.at(i, j) = hca::parse_int(av);
      }
    *out = new hca_hamiltonian{
        hca::HamiltonianSpec::build(std::move(s), std::move(a))};
  });
}

void hca_hamiltonian_free(hca_hamiltonian* h) { delete h; }

int32_t hca_hamiltonian_dim(const hca_hamiltonian* h) {
  return h == nullptr ? 0 : h->spec.dim();
}

hca_status hca_evolve(const hca_hamiltonian* h, int64_t lapse,
                      const char* const* x0, const char* const* p0,
                      const char* const* x1, const char* const* p1,
                      const char* tau0, const char* pi0, const char* tau1,
                      const char* pi1, int64_t steps, hca_trajectory** out) {
  if (hca_status st = require(h != nullptr && out != nullptr && x0 != nullptr &&
                                  p0 != nullptr && x1 != nullptr &&
                                  p1 != nullptr && steps >= 0,
                              "hca_evolve: bad arguments");
      st != HCA_OK)
    return st;
  return guarded([&] {
    const int dim = h->spec.dim();
    hca::CaState s0, s1;
    s0.n = 0;
    s0.x = parse_vector(x0, dim, "x0");
    s0.p = parse_vector(p0, dim, "p0");
    s0.tau = tau0 != nullptr ? hca::parse_int(tau0) : hca::Int(0);
    s0.pi = pi0 != nullptr ? hca::parse_rational(pi0) : hca::Rational(0);
    s1.n = 1;
    s1.x = parse_vector(x1, dim, "x1");
    s1.p = parse_vector(p1, dim, "p1");
    s1.tau = tau1 != nullptr ? hca::parse_int(tau1) : hca::Int(1);
    s1.pi = pi1 != nullptr ? hca::parse_rational(pi1) : hca::Rational(0);
    hca::LapseSequence seq = hca::LapseSequence::constant(hca::make_int(lapse));
    *out = new hca_trajectory{hca::evolve(h->spec, seq, s0, s1, steps)};
  });
}

void hca_trajectory_free(hca_trajectory* t) { delete t; }

int64_t hca_trajectory_length(const hca_trajectory* t) {
  return t == nullptr ? 0 : static_cast<int64_t>(t->traj.length());
}

hca_status hca_trajectory_value(const hca_trajectory* t, int64_t offset,
                                hca_field field, int32_t component,
                                char** out) {
  if (hca_status st = require(t != nullptr && out != nullptr,
                              "hca_trajectory_value: bad arguments");
      st != HCA_OK)
    return st;
  return guarded([&] {
    if (offset < 0 || offset >= static_cast<int64_t>(t->traj.length()))
      hca::fail(hca::ErrorCode::OutOfRange, "state offset out of range");
    const hca::CaState& s = t->traj.states()[static_cast<std::size_t>(offset)];
    std::string text;
    switch (field) {
      case HCA_FIELD_TAU: text = hca::int_to_string(s.tau); break;
      case HCA_FIELD_PI: text = hca::rational_to_string(s.pi); break;
      case HCA_FIELD_X:
      case HCA_FIELD_P: {
        if (component < 0 || component >= t->traj.spec().dim())
          hca::fail(hca::ErrorCode::OutOfRange, "component out of range");
        const hca::IntVector& v = field == HCA_FIELD_X ? s.x : s.p;
        text = hca::int_to_string(v[static_cast<std::size_t>(component)]);
        break;
      }
      default:
        hca::fail(hca::ErrorCode::InvalidArgument, "unknown field");
    }
    *out = dup_string(text);
    if (*out == nullptr)
      hca::fail(hca::ErrorCode::Internal, "allocation failure");
  });
}

hca_status hca_trajectory_write_csv(const hca_trajectory* t, const char* path) {
  if (hca_status st = require(t != nullptr && path != nullptr,
                              "hca_trajectory_write_csv: bad arguments");
      st != HCA_OK)
    return st;
  return guarded([&] { hca::write_trajectory_csv(t->traj, path); });
}

hca_status hca_trajectory_read_csv(const hca_hamiltonian* h, int64_t lapse,
                                   const char* path, hca_trajectory** out) {
  if (hca_status st = require(h != nullptr && path != nullptr && out != nullptr,
                              "hca_trajectory_read_csv: bad arguments");
      st != HCA_OK)
    return st;
  return guarded([&] {
    hca::LapseSequence seq = hca::LapseSequence::constant(hca::make_int(lapse));
    *out = new hca_trajectory{hca::read_trajectory_csv(path, h->spec, seq)};
  });
}

hca_status hca_trajectory_reverse_check(const hca_trajectory* t,
                                        int32_t* bit_exact) {
  if (hca_status st = require(t != nullptr && bit_exact != nullptr,
                              "hca_trajectory_reverse_check: bad arguments");
      st != HCA_OK)
    return st;
  return guarded([&] {
    const auto& states = t->traj.states();
    hca::CaState next = states[states.size() - 1];
    hca::CaState curr = states[states.size() - 2];
    for (std::size_t k = states.size() - 1; k >= 2; --k) {
      hca::CaState prev =
          hca::step_backward(next, curr, t->traj.spec(), t->traj.lapse());
      next = std::move(curr);
      curr = std::move(prev);
    }
    *bit_exact = (curr == states[0] && next == states[1]) ? 1 : 0;
  });
}

hca_status hca_discrete_action(const hca_trajectory* t, char** out) {
  if (hca_status st = require(t != nullptr && out != nullptr,
                              "hca_discrete_action: bad arguments");
      st != HCA_OK)
    return st;
  return guarded([&] {
    *out = dup_string(hca::rational_to_string(hca::discrete_action(t->traj)));
  });
}

hca_status hca_psi_action(const hca_trajectory* t, char** out) {
  if (hca_status st = require(t != nullptr && out != nullptr,
                              "hca_psi_action: bad arguments");
      st != HCA_OK)
    return st;
  return guarded([&] {
    *out = dup_string(hca::rational_to_string(hca::psi_action(t->traj)));
  });
}

hca_status hca_stationarity_violations(const hca_trajectory* t,
                                       int64_t* count) {
  if (hca_status st = require(t != nullptr && count != nullptr,
                              "hca_stationarity_violations: bad arguments");
      st != HCA_OK)
    return st;
  return guarded([&] {
    *count = static_cast<int64_t>(hca::stationarity_report(t->traj).size());
  });
}

hca_status hca_conservation_report_json(const hca_trajectory* t,
                                        int32_t degree, char** out_json) {
  if (hca_status st = require(t != nullptr && out_json != nullptr && degree >= 0,
                              "hca_conservation_report_json: bad arguments");
      st != HCA_OK)
    return st;
  return guarded([&] {
    hca::CommutantFamily family =
        hca::generate_commutant(t->traj.spec(), degree);
    hca::Json reports = hca::Json::array();
    for (std::size_t i = 0; i < family.members.size(); ++i) {
      hca::ConservedReport r =
          hca::check_theorem_a(t->traj, family.members[i], family.labels[i]);
      hca::Json values = hca::Json::array();
      for (const auto& [n, q] : r.values)
        values.push_back(hca::Json::array({n, hca::int_to_string(q)}));
      reports.push_back(hca::Json{{"G_label", r.g_label},
                                  {"values", values},
                                  {"max_violation",
                                   hca::int_to_string(r.max_violation)}});
    }
    *out_json = dup_string(reports.dump(2));
  });
}

hca_status hca_admissible_unitaries_json(const hca_hamiltonian* h,
                                         char** out_json) {
  if (hca_status st = require(h != nullptr && out_json != nullptr,
                              "hca_admissible_unitaries_json: bad arguments");
      st != HCA_OK)
    return st;
  return guarded([&] {
    auto unitaries = hca::enumerate_admissible_unitaries(h->spec);
    hca::Json ju = hca::Json::array();
    for (const auto& u : unitaries) ju.push_back(hca::gauss_matrix_to_json(u));
    hca::Json out{{"count", unitaries.size()}, {"unitaries", ju}};
    *out_json = dup_string(out.dump(2));
  });
}

hca_status hca_spectrum_json(const hca_hamiltonian* h, double l, int64_t lapse,
                             char** out_json) {
  if (hca_status st = require(h != nullptr && out_json != nullptr,
                              "hca_spectrum_json: bad arguments");
      st != HCA_OK)
    return st;
  return guarded([&] {
    hca::SpectralData data =
        hca::spectral_analysis(hca::to_float(h->spec), l, lapse);
    hca::Json jeps = hca::Json::array(), je = hca::Json::array(),
              jstable = hca::Json::array();
    for (std::size_t a = 0; a < data.eps.size(); ++a) {
      jeps.push_back(data.eps[a]);
      if (data.energies[a].stable)
        je.push_back(data.energies[a].energy);
      else
        je.push_back(nullptr);
      jstable.push_back(data.energies[a].stable);
    }
    hca::Json out{{"eps", jeps},
                  {"E", je},
                  {"stable", jstable},
                  {"l", data.l},
                  {"c", data.c}};
    *out_json = dup_string(out.dump(2));
  });
}

hca_status hca_run_scenario(const char* scenario_path, const char* output_dir,
                            const int64_t* seed_override,
                            hca_run_result** out) {
  if (hca_status st = require(scenario_path != nullptr && out != nullptr,
                              "hca_run_scenario: bad arguments");
      st != HCA_OK)
    return st;
  return guarded([&] {
    std::optional<std::uint64_t> seed;
    if (seed_override != nullptr)
      seed = static_cast<std::uint64_t>(*seed_override);
    hca::RunReport report = hca::run_scenario_file(
        scenario_path, output_dir != nullptr ? output_dir : "", seed);
    auto* result = new hca_run_result{std::move(report), ""};
    result->report_json = result->report.to_json().dump(2);
    *out = result;
  });
}

hca_status hca_run_suite(uint64_t seed, int64_t trials, const int32_t* dims,
                         int32_t dims_count, int64_t entry_bound,
                         int64_t steps, const char* output_dir,
                         hca_run_result** out) {
  if (hca_status st = require(out != nullptr && (dims != nullptr || dims_count == 0),
                              "hca_run_suite: bad arguments");
      st != HCA_OK)
    return st;
  return guarded([&] {
    hca::SuiteConfig config;
    config.seed = seed;
    config.trials = trials;
    if (dims_count > 0) {
      config.dims.clear();
      for (int32_t i = 0; i < dims_count; ++i) config.dims.push_back(dims[i]);
    }
    config.entry_bound = entry_bound;
    if (steps > 0) config.steps = steps;
    hca::RunReport report = hca::run_suite_command(
        config, output_dir != nullptr ? output_dir : ".");
    auto* result = new hca_run_result{std::move(report), ""};
    result->report_json = result->report.to_json().dump(2);
    *out = result;
  });
}

int32_t hca_run_result_exit_code(const hca_run_result* r) {
  return r == nullptr ? 1 : r->report.exit_code;
}

const char* hca_run_result_report_json(const hca_run_result* r) {
  return r == nullptr ? "" : r->report_json.c_str();
}

const char* hca_run_result_error(const hca_run_result* r) {
  return r == nullptr ? "" : r->report.error.c_str();
}

double hca_run_result_wall_seconds(const hca_run_result* r) {
  return r == nullptr ? 0.0 : r->report.wall_seconds;
}

void hca_run_result_free(hca_run_result* r) { delete r; }

}  // extern "C"
