#include "scenario/runner.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bandlimit/reconstruction.hpp"
#include "conservation/invariants.hpp"
#include "conservation/unitaries.hpp"
#include "dynamics/action.hpp"
#include "dynamics/leapfrog.hpp"
#include "scenario/random_gen.hpp"
#include "spectral/propagation.hpp"

namespace hca {

namespace fs = std::filesystem;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NoConvergence:
    case ErrorCode::UnstableSpectrum:
    case ErrorCode::FloatOverflow:
    case ErrorCode::StabilityViolated:
      return 2;
    default:
      return 1;
  }
}

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

Verdict check(const std::string& name, bool ok, const std::string& value) {
  return {name, ok ? "pass" : "fail", value};
}

Verdict note(const std::string& name, const std::string& value) {
  return {name, "value", value};
}

void write_json_file(const fs::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  out << j.dump(2) << "\n";
}

HamiltonianSpec spec_from(const Scenario& s) {
  if (!s.s_matrix || !s.a_matrix)
    fail(ErrorCode::ConfigError,
         "command '" + s.command + "' needs a hamiltonian {S, A}");
  return HamiltonianSpec::build(*s.s_matrix, *s.a_matrix);
}

std::pair<CaState, CaState> initial_states(const Scenario& s,
                                           const HamiltonianSpec& spec) {
  if (!s.initial)
    fail(ErrorCode::ConfigError,
         "command '" + s.command + "' needs initial data");
  const InitialData& init = *s.initial;
  const auto dim = static_cast<std::size_t>(spec.dim());
  if (init.x0.size() != dim || init.p0.size() != dim ||
      init.x1.size() != dim || init.p1.size() != dim)
    fail(ErrorCode::ConfigError, "initial vectors do not match dimension");
  CaState s0{0, init.x0, init.p0, init.tau0, init.pi0};
  CaState s1{1, init.x1, init.p1, init.tau1, init.pi1};
  return {s0, s1};
}

Trajectory obtain_trajectory(const Scenario& s, const HamiltonianSpec& spec) {
  LapseSequence lapse = LapseSequence::constant(s.lapse);
  if (!s.trajectory_csv.empty())
    return read_trajectory_csv(s.trajectory_csv, spec, lapse);
  auto [s0, s1] = initial_states(s, spec);
  return evolve(spec, lapse, s0, s1, s.steps);
}

std::size_t max_entry_bits(const CaState& s) {
  std::size_t worst = 0;
  for (const Int& v : s.x) worst = std::max(worst, mpz_sizeinbase(v.get_mpz_t(), 2));
  for (const Int& v : s.p) worst = std::max(worst, mpz_sizeinbase(v.get_mpz_t(), 2));
  return worst;
}

void cmd_evolve(const Scenario& s, RunReport& report, const fs::path& out_dir) {
  HamiltonianSpec spec = spec_from(s);
  Trajectory traj = obtain_trajectory(s, spec);
  write_trajectory_csv(traj, (out_dir / "trajectory.csv").string());
  report.artifacts.push_back("trajectory.csv");
  report.verdicts.push_back(note("states", std::to_string(traj.length())));
  report.verdicts.push_back(
      note("max_entry_bits_initial",
           std::to_string(std::max(max_entry_bits(traj.states().front()),
                                   max_entry_bits(traj.states()[1])))));
  report.verdicts.push_back(note(
      "max_entry_bits_final", std::to_string(max_entry_bits(traj.states().back()))));
}

void cmd_conserve(const Scenario& s, RunReport& report, const fs::path& out_dir) {
  HamiltonianSpec spec = spec_from(s);
  Trajectory traj = obtain_trajectory(s, spec);
  CommutantFamily family = generate_commutant(spec, s.degree);
  bool violated = false;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    ConservedReport cr =
        check_theorem_a(traj, family.members[i], family.labels[i]);
    Json values = Json::array();
    for (const auto& [n, q] : cr.values)
      values.push_back(Json::array({n, int_to_string(q)}));
    Json jr;
    jr["G_label"] = cr.g_label;
    jr["values"] = values;
    jr["max_violation"] = int_to_string(cr.max_violation);
    std::string fname = "conservation_" + cr.g_label + ".json";
    write_json_file(out_dir / fname, jr);
    report.artifacts.push_back(fname);

    bool ok = cr.max_violation == 0;
    violated = violated || !ok;
    std::string detail = "max_violation=" + int_to_string(cr.max_violation);
    if (!ok)
      detail += " first_violation_step=" + std::to_string(cr.first_violation_step);
    report.verdicts.push_back(check("Q[" + cr.g_label + "] conserved", ok, detail));
  }
  if (violated) report.exit_code = 3;
}

void cmd_action_check(const Scenario& s, RunReport& report,
                      const fs::path& out_dir) {
  HamiltonianSpec spec = spec_from(s);
  Trajectory traj = obtain_trajectory(s, spec);
  auto entries = stationarity_report(traj);
  Rational a5 = discrete_action(traj);
  Rational a13 = psi_action(traj);

  Int px_first(0), px_last(0);
  const CaState& first = traj.states().front();
  const CaState& last = traj.states().back();
  for (std::size_t i = 0; i < first.x.size(); ++i) {
    px_first += first.p[i] * first.x[i];
    px_last += last.p[i] * last.x[i];
  }
  bool boundary_ok = a13 - a5 == Rational(px_first - px_last);

  Json flagged = Json::array();
  for (const auto& e : entries)
    flagged.push_back(Json{{"n", e.n},
                           {"variable", var_kind_name(e.kind)},
                           {"component", e.component},
                           {"variation", rational_to_string(e.value)}});
  write_json_file(out_dir / "stationarity.json", flagged);
  report.artifacts.push_back("stationarity.json");

  report.verdicts.push_back(
      check("action stationary", entries.empty(),
            std::to_string(entries.size()) + " site(s) flagged"));
  report.verdicts.push_back(note("action_xp", rational_to_string(a5)));
  report.verdicts.push_back(note("action_psi", rational_to_string(a13)));
  report.verdicts.push_back(check("form difference is boundary term",
                                  boundary_ok,
                                  rational_to_string(a13 - a5)));
  report.verdicts.push_back(
      note("action_integer_valued", is_integer_valued(traj) ? "true" : "false"));
  if (!entries.empty() || !boundary_ok) report.exit_code = 3;
}

void cmd_reconstruct(const Scenario& s, RunReport& report,
                     const fs::path& out_dir) {
  HamiltonianSpec spec = spec_from(s);
  Trajectory traj = obtain_trajectory(s, spec);
  SampledWave wave = SampledWave::from_trajectory(traj, s.l);
  write_wave_csv(wave, (out_dir / "wave.csv").string());
  report.artifacts.push_back("wave.csv");

  double fidelity = 0.0;
  for (long long n = wave.n0 + 1; n < wave.n1(); ++n) {
    ComplexVector rec = sinc_reconstruct(wave, wave.grid_time(n));
    const ComplexVector& ref = wave.samples[static_cast<std::size_t>(n - wave.n0)];
    for (std::size_t i = 0; i < rec.size(); ++i)
      fidelity = std::max(fidelity, std::abs(rec[i] - ref[i]));
  }
  report.verdicts.push_back(
      check("grid fidelity <= 1e-12", fidelity <= 1e-12, fmt_double(fidelity)));

  if (wave.n0 + s.margin > wave.n1() - s.margin - 1)
    fail(ErrorCode::ConfigError, "sample window too small for margin");
  ComplexMatrix h_float = to_float(spec);
  const long long c = s.lapse.get_si();
  Rng rng = make_rng(s.seed, 0x7ec0);
  double worst = 0.0, sum = 0.0;
  const int queries = 100;
  for (int k = 0; k < queries; ++k) {
    long long m = rng.uniform(wave.n0 + s.margin, wave.n1() - s.margin - 1);
    double t = (static_cast<double>(m) + 0.5) * s.l;
    double r = mod_schrodinger_residual(wave, h_float, c, t, s.margin);
    worst = std::max(worst, r);
    sum += r;
  }
  report.verdicts.push_back(note("residual_max", fmt_double(worst)));
  report.verdicts.push_back(note("residual_mean", fmt_double(sum / queries)));
  if (fidelity > 1e-12) report.exit_code = 3;
}

void cmd_spectrum(const Scenario& s, RunReport& report, const fs::path& out_dir) {
  HamiltonianSpec spec = spec_from(s);
  ComplexMatrix h = to_float(spec);
  const long long c = s.lapse.get_si();
  SpectralData data = spectral_analysis(h, s.l, c);
  const int n = h.dim();
  const double scale = std::max(1.0, frobenius_norm(h));

  double eig_residual = 0.0, ortho = 0.0, root_product = 0.0, root_circle = 0.0;
  for (int a = 0; a < n; ++a) {
    ComplexVector hv = h.mul(data.vectors[a]);
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      acc += std::norm(hv[i] - data.eps[a] * data.vectors[a][i]);
    eig_residual = std::max(eig_residual, std::sqrt(acc));
    for (int b = 0; b < n; ++b) {
      double expected = a == b ? 1.0 : 0.0;
      ortho = std::max(ortho, std::abs(inner(data.vectors[a], data.vectors[b]) -
                                       Complex(expected, 0.0)));
    }
    root_product = std::max(
        root_product, std::abs(data.roots[a].plus * data.roots[a].minus +
                               Complex(1.0, 0.0)));
    if (data.stability[a] != ModeStability::Unstable) {
      root_circle = std::max(root_circle,
                             std::abs(std::abs(data.roots[a].plus) - 1.0));
      root_circle = std::max(root_circle,
                             std::abs(std::abs(data.roots[a].minus) - 1.0));
    }
  }

  Json je = Json::array(), jeps = Json::array(), jstable = Json::array();
  int stable_count = 0, marginal_count = 0;
  for (int a = 0; a < n; ++a) {
    jeps.push_back(data.eps[a]);
    if (data.energies[a].stable)
      je.push_back(data.energies[a].energy);
    else
      je.push_back(nullptr);
    jstable.push_back(data.energies[a].stable);
    if (data.stability[a] == ModeStability::Marginal) ++marginal_count;
    if (data.energies[a].stable) ++stable_count;
  }
  Json out;
  out["eps"] = jeps;
  out["E"] = je;
  out["stable"] = jstable;
  out["l"] = data.l;
  out["c"] = data.c;
  write_json_file(out_dir / "spectrum.json", out);
  report.artifacts.push_back("spectrum.json");

  bool ok_res = eig_residual <= 1e-10 * scale;
  bool ok_ortho = ortho <= 1e-10;
  bool ok_prod = root_product <= 1e-12;
  bool ok_circle = root_circle <= 1e-12;
  report.verdicts.push_back(check("eigen residual", ok_res, fmt_double(eig_residual)));
  report.verdicts.push_back(check("eigenvector orthonormality", ok_ortho, fmt_double(ortho)));
  report.verdicts.push_back(check("root product = -1", ok_prod, fmt_double(root_product)));
  report.verdicts.push_back(
      check("stable roots on unit circle", ok_circle, fmt_double(root_circle)));
  report.verdicts.push_back(note("stable_modes", std::to_string(stable_count)));
  report.verdicts.push_back(note("marginal_modes", std::to_string(marginal_count)));
  if (!(ok_res && ok_ortho && ok_prod && ok_circle)) report.exit_code = 3;
}

void cmd_compare(const Scenario& s, RunReport& report, const fs::path& out_dir) {
  HamiltonianSpec spec = spec_from(s);
  ComplexMatrix h_phys = to_float(spec);
  if (s.l_list.empty())
    fail(ErrorCode::ConfigError, "compare needs a non-empty l_list");
  ComplexVector psi0;
  if (s.psi0) {
    psi0 = *s.psi0;
    require_same_dim(psi0.size(), static_cast<std::size_t>(h_phys.dim()),
                     "psi0");
  } else {
    psi0.assign(h_phys.dim(),
                Complex(1.0 / std::sqrt(static_cast<double>(h_phys.dim())), 0.0));
  }

  std::vector<double> errors;
  for (double l : s.l_list) {
    double err = deformation_error(h_phys, psi0, l, s.t_final);
    errors.push_back(err);
    report.verdicts.push_back(
        note("deformation_error l=" + fmt_double(l), fmt_double(err)));
  }
  bool order_checked = false, order_ok = true;
  if (s.l_list.size() >= 3) {
    double order = convergence_order(h_phys, psi0, s.l_list, s.t_final);
    order_checked = true;
    order_ok = order >= 1.8 && order <= 2.2;
    report.verdicts.push_back(
        check("convergence order in [1.8, 2.2]", order_ok, fmt_double(order)));
  }

  double l_min = *std::min_element(s.l_list.begin(), s.l_list.end());
  std::vector<double> times;
  for (int k = 0; k <= 100; ++k)
    times.push_back(s.t_final * static_cast<double>(k) / 100.0);
  auto band = evolve_bandlimited_exact(h_phys.scaled(l_min), psi0, l_min, times);
  auto std_ev = evolve_standard_qm(h_phys, psi0, times);
  std::ofstream csv(out_dir / "compare_series.csv");
  if (!csv) fail(ErrorCode::IoError, "cannot write compare_series.csv");
  csv.precision(17);
  csv << "t";
  for (int i = 0; i < h_phys.dim(); ++i)
    csv << ",band_re" << i << ",band_im" << i << ",std_re" << i << ",std_im" << i;
  csv << ",err\n";
  for (std::size_t k = 0; k < times.size(); ++k) {
    csv << times[k];
    double err = 0.0;
    for (int i = 0; i < h_phys.dim(); ++i) {
      csv << ',' << band[k][i].real() << ',' << band[k][i].imag() << ','
          << std_ev[k][i].real() << ',' << std_ev[k][i].imag();
      err = std::max(err, std::abs(band[k][i] - std_ev[k][i]));
    }
    csv << ',' << err << "\n";
  }
  report.artifacts.push_back("compare_series.csv");
  if (order_checked && !order_ok) report.exit_code = 3;
}

void cmd_admissible(const Scenario& s, RunReport& report, const fs::path& out_dir) {
  HamiltonianSpec spec = spec_from(s);
  auto unitaries = enumerate_admissible_unitaries(spec);
  bool all_ok = true;
  for (const auto& u : unitaries)
    all_ok = all_ok && admissible_unitary_check(u, spec).admissible();
  Json ju = Json::array();
  for (const auto& u : unitaries) ju.push_back(gauss_matrix_to_json(u));
  Json out;
  out["count"] = unitaries.size();
  out["unitaries"] = ju;
  write_json_file(out_dir / "admissible.json", out);
  report.artifacts.push_back("admissible.json");
  report.verdicts.push_back(note("admissible_count", std::to_string(unitaries.size())));
  report.verdicts.push_back(check("all pass admissibility re-check", all_ok,
                                  all_ok ? "ok" : "mismatch"));
  if (!all_ok) report.exit_code = 3;
}

}  // namespace

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["exit_code"] = exit_code;
  if (!error.empty()) j["error"] = error;
  j["scenario"] = scenario_echo;
  Json vs = Json::array();
  for (const Verdict& v : verdicts)
    vs.push_back(Json{{"name", v.name}, {"kind", v.kind}, {"value", v.value}});
  j["verdicts"] = vs;
  j["artifacts"] = artifacts;
  return j;
}

RunReport run_scenario(const Scenario& s) {
  RunReport report;
  report.command = s.command;
  report.scenario_echo = s.raw;
  auto begin = std::chrono::steady_clock::now();
  try {
    fs::path out_dir(s.output_dir);
    fs::create_directories(out_dir);
    if (s.command == "evolve") cmd_evolve(s, report, out_dir);
    else if (s.command == "conserve") cmd_conserve(s, report, out_dir);
    else if (s.command == "action-check") cmd_action_check(s, report, out_dir);
    else if (s.command == "reconstruct") cmd_reconstruct(s, report, out_dir);
    else if (s.command == "spectrum") cmd_spectrum(s, report, out_dir);
    else if (s.command == "compare") cmd_compare(s, report, out_dir);
    else if (s.command == "admissible") cmd_admissible(s, report, out_dir);
    else fail(ErrorCode::ConfigError, "unknown command " + s.command);
  } catch (const Error& e) {
    report.exit_code = exit_code_for(e);
    report.error = std::string(error_code_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    report.exit_code = 1;
    report.error = std::string("error: ") + e.what();
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - begin)
          .count();
  return report;
}

RunReport run_scenario_file(const std::string& path,
                            const std::string& output_dir_override,
                            std::optional<std::uint64_t> seed_override) {
  RunReport report;
  Scenario s;
  try {
    s = load_scenario_file(path);
  } catch (const Error& e) {
    report.exit_code = exit_code_for(e);
    report.error = std::string(error_code_name(e.code())) + ": " + e.what();
    return report;
  }
  if (!output_dir_override.empty()) s.output_dir = output_dir_override;
  if (seed_override) s.seed = *seed_override;
  report = run_scenario(s);
  try {
    fs::path out_dir(s.output_dir);
    fs::create_directories(out_dir);
    write_json_file(out_dir / "report.json", report.to_json());
  } catch (const Error& e) {
    report.exit_code = std::max(report.exit_code, 1);
    report.error += std::string(" (report write failed: ") + e.what() + ")";
  }
  return report;
}

// ---------------------------------------------------------------------
// Randomized verification suite.

namespace {

struct TrialSystem {
  HamiltonianSpec spec;
  LapseSequence lapse;
  Int c;
  CaState s0, s1;
};

TrialSystem random_system(Rng& rng, int dim, long long bound) {
  IntMatrix s_mat(dim), a_mat(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      Int v = make_int(rng.uniform(-bound, bound));
      s_mat.at(i, j) = v;
      s_mat.at(j, i) = v;
      if (j > i) {
        Int w = make_int(rng.uniform(-bound, bound));
        a_mat.at(i, j) = w;
        a_mat.at(j, i) = -w;
      }
    }
  TrialSystem sys{HamiltonianSpec::build(std::move(s_mat), std::move(a_mat)),
                  LapseSequence(), make_int(rng.uniform(-bound, bound)), {}, {}};
  sys.lapse = LapseSequence::constant(sys.c);
  auto random_state = [&](long long n) {
    CaState st;
    st.n = n;
    st.x.resize(dim);
    st.p.resize(dim);
    for (int i = 0; i < dim; ++i) {
      st.x[i] = make_int(rng.uniform(-bound, bound));
      st.p[i] = make_int(rng.uniform(-bound, bound));
    }
    st.tau = make_int(rng.uniform(-bound, bound));
    st.pi = Rational(make_int(rng.uniform(-bound, bound)));
    return st;
  };
  sys.s0 = random_state(0);
  sys.s1 = random_state(1);
  return sys;
}

enum class MemberKind { Identity, Hamiltonian, General };

void record_failure(SuiteCheckStat& stat, const std::string& detail) {
  ++stat.failures;
  if (stat.first_failure.empty()) stat.first_failure = detail;
}

}  // namespace

SuiteCheckStat& SuiteResult::stat(const std::string& name) {
  for (auto& [n, s] : checks)
    if (n == name) return s;
  checks.emplace_back(name, SuiteCheckStat{});
  return checks.back().second;
}

bool SuiteResult::all_passed() const {
  for (const auto& [n, s] : checks)
    if (s.failures > 0) return false;
  return true;
}

Json SuiteResult::to_json() const {
  Json jc;
  jc["seed"] = config.seed;
  jc["trials"] = config.trials;
  jc["dims"] = config.dims;
  jc["entry_bound"] = config.entry_bound;
  jc["steps"] = config.steps;
  jc["degree"] = config.degree;
  jc["leibniz_pairs"] = config.leibniz_pairs;
  Json jchecks = Json::array();
  for (const auto& [name, s] : checks) {
    Json e;
    e["name"] = name;
    e["runs"] = s.runs;
    e["failures"] = s.failures;
    if (!s.first_failure.empty()) e["first_failure"] = s.first_failure;
    jchecks.push_back(std::move(e));
  }
  Json j;
  j["config"] = jc;
  j["checks"] = jchecks;
  j["all_passed"] = all_passed();
  return j;
}

SuiteResult randomized_suite(const SuiteConfig& config) {
  if (config.trials < 1) fail(ErrorCode::ConfigError, "trials must be >= 1");
  if (config.dims.empty()) fail(ErrorCode::ConfigError, "dims must be non-empty");
  for (int d : config.dims)
    if (d < 1 || d > 16)
      fail(ErrorCode::ConfigError, "dims entries must be in [1, 16]");
  if (config.entry_bound < 1)
    fail(ErrorCode::ConfigError, "entry_bound must be >= 1 (degenerate generator)");
  if (config.steps < 1) fail(ErrorCode::ConfigError, "steps must be >= 1");
  if (config.degree < 0) fail(ErrorCode::ConfigError, "degree must be >= 0");

  SuiteResult result;
  result.config = config;
  // Create every slot first: stat() references must stay valid below.
  for (const char* name :
       {"theorem_a_conservation", "reversibility", "stationarity",
        "action_form_equivalence", "leibniz_rule", "tamper_detection"})
    result.stat(name);
  SuiteCheckStat& conservation = result.stat("theorem_a_conservation");
  SuiteCheckStat& reversibility = result.stat("reversibility");
  SuiteCheckStat& stationarity = result.stat("stationarity");
  SuiteCheckStat& equivalence = result.stat("action_form_equivalence");
  SuiteCheckStat& leibniz = result.stat("leibniz_rule");
  SuiteCheckStat& tamper = result.stat("tamper_detection");

  for (long long trial = 0; trial < config.trials; ++trial) {
    Rng rng = make_rng(config.seed, static_cast<std::uint64_t>(trial));
    int dim = config.dims[static_cast<std::size_t>(
        rng.uniform(0, static_cast<long long>(config.dims.size()) - 1))];
    TrialSystem sys = random_system(rng, dim, config.entry_bound);
    const HamiltonianSpec& spec = sys.spec;
    const Int& c = sys.c;

    CommutantFamily family = generate_commutant(spec, config.degree);
    std::vector<MemberKind> kinds;
    for (const auto& m : family.members) {
      if (m == GaussMatrix::identity(dim)) kinds.push_back(MemberKind::Identity);
      else if (m == spec.h()) kinds.push_back(MemberKind::Hamiltonian);
      else kinds.push_back(MemberKind::General);
    }
    auto member_psi = [&](std::size_t j, const StateCache& cache) {
      switch (kinds[j]) {
        case MemberKind::Identity: return cache.psi;
        case MemberKind::Hamiltonian: return cache.hpsi;
        default: return family.members[j].mul(cache.psi);
      }
    };

    // Forward streaming pass with a three-state window.
    CaState prev = sys.s0, curr = sys.s1;
    StateCache cprev = make_state_cache(spec, prev);
    StateCache ccurr = make_state_cache(spec, curr);
    PairTerms t_n = pair_terms(prev, cprev, curr, ccurr, c);
    std::vector<Int> q_prev;
    for (std::size_t j = 0; j < family.members.size(); ++j)
      q_prev.push_back(staggered_invariant_core(cprev.psi, member_psi(j, ccurr)));

    const Int one(1);
    for (long long k = 0; k < config.steps; ++k) {
      CaState next;
      next.n = curr.n + 1;
      next.x.resize(dim);
      next.p.resize(dim);
      for (int i = 0; i < dim; ++i) {
        next.x[i] = prev.x[i] + c * (ccurr.sp[i] + ccurr.ax[i]);
        next.p[i] = prev.p[i] - c * (ccurr.sx[i] - ccurr.ap[i]);
      }
      next.tau = prev.tau + c;
      StateCache cnext = make_state_cache(spec, next);
      next.pi = prev.pi + cnext.h_xp - cprev.h_xp;

      // Conservation of every commutant member across this step.
      for (std::size_t j = 0; j < family.members.size(); ++j) {
        Int q = staggered_invariant_core(ccurr.psi, member_psi(j, cnext));
        ++conservation.runs;
        if (q != q_prev[j])
          record_failure(conservation,
                         "trial " + std::to_string(trial) + " step " +
                             std::to_string(k + 1) + " member " +
                             family.labels[j]);
        q_prev[j] = std::move(q);
      }

      // All unit variations at the interior site `curr`, both forms.
      PairTerms t_n1 = pair_terms(curr, ccurr, next, cnext, c);
      auto probe = [&](VarKind kind, int comp) {
        VariationPair v = vary_site_cached(spec, prev, cprev, curr, ccurr,
                                           next, cnext, t_n, t_n1, c, c, kind,
                                           comp, one);
        ++stationarity.runs;
        if (v.xp != 0)
          record_failure(stationarity, "trial " + std::to_string(trial) +
                                           " site " + std::to_string(curr.n) +
                                           " var " + var_kind_name(kind));
        ++equivalence.runs;
        if (v.xp != v.psi)
          record_failure(equivalence, "trial " + std::to_string(trial) +
                                          " site " + std::to_string(curr.n) +
                                          " var " + var_kind_name(kind));
      };
      for (int g = 0; g < dim; ++g) probe(VarKind::X, g);
      for (int g = 0; g < dim; ++g) probe(VarKind::P, g);
      probe(VarKind::Tau, 0);
      probe(VarKind::Pi, 0);

      prev = std::move(curr);
      cprev = std::move(ccurr);
      curr = std::move(next);
      ccurr = std::move(cnext);
      t_n = std::move(t_n1);
    }

    // Backward pass must reproduce the initial pair bit-exactly.
    {
      CaState b_next = curr, b_curr = prev;  // states steps+1, steps
      Rational h_next = ccurr.h_xp, h_curr = cprev.h_xp;
      for (long long k = 0; k < config.steps; ++k) {
        CaState back;
        back.n = b_curr.n - 1;
        back.x.resize(dim);
        back.p.resize(dim);
        IntVector sp = spec.s().mul(b_curr.p);
        IntVector ax = spec.a().mul(b_curr.x);
        IntVector sx = spec.s().mul(b_curr.x);
        IntVector ap = spec.a().mul(b_curr.p);
        for (int i = 0; i < dim; ++i) {
          back.x[i] = b_next.x[i] - c * (sp[i] + ax[i]);
          back.p[i] = b_next.p[i] + c * (sx[i] - ap[i]);
        }
        back.tau = b_next.tau - c;
        Rational h_back = h_value_xp(spec, back.x, back.p);
        back.pi = b_next.pi - h_next + h_back;
        b_next = std::move(b_curr);
        b_curr = std::move(back);
        h_next = std::move(h_curr);
        h_curr = std::move(h_back);
      }
      ++reversibility.runs;
      if (!(b_curr == sys.s0 && b_next == sys.s1))
        record_failure(reversibility, "trial " + std::to_string(trial));
    }

    // Modified Leibniz rule on fresh random sequences.
    for (long long pair = 0; pair < config.leibniz_pairs; ++pair) {
      long long len = rng.uniform(3, 16);
      std::vector<Int> o, o2;
      long long b2 = config.entry_bound * config.entry_bound;
      for (long long i = 0; i < len; ++i) {
        o.push_back(make_int(rng.uniform(-b2, b2)));
        o2.push_back(make_int(rng.uniform(-b2, b2)));
      }
      ++leibniz.runs;
      if (!leibniz_identity_check(o, o2))
        record_failure(leibniz, "trial " + std::to_string(trial) + " pair " +
                                    std::to_string(pair));
    }

    // A tampered trajectory must be flagged, and only near the tampered site.
    {
      Trajectory small = evolve(spec, sys.lapse, sys.s0, sys.s1, 12);
      long long site = rng.uniform(1, small.last_index() - 1);
      int which = static_cast<int>(rng.uniform(0, 3));
      int comp = static_cast<int>(rng.uniform(0, dim - 1));
      CaState& victim =
          small.mutable_states()[static_cast<std::size_t>(site - small.first_index())];
      switch (which) {
        case 0: victim.x[comp] += 1; break;
        case 1: victim.p[comp] += 1; break;
        case 2: victim.tau += 1; break;
        default: victim.pi += 1; break;
      }
      auto flagged = stationarity_report(small);
      bool detected = !flagged.empty();
      bool localized = true;
      for (const auto& e : flagged)
        localized = localized && e.n >= site - 1 && e.n <= site + 1;
      ++tamper.runs;
      if (!(detected && localized))
        record_failure(tamper, "trial " + std::to_string(trial) + " site " +
                                   std::to_string(site));
    }
  }
  return result;
}

RunReport run_suite_command(const SuiteConfig& config,
                            const std::string& output_dir) {
  RunReport report;
  report.command = "suite";
  auto begin = std::chrono::steady_clock::now();
  try {
    SuiteResult result = randomized_suite(config);
    fs::path out_dir(output_dir);
    fs::create_directories(out_dir);
    write_json_file(out_dir / "suite_report.json", result.to_json());
    report.artifacts.push_back("suite_report.json");
    report.scenario_echo = result.to_json()["config"];
    for (const auto& [name, stat] : result.checks) {
      std::string detail = std::to_string(stat.failures) + " failure(s) in " +
                           std::to_string(stat.runs) + " run(s)";
      if (!stat.first_failure.empty()) detail += "; first: " + stat.first_failure;
      report.verdicts.push_back(check(name, stat.failures == 0, detail));
    }
    if (!result.all_passed()) report.exit_code = 3;
  } catch (const Error& e) {
    report.exit_code = exit_code_for(e);
    report.error = std::string(error_code_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    report.exit_code = 1;
    report.error = std::string("error: ") + e.what();
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - begin)
          .count();
  return report;
}

}  // namespace hca
