#include "scenario/scenario.hpp"

#include <fstream>
#include <set>

namespace hca {

namespace {

const std::set<std::string> kCommands = {
    "evolve",   "conserve", "action-check", "reconstruct",
    "spectrum", "compare",  "admissible",
};

InitialData parse_initial(const Json& j) {
  InitialData init;
  if (!j.contains("x0") || !j.contains("p0") || !j.contains("x1") ||
      !j.contains("p1"))
    fail(ErrorCode::ConfigError, "initial data needs x0, p0, x1, p1");
  init.x0 = int_vector_from_json(j.at("x0"));
  init.p0 = int_vector_from_json(j.at("p0"));
  init.x1 = int_vector_from_json(j.at("x1"));
  init.p1 = int_vector_from_json(j.at("p1"));
  if (j.contains("tau0")) init.tau0 = int_from_json(j.at("tau0"));
  if (j.contains("tau1")) init.tau1 = int_from_json(j.at("tau1"));
  if (j.contains("pi0")) init.pi0 = rational_from_json(j.at("pi0"));
  if (j.contains("pi1")) init.pi1 = rational_from_json(j.at("pi1"));
  return init;
}

}  // namespace

Scenario parse_scenario(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::ConfigError, "scenario must be a JSON object");
  Scenario s;
  s.raw = j;
  if (!j.contains("command") || !j.at("command").is_string())
    fail(ErrorCode::ConfigError, "scenario needs a string 'command'");
  s.command = j.at("command").get<std::string>();
  if (kCommands.find(s.command) == kCommands.end())
    fail(ErrorCode::ConfigError, "unknown command '" + s.command + "'");

  if (j.contains("hamiltonian")) {
    const auto& h = j.at("hamiltonian");
    if (!h.is_object() || !h.contains("S") || !h.contains("A"))
      fail(ErrorCode::ConfigError, "hamiltonian needs matrices S and A");
    s.s_matrix = int_matrix_from_json(h.at("S"));
    s.a_matrix = int_matrix_from_json(h.at("A"));
  }
  if (j.contains("lapse")) s.lapse = int_from_json(j.at("lapse"));
  if (j.contains("initial")) s.initial = parse_initial(j.at("initial"));
  if (j.contains("psi0")) s.psi0 = complex_vector_from_json(j.at("psi0"));
  if (j.contains("steps")) s.steps = j.at("steps").get<long long>();
  if (j.contains("l")) s.l = j.at("l").get<double>();
  if (j.contains("l_list")) {
    for (const auto& cell : j.at("l_list")) s.l_list.push_back(cell.get<double>());
  }
  if (j.contains("degree")) s.degree = j.at("degree").get<int>();
  if (j.contains("margin")) s.margin = j.at("margin").get<long long>();
  if (j.contains("T")) s.t_final = j.at("T").get<double>();
  if (j.contains("trajectory_csv"))
    s.trajectory_csv = j.at("trajectory_csv").get<std::string>();
  if (j.contains("output_dir"))
    s.output_dir = j.at("output_dir").get<std::string>();
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();

  if (s.steps < 0) fail(ErrorCode::ConfigError, "steps must be >= 0");
  if (!(s.l > 0.0)) fail(ErrorCode::ConfigError, "l must be positive");
  if (s.degree < 0) fail(ErrorCode::ConfigError, "degree must be >= 0");
  if (s.margin < 1) fail(ErrorCode::ConfigError, "margin must be >= 1");
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ConfigError, "cannot read scenario file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::ConfigError, std::string("scenario JSON parse error: ") + e.what());
  }
  return parse_scenario(j);
}

}  // namespace hca
