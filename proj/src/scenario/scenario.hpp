#pragma once

#include <optional>

#include "scenario/json_format.hpp"

namespace hca {

struct InitialData {
  IntVector x0, p0, x1, p1;
  Int tau0{0}, tau1{1};
  Rational pi0{0}, pi1{0};
};

/// One batch run, parsed from a JSON document. Integers arrive as decimal
/// strings (plain numbers tolerated); which fields are required depends on
/// the command and is validated by the runner.
struct Scenario {
  std::string command;
  std::optional<IntMatrix> s_matrix;
  std::optional<IntMatrix> a_matrix;
  Int lapse{2};
  std::optional<InitialData> initial;
  std::optional<ComplexVector> psi0;
  long long steps = 100;
  double l = 1.0;
  std::vector<double> l_list;
  int degree = 2;
  long long margin = 64;
  double t_final = 10.0;
  std::string trajectory_csv;
  std::string output_dir = ".";
  std::uint64_t seed = 0;
  Json raw;  // verbatim echo for the report
};

Scenario parse_scenario(const Json& j);
Scenario load_scenario_file(const std::string& path);

}  // namespace hca
