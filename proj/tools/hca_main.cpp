// Command-line front end. Links the public C API only; all work happens in
// the shared library.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hca/hca.h"

namespace {

int print_result(hca_run_result* result) {
  const int exit_code = hca_run_result_exit_code(result);
  const std::string error = hca_run_result_error(result);
  if (!error.empty()) std::fprintf(stderr, "error: %s\n", error.c_str());

  try {
    auto report = nlohmann::json::parse(hca_run_result_report_json(result));
    for (const auto& v : report.value("verdicts", nlohmann::json::array())) {
      std::string kind = v.value("kind", "value");
      std::string mark = kind == "pass" ? "PASS" : (kind == "fail" ? "FAIL" : "    ");
      std::printf("[%s] %s: %s\n", mark.c_str(),
                  v.value("name", "?").c_str(), v.value("value", "").c_str());
    }
    for (const auto& a : report.value("artifacts", nlohmann::json::array()))
      std::printf("artifact: %s\n", a.get<std::string>().c_str());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "malformed report: %s\n", e.what());
  }
  std::fprintf(stderr, "wall time: %.3fs\n", hca_run_result_wall_seconds(result));
  std::printf("exit code: %d\n", exit_code);
  hca_run_result_free(result);
  return exit_code;
}

std::vector<int32_t> parse_dims(const std::string& text) {
  std::vector<int32_t> dims;
  std::string cell;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cell.empty()) dims.push_back(std::stoi(cell));
      cell.clear();
    } else {
      cell.push_back(ch);
    }
  }
  return dims;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hca: exact Hamiltonian cellular-automaton laboratory"};
  app.set_version_flag("--version", std::string(hca_version()));
  app.require_subcommand(1);

  std::string scenario_path, output_dir, dims_text = "1,2,3,4";
  std::int64_t seed = -1;
  bool has_seed = false;
  auto* run = app.add_subcommand("run", "execute a scenario JSON file");
  run->add_option("scenario", scenario_path, "path to scenario.json")->required();
  run->add_option("--output-dir", output_dir, "override the scenario output_dir");
  run->add_option("--seed", seed, "override the scenario seed")
      ->check(CLI::NonNegativeNumber)
      ->each([&](const std::string&) { has_seed = true; });

  std::int64_t trials = 100, entry_bound = 3, steps = 0;
  std::uint64_t suite_seed = 42;
  std::string suite_output = ".";
  auto* suite = app.add_subcommand(
      "suite", "randomized exact verification over random integer systems");
  suite->add_option("--trials", trials, "number of random systems");
  suite->add_option("--dims", dims_text, "comma-separated dimensions to draw from");
  suite->add_option("--seed", suite_seed, "deterministic seed");
  suite->add_option("--entry-bound", entry_bound, "matrix/state entry bound");
  suite->add_option("--steps", steps, "leapfrog steps per trial (0 = default)");
  suite->add_option("--output-dir", suite_output, "where suite_report.json goes");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    hca_run_result* result = nullptr;
    const std::int64_t seed_value = seed;
    hca_status st = hca_run_scenario(
        scenario_path.c_str(), output_dir.empty() ? nullptr : output_dir.c_str(),
        has_seed ? &seed_value : nullptr, &result);
    if (st != HCA_OK) {
      std::fprintf(stderr, "%s: %s\n", hca_status_name(st), hca_last_error());
      return 1;
    }
    return print_result(result);
  }

  std::vector<int32_t> dims = parse_dims(dims_text);
  hca_run_result* result = nullptr;
  hca_status st = hca_run_suite(suite_seed, trials, dims.data(),
                                static_cast<int32_t>(dims.size()), entry_bound,
                                steps, suite_output.c_str(), &result);
  if (st != HCA_OK) {
    std::fprintf(stderr, "%s: %s\n", hca_status_name(st), hca_last_error());
    return 1;
  }
  return print_result(result);
}
