#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include "cyclab/errors.hpp"
#include "cyclab/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitComputation = 3;
constexpr int kExitAcceptance = 4;

int do_run(const std::string& manifest_path, const std::string& out_dir, double tol_scale) {
  cyclab::json doc;
  {
    std::ifstream in(manifest_path);
    if (!in) {
      std::cerr << "error: cannot open manifest '" << manifest_path << "'\n";
      return kExitValidation;
    }
    try {
      in >> doc;
    } catch (const std::exception& e) {
      std::cerr << "error: manifest is not valid JSON: " << e.what() << "\n";
      return kExitValidation;
    }
  }

  cyclab::ExperimentManifest manifest;
  try {
    manifest = cyclab::parse_manifest(doc);
  } catch (const cyclab::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    const cyclab::RunRecord record = cyclab::run(manifest, tol_scale);
    if (!out_dir.empty()) cyclab::write_run_outputs(record, out_dir);
    std::cout << record.to_json().dump(2) << "\n";
    return kExitOk;
  } catch (const cyclab::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitComputation;
  }
}

int do_suite(const std::string& name, const std::string& out_dir, int threads, double tol_scale) {
  try {
    const cyclab::SuiteResult result = cyclab::suite(name, threads, tol_scale);
    for (const auto& row : result.rows) {
      std::printf("%-14s %-60s %s (%.2f s)\n", row.id.c_str(), row.description.c_str(),
                  row.passed ? "PASS" : "FAIL", row.elapsed_s);
    }
    if (!out_dir.empty()) cyclab::write_suite_outputs(result, out_dir);
    std::cout << (result.all_passed ? "suite passed" : "suite FAILED") << "\n";
    return result.all_passed ? kExitOk : kExitAcceptance;
  } catch (const cyclab::unknown_suite_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclicity-lab experiment runner"};
  app.require_subcommand(1);

  std::string manifest_path, out_dir, suite_name;
  double tol_scale = 1.0;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 0) threads = 1;

  auto* run_cmd = app.add_subcommand("run", "run one experiment manifest");
  run_cmd->add_option("manifest", manifest_path, "path to a manifest JSON document")->required();
  run_cmd->add_option("--out", out_dir, "directory for record.json and CSV outputs");
  run_cmd->add_option("--tolerance-scale", tol_scale, "scale all tolerances (recorded in the record)");

  auto* suite_cmd = app.add_subcommand("suite", "run a named experiment suite");
  suite_cmd->add_option("name", suite_name, "suite id (see list-suites)")->required();
  suite_cmd->add_option("--out", out_dir, "directory for the suite summary");
  suite_cmd->add_option("--threads", threads, "number of concurrent rows");
  suite_cmd->add_option("--tolerance-scale", tol_scale, "scale all tolerances");

  auto* list_cmd = app.add_subcommand("list-suites", "list known suite ids");

  CLI11_PARSE(app, argc, argv);

  if (run_cmd->parsed()) return do_run(manifest_path, out_dir, tol_scale);
  if (suite_cmd->parsed()) return do_suite(suite_name, out_dir, threads, tol_scale);
  if (list_cmd->parsed()) {
    for (const auto& name : cyclab::list_suites()) std::cout << name << "\n";
    return kExitOk;
  }
  return kExitValidation;
}
