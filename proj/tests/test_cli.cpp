#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

int run_cli(const std::string& args) {
  const std::string cmd = std::string(CYCLAB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("list-suites exits cleanly") { CHECK(run_cli("list-suites") == 0); }

TEST_CASE("run on a valid manifest") {
  const fs::path manifest = write_temp(
      "cyclab_cli_mate.json",
      R"({"kind":"mate","inputs":{"b":{"num":[[0.5,0],[0.5,0]],"den":[[1,0]]}}})");
  const fs::path out_dir = fs::temp_directory_path() / "cyclab_cli_out";
  CHECK(run_cli("run " + manifest.string() + " --out " + out_dir.string()) == 0);
  CHECK(fs::exists(out_dir / "record.json"));
  // output files embed the manifest hash
  std::ifstream record(out_dir / "record.json");
  std::string text((std::istreambuf_iterator<char>(record)), std::istreambuf_iterator<char>());
  CHECK(text.find("manifest_hash") != std::string::npos);
}

TEST_CASE("validation failures exit with code 2") {
  const fs::path missing_field = write_temp("cyclab_cli_bad.json", R"({"kind":"opa","degree":3})");
  CHECK(run_cli("run " + missing_field.string()) == 2);
  const fs::path not_json = write_temp("cyclab_cli_notjson.json", "{nope");
  CHECK(run_cli("run " + not_json.string()) == 2);
  CHECK(run_cli("run /nonexistent/manifest.json") == 2);
  CHECK(run_cli("suite no-such-suite") == 2);
}

TEST_CASE("computation failures exit with code 3") {
  // b = z is inner: the mate computation fails after validation passes.
  const fs::path inner = write_temp(
      "cyclab_cli_inner.json",
      R"({"kind":"mate","inputs":{"b":{"num":[[0,0],[1,0]],"den":[[1,0]]}}})");
  CHECK(run_cli("run " + inner.string()) == 3);
}

TEST_CASE("smoke suite via the CLI") {
  const fs::path out_dir = fs::temp_directory_path() / "cyclab_cli_suite";
  CHECK(run_cli("suite smoke --out " + out_dir.string()) == 0);
  CHECK(fs::exists(out_dir / "smoke-summary.json"));
  CHECK(run_cli("suite smoke --threads 2 --tolerance-scale 10") == 0);
}
