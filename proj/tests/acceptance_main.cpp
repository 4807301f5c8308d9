// Acceptance gate: one line per criterion, nonzero exit on any failure.
//
// Criteria 1-11 are the seeded property suite; criterion 12 checks the
// command-line determinism and exit-code contract and needs the CLI binary
// path as argv[1].

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "anndiff/verify.hpp"
#include "subprocess.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  bool all_pass = true;
  anndiff::VerifyConfig cfg;  // seed 42, unscaled gates
  const auto results = anndiff::run_verification(cfg);
  int idx = 1;
  for (const auto& r : results) {
    std::printf("criterion %2d  %-24s %s  worst %.3e  gate %.3e\n", idx,
                r.name.c_str(), r.pass ? "PASS" : "FAIL", r.worst, r.gate);
    if (!r.pass) {
      all_pass = false;
      std::printf("              detail: %s\n", r.detail.c_str());
      if (!r.counterexample_json.empty())
        std::printf("              counterexample: %s\n",
                    r.counterexample_json.c_str());
    }
    ++idx;
  }

  bool cli_ok = false;
  std::string cli_detail;
  if (argc > 1) {
    const std::string cli = argv[1];
    const std::string dir = "acceptance_scratch";
    std::filesystem::create_directories(dir);
    cli_ok = true;

    const std::string v1 = dir + "/v1.txt", v2 = dir + "/v2.txt";
    const ProcResult r1 =
        run_command("\"" + cli + "\" verify --seed 7 --output " + v1 + " 2>/dev/null");
    const ProcResult r2 =
        run_command("\"" + cli + "\" verify --seed 7 --output " + v2 + " 2>/dev/null");
    if (r1.exit_code != 0 || r2.exit_code != 0) {
      cli_ok = false;
      cli_detail = "seeded verify runs did not both exit 0";
    } else if (read_file(v1).empty() || read_file(v1) != read_file(v2) ||
               read_file(v1 + ".json") != read_file(v2 + ".json")) {
      cli_ok = false;
      cli_detail = "seeded verify runs were not byte-identical";
    }

    if (cli_ok) {
      std::ofstream bad(dir + "/bad.json");
      bad << "{oops";
      bad.close();
      const ProcResult rb = run_command(
          "\"" + cli + "\" zeros --input " + dir + "/bad.json 2>/dev/null");
      if (rb.exit_code != 2) {
        cli_ok = false;
        cli_detail = "malformed input exited " + std::to_string(rb.exit_code) +
                     ", want 2";
      }
    }

    if (cli_ok) {
      const ProcResult rf = run_command(
          "\"" + cli + "\" verify --seed 7 --tol 1e-30 >/dev/null 2>&1");
      if (rf.exit_code != 1) {
        cli_ok = false;
        cli_detail = "crushed tolerances exited " + std::to_string(rf.exit_code) +
                     ", want 1";
      }
    }
  } else {
    cli_detail = "pass the CLI binary path as argv[1]";
  }
  std::printf("criterion 12  %-24s %s  worst %.3e  gate %.3e\n", "cli_contract",
              cli_ok ? "PASS" : "FAIL", 0.0, 0.0);
  if (!cli_ok) {
    all_pass = false;
    std::printf("              detail: %s\n", cli_detail.c_str());
  }

  std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                               : "acceptance: FAILURES present");
  return all_pass ? 0 : 1;
}
