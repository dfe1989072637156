#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "corpus.hpp"

// Fixed list of CLI invocations for the golden-file regression and the
// byte-determinism acceptance check. Multivariate inputs are materialized as
// JSON files under the given directory.
namespace cli_corpus {

struct Invocation {
  std::string name;
  std::string args;  // appended to the CLI path, shell-quoted as needed
  int expected_exit;
};

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

inline std::vector<Invocation> invocations(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto& pairs = corpus::pairs();
  for (const auto& entry : pairs) {
    if (!entry.json) continue;
    write_file(dir / (entry.name + "_x.json"), entry.x);
    write_file(dir / (entry.name + "_y.json"), entry.y);
  }
  const std::string mvw_x = (dir / "mv_witness_x.json").string();
  const std::string mvw_y = (dir / "mv_witness_y.json").string();
  const std::string mvb_x = (dir / "mv_budget_x.json").string();
  const std::string mvb_y = (dir / "mv_budget_y.json").string();

  return {
      {"dom_below_shift", "dominance 1+X 2+X", 0},
      {"dom_above_shift", "dominance 2+X 1+X", 0},
      {"dom_main_pair", "dominance 1+2X 2+X+X^2", 0},
      {"dom_main_pair_json", "dominance 1+2X 2+X+X^2 --json", 0},
      {"dom_needs_catalyst", "dominance 1+3X 2+2X+X^2", 0},
      {"dom_interior_refuted", "dominance 1+3X 1+X+X^2", 0},
      {"dom_mv_witness", "dominance " + mvw_x + " " + mvw_y, 0},
      {"dom_mv_budget", "dominance " + mvb_x + " " + mvb_y + " --kmax 8 --nmax 8", 2},
      {"dom_bad_input", "dominance 1+2X 1.5", 1},
      {"spec_main_pair", "spectrum 1+2X 2+X+X^2 --resolution 6", 0},
      {"spec_equal_pair", "spectrum 1+X 1+X --resolution 4", 0},
      {"spec_mv_unknown", "spectrum " + mvw_x + " " + mvw_y + " --resolution 3", 2},
      {"identity_n0", "identity --n 0", 0},
      {"identity_n1", "identity --n 1", 0},
      {"identity_n6", "identity --n 6", 0},
      {"jet_inverse", "jet --n 2 --signs +,+ 'inv(2 + 3*X)'", 0},
      {"jet_nilpotent", "jet --n 2 '(0+X)*(0+X)'", 0},
      {"jet_series", "jet --n 3 'inv(1+X)'", 0},
      {"jet_signs", "jet --n 3 --signs '+,-,+' '1 - 5*X + X^2'", 0},
      {"jet_error", "jet --n 2 'inv(0+X)'", 1},
      {"eval_point", "eval 1+4X+X^2 --at 1", 0},
      {"eval_tropical", "eval " + mvw_y + " --at 2,3 --tropical", 0},
  };
}

/// Runs one invocation, capturing stdout; stderr is discarded.
inline std::string run_cli(const std::string& cli_path, const std::string& args,
                           int& exit_code) {
  const std::string cmd = cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

}  // namespace cli_corpus
