// Acceptance gate: runs the library's verification checklist, then a
// process-level determinism check of the CLI's verify-all command, and
// prints one pass/fail line per criterion.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "heatlab/verify.hpp"

#ifndef HEATLAB_CLI_PATH
#error "HEATLAB_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return status < 0 ? -1 : WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in.good()) return "<unreadable:" + p.string() + ">";
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

// manifest comparison ignores the wall-clock timestamp line
std::string drop_timestamp(const std::string& text) {
  std::istringstream in(text);
  std::string out, line;
  while (std::getline(in, line))
    if (line.find("\"timestamp\"") == std::string::npos) out += line + "\n";
  return out;
}

bool check_determinism(std::string& detail) {
  const fs::path scratch =
      fs::temp_directory_path() /
      ("heatlab-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(scratch);
  fs::create_directories(scratch);
  const std::string out = (scratch / "out").string();
  const std::string cmd = std::string(HEATLAB_CLI_PATH) +
                          " verify-all --out " + out + " 2>" +
                          (scratch / "stderr.log").string();

  const int rc1 = run_command(cmd);
  if (rc1 != 0) {
    detail = "first verify-all run exited " + std::to_string(rc1);
    return false;
  }
  fs::path run_dir;
  int dirs = 0;
  for (const auto& e : fs::directory_iterator(out))
    if (e.is_directory()) {
      run_dir = e.path();
      ++dirs;
    }
  if (dirs != 1) {
    detail = "expected one run directory, found " + std::to_string(dirs);
    return false;
  }
  const fs::path first = scratch / "first";
  fs::copy(run_dir, first, fs::copy_options::recursive);

  const int rc2 = run_command(cmd);
  if (rc2 != 0) {
    detail = "second verify-all run exited " + std::to_string(rc2);
    return false;
  }

  int compared = 0;
  for (const auto& e : fs::directory_iterator(first)) {
    const std::string name = e.path().filename().string();
    const std::string a = slurp(e.path());
    const std::string b = slurp(run_dir / name);
    const bool same = name == "manifest.json"
                          ? drop_timestamp(a) == drop_timestamp(b)
                          : a == b;
    if (!same) {
      detail = name + " differs between reruns";
      fs::remove_all(scratch);
      return false;
    }
    ++compared;
  }
  for (const auto& e : fs::directory_iterator(run_dir))
    if (!fs::exists(first / e.path().filename())) {
      detail = "rerun produced extra file " +
               e.path().filename().string();
      fs::remove_all(scratch);
      return false;
    }
  fs::remove_all(scratch);
  detail = std::to_string(compared) +
           " report files byte-identical across reruns (manifest "
           "timestamp excluded)";
  return true;
}

}  // namespace

int main() {
  using heatlab::kCheckCount;
  int failed = 0;

  for (int i = 1; i <= kCheckCount; ++i) {
    const heatlab::CriterionResult r = heatlab::run_acceptance_check(i);
    std::printf("criterion %2d  %-32s %s  (%.2f s)\n", r.index,
                r.name.c_str(), r.pass ? "PASS" : "FAIL", r.seconds);
    std::printf("              %s\n", r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  const bool pass10 = check_determinism(detail);
  const double sec10 =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("criterion %2d  %-32s %s  (%.2f s)\n", kCheckCount + 1,
              "verify-all-determinism", pass10 ? "PASS" : "FAIL", sec10);
  std::printf("              %s\n", detail.c_str());
  if (!pass10) ++failed;

  std::printf("acceptance: %d/%d criteria passed\n",
              kCheckCount + 1 - failed, kCheckCount + 1);
  return failed == 0 ? 0 : 1;
}
