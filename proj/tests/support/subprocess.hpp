#pragma once

// Runs the CLI binary and captures stdout + exit code. POSIX only.

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testsupport {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

inline RunResult run_command(const std::string& command) {
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
  RunResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline RunResult run_cli(const std::string& args) {
  return run_command(std::string(CLI_BIN_PATH) + " " + args);
}

}  // namespace testsupport
