#pragma once

// Runs the lsa executable (path baked in at build time) and captures stdout.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef LSA_CLI_PATH
#error "LSA_CLI_PATH must be defined"
#endif

struct CliResult {
  int code = -1;
  std::string out;
};

// With merge_stderr, diagnostics are appended to `out`.
inline CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string("\"") + LSA_CLI_PATH + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Writes text to a fresh file under the system temp directory.
inline std::string temp_file(const std::string& stem, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("lsa_test_" + stem + ".lsa");
  std::ofstream(path) << text;
  return path.string();
}
