#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace polyherm::proc {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs a shell command line, capturing stdout and stderr.
inline RunResult run(const std::string& cmd) {
  char path[] = "/tmp/polyherm_errXXXXXX";
  const int fd = mkstemp(path);
  if (fd >= 0) close(fd);
  RunResult r;
  FILE* pipe = popen((cmd + " 2>" + path).c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  r.err = ss.str();
  std::remove(path);
  return r;
}

}  // namespace polyherm::proc
