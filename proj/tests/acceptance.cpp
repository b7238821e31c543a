// One PASS/FAIL line per acceptance criterion. The first argument is the
// path of the peano executable, used for the determinism check.

#include <array>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "reproduce.hpp"

namespace {

// Captures stdout of a command; nullopt if it could not be run or exited
// nonzero.
std::optional<std::string> capture(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0;) out.append(buf.data(), n);
  if (pclose(pipe.release()) != 0) return std::nullopt;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int failed = 0;
  for (const auto& o : peano::repro::run_all({})) {
    std::cout << "criterion " << o.id << ": " << (o.passed ? "PASS" : "FAIL") << "  " << o.title;
    if (!o.passed) {
      std::cout << ": " << o.failures.front();
      ++failed;
    }
    std::cout << "\n";
  }

  bool same = false;
  std::string why = "no peano executable given";
  if (argc > 1) {
    const std::string cmd = std::string("\"") + argv[1] + "\" reproduce --seed 7";
    const auto a = capture(cmd);
    const auto b = capture(cmd);
    same = a && b && *a == *b && !a->empty();
    why = !a || !b ? "reproduce did not exit cleanly" : "outputs differ";
  }
  std::cout << "criterion 11: " << (same ? "PASS" : "FAIL") << "  determinism of reproduce --seed 7";
  if (!same) std::cout << ": " << why;
  std::cout << "\n";
  failed += !same;
  return failed == 0 ? 0 : 1;
}
