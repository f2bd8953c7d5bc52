// Runs the acceptance criteria and prints one line per criterion.
// With --cli PATH the determinism criterion drives the real binary.

#include <cstdio>
#include <cstring>
#include <iostream>

#include "fanfree/verify.hpp"

namespace {

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  if (::pclose(p) != 0) return {};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::function<std::string()> hill;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--cli") == 0) {
      const std::string cmd =
          std::string(argv[i + 1]) + " search --mode hill --n 20 --k 4 --restarts 4 --steps 4000 --seed 42";
      hill = [cmd] {
        const std::string text = capture(cmd);
        if (text.empty()) return text;
        return fanfree::strip_timing(fanfree::json::parse(text)).dump();
      };
    }
  const auto results = fanfree::run_acceptance(hill);
  fanfree::print_acceptance(std::cout, results);
  int failed = 0;
  for (const auto& r : results) failed += !r.passed;
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
