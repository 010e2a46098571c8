#include <cstdio>

#include "rootdatum/verify.hpp"

// Acceptance gate: one line per criterion on stdout, timings on stderr,
// nonzero exit when anything fails.
int main() {
  unsigned long long seed;
  try {
    seed = rootdatum::seed_from_env();
  } catch (const rootdatum::Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
  auto results = rootdatum::run_acceptance_suite(seed);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::printf("criterion %2d %-34s %s%s%s\n", r.number, r.name.c_str(),
                r.pass ? "pass" : "FAIL", r.detail.empty() ? "" : "  ", r.detail.c_str());
    std::fprintf(stderr, "criterion %d: %.1f ms\n", r.number, r.ms);
  }
  std::printf("seed %llu: %s\n", seed, all ? "all criteria pass" : "FAILURES PRESENT");
  return all ? 0 : 1;
}
