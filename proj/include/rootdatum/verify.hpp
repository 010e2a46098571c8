#pragma once

#include <string>
#include <vector>

#include "rootdatum/root_datum.hpp"

namespace rootdatum {

// One acceptance check. The detail string is stable across runs with the
// same seed; wall time lives in ms only and never enters serialized reports.
struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double ms = 0.0;
};

// Runs all ten checks in order. Never throws; an escaped exception inside a
// criterion marks it failed with the message in detail.
std::vector<CriterionResult> run_acceptance_suite(unsigned long long seed);

unsigned long long default_seed();

// ROOTDATUM_SEED when set (error "bad_seed" if unparsable), default otherwise.
unsigned long long seed_from_env();

// Canonical JSON text of a suite run: criteria with number, name, pass and
// detail, overall pass flag, and the seed. Identical inputs give identical
// bytes; timings are deliberately excluded.
std::string render_report(const std::vector<CriterionResult>& results,
                          unsigned long long seed);

// Every coroot pairs evenly against the sum of positive roots. Split out so
// a corrupted datum can be fed in directly by tests.
bool centrality_even(const GroupData& gd);

}  // namespace rootdatum
