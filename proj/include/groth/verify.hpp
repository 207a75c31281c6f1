#pragma once

// Exhaustive identity checkers over bounded parameter ranges. Each returns a
// report listing every counterexample found; an empty list means PASS.

#include <optional>
#include <string>
#include <vector>

#include "groth/json_io.hpp"

namespace groth {

struct VerifyParams {
  std::optional<int> size;      // only shapes of exactly this size
  std::optional<int> max_size;  // otherwise all sizes up to this (identity default if unset)
  std::optional<int> max_value; // N
  std::optional<int> extra;     // B
  std::optional<int> max_swaps; // order distance (lemma-ordering)
  int jobs = 0;                 // 0 = GROTHLIB_JOBS or hardware concurrency
};

struct VerifyReport {
  std::string identity;
  std::string ranges;
  long long instances = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool passed() const { return failures.empty(); }
  std::string status() const { return passed() ? "PASS" : "FAIL"; }
  json to_json() const;
  std::string to_text() const;
};

/// Identity names: fact1, fact2, duo1, duo2, lemma-rskjdt, lemma-ordering,
/// lemma-z, oracle.
const std::vector<std::string>& identity_names();
/// StructuralError for an unknown name.
VerifyReport verify(const std::string& identity, const VerifyParams& params);

/// Worker count: explicit value, else GROTHLIB_JOBS, else hardware threads.
int resolve_jobs(int requested);

}  // namespace groth
