#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jantzen/formulas.hpp"

namespace jantzen {

struct SuiteResult {
  std::string name;
  long long checked = 0;
  long long failures = 0;
  std::string first_counterexample;

  bool pass() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool all_pass() const {
    for (const auto& s : suites)
      if (!s.pass()) return false;
    return true;
  }
};

struct VerifyOptions {
  int max_length = -1;      // -1: rank-derived default (6 / 5 / 3)
  int duality_length = -1;  // -1: derived from max_length
  int singular_samples = 500;
  int word_independence_samples = 100;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware default; JANTZEN_KIT_THREADS caps either way
  NuFn nu_override;      // test hook corrupting the classical route
};

/// Sweep caps keeping desk-scale runtimes: 6 up to rank 2, 5 at rank 3,
/// 3 from rank 4 on.
int default_sweep_length(int rank);

/// Number of worker tasks: `requested` (0 = hardware), capped by the
/// JANTZEN_KIT_THREADS environment variable when set.
unsigned resolve_threads(unsigned requested);

// Exhaustive suites over breadth-first enumerations up to max_length.
SuiteResult sweep_reflection_sets(const Session& sess, int max_length);
SuiteResult sweep_prefix_closure(const Session& sess, int max_length);
SuiteResult sweep_asph_transport(const Session& sess, int max_length);
SuiteResult sweep_three_way(const Session& sess, int max_length, unsigned threads = 1,
                            const NuFn& nu_override = {});
SuiteResult sweep_duality_regular(const Session& sess, int max_length, unsigned threads = 1);
SuiteResult sweep_self_pairing(const Session& sess, int max_length);
SuiteResult sweep_bounds(const Session& sess, int max_length);

// Randomized suites (deterministic in the seed).
SuiteResult sweep_duality_singular(const Session& sess, int samples, std::uint64_t seed);
SuiteResult sweep_word_independence(const Session& sess, int samples, std::uint64_t seed);

VerifyReport run_verify(const Session& sess, const VerifyOptions& opts);

}  // namespace jantzen
