#pragma once

// Seeded Monte-Carlo harness over random integer binary forms: empirical
// rank and label distributions plus the density checks the library is
// asked to reproduce at desk scale.  Identical configs give identical
// reports regardless of the worker count.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ranklab/labels.hpp"

namespace ranklab {

struct SampleConfig {
  int degree = 3;
  long count = 100;
  long bound = 100;  // coefficients uniform in [-bound, bound]
  std::uint64_t seed = 0;
  int jobs = 1;               // worker threads; never affects report content
  bool keep_reports = false;  // retain per-sample records in the report
};

// Sample #index under the master seed: d+1 uniform integers in
// [-bound, bound] from the per-index stream, the all-zero vector redrawn.
// Depends only on (degree, bound, seed, index).
BinaryForm sample_form(int degree, long bound, std::uint64_t seed, std::uint64_t index);

struct SampleRecord {
  std::uint64_t index = 0;
  std::uint64_t stream = 0;  // derived stream seed, reported for reproduction
  RankReport report;
};

// A quarantined or violating sample with everything needed to reproduce it.
struct ExceptionEntry {
  std::uint64_t index = 0;
  std::uint64_t stream = 0;
  std::string coeffs;
  std::string reason;
};

// canonical key for a label set, e.g. "(3,0)(3,1)"
std::string label_set_key(const LabelSet& ls);

struct DistributionReport {
  SampleConfig config;
  std::map<int, long> complex_freq;
  std::map<int, long> admissible_freq;
  std::map<std::string, long> real_freq;   // exact value or "[lo,hi]" bracket
  std::map<std::string, long> label_freq;  // label set at the admissible rank
  long sound_partial = 0;                  // samples whose label set is not complete
  std::vector<ExceptionEntry> violations;  // chain-inequality breaches
  std::vector<SampleRecord> samples;       // only when config.keep_reports
};

DistributionReport empirical_distribution(const SampleConfig& cfg);

struct VerifyReport {
  std::string check;
  SampleConfig config;
  bool pass = false;
  bool flagged = false;  // soft warning (survey gap alongside partial brackets)
  std::string detail;
  long generic = 0;
  std::vector<ExceptionEntry> quarantined;
  std::vector<ExceptionEntry> violations;
  std::map<std::string, std::string> stats;  // named exact frequencies "k/n"
};

// Generic forms have admissible rank ceil((d+1)/2); non-generic kernel or
// discriminant profiles are quarantined and must stay rare.
VerifyReport verify_generic_admissible(const SampleConfig& cfg);

// Odd d, s = (d+1)/2: the deciding kernel is one-dimensional on >= 99% of
// samples and every label (s, a), 0 <= a <= s/2, shows up with >= 1%
// frequency.
VerifyReport verify_labels_odd(const SampleConfig& cfg);

// Even d, s = 1 + d/2: every generic sample achieves a label (s, a) with
// 2a <= d/2.
VerifyReport verify_claim_even(const SampleConfig& cfg);

// Admissible rank <= d on the random corpus, and x^(d-1)y attains the
// bound exactly for d = 3, 4, 5.
VerifyReport verify_label_bound(const SampleConfig& cfg);

// Empirical distribution of a_rank(f, a) with a contiguity check on the
// >= 1% support; gaps are flagged instead of failed when sound-partial
// brackets are present.
VerifyReport a_rank_survey(const SampleConfig& cfg, int a);

}  // namespace ranklab
