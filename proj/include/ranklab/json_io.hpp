#pragma once

// Machine-readable report serialization: JSON (schema in docs) and the
// flat per-sample CSV.  Every rational is a "p/q" string; output is
// deterministic for a given report, so identical runs give identical bytes.

#include <string>

#include "ranklab/sampler.hpp"
#include "ranklab/witness.hpp"

namespace ranklab {

std::string to_json(const RankReport& r);
std::string to_json(const DecompositionSet& S);
std::string to_json(const VerificationReport& r);
// decomposition plus its verification in one document
std::string decompose_json(const DecompositionSet& S, const VerificationReport& v);
std::string to_json(const DistributionReport& r);
std::string to_json(const VerifyReport& r);

// label-set report for the labels command; non_normative marks --at queries
// away from the admissible rank
std::string labels_json(const LabelSet& ls, bool non_normative);

// one row per sample: index, stream, coefficients, ranks, labels, flags
std::string to_csv(const DistributionReport& r);

}  // namespace ranklab
