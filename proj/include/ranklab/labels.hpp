#pragma once

// Admissible rank, label enumeration, real rank and a-ranks of a real
// binary form.  A label (s, a) records a conjugation-stable decomposition
// with s points of which a are conjugate pairs; it exists exactly when the
// degree-s apolar kernel contains a real square-free form with s - 2a real
// projective roots.

#include <optional>
#include <set>
#include <vector>

#include "ranklab/apolarity.hpp"

namespace ranklab {

struct Label {
  int s = 0;  // number of points
  int a = 0;  // conjugate pairs, s - 2a real points
  friend bool operator==(const Label& x, const Label& y) { return x.s == y.s && x.a == y.a; }
  friend bool operator<(const Label& x, const Label& y) {
    return x.s != y.s ? x.s < y.s : x.a < y.a;
  }
};

// How a label set was decided.  Complete: every achievable label at this s
// is present (kernel dimension <= 2, full cell decomposition; s > d where
// all labels are achievable by spanning; or a search that witnessed every
// a in [0, s/2], after which nothing can be missing).  SoundPartial:
// kernel dimension >= 3, deterministic grid + seeded random sampling;
// every reported label is witnessed but absent labels are not excluded.
enum class Exactness { Complete, SoundPartial };

struct LabelWitness {
  Label label;
  BinaryForm g;  // real square-free apolar form evincing the label
};

struct LabelSet {
  int s = 0;
  std::vector<LabelWitness> found;  // sorted by a, one witness per label
  Exactness exactness = Exactness::Complete;
  bool has(int a) const {
    for (const auto& w : found)
      if (w.label.a == a) return true;
    return false;
  }
};

// All labels at cardinality s (kernel at s must be nontrivial, s <= d+1).
LabelSet labels_at(const ApolarProfile& p, int s);

struct AdmissibleRank {
  int rank;
  BinaryForm witness;
};

// Least s whose real degree-s apolar kernel contains a square-free form;
// scans upward from the complex rank.
AdmissibleRank admissible_rank(const ApolarProfile& p);

// Exact value when lo == hi; otherwise only lo <= real rank <= hi is
// certified and inconclusive is set.  The witness has all roots real.
struct RealRankResult {
  int lo = 0, hi = 0;
  bool exact = false;
  std::optional<BinaryForm> witness;
  int value() const { return hi; }
};

RealRankResult real_rank(const ApolarProfile& p);

// Minimal c admitting a decomposition with exactly a conjugate pairs and c
// real points (label (2a + c, a)); bracket semantics as for real rank.
struct ARankResult {
  int a = 0;
  int lo = 0, hi = 0;
  bool exact = false;
  std::optional<BinaryForm> witness;
};

ARankResult a_rank(const ApolarProfile& p, int a);

struct RankReport {
  BinaryForm form;
  ComplexRank complex;
  AdmissibleRank admissible;
  RealRankResult real;
  LabelSet labels;  // at s = admissible rank
};

RankReport rank_report(const BinaryForm& f);

}  // namespace ranklab
