#pragma once

// Conjugation-stable point sets on the rational normal curve, exact span
// membership over Q(i), labels of explicit sets, and certified
// decomposition of a form against a square-free apolar witness.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ranklab/interval.hpp"
#include "ranklab/labels.hpp"

namespace ranklab {

// A point nu_d(alpha:beta) of the curve.  Exact points carry canonical
// coordinates (first nonzero coordinate 1, so (1, u) or (0, 1)); boxed
// points are always (1 : u) with u inside a certified isolating rectangle
// that contains exactly one root of the witness.
struct CurvePoint {
  enum class Kind { Exact, Boxed };
  Kind kind = Kind::Exact;
  GaussianRational alpha, beta;  // Exact only
  CInterval box;                 // Boxed only, encloses u

  static CurvePoint exact(const GaussianRational& a, const GaussianRational& b);
  static CurvePoint boxed(CInterval u);
  bool is_real() const;
  CurvePoint conjugate() const;
  friend bool operator==(const CurvePoint& p, const CurvePoint& q);
};

struct DecompositionSet {
  int degree = 0;                        // ambient embedding degree d
  std::vector<CurvePoint> points;
  std::vector<int> pairing;              // involution; pairing[i] == i at real points
  std::vector<GaussianRational> lambda;  // f = sum lambda_i (alpha_i x + beta_i y)^d
  Rational residual_bound = Rational(0);  // certified; exactly 0 for all-exact sets
  bool all_exact = true;
};

struct CertificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Does conjugation permute the (exact, pairwise distinct) points?  Returns
// the pairing involution when it does.  Duplicates are rejected.
std::optional<std::vector<int>> conjugation_pairing(const std::vector<CurvePoint>& pts);

// (s, a): s = point count, a = number of pairing 2-cycles
Label label_of_set(const DecompositionSet& S);

// coefficients of (alpha x + beta y)^d, the curve embedding (exact points)
std::vector<GaussianRational> embed_point(const CurvePoint& p, int d);

// Is P (a length d+1 coefficient vector) in the span of the embedded
// points?  Exact elimination over Q(i); points must be exact.
bool in_span(const std::vector<GaussianRational>& P, const std::vector<CurvePoint>& S, int d);

// Sylvester reconstruction: the s projective roots of g become curve
// points (exact when in Q(i), certified boxes otherwise) and the
// coefficients solve the full (d+1) x s system, exactly for exact root
// sets and by midpoint least squares with an interval-certified residual
// otherwise.  tol bounds the coefficient sup-norm of f - sum lambda_i l_i^d
// relative to the sup-norm of f.  Throws CertificationFailure when the
// refinement budget is exhausted.
DecompositionSet decompose(const BinaryForm& f, const BinaryForm& g,
                           const Rational& tol = Rational(1, 1000000000));

struct VerificationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  Label label;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

VerificationReport verify_decomposition(const BinaryForm& f, const DecompositionSet& S,
                                        const Rational& tol);

}  // namespace ranklab
