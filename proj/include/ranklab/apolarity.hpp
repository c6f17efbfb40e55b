#pragma once

// The apolarity pairing g(X,Y) acting on f(x,y) by X -> d/dx, Y -> d/dy in
// the monomial basis (no factorial renormalization), catalecticant kernels,
// generators of the apolar ideal, and Sylvester's complex rank.

#include <optional>
#include <vector>

#include "ranklab/binary_form.hpp"

namespace ranklab {

// g of degree s <= deg f acting on f; result has degree d - s and may be
// zero, hence the raw coefficient vector.
IntVec apolar_action(const BinaryForm& g, const BinaryForm& f);

// The (d-s+1) x (s+1) matrix of the action on degree-s operators.
IntMat catalecticant_matrix(const BinaryForm& f, int s);

// Basis of the degree-s part of the apolar ideal, 1 <= s <= d+1 (at
// s = d+1 the action is identically zero and the basis is the full space).
std::vector<BinaryForm> catalecticant_kernel(const BinaryForm& f, int s);

// Kernel bases for every degree 1..d+1, computed up front so a profile is
// immutable afterwards and safe to share across threads.  Every
// higher-level computation consumes one of these.
class ApolarProfile {
 public:
  explicit ApolarProfile(BinaryForm f);

  const BinaryForm& form() const { return f_; }
  int degree() const { return f_.degree(); }
  const std::vector<BinaryForm>& kernel(int s) const;
  int kernel_dim(int s) const { return static_cast<int>(kernel(s).size()); }
  // minimal s >= 1 with nontrivial kernel
  int min_kernel_degree() const;

 private:
  BinaryForm f_;
  std::vector<std::vector<BinaryForm>> kernels_;  // index s - 1
};

// Minimal generators (g1, g2) of the apolar ideal: deg g1 = r1 minimal,
// deg g2 = d + 2 - r1, g2 independent of the multiples of g1.
std::pair<BinaryForm, BinaryForm> apolar_generators(const ApolarProfile& p);

// Does some Q-linear combination of basis have a square-free projective
// form?  Decided exactly: the discriminant of a generic combination has
// degree <= 2s-2 in each parameter, so it vanishes identically iff it
// vanishes on the grid {0..2s-2}^k over each affine patch t_m = 1.
// Returns a witness when one exists (nice witnesses preferred: basis
// elements, then pairwise sums/differences, then grid points).
std::optional<BinaryForm> squarefree_member(const std::vector<BinaryForm>& basis);

struct ComplexRank {
  int rank;
  BinaryForm witness;  // square-free apolar form of degree = rank
};

// Sylvester: the least s whose kernel contains a square-free form.
ComplexRank complex_rank(const ApolarProfile& p);

}  // namespace ranklab
