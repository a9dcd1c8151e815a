#ifndef K3DREAM_QUADRIC_HPP
#define K3DREAM_QUADRIC_HPP

#include <vector>

#include "k3dream/matrix.hpp"

namespace k3dream {

// v^T gram v + linear . v + constant = target over integer vectors v, with a
// negative definite quadratic part so the solution set is finite.
struct QuadricSpec {
  RatMatrix gram;
  RatVector linear;
  Rat constant;
  Rat target;

  // Validates symmetry and negative definiteness (leading principal minors
  // alternating in sign, starting negative).
  QuadricSpec(RatMatrix gram, RatVector linear, Rat constant, Rat target);

  Rat evaluate(const IntVector& v) const;
};

// All integer solutions, in ascending lexicographic order. Bounds come from
// completing the square into nested boxes; every comparison is exact.
std::vector<IntVector> enumerate_quadric(const QuadricSpec& q);

} // namespace k3dream

#endif
