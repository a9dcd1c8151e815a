#ifndef K3DREAM_LINALG_HPP
#define K3DREAM_LINALG_HPP

#include <cstddef>
#include <vector>

#include "k3dream/matrix.hpp"

namespace k3dream {

struct HnfResult {
  IntMatrix h; // row-style Hermite normal form of the input
  IntMatrix u; // unimodular transform with u * m == h
};

// Row-style HNF: upper echelon, positive pivots, entries above a pivot
// reduced into [0, pivot). Unique for a fixed input.
HnfResult hermite_normal_form(const IntMatrix& m);

// Basis of the saturated integer kernel {v : m*v = 0}, itself in HNF.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

struct ComplementResult {
  std::vector<IntVector> basis;
  IntMatrix gram;
};

// Saturated sublattice orthogonal, w.r.t. `gram`, to the basis vectors at
// the given (0-based) indices, together with its Gram matrix. The kernel
// basis is size-reduced against earlier vectors so small worked examples
// come out in the expected diagonal shape.
ComplementResult orthogonal_complement(const IntMatrix& gram,
                                       const std::vector<std::size_t>& indices);

// Exact solve of a*x = b for square or overdetermined-consistent systems.
// Throws SingularSystem / InconsistentSystem.
RatVector solve_linear(const RatMatrix& a, const RatVector& b);

} // namespace k3dream

#endif
