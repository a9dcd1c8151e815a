#ifndef K3DREAM_WPS_HPP
#define K3DREAM_WPS_HPP

#include <map>
#include <string>
#include <vector>

#include "k3dream/numbers.hpp"

namespace k3dream {

// n hypersurfaces of the given degrees in P(a_0, ..., a_n).
struct WpsSpec {
  std::vector<Int> weights;
  std::vector<Int> degrees;
};

// Intersection number prod d_i / prod a_i.
Rat wps_intersection(const WpsSpec& spec);

// Linear intersection ledger: named divisors, known pairings, and textual
// relations in the grammar
//   <expr> = <expr>,  term := [coef] symbol | [coef] symbol.symbol | [coef] symbol^2
// Degree-one relations are divisor identities and get paired against every
// named divisor; degree-two relations constrain the pairings directly.
struct LedgerProblem {
  std::vector<std::string> divisors;
  std::map<std::string, Rat> knowns; // canonical "A.B" keys
  std::vector<std::string> relations;
};

// Canonical key for the pairing of two named divisors ("A.B" with A before
// B in declaration order).
std::string product_key(const std::vector<std::string>& divisors,
                        const std::string& a, const std::string& b);

// Exact values for every pairing of named divisors. Throws Underdetermined
// or Inconsistent.
std::map<std::string, Rat> ledger_solve(const LedgerProblem& problem);

// dim L - dim Aut = 18 - rk(Lambda_E): the rank-two criterion for a linear
// system of surfaces through a fixed curve.
bool paut_check(long dim_linear_system, long dim_aut, long rk_exceptional);

} // namespace k3dream

#endif
