#ifndef K3DREAM_AN_HPP
#define K3DREAM_AN_HPP

#include <vector>

#include "k3dream/matrix.hpp"

namespace k3dream {

// Cartan matrix C^n of A_n with its exact inverse. The intersection matrix
// of the exceptional curves is M = -C^n throughout; every norm below uses
// that sign convention.
class AnModel {
public:
  explicit AnModel(unsigned n);

  unsigned n() const { return n_; }
  const IntMatrix& cartan() const { return cartan_; }
  const RatMatrix& cartan_inv() const { return cartan_inv_; }

private:
  unsigned n_;
  IntMatrix cartan_;
  RatMatrix cartan_inv_;
};

// det(C^n) by cofactor recursion, checked against n+1.
Int cartan_det(unsigned n);

// i-th diagonal entry of (C^n)^{-1}: i(n-i+1)/(n+1), 1-based i, checked
// against the exact matrix inverse.
Rat inv_diagonal(unsigned n, unsigned i);

// All inverse diagonal entries for i = 3..n-2 are >= 2 (n >= 8).
bool check_diag_bound(unsigned n);

// {kE} with E = (1/(n+1)) sum i E_i, and its norm under M = -C^n.
struct DualClassNorm {
  unsigned n;
  long k;
  RatVector frac_vector; // frac(k i / (n+1)), i = 1..n
  Rat norm;              // -frac^T C^n frac
};

DualClassNorm frac_norm(unsigned n, long k);

// {kE}^2 = k^2 {E}^2 (mod 2) for k = 0..n.
bool mod2_congruence(unsigned n);

// D^2 = -2 + beta^T (C^n)^{-1} beta for an irreducible curve whose strict
// transform meets E_i with multiplicity beta_i.
Rat curve_selfint(unsigned n, const IntVector& beta);

// The two self-intersections a negative irreducible curve through the
// singular point can have when n >= 8.
struct NegativeCurveOptions {
  Rat end_value;       // meets E_1 or E_n: -(n+2)/(n+1)
  Rat near_end_value;  // meets E_2 or E_{n-1}: -4/(n+1)
};

NegativeCurveOptions negative_curve_options(unsigned n);

// A pair of discriminant-group norms that the evenness constraint cannot
// tell apart: distinct, equal mod 2, and both feasible in (-4, 0].
struct AmbiguityRow {
  unsigned n;
  long k, kp;
  Rat norm_k, norm_kp;
  bool operator==(const AmbiguityRow& o) const = default;
};

std::vector<AmbiguityRow> ambiguity_scan(unsigned n_max);

enum class AnVerdict { MoriDream, Undetermined, Inapplicable };

std::string to_string(AnVerdict v);

struct AnDecision {
  AnVerdict verdict;
  std::vector<AmbiguityRow> obstruction; // populated when Undetermined
};

AnDecision decide_main_an(unsigned n, bool has_negative_irreducible_curve);

} // namespace k3dream

#endif
