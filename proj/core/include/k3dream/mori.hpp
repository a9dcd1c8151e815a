#ifndef K3DREAM_MORI_HPP
#define K3DREAM_MORI_HPP

#include <optional>
#include <string>
#include <vector>

#include "k3dream/matrix.hpp"
#include "k3dream/qform.hpp"

namespace k3dream {

// Divisor class in a fixed rank-two basis.
struct DivisorClass {
  Rat x, y;
  bool operator==(const DivisorClass& o) const = default;
};

// Rank-two hyperbolic lattice: symmetric 2x2 Gram with d = -det > 0.
class RankTwoLattice {
public:
  explicit RankTwoLattice(RatMatrix gram);

  const RatMatrix& gram() const { return gram_; }
  const Rat& disc() const { return disc_; }

  Rat pair(const DivisorClass& u, const DivisorClass& v) const;
  Rat selfint(const DivisorClass& u) const { return pair(u, u); }

  bool is_integral_even() const;
  // The associated form a x^2 + b x y + c y^2 for gram (2a, b; b, 2c).
  QForm associated_form() const;

private:
  RatMatrix gram_;
  Rat disc_;
};

enum class MdsDecision { MoriDream, NotMoriDream, UndeterminedBudget };

std::string to_string(MdsDecision d);

struct MdsVerdict {
  MdsDecision decision;
  std::optional<DivisorClass> witness; // D with D^2 in {-2, 0} when MoriDream
  Rat witness_selfint;
  std::string reason;
};

// Decision for smooth even rank-two lattices: isotropic class when the
// discriminant is a square, otherwise a (-2)-class iff the associated form
// represents -1 (a complete test).
MdsVerdict mds_smooth(const RankTwoLattice& lattice);

// Criterion for possibly singular rank-two surfaces: two effective divisors
// with nonpositive squares and positive product. Effectiveness of the inputs
// is the caller's geometric responsibility.
bool mds_singular_pair(const RankTwoLattice& lattice, const DivisorClass& d1,
                       const DivisorClass& d2);

// Given D1 with negative square on a lattice without isotropic classes,
// produces D2 with the same square, D2 not in {D1, -D1}, and D1.D2 > 0, by
// pushing D1 along the fundamental automorph of the cleared form.
DivisorClass second_negative_divisor(const RankTwoLattice& lattice,
                                     const DivisorClass& d1);

// Same-discriminant equivalence for even lattices (2a, b; b, 2c) sharing the
// a entry, 0 <= 2a <= 6: always true under the hypotheses, with agreement of
// the smooth verdicts re-checked. Throws HypothesisViolated otherwise.
bool same_discriminant_equivalent(const RankTwoLattice& lx,
                                  const RankTwoLattice& ly);

// Full-rank resolution lattice with a marked set of exceptional (-2)-classes
// spanning a negative definite block.
class ResolutionModel {
public:
  ResolutionModel(IntMatrix gram, std::vector<std::size_t> exceptional);

  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::size_t>& exceptional() const { return exceptional_; }
  std::size_t rank() const { return gram_.rows(); }

  RatMatrix exceptional_block() const;

private:
  IntMatrix gram_;
  std::vector<std::size_t> exceptional_; // 0-based column indices
};

// pi^* D = Dbar + E_D with E_D supported on the exceptional classes, the
// unique choice orthogonal to every exceptional class.
RatVector mumford_pullback(const ResolutionModel& model, const IntVector& dbar);

struct FractionalPartData {
  RatVector frac;     // {E_D}, one coefficient per exceptional class
  IntVector floor;    // componentwise floor of E_D
  Rat frac_norm;      // {E_D}^T M {E_D} over the exceptional block
};

FractionalPartData fractional_part_data(const ResolutionModel& model,
                                        const IntVector& dbar);

enum class Effectiveness { EffectiveUpToSign, Inconclusive };

// D^2 + {E_D}^2 > -4 forces D or -D effective; the sum is always an even
// integer and anything else is rejected.
Effectiveness effectiveness_test(const Rat& dsq, const Rat& fracsq);

} // namespace k3dream

#endif
