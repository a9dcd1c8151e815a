#include "k3dream/mori.hpp"

#include "k3dream/errors.hpp"
#include "k3dream/linalg.hpp"

namespace k3dream {

RankTwoLattice::RankTwoLattice(RatMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != 2 || gram_.cols() != 2 || !gram_.is_symmetric())
    throw NotHyperbolic("gram must be a symmetric 2x2 matrix");
  disc_ = -gram_.det();
  if (disc_ <= 0)
    throw NotHyperbolic("discriminant " + disc_.get_str() +
                        " violates the Hodge index theorem");
}

Rat RankTwoLattice::pair(const DivisorClass& u, const DivisorClass& v) const {
  return u.x * (gram_.at(0, 0) * v.x + gram_.at(0, 1) * v.y) +
         u.y * (gram_.at(1, 0) * v.x + gram_.at(1, 1) * v.y);
}

bool RankTwoLattice::is_integral_even() const {
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (!is_integer(gram_.at(i, j))) return false;
  return num(gram_.at(0, 0)) % 2 == 0 && num(gram_.at(1, 1)) % 2 == 0;
}

QForm RankTwoLattice::associated_form() const {
  if (!is_integral_even()) throw OddLattice("gram is not integral and even");
  return {num(gram_.at(0, 0)) / 2, num(gram_.at(0, 1)),
          num(gram_.at(1, 1)) / 2};
}

std::string to_string(MdsDecision d) {
  switch (d) {
    case MdsDecision::MoriDream: return "MoriDream";
    case MdsDecision::NotMoriDream: return "NotMoriDream";
    case MdsDecision::UndeterminedBudget: return "UndeterminedBudget";
  }
  return "?";
}

MdsVerdict mds_smooth(const RankTwoLattice& lattice) {
  QForm f = lattice.associated_form(); // throws OddLattice when not even
  Int d_int = f.discriminant();
  if (is_perfect_square(d_int)) {
    IntPair v = *isotropic_vector(f);
    DivisorClass witness{Rat(v.first), Rat(v.second)};
    Rat sq = lattice.selfint(witness);
    if (sq != 0) throw InternalError("isotropic witness fails");
    return {MdsDecision::MoriDream, witness, sq,
            "square discriminant: isotropic class"};
  }
  if (auto v = represents_minus_one(f)) {
    DivisorClass witness{Rat(v->first), Rat(v->second)};
    Rat sq = lattice.selfint(witness);
    if (sq != -2) throw InternalError("(-2)-witness fails");
    return {MdsDecision::MoriDream, witness, sq, "class of square -2"};
  }
  return {MdsDecision::NotMoriDream, std::nullopt, Rat(0),
          "no class of square -2 or 0"};
}

bool mds_singular_pair(const RankTwoLattice& lattice, const DivisorClass& d1,
                       const DivisorClass& d2) {
  return lattice.selfint(d1) <= 0 && lattice.selfint(d2) <= 0 &&
         lattice.pair(d1, d2) > 0;
}

namespace {

// Integral primitive form of the lattice: clear denominators of
// (g11, 2 g12, g22) and divide out the content.
QForm cleared_primitive_form(const RankTwoLattice& lattice) {
  const RatMatrix& g = lattice.gram();
  Int l = lcm(lcm(den(g.at(0, 0)), den(2 * g.at(0, 1))), den(g.at(1, 1)));
  Int a = num(g.at(0, 0) * l);
  Int b = num(2 * g.at(0, 1) * l);
  Int c = num(g.at(1, 1) * l);
  Int content = gcd(gcd(a, b), c);
  return {a / content, b / content, c / content};
}

} // namespace

DivisorClass second_negative_divisor(const RankTwoLattice& lattice,
                                     const DivisorClass& d1) {
  Rat alpha = lattice.selfint(d1);
  if (alpha >= 0)
    throw NonNegativeSelfIntersection("D1^2 = " + alpha.get_str());
  QForm f = cleared_primitive_form(lattice);
  Int d = f.discriminant();
  if (d <= 0) throw InternalError("cleared form is not hyperbolic");
  if (is_perfect_square(d))
    throw SquareDiscriminant("lattice carries isotropic classes");
  Unimodular m = fundamental_automorph(f);
  DivisorClass d2 = d1;
  do {
    DivisorClass next{m.at(0, 0) * d2.x + m.at(0, 1) * d2.y,
                      m.at(1, 0) * d2.x + m.at(1, 1) * d2.y};
    d2 = next;
  } while (d2 == d1 || (d2.x == -d1.x && d2.y == -d1.y));
  if (lattice.pair(d1, d2) < 0) d2 = {-d2.x, -d2.y};
  if (lattice.selfint(d2) != alpha || lattice.pair(d1, d2) <= 0)
    throw InternalError("automorph image violates the construction");
  return d2;
}

bool same_discriminant_equivalent(const RankTwoLattice& lx,
                                  const RankTwoLattice& ly) {
  if (!lx.is_integral_even() || !ly.is_integral_even())
    throw OddLattice("both lattices must be integral and even");
  QForm fx = lx.associated_form();
  QForm fy = ly.associated_form();
  if (fx.a != fy.a)
    throw HypothesisViolated("lattices do not share the square-2a class");
  if (fx.a < 0 || 2 * fx.a > 6)
    throw HypothesisViolated("2a = " + Int(2 * fx.a).get_str() +
                             " is outside [0, 6]");
  Int d = fx.discriminant();
  if (d != fy.discriminant())
    throw HypothesisViolated("discriminants differ");
  if (fx.a == 0) {
    // d = b^2 is a square; both sides carry isotropic classes.
    if (!is_perfect_square(d)) throw InternalError("a = 0 forces a square d");
  } else {
    auto nf = same_disc_normal_form(fx.a, d);
    if (!nf) throw InternalError("no normal form despite existing lattices");
    QForm bx = normalize_b(fx).first;
    QForm by = normalize_b(fy).first;
    if (bx.b != nf->first || by.b != nf->first || bx.c != nf->second ||
        by.c != nf->second)
      throw InternalError("normal forms disagree with the unique b");
  }
  MdsVerdict vx = mds_smooth(lx);
  MdsVerdict vy = mds_smooth(ly);
  if (vx.decision != vy.decision)
    throw InternalError("equivalent lattices with different verdicts");
  return true;
}

ResolutionModel::ResolutionModel(IntMatrix gram,
                                 std::vector<std::size_t> exceptional)
    : gram_(std::move(gram)), exceptional_(std::move(exceptional)) {
  if (!gram_.is_symmetric())
    throw BadResolutionModel("gram must be symmetric");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    if (gram_.at(i, i) % 2 != 0)
      throw BadResolutionModel("diagonal must be even");
  for (std::size_t idx : exceptional_) {
    if (idx >= gram_.rows()) throw BadResolutionModel("exceptional index");
    if (gram_.at(idx, idx) != -2)
      throw BadResolutionModel("exceptional classes must have square -2");
  }
  // Negative definiteness of the exceptional block, by principal minors.
  RatMatrix block = exceptional_block();
  for (std::size_t k = 1; k <= block.rows(); ++k) {
    RatMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = block.at(i, j);
    Rat det = minor.det();
    if ((k % 2 == 1) ? det >= 0 : det <= 0)
      throw BadResolutionModel("exceptional block is not negative definite");
  }
}

RatMatrix ResolutionModel::exceptional_block() const {
  RatMatrix block(exceptional_.size(), exceptional_.size());
  for (std::size_t i = 0; i < exceptional_.size(); ++i)
    for (std::size_t j = 0; j < exceptional_.size(); ++j)
      block.at(i, j) = Rat(gram_.at(exceptional_[i], exceptional_[j]));
  return block;
}

RatVector mumford_pullback(const ResolutionModel& model,
                           const IntVector& dbar) {
  if (dbar.size() != model.rank())
    throw LengthMismatch("divisor has wrong length");
  const auto& exc = model.exceptional();
  RatVector pullback = to_rat(dbar);
  if (exc.empty()) return pullback;
  // Solve M alpha = -beta with beta_i = Dbar . E_i over the exceptional
  // block M; negative definiteness makes M invertible.
  IntVector pairing = model.gram() * dbar;
  RatMatrix block = model.exceptional_block();
  RatVector rhs(exc.size());
  for (std::size_t i = 0; i < exc.size(); ++i) rhs[i] = Rat(-pairing[exc[i]]);
  RatVector alpha = solve_linear(block, rhs);
  for (std::size_t i = 0; i < exc.size(); ++i) pullback[exc[i]] += alpha[i];
  // Postcondition: orthogonal to every exceptional class.
  RatVector check = RatMatrix(model.gram()) * pullback;
  for (std::size_t idx : exc)
    if (check[idx] != 0) throw InternalError("pullback is not orthogonal");
  return pullback;
}

FractionalPartData fractional_part_data(const ResolutionModel& model,
                                        const IntVector& dbar) {
  RatVector pullback = mumford_pullback(model, dbar);
  const auto& exc = model.exceptional();
  FractionalPartData out;
  out.frac.resize(exc.size());
  out.floor.resize(exc.size());
  for (std::size_t i = 0; i < exc.size(); ++i) {
    Rat alpha = pullback[exc[i]] - Rat(dbar[exc[i]]);
    out.floor[i] = floor_rat(alpha);
    out.frac[i] = alpha - Rat(out.floor[i]);
  }
  RatMatrix block = model.exceptional_block();
  out.frac_norm = gram_pair(block, out.frac, out.frac);
  return out;
}

Effectiveness effectiveness_test(const Rat& dsq, const Rat& fracsq) {
  Rat sum = dsq + fracsq;
  if (!is_integer(sum) || num(sum) % 2 != 0)
    throw ParityViolation("D^2 + {E_D}^2 = " + sum.get_str() +
                          " is not an even integer");
  return sum > -4 ? Effectiveness::EffectiveUpToSign
                  : Effectiveness::Inconclusive;
}

} // namespace k3dream
