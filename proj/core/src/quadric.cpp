#include "k3dream/quadric.hpp"

#include <algorithm>

#include "k3dream/errors.hpp"

namespace k3dream {

QuadricSpec::QuadricSpec(RatMatrix g, RatVector l, Rat c, Rat t)
    : gram(std::move(g)), linear(std::move(l)), constant(std::move(c)),
      target(std::move(t)) {
  if (!gram.is_symmetric())
    throw NotNegativeDefinite("quadratic part must be symmetric");
  if (gram.rows() == 0 || gram.rows() != linear.size())
    throw NotNegativeDefinite("inconsistent quadric dimensions");
  // Leading principal minors must alternate in sign starting negative.
  for (std::size_t k = 1; k <= gram.rows(); ++k) {
    RatMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = gram.at(i, j);
    Rat d = minor.det();
    bool want_negative = (k % 2 == 1);
    if (want_negative ? d >= 0 : d <= 0)
      throw NotNegativeDefinite("leading principal minor " +
                                std::to_string(k) + " has wrong sign");
  }
}

Rat QuadricSpec::evaluate(const IntVector& v) const {
  RatVector rv = to_rat(v);
  return gram_pair(gram, rv, rv) + dot(linear, rv) + constant;
}

namespace {

// Decomposition of the positive definite -gram: -gram = U^T D U with U unit
// upper triangular, so -v^T gram v = sum_i d_i (v_i + sum_{j>i} u_ij v_j)^2.
struct SquareCompletion {
  RatVector d;
  RatMatrix u;
};

SquareCompletion complete_squares(const RatMatrix& gram) {
  std::size_t n = gram.rows();
  RatMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = -gram.at(i, j);
  SquareCompletion out{RatVector(n), RatMatrix::identity(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.d[k] = a.at(k, k);
    for (std::size_t j = k + 1; j < n; ++j)
      out.u.at(k, j) = a.at(k, j) / a.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) -= a.at(k, i) * a.at(k, j) / a.at(k, k);
  }
  return out;
}

// Largest integer v with v + offset <= sqrt(bound); bound >= 0.
Int upper_index(const Rat& offset, const Rat& bound) {
  Int guess = floor_sqrt_rat(bound) - floor_rat(offset) + 1;
  while (!leq_sqrt(Rat(guess) + offset, bound)) --guess;
  while (leq_sqrt(Rat(guess + 1) + offset, bound)) ++guess;
  return guess;
}

// Smallest integer v with -(v + offset) <= sqrt(bound); bound >= 0.
Int lower_index(const Rat& offset, const Rat& bound) {
  Int guess = -floor_sqrt_rat(bound) - ceil_rat(offset) - 1;
  while (!leq_sqrt(-(Rat(guess) + offset), bound)) ++guess;
  while (leq_sqrt(-(Rat(guess - 1) + offset), bound)) --guess;
  return guess;
}

struct Enumerator {
  const QuadricSpec& q;
  const SquareCompletion& sq;
  RatVector center; // v must satisfy sum d_i (v_i + c_i(v_{>i}))^2 = total
  Rat total;
  IntVector current;
  std::vector<IntVector> found;

  // Levels run from the last coordinate down to the first; at each level the
  // inner coordinates are fixed and contribute `used` to the sum.
  void descend(std::size_t level, const Rat& used) {
    std::size_t i = level - 1;
    Rat offset = center[i];
    for (std::size_t j = i + 1; j < q.gram.rows(); ++j)
      offset += sq.u.at(i, j) * (Rat(current[j]) + center[j]);
    Rat remaining = (total - used) / sq.d[i];
    if (remaining < 0) return;
    Int lo = lower_index(offset, remaining);
    Int hi = upper_index(offset, remaining);
    for (Int v = lo; v <= hi; ++v) {
      current[i] = v;
      Rat qi = Rat(v) + offset;
      Rat contribution = sq.d[i] * qi * qi;
      if (level == 1) {
        if (used + contribution == total && q.evaluate(current) == q.target)
          found.push_back(current);
      } else {
        descend(level - 1, used + contribution);
      }
    }
  }
};

} // namespace

std::vector<IntVector> enumerate_quadric(const QuadricSpec& q) {
  std::size_t n = q.gram.rows();
  // Shift to w = v + h with h = gram^{-1} linear / 2, turning the equation
  // into w^T gram w = target - constant + h^T gram h.
  RatMatrix ginv = q.gram.inverse();
  RatVector h = ginv * q.linear;
  for (auto& x : h) x /= 2;
  Rat s = q.target - q.constant + gram_pair(q.gram, h, h);
  // Negative definite part: -w^T gram w = -s must be nonnegative.
  if (s > 0) return {};
  SquareCompletion sq = complete_squares(q.gram);
  Enumerator e{q, sq, h, -s, IntVector(n), {}};
  e.descend(n, Rat(0));
  std::sort(e.found.begin(), e.found.end(),
            [](const IntVector& a, const IntVector& b) {
              return std::lexicographical_compare(a.begin(), a.end(),
                                                  b.begin(), b.end());
            });
  return e.found;
}

} // namespace k3dream
