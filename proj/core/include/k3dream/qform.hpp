#ifndef K3DREAM_QFORM_HPP
#define K3DREAM_QFORM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3dream/numbers.hpp"

namespace k3dream {

// Integral binary quadratic form a x^2 + b x y + c y^2.
struct QForm {
  Int a, b, c;

  Int discriminant() const { return b * b - 4 * a * c; }
  Int evaluate(const Int& x, const Int& y) const {
    return a * x * x + b * x * y + c * y * y;
  }
  bool operator==(const QForm& o) const = default;
  std::string str() const;
};

using IntPair = std::pair<Int, Int>;

// 2x2 integer matrix with determinant +-1.
class Unimodular {
public:
  Unimodular(Int m00, Int m01, Int m10, Int m11);
  static Unimodular identity() { return {1, 0, 0, 1}; }
  static Unimodular shear(const Int& t) { return {1, t, 0, 1}; } // (x,y) -> (x+ty, y)
  static Unimodular flip_y() { return {1, 0, 0, -1}; }           // (x,y) -> (x, -y)

  const Int& at(int i, int j) const { return m_[2 * i + j]; }
  Int det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  Unimodular inverse() const;
  IntPair apply(const IntPair& v) const;

  bool operator==(const Unimodular& o) const = default;
  std::string str() const;

private:
  Int m_[4];
};

// Composition such that transform(f, a * b) == transform(transform(f, a), b).
Unimodular operator*(const Unimodular& a, const Unimodular& b);

// Minimal solution of t^2 - delta u^2 = 4 with t, u > 0.
struct PellSolution {
  Int t, u, delta;
};

Int discriminant(const QForm& f);

// The form f' with f'(v) = f(u * v); discriminant is preserved.
QForm transform(const QForm& f, const Unimodular& u);

// Equivalent form with 0 <= b <= |a| (shears plus a possible sign flip),
// together with the witnessing transform. Leaves a untouched.
std::pair<QForm, Unimodular> normalize_b(const QForm& f);

// A primitive nonzero (x, y) with f(x, y) = 0; exists iff the discriminant
// is a perfect square.
std::optional<IntPair> isotropic_vector(const QForm& f);

// Cycle of reduced forms equivalent to f, with the transform from f to each
// member and the monodromy around one full period.
struct ReducedCycle {
  std::vector<QForm> forms;
  std::vector<Unimodular> to_form;
  Unimodular monodromy = Unimodular::identity();
};

ReducedCycle reduced_cycle_data(const QForm& f);
std::vector<QForm> reduced_cycle(const QForm& f);

bool is_reduced(const QForm& f);

// Complete decision: f represents -1 iff some cycle form has leading
// coefficient -1 (valid for every positive non-square discriminant).
std::optional<IntPair> represents_minus_one(const QForm& f);

PellSolution pell4(const Int& delta);

// Automorph [[(t-bu)/2, -cu], [au, (t+bu)/2]] built from pell4; preserves f,
// has determinant one and infinite order.
Unimodular fundamental_automorph(const QForm& f);

// Solutions of f(x, y) = n: a bounded fundamental-region search closed under
// the automorph orbit for up to `budget` steps. Empty means "none found
// within budget", which is a proof of non-representability only for n = -1.
std::vector<IntPair> represent(const QForm& f, const Int& n, unsigned budget);

// Maps a primitive solution of f = -1 to (1,0) and shears the middle
// coefficient into {0,1}: the canonical form -x^2 + (d/4) y^2 for even b,
// -x^2 + xy + ((d-1)/4) y^2 for odd b.
std::pair<QForm, Unimodular> canonicalize_minus2(const QForm& f,
                                                 const IntPair& sol);

// For 1 <= a <= 3: the unique b in [0, a] with b^2 = d (mod 4a) and the
// matching c, if any rank-two even lattice with a square-2a vector and
// discriminant d exists.
std::optional<IntPair> same_disc_normal_form(const Int& a, const Int& d);

} // namespace k3dream

#endif
