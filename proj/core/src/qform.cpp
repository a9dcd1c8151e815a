#include "k3dream/qform.hpp"

#include <algorithm>
#include <set>

#include "k3dream/errors.hpp"

namespace k3dream {

std::string QForm::str() const {
  return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
}

Unimodular::Unimodular(Int m00, Int m01, Int m10, Int m11)
    : m_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)} {
  Int d = det();
  if (d != 1 && d != -1)
    throw NotUnimodular("determinant is " + d.get_str());
}

Unimodular Unimodular::inverse() const {
  Int d = det();
  // adj / det with det = +-1 stays integral.
  return {m_[3] / d, -m_[1] / d, -m_[2] / d, m_[0] / d};
}

IntPair Unimodular::apply(const IntPair& v) const {
  return {m_[0] * v.first + m_[1] * v.second,
          m_[2] * v.first + m_[3] * v.second};
}

std::string Unimodular::str() const {
  return "[[" + m_[0].get_str() + "," + m_[1].get_str() + "],[" +
         m_[2].get_str() + "," + m_[3].get_str() + "]]";
}

Unimodular operator*(const Unimodular& a, const Unimodular& b) {
  return {a.at(0, 0) * b.at(0, 0) + a.at(0, 1) * b.at(1, 0),
          a.at(0, 0) * b.at(0, 1) + a.at(0, 1) * b.at(1, 1),
          a.at(1, 0) * b.at(0, 0) + a.at(1, 1) * b.at(1, 0),
          a.at(1, 0) * b.at(0, 1) + a.at(1, 1) * b.at(1, 1)};
}

Int discriminant(const QForm& f) { return f.discriminant(); }

QForm transform(const QForm& f, const Unimodular& u) {
  const Int &p = u.at(0, 0), &q = u.at(0, 1), &r = u.at(1, 0), &s = u.at(1, 1);
  QForm g;
  g.a = f.evaluate(p, r);
  g.c = f.evaluate(q, s);
  g.b = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s;
  return g;
}

std::pair<QForm, Unimodular> normalize_b(const QForm& f) {
  if (f.a == 0) throw InternalError("normalize_b requires a != 0");
  Int bound = abs(f.a);
  // Unique b' = b (mod 2a) in (-|a|, |a|], reached by the shear
  // (x,y) -> (x+ty, y) which maps b to b + 2at and fixes a.
  Int r;
  Int two_a = 2 * bound;
  mpz_fdiv_r(r.get_mpz_t(), f.b.get_mpz_t(), two_a.get_mpz_t());
  Int bp = (r <= bound) ? r : Int(r - two_a);
  Int t = (bp - f.b) / (2 * f.a);
  Unimodular u = Unimodular::shear(t);
  if (bp < 0) u = u * Unimodular::flip_y();
  return {transform(f, u), u};
}

std::optional<IntPair> isotropic_vector(const QForm& f) {
  if (f.a == 0) return IntPair{1, 0};
  Int d = f.discriminant();
  if (d < 0 || !is_perfect_square(d)) return std::nullopt;
  Int s = isqrt(d);
  // 4a f = (2ax + (b - s)y)(2ax + (b + s)y); kill the first factor.
  Int x = s - f.b, y = 2 * f.a;
  Int g = gcd(x, y);
  x /= g;
  y /= g;
  if (f.evaluate(x, y) != 0) throw InternalError("isotropic vector failed");
  return IntPair{x, y};
}

bool is_reduced(const QForm& f) {
  Int d = f.discriminant();
  if (d <= 0 || is_perfect_square(d)) return false;
  if (f.b <= 0) return false;
  if (f.b * f.b >= d) return false; // b < sqrt(d)
  Int twoa = 2 * abs(f.a);
  // sqrt(d) - b < 2|a|  <=>  d < (b + 2|a|)^2
  if (d >= (f.b + twoa) * (f.b + twoa)) return false;
  // 2|a| < sqrt(d) + b  <=>  2|a| - b <= 0 or (2|a| - b)^2 < d
  Int diff = twoa - f.b;
  if (diff > 0 && diff * diff >= d) return false;
  return true;
}

namespace {

// Neighbor step (a,b,c) -> (c, b', (b'^2 - d)/(4c)) realized by the
// unimodular substitution (x,y) -> (-y, x + ty), b' = -b + 2ct.
std::pair<QForm, Unimodular> rho(const QForm& f) {
  Int d = f.discriminant();
  Int ac = abs(f.c);
  Int two_c = 2 * ac;
  // Pick the representative of -b mod 2|c| in the reduction window.
  Int base;
  mpz_fdiv_r(base.get_mpz_t(), Int(-f.b).get_mpz_t(), two_c.get_mpz_t());
  Int bp;
  if (ac * ac > d) {
    // window (-|c|, |c|]
    bp = (base <= ac) ? base : Int(base - two_c);
  } else {
    // window (sqrt(d) - 2|c|, sqrt(d)); d non-square so no boundary case
    Int s = isqrt(d);
    bp = base + ((s - base) / two_c) * two_c;
    if (bp > s) bp -= two_c;
  }
  Int t = (bp + f.b) / (2 * f.c);
  Unimodular u(0, -1, 1, t);
  QForm g = transform(f, u);
  if (g.a != f.c || g.b != bp) throw InternalError("rho step mismatch");
  return {g, u};
}

} // namespace

ReducedCycle reduced_cycle_data(const QForm& f) {
  Int d = f.discriminant();
  if (d <= 0) throw NonPositiveDiscriminant("discriminant " + d.get_str());
  if (is_perfect_square(d)) throw SquareDiscriminant("discriminant " + d.get_str());
  QForm g = f;
  Unimodular acc = Unimodular::identity();
  int guard = 0;
  while (!is_reduced(g)) {
    auto [next, step] = rho(g);
    g = next;
    acc = acc * step;
    if (++guard > 100000) throw InternalError("reduction did not terminate");
  }
  ReducedCycle cycle;
  QForm start = g;
  Unimodular around = Unimodular::identity();
  do {
    cycle.forms.push_back(g);
    cycle.to_form.push_back(acc);
    auto [next, step] = rho(g);
    g = next;
    acc = acc * step;
    around = around * step;
    if (cycle.forms.size() > 100000) throw InternalError("cycle did not close");
  } while (!(g == start));
  cycle.monodromy = around;
  return cycle;
}

std::vector<QForm> reduced_cycle(const QForm& f) {
  return reduced_cycle_data(f).forms;
}

std::optional<IntPair> represents_minus_one(const QForm& f) {
  Int d = f.discriminant();
  if (d <= 0) throw NonPositiveDiscriminant("discriminant " + d.get_str());
  if (is_perfect_square(d)) throw SquareDiscriminant("discriminant " + d.get_str());
  if (f.a == -1) return IntPair{1, 0};
  if (f.c == -1) return IntPair{0, 1};
  // |m| = 1 < sqrt(d)/2 holds for every non-square d = 0,1 mod 4, so f
  // represents -1 iff -1 appears as a leading coefficient in the cycle.
  ReducedCycle cycle = reduced_cycle_data(f);
  for (std::size_t i = 0; i < cycle.forms.size(); ++i) {
    if (cycle.forms[i].a != -1) continue;
    IntPair witness = cycle.to_form[i].apply({1, 0});
    if (f.evaluate(witness.first, witness.second) != -1)
      throw InternalError("witness does not evaluate to -1");
    return witness;
  }
  return std::nullopt;
}

namespace {

// Fundamental solution of x^2 - d y^2 = 1 via the continued fraction of
// sqrt(d); used for discriminants that are 2 or 3 mod 4.
std::pair<Int, Int> pell_unit(const Int& d) {
  Int a0 = isqrt(d);
  Int m = 0, q = 1, a = a0;
  Int h_prev = 1, h = a0, k_prev = 0, k = 1;
  int guard = 0;
  while (h * h - d * k * k != 1) {
    m = q * a - m;
    q = (d - m * m) / q;
    Int an = (a0 + m) / q;
    Int h_next = an * h + h_prev;
    Int k_next = an * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    a = an;
    if (++guard > 1000000) throw InternalError("pell expansion diverged");
  }
  return {h, k};
}

} // namespace

PellSolution pell4(const Int& delta) {
  if (delta <= 0) throw NonPositiveDiscriminant("delta " + delta.get_str());
  if (is_perfect_square(delta))
    throw SquareDiscriminant("delta " + delta.get_str());
  Int mod4;
  mpz_fdiv_r_ui(mod4.get_mpz_t(), delta.get_mpz_t(), 4);
  if (mod4 == 2 || mod4 == 3) {
    // No form has this discriminant; solutions have t, u even.
    auto [x, y] = pell_unit(delta);
    return {2 * x, 2 * y, delta};
  }
  // Monodromy of the principal cycle generates the automorphism group, and
  // its trace is the fundamental t.
  Int b0 = (mod4 == 1) ? 1 : 0;
  QForm principal{1, b0, (b0 * b0 - delta) / 4};
  ReducedCycle cycle = reduced_cycle_data(principal);
  Int t = abs(cycle.monodromy.at(0, 0) + cycle.monodromy.at(1, 1));
  Int u2 = (t * t - 4) / delta;
  if (u2 * delta != t * t - 4 || !is_perfect_square(u2))
    throw InternalError("pell4 trace is not a solution");
  return {t, isqrt(u2), delta};
}

Unimodular fundamental_automorph(const QForm& f) {
  PellSolution p = pell4(f.discriminant());
  // t = bu (mod 2) because t^2 = d u^2 = b^2 u^2 (mod 4).
  Unimodular m((p.t - f.b * p.u) / 2, -f.c * p.u, f.a * p.u,
               (p.t + f.b * p.u) / 2);
  if (m.det() != 1 || !(transform(f, m) == f))
    throw InternalError("automorph does not preserve the form");
  return m;
}

std::vector<IntPair> represent(const QForm& f, const Int& n, unsigned budget) {
  Int d = f.discriminant();
  if (d <= 0) throw NonPositiveDiscriminant("discriminant " + d.get_str());
  if (is_perfect_square(d)) throw SquareDiscriminant("discriminant " + d.get_str());
  std::set<IntPair> sols;
  PellSolution pell = pell4(d);
  // Any orbit of solutions has a representative with
  // y^2 <= |n| (t + 2) / d; pad the window a little.
  Int ybound = floor_sqrt_rat(make_rat(abs(n) * (pell.t + 2), d)) + 2;
  for (Int y = -ybound; y <= ybound; ++y) {
    // a x^2 + (b y) x + (c y^2 - n) = 0
    if (f.a == 0) throw InternalError("degenerate form in represent");
    Int disc_x = d * y * y + 4 * f.a * n;
    if (disc_x < 0 || !is_perfect_square(disc_x)) continue;
    Int s = isqrt(disc_x);
    for (int sign : {1, -1}) {
      Int numer = -f.b * y + sign * s;
      if (numer % (2 * f.a) != 0) continue;
      Int x = numer / (2 * f.a);
      if (x == 0 && y == 0) continue;
      if (f.evaluate(x, y) == n) sols.insert({x, y});
    }
  }
  if (n == -1 && sols.empty()) {
    // The -1 decision is complete; fold its witness in if the window missed.
    if (auto w = represents_minus_one(f)) sols.insert(*w);
  }
  // Close under the automorph orbit.
  Unimodular m = fundamental_automorph(f);
  Unimodular mi = m.inverse();
  std::set<IntPair> base = sols;
  for (const IntPair& v0 : base) {
    IntPair fwd = v0, bwd = v0;
    for (unsigned k = 0; k < budget; ++k) {
      fwd = m.apply(fwd);
      bwd = mi.apply(bwd);
      sols.insert(fwd);
      sols.insert(bwd);
    }
  }
  return {sols.begin(), sols.end()};
}

std::pair<QForm, Unimodular> canonicalize_minus2(const QForm& f,
                                                 const IntPair& sol) {
  if (f.evaluate(sol.first, sol.second) != -1)
    throw NotASolution("f" + f.str() + " at " + sol.first.get_str() + "," +
                       sol.second.get_str() + " is not -1");
  Int g, p, q;
  mpz_gcdext(g.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t(),
             sol.first.get_mpz_t(), sol.second.get_mpz_t());
  if (g != 1) throw NotPrimitive("gcd of solution is " + g.get_str());
  // Columns (sol | completion): det = x*q - y*(-p) = 1.
  Unimodular u0(sol.first, -p, sol.second, q);
  QForm g1 = transform(f, u0);
  if (g1.a != -1) throw InternalError("canonicalize basis change failed");
  // Shear b into {0,1}: b' = b - 2t keeps parity.
  Int parity;
  mpz_fdiv_r_ui(parity.get_mpz_t(), g1.b.get_mpz_t(), 2);
  Int t = (g1.b - parity) / 2;
  Unimodular u = u0 * Unimodular::shear(t);
  QForm out = transform(f, u);
  if (out.a != -1 || (out.b != 0 && out.b != 1))
    throw InternalError("canonical form shape");
  return {out, u};
}

std::optional<IntPair> same_disc_normal_form(const Int& a, const Int& d) {
  if (a < 1 || a > 3) throw AOutOfRange("a = " + a.get_str());
  if (d <= 0) throw NonPositiveDiscriminant("d = " + d.get_str());
  for (Int b = 0; b <= a; ++b) {
    Int r = b * b - d;
    if (r % (4 * a) == 0) return IntPair{b, r / (4 * a)};
  }
  return std::nullopt;
}

} // namespace k3dream
