#include "k3dream/an.hpp"

#include <map>
#include <mutex>

#include "k3dream/errors.hpp"

namespace k3dream {

namespace {

// Models are immutable; cache them so scans do not re-invert Cartan
// matrices on every norm query.
const AnModel& cached_model(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, AnModel> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, AnModel(n)).first;
  return it->second;
}

} // namespace

AnModel::AnModel(unsigned n) : n_(n), cartan_(n, n) {
  if (n == 0) throw NTooSmall("n must be positive");
  for (unsigned i = 0; i < n; ++i) {
    cartan_.at(i, i) = 2;
    if (i + 1 < n) {
      cartan_.at(i, i + 1) = -1;
      cartan_.at(i + 1, i) = -1;
    }
  }
  if (cartan_.det() != n + 1)
    throw InternalError("Cartan determinant is not n+1");
  cartan_inv_ = RatMatrix(cartan_).inverse();
  if (!(cartan_inv_ * RatMatrix(cartan_) == RatMatrix::identity(n)))
    throw InternalError("Cartan inverse check failed");
}

Int cartan_det(unsigned n) {
  if (n == 0) throw NTooSmall("n must be positive");
  // det(C^k) = 2 det(C^{k-1}) - det(C^{k-2})
  Int prev = 1, cur = 2;
  for (unsigned k = 2; k <= n; ++k) {
    Int next = 2 * cur - prev;
    prev = cur;
    cur = next;
  }
  if (cur != n + 1) throw InternalError("cofactor recursion disagrees");
  return cur;
}

Rat inv_diagonal(unsigned n, unsigned i) {
  if (i < 1 || i > n) throw IndexOutOfRange("i = " + std::to_string(i));
  Rat value = make_rat(Int(i) * Int(n - i + 1), Int(n + 1));
  const AnModel& model = cached_model(n);
  if (model.cartan_inv().at(i - 1, i - 1) != value)
    throw InternalError("closed form disagrees with the matrix inverse");
  return value;
}

bool check_diag_bound(unsigned n) {
  if (n < 8) throw NTooSmall("n = " + std::to_string(n));
  for (unsigned i = 3; i + 2 <= n; ++i)
    if (inv_diagonal(n, i) < 2) return false;
  return true;
}

DualClassNorm frac_norm(unsigned n, long k) {
  const AnModel& model = cached_model(n);
  long modulus = static_cast<long>(n) + 1;
  long kr = ((k % modulus) + modulus) % modulus;
  RatVector v(n);
  for (unsigned i = 1; i <= n; ++i) {
    Int numerator = Int(kr) * Int(i) % Int(modulus);
    v[i - 1] = make_rat(numerator, Int(modulus));
  }
  Rat norm = -gram_pair(RatMatrix(model.cartan()), v, v);
  return {n, k, v, norm};
}

bool mod2_congruence(unsigned n) {
  Rat e_norm = frac_norm(n, 1).norm;
  for (long k = 0; k <= static_cast<long>(n); ++k) {
    Rat diff = frac_norm(n, k).norm - Rat(k * k) * e_norm;
    if (!is_integer(diff) || num(diff) % 2 != 0) return false;
  }
  return true;
}

Rat curve_selfint(unsigned n, const IntVector& beta) {
  if (beta.size() != n) throw LengthMismatch("beta has wrong length");
  for (const Int& b : beta)
    if (b < 0) throw LengthMismatch("beta entries must be nonnegative");
  const AnModel& model = cached_model(n);
  RatVector rb = to_rat(beta);
  return Rat(-2) + gram_pair(model.cartan_inv(), rb, rb);
}

NegativeCurveOptions negative_curve_options(unsigned n) {
  if (n < 8) throw NTooSmall("n = " + std::to_string(n));
  NegativeCurveOptions out{make_rat(-Int(n + 2), Int(n + 1)),
                           make_rat(-4, Int(n + 1))};
  // Cross-checks: the unit-vector values, and exclusion of the middle.
  for (unsigned i : {1u, n}) {
    IntVector e(n);
    e[i - 1] = 1;
    if (curve_selfint(n, e) != out.end_value)
      throw InternalError("end value mismatch");
  }
  for (unsigned i : {2u, n - 1}) {
    IntVector e(n);
    e[i - 1] = 1;
    if (curve_selfint(n, e) != out.near_end_value)
      throw InternalError("near-end value mismatch");
  }
  if (!check_diag_bound(n))
    throw InternalError("middle diagonals below 2; middle cannot be excluded");
  return out;
}

std::vector<AmbiguityRow> ambiguity_scan(unsigned n_max) {
  std::vector<AmbiguityRow> rows;
  for (unsigned n = 1; n <= n_max; ++n) {
    // Canonical multiples k <= (n+1)/2 (k and n+1-k share their norm).
    long top = (static_cast<long>(n) + 1) / 2;
    std::vector<Rat> norms(top + 1);
    for (long k = 1; k <= top; ++k) norms[k] = frac_norm(n, k).norm;
    for (long k = 1; k <= top; ++k) {
      if (norms[k] <= -4 || norms[k] > 0) continue;
      for (long kp = k + 1; kp <= top; ++kp) {
        if (norms[kp] <= -4 || norms[kp] > 0) continue;
        if (norms[k] == norms[kp]) continue;
        Rat diff = norms[k] - norms[kp];
        if (!is_integer(diff) || num(diff) % 2 != 0) continue;
        rows.push_back({n, k, kp, norms[k], norms[kp]});
      }
    }
  }
  return rows;
}

std::string to_string(AnVerdict v) {
  switch (v) {
    case AnVerdict::MoriDream: return "MoriDream";
    case AnVerdict::Undetermined: return "Undetermined";
    case AnVerdict::Inapplicable: return "Inapplicable";
  }
  return "?";
}

AnDecision decide_main_an(unsigned n, bool has_negative_irreducible_curve) {
  if (n == 0) throw NTooSmall("n must be positive");
  if (!has_negative_irreducible_curve)
    return {AnVerdict::Inapplicable, {}};
  if (n != 11 && n != 14 && n != 15) return {AnVerdict::MoriDream, {}};
  std::vector<AmbiguityRow> all = ambiguity_scan(n);
  std::vector<AmbiguityRow> mine;
  for (const auto& row : all)
    if (row.n == n) mine.push_back(row);
  return {AnVerdict::Undetermined, mine};
}

} // namespace k3dream
