#ifndef K3DREAM_NUMBERS_HPP
#define K3DREAM_NUMBERS_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace k3dream {

// All arithmetic in this library is exact: arbitrary-precision integers and
// canonical rationals (reduced, positive denominator). No floating point.
using Int = mpz_class;
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

// Nearest integer, ties rounded up. Used by basis size reduction.
Int round_nearest(const Rat& q);

bool is_perfect_square(const Int& n);

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

// floor(sqrt(q)) for rational q >= 0.
Int floor_sqrt_rat(const Rat& q);

// true iff x <= sqrt(bound), decided exactly (bound >= 0).
bool leq_sqrt(const Rat& x, const Rat& bound);

// Parses "p", "-p" or "p/q" into an exact rational.
Rat parse_rat(const std::string& text);
std::optional<Int> parse_int(const std::string& text);

// "p" when the denominator is one, otherwise "p/q".
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

} // namespace k3dream

#endif
