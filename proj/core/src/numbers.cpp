#include "k3dream/numbers.hpp"

#include <cctype>

#include "k3dream/errors.hpp"

namespace k3dream {

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int round_nearest(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int isqrt(const Int& n) {
  if (n < 0) throw InternalError("isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int floor_sqrt_rat(const Rat& q) {
  if (q < 0) throw InternalError("floor_sqrt_rat of negative rational");
  // floor(sqrt(p/q)) = floor(isqrt(p*q)/q), both computed in integers.
  Int pq = num(q) * den(q);
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), isqrt(pq).get_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool leq_sqrt(const Rat& x, const Rat& bound) {
  if (x <= 0) return true;
  return x * x <= bound;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
          c == '+' || c == '/'))
      throw ParseError("invalid character in rational literal '" + text + "'");
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw ParseError("cannot parse rational '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::optional<Int> parse_int(const std::string& text) {
  if (text.empty()) return std::nullopt;
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+'))
      return std::nullopt;
  Int n;
  if (mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0) return std::nullopt;
  return n;
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& n) { return n.get_str(); }

} // namespace k3dream
