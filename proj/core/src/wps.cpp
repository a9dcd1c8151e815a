#include "k3dream/wps.hpp"

#include <algorithm>
#include <cctype>

#include "k3dream/errors.hpp"
#include "k3dream/linalg.hpp"

namespace k3dream {

Rat wps_intersection(const WpsSpec& spec) {
  if (spec.weights.size() != spec.degrees.size() + 1)
    throw DimensionMismatch("need exactly one more weight than degrees");
  Int num = 1, den = 1;
  for (const Int& d : spec.degrees) {
    if (d <= 0) throw DimensionMismatch("degrees must be positive");
    num *= d;
  }
  for (const Int& a : spec.weights) {
    if (a <= 0) throw DimensionMismatch("weights must be positive");
    den *= a;
  }
  return make_rat(num, den);
}

std::string product_key(const std::vector<std::string>& divisors,
                        const std::string& a, const std::string& b) {
  auto ia = std::find(divisors.begin(), divisors.end(), a);
  auto ib = std::find(divisors.begin(), divisors.end(), b);
  if (ia == divisors.end() || ib == divisors.end())
    throw ParseError("unknown divisor in product " + a + "." + b);
  return ia <= ib ? a + "." + b : b + "." + a;
}

namespace {

struct Token {
  enum Kind { Number, Name, Plus, Minus, Equals, Dot, Caret, Star, End } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/'))
        ++j;
      out.push_back({Token::Number, s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Name, s.substr(i, j - i)});
      i = j;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Token::Plus, "+"}); break;
      case '-': out.push_back({Token::Minus, "-"}); break;
      case '=': out.push_back({Token::Equals, "="}); break;
      case '.': out.push_back({Token::Dot, "."}); break;
      case '^': out.push_back({Token::Caret, "^"}); break;
      case '*': out.push_back({Token::Star, "*"}); break;
      default:
        throw ParseError(std::string("unexpected character '") + c +
                         "' in relation");
    }
    ++i;
  }
  out.push_back({Token::End, ""});
  return out;
}

// Linear combination either of divisors (degree 1) or of pairings
// (degree 2, canonical keys).
struct Combo {
  int degree = 0; // 0 until the first term fixes it
  std::map<std::string, Rat> coeffs;
};

class RelationParser {
public:
  RelationParser(const std::string& text,
                 const std::vector<std::string>& divisors)
      : tokens_(tokenize(text)), divisors_(divisors), text_(text) {}

  std::pair<Combo, Combo> parse_equation() {
    Combo lhs = parse_expr();
    expect(Token::Equals);
    Combo rhs = parse_expr();
    if (tokens_[pos_].kind != Token::End)
      throw ParseError("trailing input in relation '" + text_ + "'");
    if (lhs.degree != rhs.degree)
      throw ParseError("mixed degrees in relation '" + text_ + "'");
    return {lhs, rhs};
  }

private:
  void expect(Token::Kind k) {
    if (tokens_[pos_].kind != k)
      throw ParseError("malformed relation '" + text_ + "'");
    ++pos_;
  }

  Combo parse_expr() {
    Combo combo;
    Rat sign = 1;
    if (tokens_[pos_].kind == Token::Minus) {
      sign = -1;
      ++pos_;
    }
    parse_term(combo, sign);
    while (tokens_[pos_].kind == Token::Plus ||
           tokens_[pos_].kind == Token::Minus) {
      Rat s = tokens_[pos_].kind == Token::Plus ? 1 : -1;
      ++pos_;
      parse_term(combo, s);
    }
    return combo;
  }

  void parse_term(Combo& combo, const Rat& sign) {
    Rat coef = sign;
    if (tokens_[pos_].kind == Token::Number) {
      coef *= parse_rat(tokens_[pos_].text);
      ++pos_;
      if (tokens_[pos_].kind == Token::Star) ++pos_;
    }
    if (tokens_[pos_].kind != Token::Name)
      throw ParseError("expected a divisor name in '" + text_ + "'");
    std::string first = tokens_[pos_].text;
    ++pos_;
    int degree = 1;
    std::string key = first;
    if (tokens_[pos_].kind == Token::Dot) {
      ++pos_;
      if (tokens_[pos_].kind != Token::Name)
        throw ParseError("expected a divisor after '.' in '" + text_ + "'");
      key = product_key(divisors_, first, tokens_[pos_].text);
      ++pos_;
      degree = 2;
    } else if (tokens_[pos_].kind == Token::Caret) {
      ++pos_;
      if (tokens_[pos_].kind != Token::Number || tokens_[pos_].text != "2")
        throw ParseError("only squares are supported in '" + text_ + "'");
      ++pos_;
      key = product_key(divisors_, first, first);
      degree = 2;
    } else {
      if (std::find(divisors_.begin(), divisors_.end(), first) ==
          divisors_.end())
        throw ParseError("unknown divisor '" + first + "'");
    }
    if (combo.degree == 0) combo.degree = degree;
    if (combo.degree != degree)
      throw ParseError("mixed degrees in relation '" + text_ + "'");
    combo.coeffs[key] += coef;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& divisors_;
  std::string text_;
};

} // namespace

std::map<std::string, Rat> ledger_solve(const LedgerProblem& problem) {
  // Every pairing of named divisors is a potential unknown.
  std::vector<std::string> products;
  for (std::size_t i = 0; i < problem.divisors.size(); ++i)
    for (std::size_t j = i; j < problem.divisors.size(); ++j)
      products.push_back(problem.divisors[i] + "." + problem.divisors[j]);

  for (const auto& [key, value] : problem.knowns) {
    (void)value;
    if (std::find(products.begin(), products.end(), key) == products.end())
      throw ParseError("known '" + key + "' is not a canonical pairing");
  }

  std::vector<std::string> unknowns;
  for (const auto& p : products)
    if (!problem.knowns.count(p)) unknowns.push_back(p);

  // Degree-two rows used directly; degree-one identities paired with every
  // named divisor.
  std::vector<std::map<std::string, Rat>> rows; // pairing key -> coefficient
  for (const auto& text : problem.relations) {
    auto [lhs, rhs] = RelationParser(text, problem.divisors).parse_equation();
    if (lhs.degree == 2) {
      std::map<std::string, Rat> row = lhs.coeffs;
      for (const auto& [key, coef] : rhs.coeffs) row[key] -= coef;
      rows.push_back(row);
    } else {
      for (const auto& divisor : problem.divisors) {
        std::map<std::string, Rat> row;
        for (const auto& [name, coef] : lhs.coeffs)
          row[product_key(problem.divisors, name, divisor)] += coef;
        for (const auto& [name, coef] : rhs.coeffs)
          row[product_key(problem.divisors, name, divisor)] -= coef;
        rows.push_back(row);
      }
    }
  }

  if (rows.size() < unknowns.size())
    throw Underdetermined("ledger has " + std::to_string(rows.size()) +
                          " relations for " + std::to_string(unknowns.size()) +
                          " unknown pairings");

  // Each row reads sum coef * pairing = 0; knowns move to the right side.
  RatMatrix a(rows.size(), unknowns.size());
  RatVector b(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [key, coef] : rows[r]) {
      auto known = problem.knowns.find(key);
      if (known != problem.knowns.end()) {
        b[r] -= coef * known->second;
      } else {
        auto it = std::find(unknowns.begin(), unknowns.end(), key);
        a.at(r, it - unknowns.begin()) += coef;
      }
    }
  }

  RatVector x;
  try {
    x = solve_linear(a, b);
  } catch (const SingularSystem& e) {
    throw Underdetermined(e.what());
  } catch (const InconsistentSystem& e) {
    throw Inconsistent(e.what());
  }

  std::map<std::string, Rat> result = problem.knowns;
  for (std::size_t i = 0; i < unknowns.size(); ++i) result[unknowns[i]] = x[i];

  // Re-verify every relation through the solved table.
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rat residual;
    for (const auto& [key, coef] : rows[r]) residual += coef * result.at(key);
    if (residual != 0) throw Inconsistent("relation residual is nonzero");
  }
  return result;
}

bool paut_check(long dim_linear_system, long dim_aut, long rk_exceptional) {
  if (dim_linear_system < 0 || dim_aut < 0 || rk_exceptional < 0)
    throw DimensionMismatch("dimensions must be nonnegative");
  return dim_linear_system - dim_aut == 18 - rk_exceptional;
}

} // namespace k3dream
