#include "permstat/rational.hpp"

#include <string>

#include "permstat/errors.hpp"

namespace permstat {

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw MalformedInput("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw MalformedInput("invalid rational literal \"" + s + "\"");
  if (r.get_den() == 0) throw MalformedInput("zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Integer factorial(int n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer binomial(long long n, long long k) {
  if (k < 0) return 0;
  Integer result;
  if (n >= 0) {
    if (k > n) return 0;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
  }
  Integer big_n = static_cast<long>(n);
  mpz_bin_ui(result.get_mpz_t(), big_n.get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

Rational falling_factorial(const Rational& x, int a) {
  Rational result = 1;
  for (int i = 0; i < a; ++i) result *= x - i;
  return result;
}

}  // namespace permstat
