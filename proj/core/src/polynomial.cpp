#include "permstat/polynomial.hpp"

#include <algorithm>

#include "permstat/errors.hpp"

namespace permstat {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw DomainError("negative exponent in monomial");
  }
  trim();
}

Monomial Monomial::variable(int index, int power) {
  if (index < 0) throw DomainError("negative variable index");
  std::vector<int> exps(index + 1, 0);
  exps[index] = power;
  return Monomial(std::move(exps));
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

int Monomial::total_degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

int Monomial::weighted_degree(const std::function<int(int)>& weight) const {
  int d = 0;
  for (int i = 0; i < num_vars(); ++i) d += weight(i) * exps_[i];
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<int> exps(std::max(a.num_vars(), b.num_vars()), 0);
  for (int i = 0; i < a.num_vars(); ++i) exps[i] += a.exps_[i];
  for (int i = 0; i < b.num_vars(); ++i) exps[i] += b.exps_[i];
  return Monomial(std::move(exps));
}

const VariableNaming& VariableNaming::class_ring() {
  static const VariableNaming naming{
      [](int i) { return i == 0 ? std::string("n") : "m" + std::to_string(i); },
      [](int i) { return i == 0 ? 1 : i; }};
  return naming;
}

const VariableNaming& VariableNaming::positions() {
  static const VariableNaming naming{[](int i) { return "x" + std::to_string(i + 1); },
                                     [](int) { return 1; }};
  return naming;
}

const VariableNaming& VariableNaming::scaled() {
  static const VariableNaming naming{[](int i) { return "y" + std::to_string(i); },
                                     [](int i) { return i; }};
  return naming;
}

const VariableNaming& VariableNaming::limits() {
  static const VariableNaming naming{
      [](int i) {
        if (i == 0) return std::string("alpha");
        if (i == 1) return std::string("beta");
        return "z" + std::to_string(i);
      },
      [](int) { return 1; }};
  return naming;
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

Polynomial Polynomial::variable(int index, int power) {
  return monomial(Monomial::variable(index, power), 1);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& coefficient) {
  Polynomial p;
  p.add_term(m, coefficient);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial()); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::num_vars() const {
  int v = 0;
  for (const auto& [m, c] : terms_) v = std::max(v, m.num_vars());
  return v;
}

int Polynomial::graded_degree() const {
  return weighted_degree(VariableNaming::class_ring().weight);
}

int Polynomial::total_degree() const {
  if (is_zero()) return kZeroDegree;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

int Polynomial::degree_in(int var) const {
  if (is_zero()) return kZeroDegree;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
  return d;
}

int Polynomial::weighted_degree(const std::function<int(int)>& weight) const {
  if (is_zero()) return kZeroDegree;
  int d = INT_MIN;
  for (const auto& [m, c] : terms_) d = std::max(d, m.weighted_degree(weight));
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative polynomial power");
  Polynomial result(1), base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < m.num_vars() && term != 0; ++i) {
      int e = m.exponent(i);
      if (e == 0) continue;
      if (i >= static_cast<int>(values.size())) {
        term = 0;
        break;
      }
      Rational power = 1;
      for (int k = 0; k < e; ++k) power *= values[i];
      term *= power;
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::substitute(int var, const Polynomial& replacement) const {
  Polynomial out;
  std::map<int, Polynomial> powers;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(var);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    std::vector<int> exps = m.exponents();
    exps[var] = 0;
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, replacement.pow(e)).first;
    out += monomial(Monomial(std::move(exps)), c) * it->second;
  }
  return out;
}

Polynomial Polynomial::rename(std::span<const int> mapping) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial renamed;
    for (int i = 0; i < m.num_vars(); ++i) {
      if (m.exponent(i) == 0) continue;
      if (i >= static_cast<int>(mapping.size())) throw DomainError("rename: variable without target");
      renamed = renamed * Monomial::variable(mapping[i], m.exponent(i));
    }
    out.add_term(renamed, c);
  }
  return out;
}

Polynomial Polynomial::coefficient_of(int var, int power) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(var) != power) continue;
    std::vector<int> exps = m.exponents();
    if (var < static_cast<int>(exps.size())) exps[var] = 0;
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

Polynomial Polynomial::homogeneous_part(int degree, const std::function<int(int)>& weight) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.weighted_degree(weight) == degree) out.add_term(m, c);
  }
  return out;
}

bool Polynomial::divide_by_linear(int var, const Rational& root, Polynomial& quotient) const {
  if (is_zero()) {
    quotient = Polynomial();
    return true;
  }
  int d = degree_in(var);
  if (d == 0) return false;
  // Synthetic division with polynomial coefficients in the other variables.
  std::vector<Polynomial> coeffs(d + 1);
  for (int k = 0; k <= d; ++k) coeffs[k] = coefficient_of(var, k);
  std::vector<Polynomial> q(d);
  q[d - 1] = coeffs[d];
  for (int k = d - 1; k >= 1; --k) q[k - 1] = coeffs[k] + q[k] * root;
  Polynomial remainder = coeffs[0] + q[0] * root;
  if (!remainder.is_zero()) return false;
  Polynomial out;
  for (int k = 0; k < d; ++k) out += q[k] * variable(var, k);
  quotient = std::move(out);
  return true;
}

std::vector<std::pair<Monomial, Rational>> ordered_terms(const Polynomial& p,
                                                         const VariableNaming& naming) {
  std::vector<std::pair<Monomial, Rational>> out(p.terms().begin(), p.terms().end());
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    int da = a.first.weighted_degree(naming.weight);
    int db = b.first.weighted_degree(naming.weight);
    if (da != db) return da < db;
    // Exponents descending, compared from the first variable.
    int nv = std::max(a.first.num_vars(), b.first.num_vars());
    for (int i = 0; i < nv; ++i) {
      if (a.first.exponent(i) != b.first.exponent(i)) return a.first.exponent(i) > b.first.exponent(i);
    }
    return false;
  });
  return out;
}

std::string Polynomial::to_string(const VariableNaming& naming) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ordered_terms(*this, naming)) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (int i = 0; i < m.num_vars(); ++i) {
      int e = m.exponent(i);
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += naming.name(i);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += permstat::to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += permstat::to_string(magnitude) + "*" + factors;
    }
  }
  return out;
}

Polynomial falling_factorial_poly(int a, int offset) {
  Polynomial out(1);
  for (int i = 0; i < a; ++i) out *= Polynomial::variable(0) - Polynomial(offset + i);
  return out;
}

Polynomial binomial_poly(int offset, int k) {
  return falling_factorial_poly(k, offset) * ratio(1, factorial(k));
}

Polynomial exact_divide_univariate(const Polynomial& numerator, const Polynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (divisor.num_vars() > 1 || numerator.num_vars() > 1) {
    throw DomainError("exact_divide_univariate: multivariate operand");
  }
  int dd = divisor.degree_in(0);
  Rational lead = divisor.coefficient(Monomial::variable(0, dd));
  Polynomial remainder = numerator, quotient;
  while (!remainder.is_zero() && remainder.degree_in(0) >= dd) {
    int rd = remainder.degree_in(0);
    Rational c = remainder.coefficient(Monomial::variable(0, rd)) / lead;
    Polynomial step = Polynomial::monomial(Monomial::variable(0, rd - dd), c);
    quotient += step;
    remainder -= step * divisor;
  }
  if (!remainder.is_zero()) {
    throw ConsistencyError("inexact polynomial division: remainder " + remainder.to_string());
  }
  return quotient;
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw SizeMismatch("interpolate: xs and ys differ in length");
  // Newton divided differences.
  std::size_t n = xs.size();
  std::vector<Rational> coef(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      if (xs[i] == xs[i - j]) throw DomainError("interpolate: repeated node");
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    }
  }
  Polynomial out;
  for (std::size_t k = n; k-- > 0;) {
    out *= Polynomial::variable(0) - Polynomial(xs[k]);
    out += Polynomial(coef[k]);
  }
  return out;
}

}  // namespace permstat
