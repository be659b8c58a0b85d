#include "permstat/expectation.hpp"

#include <algorithm>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

Polynomial linear_factor(int i) { return Polynomial::n() - Polynomial(i); }

}  // namespace

RationalExpectation::RationalExpectation(Polynomial numerator) : numerator_(std::move(numerator)) {}

RationalExpectation RationalExpectation::over_falling(Polynomial numerator, int a) {
  if (a < 0) throw DomainError("negative falling-factorial length");
  RationalExpectation e(std::move(numerator));
  e.factor_exps_.assign(a, 1);
  e.normalize();
  return e;
}

std::vector<int> RationalExpectation::denom_falling() const {
  std::vector<int> out;
  int top = factor_exps_.empty() ? 0 : factor_exps_.front();
  for (int j = 1; j <= top; ++j) {
    int len = 0;
    while (len < static_cast<int>(factor_exps_.size()) && factor_exps_[len] >= j) ++len;
    out.push_back(len);
  }
  return out;
}

int RationalExpectation::factor_exponent(int i) const {
  return i >= 0 && i < static_cast<int>(factor_exps_.size()) ? factor_exps_[i] : 0;
}

int RationalExpectation::denominator_degree() const {
  int d = 0;
  for (int e : factor_exps_) d += e;
  return d;
}

Polynomial RationalExpectation::denominator() const {
  Polynomial out(1);
  for (std::size_t i = 0; i < factor_exps_.size(); ++i) {
    out *= linear_factor(static_cast<int>(i)).pow(factor_exps_[i]);
  }
  return out;
}

void RationalExpectation::normalize() {
  if (numerator_.is_zero()) {
    factor_exps_.clear();
    return;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < factor_exps_.size(); ++i) {
      int next = i + 1 < factor_exps_.size() ? factor_exps_[i + 1] : 0;
      if (factor_exps_[i] <= next) continue;
      Polynomial quotient;
      if (numerator_.divide_by_linear(0, Rational(static_cast<long>(i)), quotient)) {
        numerator_ = std::move(quotient);
        --factor_exps_[i];
        changed = true;
      }
    }
  }
  while (!factor_exps_.empty() && factor_exps_.back() == 0) factor_exps_.pop_back();
}

RationalExpectation& RationalExpectation::operator+=(const RationalExpectation& other) {
  std::size_t len = std::max(factor_exps_.size(), other.factor_exps_.size());
  std::vector<int> common(len, 0);
  Polynomial lhs = numerator_, rhs = other.numerator_;
  for (std::size_t i = 0; i < len; ++i) {
    int a = factor_exponent(static_cast<int>(i)), b = other.factor_exponent(static_cast<int>(i));
    common[i] = std::max(a, b);
    if (common[i] > a) lhs *= linear_factor(static_cast<int>(i)).pow(common[i] - a);
    if (common[i] > b) rhs *= linear_factor(static_cast<int>(i)).pow(common[i] - b);
  }
  numerator_ = lhs + rhs;
  factor_exps_ = std::move(common);
  normalize();
  return *this;
}

RationalExpectation& RationalExpectation::operator-=(const RationalExpectation& other) {
  RationalExpectation negated = other;
  negated.numerator_ = -negated.numerator_;
  return *this += negated;
}

RationalExpectation& RationalExpectation::operator*=(const RationalExpectation& other) {
  numerator_ *= other.numerator_;
  std::size_t len = std::max(factor_exps_.size(), other.factor_exps_.size());
  factor_exps_.resize(len, 0);
  for (std::size_t i = 0; i < len; ++i) factor_exps_[i] += other.factor_exponent(static_cast<int>(i));
  normalize();
  return *this;
}

RationalExpectation RationalExpectation::times_poly(const Polynomial& factor) const {
  RationalExpectation out = *this;
  out.numerator_ *= factor;
  out.normalize();
  return out;
}

Rational RationalExpectation::evaluate_at(const Partition& lambda) const {
  int n = partition_size(lambda);
  for (std::size_t i = 0; i < factor_exps_.size(); ++i) {
    if (factor_exps_[i] > 0 && static_cast<int>(i) == n) {
      throw DegenerateEvaluation("denominator vanishes at n = " + std::to_string(n));
    }
  }
  auto coords = class_coordinates(lambda, numerator_.num_vars());
  Rational value = numerator_.evaluate(coords);
  for (std::size_t i = 0; i < factor_exps_.size(); ++i) {
    for (int k = 0; k < factor_exps_[i]; ++k) value /= Rational(n - static_cast<int>(i));
  }
  return value;
}

Polynomial RationalExpectation::cleared_to_falling(int a) const {
  if (static_cast<int>(factor_exps_.size()) > a) {
    throw ConsistencyError("denominator " + denominator().to_string() + " does not divide (n)_" +
                           std::to_string(a));
  }
  Polynomial out = numerator_;
  for (int i = 0; i < a; ++i) {
    int e = factor_exponent(i);
    if (e > 1) {
      throw ConsistencyError("denominator " + denominator().to_string() + " does not divide (n)_" +
                             std::to_string(a));
    }
    if (e == 0) out *= linear_factor(i);
  }
  return out;
}

}  // namespace permstat
