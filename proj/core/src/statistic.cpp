#include "permstat/statistic.hpp"

#include <algorithm>

#include "permstat/constrained_sum.hpp"
#include "permstat/errors.hpp"

namespace permstat {

namespace {

std::string tuple_string(std::span<const int> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + ")";
}

std::string set_string(std::span<const int> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

Rational evaluate_translate(const PartialPermutation& packed, const std::vector<int>& constraints,
                            const Polynomial& weight, std::span<const int> one_line) {
  const int n = static_cast<int>(one_line.size());
  // Packed, so the support is [m] with m the largest entry.
  int m = 0;
  for (int x : packed.positions()) m = std::max(m, x);
  for (int x : packed.values()) m = std::max(m, x);
  if (m == 0) return weight.constant_term();
  if (m > n) return 0;

  std::vector<bool> forced(m + 1, false);
  for (int c : constraints) forced[c + 1] = true;
  // Edges checked as soon as both endpoints are chosen.
  std::vector<std::vector<std::pair<int, int>>> ready(m + 1);
  for (int t = 0; t < packed.size(); ++t) {
    int u = packed.positions()[t], v = packed.values()[t];
    ready[std::max(u, v)].emplace_back(u, v);
  }

  std::vector<int> chosen(m + 1, 0);
  std::vector<Rational> point(m);
  Rational total = 0;
  auto recurse = [&](auto&& self, int t) -> void {
    if (t > m) {
      total += weight.evaluate(point);
      return;
    }
    int lo = chosen[t - 1] + 1;
    int hi = forced[t] ? lo : n - (m - t);
    for (int l = lo; l <= hi && l <= n; ++l) {
      chosen[t] = l;
      bool ok = true;
      for (auto [u, v] : ready[t]) {
        if (one_line[chosen[u] - 1] != chosen[v]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      point[t - 1] = l;
      self(self, t + 1);
    }
  };
  recurse(recurse, 1);
  return total;
}

}  // namespace

ConstrainedTranslate::ConstrainedTranslate(PartialPermutation packed, std::vector<int> constraints,
                                           Polynomial weight)
    : packed_(std::move(packed)), constraints_(std::move(constraints)), weight_(std::move(weight)) {
  if (!packed_.is_packed()) {
    throw MalformedInput("translate partial permutation " + packed_.to_string() +
                         " does not have support [m]");
  }
  std::sort(constraints_.begin(), constraints_.end());
  validate_constraints(support_size(), constraints_);
  if (weight_.is_zero()) throw MalformedInput("translate weight is zero");
  if (weight_.num_vars() > support_size()) {
    throw MalformedInput("translate weight mentions x" + std::to_string(weight_.num_vars()) +
                         " but the support has size " + std::to_string(support_size()));
  }
}

Rational ConstrainedTranslate::evaluate(std::span<const int> one_line) const {
  return evaluate_translate(packed_, constraints_, weight_, one_line);
}

std::string ConstrainedTranslate::to_string() const {
  return "T(U=" + tuple_string(packed_.positions()) + ";V=" + tuple_string(packed_.values()) +
         ";C=" + set_string(constraints_) + ";f=" + weight_.to_string(VariableNaming::positions()) +
         ")";
}

RegularStatistic::RegularStatistic(const ConstrainedTranslate& t) { add(t); }

RegularStatistic RegularStatistic::constant(const Rational& c) {
  RegularStatistic out;
  if (c != 0) out.add(ConstrainedTranslate(PartialPermutation(), {}, Polynomial(c)));
  return out;
}

void RegularStatistic::add(const ConstrainedTranslate& t, const Rational& coefficient) {
  if (coefficient == 0) return;
  add_term(Key{t.packed(), t.constraints()}, t.weight() * coefficient);
}

void RegularStatistic::add_term(const Key& key, const Polynomial& weight) {
  auto [it, inserted] = terms_.try_emplace(key);
  it->second += weight;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<ConstrainedTranslate> RegularStatistic::translates() const {
  std::vector<ConstrainedTranslate> out;
  out.reserve(terms_.size());
  for (const auto& [key, weight] : terms_) out.emplace_back(key.first, key.second, weight);
  return out;
}

int RegularStatistic::size() const {
  int s = 0;
  for (const auto& [key, weight] : terms_) s = std::max(s, key.first.size());
  return s;
}

int RegularStatistic::shift() const {
  int s = 0;
  for (const auto& [key, weight] : terms_) s = std::max(s, static_cast<int>(key.second.size()));
  return s;
}

int RegularStatistic::power() const {
  int p = 0;
  for (const auto& [key, weight] : terms_) {
    p = std::max(p, key.first.size() + weight.total_degree() - static_cast<int>(key.second.size()));
  }
  return p;
}

Rational RegularStatistic::evaluate(std::span<const int> one_line) const {
  Rational total = 0;
  for (const auto& [key, weight] : terms_) {
    total += evaluate_translate(key.first, key.second, weight, one_line);
  }
  return total;
}

RegularStatistic& RegularStatistic::operator+=(const RegularStatistic& other) {
  for (const auto& [key, weight] : other.terms_) add_term(key, weight);
  return *this;
}

RegularStatistic& RegularStatistic::operator-=(const RegularStatistic& other) {
  for (const auto& [key, weight] : other.terms_) add_term(key, -weight);
  return *this;
}

RegularStatistic& RegularStatistic::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, weight] : terms_) weight *= scalar;
  return *this;
}

RegularStatistic operator*(const RegularStatistic& a, const RegularStatistic& b) {
  RegularStatistic out;
  auto ta = a.translates(), tb = b.translates();
  for (const auto& x : ta) {
    for (const auto& y : tb) out += product(x, y);
  }
  return out;
}

RegularStatistic RegularStatistic::pow(int d) const {
  if (d < 0) throw DomainError("negative power of a statistic");
  RegularStatistic result = constant(1);
  for (int i = 0; i < d; ++i) result = result * *this;
  return result;
}

std::string RegularStatistic::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : translates()) {
    if (!out.empty()) out += "\n+ ";
    out += t.to_string();
  }
  return out;
}

namespace {

// Composes the injection into [r] with a translate: edges, constraints and
// the renamed weight. Returns false if a constraint is broken by the overlay.
bool place(const ConstrainedTranslate& t, const std::vector<int>& into, std::map<int, int>& succ,
           std::map<int, int>& pred, std::vector<int>& constraints, Polynomial& weight) {
  for (int c : t.constraints()) {
    int lo = into[c - 1], hi = into[c];
    if (hi != lo + 1) return false;
    constraints.push_back(lo);
  }
  for (int e = 0; e < t.size(); ++e) {
    int u = into[t.packed().positions()[e] - 1];
    int v = into[t.packed().values()[e] - 1];
    auto [s, fresh_s] = succ.emplace(u, v);
    if (!fresh_s && s->second != v) return false;
    auto [p, fresh_p] = pred.emplace(v, u);
    if (!fresh_p && p->second != u) return false;
  }
  std::vector<int> mapping(into.size());
  for (std::size_t i = 0; i < into.size(); ++i) mapping[i] = into[i] - 1;
  weight *= t.weight().rename(mapping);
  return true;
}

}  // namespace

RegularStatistic product(const ConstrainedTranslate& a, const ConstrainedTranslate& b) {
  const int m = a.support_size(), l = b.support_size();
  RegularStatistic out;
  std::vector<int> into_a, into_b;
  // forced[i]: element i + 1 must land right after element i.
  auto forced_of = [](const ConstrainedTranslate& t) {
    std::vector<bool> forced(t.support_size() + 1, false);
    for (int c : t.constraints()) forced[c] = true;
    return forced;
  };
  const std::vector<bool> forced_a = forced_of(a), forced_b = forced_of(b);
  // Merge the two ordered supports: each slot of [r] takes the next element of
  // a, of b, or of both. Constraints are checked as slots are filled.
  auto fits = [](const std::vector<bool>& forced, const std::vector<int>& into, int i, int r) {
    return i == 0 || !forced[i] || into.back() == r;
  };
  auto recurse = [&](auto&& self, int i, int j, int r) -> void {
    if (i == m && j == l) {
      std::map<int, int> succ, pred;
      std::vector<int> constraints;
      Polynomial weight(1);
      if (!place(a, into_a, succ, pred, constraints, weight)) return;
      if (!place(b, into_b, succ, pred, constraints, weight)) return;
      std::sort(constraints.begin(), constraints.end());
      constraints.erase(std::unique(constraints.begin(), constraints.end()), constraints.end());
      std::vector<int> u, v;
      for (const auto& [from, to] : succ) {
        u.push_back(from);
        v.push_back(to);
      }
      out.add(ConstrainedTranslate(PartialPermutation(std::move(u), std::move(v)),
                                   std::move(constraints), std::move(weight)));
      return;
    }
    const bool fits_a = i < m && fits(forced_a, into_a, i, r);
    const bool fits_b = j < l && fits(forced_b, into_b, j, r);
    if (fits_a) {
      into_a.push_back(r + 1);
      self(self, i + 1, j, r + 1);
      into_a.pop_back();
    }
    if (fits_b) {
      into_b.push_back(r + 1);
      self(self, i, j + 1, r + 1);
      into_b.pop_back();
    }
    if (fits_a && fits_b) {
      into_a.push_back(r + 1);
      into_b.push_back(r + 1);
      self(self, i + 1, j + 1, r + 1);
      into_a.pop_back();
      into_b.pop_back();
    }
  };
  recurse(recurse, 0, 0, 0);
  return out;
}

}  // namespace permstat
