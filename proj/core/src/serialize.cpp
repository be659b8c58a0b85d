#include "permstat/serialize.hpp"

#include <nlohmann/json.hpp>

#include "permstat/errors.hpp"

namespace permstat {

std::string polynomial_to_json(const Polynomial& p, const VariableNaming& naming) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : ordered_terms(p, naming)) {
    nlohmann::json exps = nlohmann::json::object();
    for (int i = 0; i < m.num_vars(); ++i) {
      if (m.exponent(i) != 0) exps[naming.name(i)] = m.exponent(i);
    }
    terms.push_back({{"coef", to_string(c)}, {"exps", exps}});
  }
  return nlohmann::json{{"terms", terms}}.dump();
}

namespace {

int variable_index(const std::string& key) {
  if (key == "n") return 0;
  if (key == "alpha") return 0;
  if (key == "beta") return 1;
  if (key.size() >= 2 && (key[0] == 'm' || key[0] == 'x' || key[0] == 'y')) {
    std::size_t used = 0;
    int i = -1;
    try {
      i = std::stoi(key.substr(1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == key.size() - 1 && i >= 1) return key[0] == 'x' ? i - 1 : i;
  }
  throw MalformedInput("unknown variable \"" + key + "\" in serialized polynomial");
}

}  // namespace

Polynomial polynomial_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("serialized polynomial: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw MalformedInput("serialized polynomial needs a \"terms\" array");
  }
  Polynomial out;
  for (const auto& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("coef") || !term["coef"].is_string()) {
      throw MalformedInput("serialized term needs a string \"coef\"");
    }
    Rational coef = parse_rational(term["coef"].get<std::string>());
    std::vector<int> exps;
    if (term.contains("exps")) {
      if (!term["exps"].is_object()) throw MalformedInput("serialized \"exps\" must be an object");
      for (const auto& [key, value] : term["exps"].items()) {
        if (!value.is_number_integer() || value.get<int>() < 0) {
          throw MalformedInput("exponent of " + key + " must be a nonnegative integer");
        }
        int i = variable_index(key);
        if (static_cast<int>(exps.size()) <= i) exps.resize(i + 1, 0);
        exps[i] += value.get<int>();
      }
    }
    out += Polynomial::monomial(Monomial(std::move(exps)), coef);
  }
  return out;
}

namespace {

// Positive rational c with p / c having coprime integer coefficients.
Rational content(const Polynomial& p) {
  Integer num = 0, den = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  if (num == 0) return 1;
  return ratio(num, den);
}

}  // namespace

std::string denominator_to_string(const RationalExpectation& e) {
  auto falling = e.denom_falling();
  if (falling.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < falling.size(); ++i) {
    if (i) out += "*";
    out += "(n)_" + std::to_string(falling[i]);
  }
  return out;
}

std::string pretty(const Polynomial& p, const VariableNaming& naming) {
  if (p.is_zero()) return "0";
  Rational c = content(p);
  Polynomial primitive = p * Rational(1 / c);
  bool compound = primitive.num_terms() > 1;
  std::string body = primitive.to_string(naming);
  std::string scale = to_string(Rational(c.get_num()));
  std::string out;
  if (primitive == Polynomial(1)) {
    out = scale;
  } else if (primitive == Polynomial(-1)) {
    out = "-" + scale;
  } else if (c.get_num() == 1) {
    out = body;
  } else {
    out = scale + "*" + (compound ? "(" + body + ")" : body);
  }
  if (c.get_den() != 1) {
    if (compound && c.get_num() == 1) out = "(" + out + ")";
    out += " / " + to_string(Rational(c.get_den()));
  }
  return out;
}

std::string pretty(const RationalExpectation& e) {
  const Polynomial& p = e.numerator();
  if (p.is_zero()) return "0";
  auto falling = e.denom_falling();
  if (falling.empty()) return pretty(p);

  Rational c = content(p);
  Polynomial primitive = p * Rational(1 / c);
  std::string numerator;
  if (primitive == Polynomial(1) || primitive == Polynomial(-1)) {
    numerator = (primitive == Polynomial(-1) ? "-" : "") + to_string(Rational(c.get_num()));
  } else {
    std::string body = primitive.to_string();
    if (primitive.num_terms() > 1) body = "(" + body + ")";
    numerator = c.get_num() == 1 ? body : to_string(Rational(c.get_num())) + "*" + body;
  }
  std::vector<std::string> parts;
  if (c.get_den() != 1) parts.push_back(to_string(Rational(c.get_den())));
  for (int a : falling) parts.push_back("(n)_" + std::to_string(a));
  std::string denominator;
  for (std::size_t i = 0; i < parts.size(); ++i) denominator += (i ? " * " : "") + parts[i];
  if (parts.size() > 1) denominator = "(" + denominator + ")";
  return numerator + " / " + denominator;
}

}  // namespace permstat
