#include "permstat/parser.hpp"

#include <array>
#include <cctype>
#include <string>

#include "permstat/errors.hpp"
#include "permstat/patterns.hpp"

namespace permstat {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  // Whitespace and "#" comments running to the end of the line.
  void skip_space() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }
  void expect(std::string_view word) {
    if (!accept(word)) fail("\"" + std::string(word) + "\"");
  }
  [[noreturn]] void fail(const std::string& expected) {
    skip_space();
    throw ParseError(pos_, expected, std::string(text_));
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("integer");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("integer below 10^9");
    }
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  // digits ("/" digits)?
  Rational rational() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("number");
    std::string literal(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      std::size_t slash = pos_++;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      literal += std::string(text_.substr(slash, pos_ - slash));
      if (Integer(std::string(text_.substr(slash + 1, pos_ - slash - 1))) == 0) {
        pos_ = slash + 1;
        fail("nonzero denominator");
      }
    }
    return parse_rational(literal);
  }

  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Polynomial grammar over x1, x2, ...
Polynomial poly_expr(Cursor& in);

Polynomial poly_primary(Cursor& in) {
  if (in.accept('(')) {
    Polynomial inner = poly_expr(in);
    in.expect(')');
    return inner;
  }
  if (in.at_digit()) return Polynomial(in.rational());
  if (in.accept('x')) {
    if (!in.at_digit()) in.fail("variable index after 'x'");
    std::size_t at = in.position();
    int index = in.integer();
    if (index < 1) {
      in.rewind(at);
      in.fail("variable index >= 1");
    }
    return Polynomial::variable(index - 1);
  }
  in.fail("number, variable x<i> or '('");
}

Polynomial poly_factor(Cursor& in) {
  if (in.accept('-')) return -poly_factor(in);
  Polynomial base = poly_primary(in);
  if (in.accept('^')) return base.pow(in.integer());
  return base;
}

Polynomial poly_term(Cursor& in) {
  Polynomial value = poly_factor(in);
  while (in.accept('*')) value *= poly_factor(in);
  return value;
}

Polynomial poly_expr(Cursor& in) {
  Polynomial value = poly_term(in);
  while (true) {
    if (in.accept('+')) value += poly_term(in);
    else if (in.accept('-')) value -= poly_term(in);
    else return value;
  }
}

// "(" int ("," int)* ")" or "()"
std::vector<int> int_tuple(Cursor& in) {
  std::vector<int> out;
  in.expect('(');
  if (in.accept(')')) return out;
  do {
    out.push_back(in.integer());
  } while (in.accept(','));
  in.expect(')');
  return out;
}

// "{" int ("," int)* "}" or "{}"
std::vector<int> int_set(Cursor& in) {
  std::vector<int> out;
  in.expect('{');
  if (in.accept('}')) return out;
  do {
    out.push_back(in.integer());
  } while (in.accept(','));
  in.expect('}');
  return out;
}

// Pattern word: digits, optionally comma separated ("132" or "1,3,2").
std::vector<int> word(Cursor& in) {
  std::vector<int> out;
  in.skip_space();
  if (!in.at_digit()) in.fail("pattern word");
  while (in.at_digit()) {
    std::string digits = std::to_string(in.integer());
    if (in.peek() == ',' || digits.size() == 1) {
      out.push_back(std::stoi(digits));
    } else {
      for (char c : digits) out.push_back(c - '0');
    }
    if (!in.accept(',')) break;
  }
  return out;
}

template <typename F>
auto rethrow_at(Cursor& in, std::size_t at, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    in.rewind(at);
    in.fail(std::string("valid construct (") + e.what() + ")");
  }
}

RegularStatistic stat_expr(Cursor& in);

RegularStatistic translate(Cursor& in) {
  std::size_t at = in.position();
  in.expect('(');
  in.expect("U=");
  auto U = int_tuple(in);
  in.expect(';');
  in.expect("V=");
  auto V = int_tuple(in);
  in.expect(';');
  in.expect("C=");
  auto C = int_set(in);
  in.expect(';');
  in.expect("f=");
  Polynomial f = poly_expr(in);
  in.expect(')');
  return rethrow_at(in, at, [&] {
    return RegularStatistic(ConstrainedTranslate(PartialPermutation(U, V), C, f));
  });
}

RegularStatistic pattern(Cursor& in) {
  std::size_t at = in.position();
  in.expect('(');
  auto sigma = word(in);
  std::vector<int> A;
  if (in.accept(';')) {
    in.expect("A=");
    A = int_set(in);
  }
  in.expect(')');
  return rethrow_at(in, at, [&] { return pattern_count(sigma, A); });
}

RegularStatistic bivincular(Cursor& in) {
  std::size_t at = in.position();
  BivincularPattern p;
  in.expect('(');
  p.sigma = word(in);
  // The fields are optional but keep the order A, B, f, g.
  constexpr std::array<std::string_view, 4> keys{"A=", "B=", "f=", "g="};
  std::size_t next = 0;
  while (in.accept(';')) {
    std::size_t key = next;
    while (key < keys.size() && !in.accept(keys[key])) ++key;
    if (key == keys.size()) {
      std::string expected;
      for (std::size_t k = next; k < keys.size(); ++k) {
        expected += (expected.empty() ? "" : ", ") + ("\"" + std::string(keys[k]) + "\"");
      }
      in.fail(expected.empty() ? "')'" : expected);
    }
    switch (key) {
      case 0: p.A = int_set(in); break;
      case 1: p.B = int_set(in); break;
      case 2: p.f = poly_expr(in); break;
      default: p.g = poly_expr(in); break;
    }
    next = key + 1;
  }
  in.expect(')');
  return rethrow_at(in, at, [&] { return compile_bivincular(p); });
}

RegularStatistic stat_primary(Cursor& in) {
  if (in.accept('(')) {
    RegularStatistic inner = stat_expr(in);
    in.expect(')');
    return inner;
  }
  if (in.at_digit()) return RegularStatistic::constant(in.rational());
  std::size_t at = in.position();
  std::string name = in.identifier();
  if (name == "T") return translate(in);
  if (name == "N") return pattern(in);
  if (name == "biv") return bivincular(in);
  if (name == "exc" || name == "des" || name == "maj" || name == "inv" || name == "fix" ||
      name == "fixpoints" || name == "cyc2") {
    return builtin(name);
  }
  in.rewind(at);
  in.fail("number, builtin statistic, T(...), N(...), biv(...) or '('");
}

RegularStatistic stat_factor(Cursor& in) {
  if (in.accept('-')) return stat_factor(in) * Rational(-1);
  RegularStatistic base = stat_primary(in);
  if (in.accept('^')) {
    std::size_t at = in.position();
    int d = in.integer();
    return rethrow_at(in, at, [&] { return base.pow(d); });
  }
  return base;
}

RegularStatistic stat_term(Cursor& in) {
  RegularStatistic value = stat_factor(in);
  while (in.accept('*')) value = value * stat_factor(in);
  return value;
}

RegularStatistic stat_expr(Cursor& in) {
  RegularStatistic value = stat_term(in);
  while (true) {
    if (in.accept('+')) value += stat_term(in);
    else if (in.accept('-')) value -= stat_term(in);
    else return value;
  }
}

}  // namespace

RegularStatistic parse_statistic(std::string_view text) {
  Cursor in(text);
  if (in.at_end()) in.fail("statistic expression");
  RegularStatistic value = stat_expr(in);
  if (!in.at_end()) in.fail("operator or end of input");
  return value;
}

Polynomial parse_weight(std::string_view text) {
  Cursor in(text);
  if (in.at_end()) in.fail("polynomial");
  Polynomial value = poly_expr(in);
  if (!in.at_end()) in.fail("operator or end of input");
  return value;
}

}  // namespace permstat
