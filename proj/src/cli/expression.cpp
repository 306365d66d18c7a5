#include "cuntz/cli/expression.hpp"

#include <cctype>
#include <charconv>

#include "cuntz/thompson.hpp"

namespace cuntz::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse_all() {
    Expression e = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor() {
    char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Expression parse_sum() {
    Expression sum;
    sum.kind = Expression::Kind::Sum;
    sum.position = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = text_[pos_++] == '-';
    sum.children.push_back(parse_product());
    sum.negated.push_back(negative);
    while (peek() == '+' || peek() == '-') {
      negative = text_[pos_++] == '-';
      // tolerate "a + -b"
      if (peek() == '-' || peek() == '+') negative ^= text_[pos_++] == '-';
      sum.children.push_back(parse_product());
      sum.negated.push_back(negative);
    }
    if (sum.children.size() == 1 && !sum.negated.front())
      return std::move(sum.children.front());
    return sum;
  }

  Expression parse_product() {
    Expression product;
    product.kind = Expression::Kind::Product;
    product.position = pos_;
    if (!starts_factor()) fail("expected a factor");
    while (starts_factor()) product.children.push_back(parse_factor());
    if (product.children.size() == 1) return std::move(product.children.front());
    return product;
  }

  Expression parse_factor() {
    Expression base = parse_primary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        Expression adj;
        adj.kind = Expression::Kind::Adjoint;
        adj.position = pos_++;
        adj.children.push_back(std::move(base));
        base = std::move(adj);
      } else if (c == '^') {
        Expression pw;
        pw.kind = Expression::Kind::Power;
        pw.position = pos_++;
        skip_space();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
          negative = text_[pos_++] == '-';
        std::string d = digits();
        if (d.empty()) fail("expected an integer exponent");
        pw.exponent = std::stol(d) * (negative ? -1 : 1);
        pw.children.push_back(std::move(base));
        base = std::move(pw);
      } else {
        return base;
      }
    }
  }

  Expression parse_number() {
    Expression num;
    num.kind = Expression::Kind::Number;
    num.position = pos_;
    std::string mag = digits();
    bool imaginary = false;
    if (pos_ < text_.size() && text_[pos_] == 'i' &&
        !(pos_ + 1 < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_ + 1])))) {
      imaginary = true;
      ++pos_;
    }
    if (mag.empty() && !imaginary) fail("expected a number");
    mpq_class value = mag.empty() ? mpq_class(1) : mpq_class(mpz_class(mag));
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::string den = digits();
      if (den.empty() || mpz_class(den) == 0) fail("expected a nonzero denominator");
      value /= mpq_class(mpz_class(den));
    }
    num.number = imaginary ? Coefficient(0, value) : Coefficient(value);
    return num;
  }

  Expression parse_primary() {
    char c = peek();
    Expression e;
    e.position = pos_;
    if (c == '(') {
      ++pos_;
      e = parse_sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected a factor");

    const bool word_follows =
        pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
    if ((c == 'S' || c == 'P' || c == 'x') && word_follows) {
      ++pos_;
      e.text = digits();
      if (c == 'S') e.kind = Expression::Kind::Isometry;
      if (c == 'P') e.kind = Expression::Kind::Projection;
      if (c == 'x') {
        e.kind = Expression::Kind::Generator;
        e.exponent = std::stol(e.text);
      }
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name == "i") {
      pos_ = start;
      return parse_number();
    }
    e.kind = Expression::Kind::Named;
    e.text = std::move(name);
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

MultiIndex word_from_digits(const std::string& digits, int n, std::size_t position) {
  try {
    if (n <= 9) return MultiIndex::parse(n, digits);
    return MultiIndex(n, {std::stoi(digits)});
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), position);
  }
}

void require_binary(int n, const std::string& what) {
  if (n != 2) throw EvalError(what + " is only defined for n = 2");
}

}  // namespace

Expression parse(std::string_view text) { return Parser(text).parse_all(); }

Element evaluate(const Expression& expr, int n) {
  using Kind = Expression::Kind;
  switch (expr.kind) {
    case Kind::Sum: {
      Element total(n);
      for (std::size_t k = 0; k < expr.children.size(); ++k) {
        Element term = evaluate(expr.children[k], n);
        if (expr.negated[k]) total -= term;
        else total += term;
      }
      return total;
    }
    case Kind::Product: {
      Element acc = Element::one(n);
      for (const auto& child : expr.children) acc *= evaluate(child, n);
      return acc;
    }
    case Kind::Power: {
      Element base = evaluate(expr.children.front(), n);
      if (expr.exponent >= 0) return base.pow(static_cast<unsigned>(expr.exponent));
      if (!is_unitary(base))
        throw EvalError("inverse of a non-unitary at position " +
                        std::to_string(expr.position));
      return base.adjoint().pow(static_cast<unsigned>(-expr.exponent));
    }
    case Kind::Adjoint:
      return evaluate(expr.children.front(), n).adjoint();
    case Kind::Isometry:
      return Element::isometry(word_from_digits(expr.text, n, expr.position));
    case Kind::Projection:
      return Element::projection(word_from_digits(expr.text, n, expr.position));
    case Kind::Generator:
      require_binary(n, "x" + expr.text);
      return generator_x(static_cast<int>(expr.exponent)).to_element();
    case Kind::Named:
      if (expr.text == "id") return Element::one(n);
      if (expr.text == "tflip") {
        require_binary(n, "tflip");
        return t_generator().to_element();
      }
      if (expr.text == "ff") {
        require_binary(n, "ff");
        return flip_flop().to_element();
      }
      throw EvalError("unknown identifier '" + expr.text + "' at position " +
                      std::to_string(expr.position));
    case Kind::Number:
      return Element::scalar(n, expr.number);
  }
  throw EvalError("unhandled expression");
}

Element evaluate(std::string_view text, int n) { return evaluate(parse(text), n); }

namespace {

std::string magnitude(const mpq_class& q) {
  mpq_class a = abs(q);
  return a.get_str();
}

// Imaginary number token: "i", "3i", "i/4", "3i/4".
std::string imaginary_token(const mpq_class& q) {
  mpq_class a = abs(q);
  std::string out = a.get_num() == 1 ? "" : a.get_num().get_str();
  out += "i";
  if (a.get_den() != 1) out += "/" + a.get_den().get_str();
  return out;
}

std::string word_tokens(const MultiIndex& w, bool adjoint) {
  if (w.empty()) return "";
  if (w.alphabet() <= 9) return "S" + w.to_string() + (adjoint ? "*" : "");
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    std::size_t idx = adjoint ? w.size() - 1 - k : k;
    if (!out.empty()) out += " ";
    out += "S" + std::to_string(w[idx]) + (adjoint ? "*" : "");
  }
  return out;
}

}  // namespace

std::string print(const Element& x) {
  if (x.is_zero_form()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : x.terms()) {
    std::string words = word_tokens(t.alpha, false);
    std::string adj = word_tokens(t.beta, true);
    if (!words.empty() && !adj.empty()) words += " ";
    words += adj;

    const Coefficient& c = t.coeff;
    bool negative = false;
    std::string coeff;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      if (abs(c.re()) != 1 || words.empty()) coeff = magnitude(c.re());
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      coeff = imaginary_token(c.im());
    } else {
      coeff = "(" + c.re().get_str() + (sgn(c.im()) < 0 ? " - " : " + ") +
              imaginary_token(c.im()) + ")";
    }

    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    out += coeff;
    if (!coeff.empty() && !words.empty()) out += " ";
    out += words;
  }
  return out;
}

}  // namespace cuntz::cli
