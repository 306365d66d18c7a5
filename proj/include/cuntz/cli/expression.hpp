#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cuntz/element.hpp"

namespace cuntz::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised while evaluating a well-formed expression (unknown name, inverse of
/// a non-unitary, generator outside n = 2).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Abstract syntax of the expression language.
///
///   sum     := ['+'|'-'] product (('+'|'-') product)*
///   product := factor factor*            (juxtaposition)
///   factor  := primary ('^' int | '*')*
///   primary := S<word> | P<word> | x<k> | tflip | ff | id | number | '(' sum ')'
///   number  := [digits] ['i'] ['/' digits]
struct Expression {
  enum class Kind { Sum, Product, Power, Adjoint, Isometry, Projection,
                    Generator, Named, Number };

  Kind kind = Kind::Number;
  std::size_t position = 0;
  std::vector<Expression> children;
  std::vector<bool> negated;  // Sum: sign of each child
  long exponent = 0;          // Power; Generator index
  std::string text;           // Isometry/Projection digits; Named identifier
  Coefficient number;         // Number
};

Expression parse(std::string_view text);
Element evaluate(const Expression& expr, int n);
/// parse + evaluate.
Element evaluate(std::string_view text, int n);

/// Canonical printed form; evaluate(print(x), n) == x.
std::string print(const Element& x);

}  // namespace cuntz::cli
