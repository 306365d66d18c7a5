#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cuntz {

/// Exact Gaussian rational re + im*i. Both parts are kept in lowest terms
/// with positive denominators (mpq_class canonical form).
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value) : re_(value) {}  // NOLINT: integer literals
  Coefficient(mpq_class re, mpq_class im = 0);

  static Coefficient i() { return Coefficient(0, 1); }

  /// Parses "p/q" or "p" for each part.
  static Coefficient from_parts(std::string_view re, std::string_view im);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_positive_integer() const;

  Coefficient conj() const { return {re_, -im_}; }

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  Coefficient operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Integer power; negative exponents invert (zero has no inverse).
  Coefficient pow(long exponent) const;

  /// "re" when real, otherwise "re+imi" style, e.g. "1/2-3/4i".
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

/// mpq_class in "p/q" (or "p" when integral) form.
std::string rational_string(const mpq_class& q);
mpq_class parse_rational(std::string_view text);

}  // namespace cuntz
