#include "cuntz/coefficient.hpp"

#include <stdexcept>

namespace cuntz {

Coefficient::Coefficient(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Coefficient Coefficient::from_parts(std::string_view re, std::string_view im) {
  return {parse_rational(re), parse_rational(im)};
}

bool Coefficient::is_positive_integer() const {
  return is_real() && re_.get_den() == 1 && sgn(re_) > 0;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  if (o.is_zero()) throw std::domain_error("division by zero coefficient");
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

Coefficient Coefficient::pow(long exponent) const {
  Coefficient base = exponent < 0 ? Coefficient(1) / *this : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Coefficient result(1);
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Coefficient::to_string() const {
  if (is_real()) return rational_string(re_);
  std::string im = rational_string(im_);
  if (im == "1") im.clear();
  else if (im == "-1") im = "-";
  if (sgn(re_) == 0) return im + "i";
  return rational_string(re_) + (sgn(im_) > 0 ? "+" : "") + im + "i";
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("bad rational \"" + s + "\"");
  q.canonicalize();
  return q;
}

}  // namespace cuntz
