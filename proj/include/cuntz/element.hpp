#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cuntz/coefficient.hpp"
#include "cuntz/words.hpp"

namespace cuntz {

/// c * S_alpha S_beta^*.
struct Term {
  Coefficient coeff;
  MultiIndex alpha;
  MultiIndex beta;

  /// Gauge degree |alpha| - |beta|.
  long degree() const noexcept {
    return static_cast<long>(alpha.size()) - static_cast<long>(beta.size());
  }

  friend bool operator==(const Term&, const Term&) = default;
};

class Element;

/// Finite linear combination of words S_alpha S_beta^* in O_n, always held in
/// canonical form.
///
/// Canonical form: terms are grouped by their root pair (alpha, beta with the
/// longest common trailing block removed). Within a root, the terms cover
/// pairwise disjoint cylinders, no coefficient is zero, and no n siblings
/// (alpha i, beta i), i = 1..n, carry equal coefficients. Two Elements are
/// equal in O_n exactly when their canonical term lists coincide. Terms are
/// ordered by (|alpha| - |beta|, beta, alpha).
class Element {
 public:
  Element() : Element(2) {}
  explicit Element(int n);

  static Element zero(int n) { return Element(n); }
  static Element one(int n);
  static Element scalar(int n, const Coefficient& c);
  /// c * S_alpha S_beta^*.
  static Element word(const MultiIndex& alpha, const MultiIndex& beta,
                      const Coefficient& c = 1);
  /// The isometry S_mu.
  static Element isometry(const MultiIndex& mu);
  /// The range projection P_mu = S_mu S_mu^*.
  static Element projection(const MultiIndex& mu);
  /// Sum of P_mu over the given words.
  static Element projection_sum(int n, std::span<const MultiIndex> words);
  /// Canonicalizes an arbitrary list of terms.
  static Element from_terms(int n, std::vector<Term> raw);

  int alphabet() const noexcept { return n_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero_form() const noexcept { return terms_.empty(); }

  Element adjoint() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Element& o);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Coefficient& c, const Element& x);

  /// Canonical-form identity.
  friend bool operator==(const Element& a, const Element& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Non-negative integer power.
  Element pow(unsigned exponent) const;

  /// Debug rendering, e.g. "S11S1* + S12S21* + S2S22*".
  std::string to_string() const;

 private:
  int n_;
  std::vector<Term> terms_;
};

/// Product rule for two words; empty optional means the product vanishes.
std::optional<Term> multiply_terms(const Term& s, const Term& t);
Element term_mul(const Term& s, const Term& t);

/// Combines duplicate pairs, drops zeros, pushes overlapping cylinders apart
/// and merges complete sibling groups. Idempotent.
std::vector<Term> canonicalize(int n, std::vector<Term> raw);

/// Expansion oracle: within each degree class, split every term down to the
/// longest beta present and test all coefficients for zero. Works on
/// arbitrary (non-canonical) term lists.
bool expansion_is_zero(int n, std::span<const Term> raw);
bool is_zero(const Element& x);
/// is_zero(x - y) through the expansion oracle on the raw difference.
bool equals(const Element& x, const Element& y);

/// Every canonical coefficient is a positive integer (x is a finite sum of
/// words with repetition).
bool is_positive_table_sum(const Element& x);
bool is_projection(const Element& x);
bool is_isometry(const Element& x);
bool is_unitary(const Element& x);

/// Gauge action at z in {1, -1, i, -i}: each word picks up z^(|alpha|-|beta|).
Element gauge(const Coefficient& z, const Element& x);

void require_same_alphabet(const Element& a, const Element& b);

}  // namespace cuntz
