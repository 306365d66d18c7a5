#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cuntz/element.hpp"

namespace cuntz {

/// Eventually periodic point head·cycle·cycle·… of the one-sided shift space.
/// Stored in normal form: primitive cycle, shortest head.
class PointSpec {
 public:
  PointSpec(MultiIndex head, MultiIndex cycle);

  /// "head(cycle)", e.g. "1(2)" for 1222…; the head may be empty: "(12)".
  static PointSpec parse(int n, std::string_view text);

  const MultiIndex& head() const noexcept { return head_; }
  const MultiIndex& cycle() const noexcept { return cycle_; }
  int alphabet() const noexcept { return head_.alphabet(); }

  int letter_at(std::size_t k) const;
  bool has_prefix(const MultiIndex& mu) const;
  /// The point with its first k letters removed.
  PointSpec drop(std::size_t k) const;
  /// The point mu·x.
  PointSpec prepend(const MultiIndex& mu) const;

  std::string to_string() const;

  friend bool operator==(const PointSpec&, const PointSpec&) = default;
  friend auto operator<=>(const PointSpec&, const PointSpec&) = default;

 private:
  void normalize();

  MultiIndex head_;
  MultiIndex cycle_;
};

/// Conditional expectation onto the diagonal: keeps the terms with alpha = beta.
Element phi_d(const Element& x);
/// Conditional expectation onto the core: keeps the terms with |alpha| = |beta|.
Element phi_f(const Element& x);

/// tau(phi_F(x)) with tau(S_a S_b^*) = [a = b] n^{-|a|}.
Coefficient trace(const Element& x);

bool is_diagonal(const Element& x);
/// Nonzero or zero projection in D_n.
bool is_diagonal_projection(const Element& x);

/// The unique minimal set of cylinders summing to q. Throws unless q is a
/// nonzero diagonal projection.
std::vector<MultiIndex> standard_form(const Element& q);
/// Shortest word length occurring in the standard form of q.
std::size_t min_q(const Element& q);

/// Diagonal part of a table unitary: the largest diagonal projection on which
/// w acts as the identity. Throws unless w is a unitary finite word sum.
Element one_w(const Element& w);

/// Value of the character at point x on a diagonal element.
Coefficient char_eval(const Element& d, const PointSpec& x);

}  // namespace cuntz
