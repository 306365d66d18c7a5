#include "cuntz/diagonal.hpp"

#include <algorithm>
#include <stdexcept>

namespace cuntz {

PointSpec::PointSpec(MultiIndex head, MultiIndex cycle)
    : head_(std::move(head)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw std::invalid_argument("point cycle must be non-empty");
  if (head_.alphabet() != cycle_.alphabet())
    throw std::invalid_argument("point head and cycle over different alphabets");
  normalize();
}

void PointSpec::normalize() {
  // primitive root of the cycle
  const std::size_t len = cycle_.size();
  for (std::size_t p = 1; p < len; ++p) {
    if (len % p != 0) continue;
    if (cycle_.prefix(p).power(len / p) == cycle_) {
      cycle_ = cycle_.prefix(p);
      break;
    }
  }
  // absorb the tail of the head into the cycle
  while (!head_.empty() && head_.back() == cycle_.back()) {
    MultiIndex rotated(cycle_.alphabet());
    rotated.push_back(cycle_.back());
    rotated += cycle_.prefix(cycle_.size() - 1);
    cycle_ = rotated;
    head_ = head_.prefix(head_.size() - 1);
  }
}

PointSpec PointSpec::parse(int n, std::string_view text) {
  auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')')
    throw std::invalid_argument("point must look like head(cycle), got \"" +
                                std::string(text) + "\"");
  return PointSpec(MultiIndex::parse(n, text.substr(0, open)),
                   MultiIndex::parse(n, text.substr(open + 1,
                                                    text.size() - open - 2)));
}

int PointSpec::letter_at(std::size_t k) const {
  if (k < head_.size()) return head_[k];
  return cycle_[(k - head_.size()) % cycle_.size()];
}

bool PointSpec::has_prefix(const MultiIndex& mu) const {
  if (mu.alphabet() != alphabet()) return false;
  for (std::size_t k = 0; k < mu.size(); ++k)
    if (letter_at(k) != mu[k]) return false;
  return true;
}

PointSpec PointSpec::drop(std::size_t k) const {
  if (k <= head_.size()) return PointSpec(head_.drop(k), cycle_);
  const std::size_t shift = (k - head_.size()) % cycle_.size();
  return PointSpec(MultiIndex(alphabet()),
                   cycle_.drop(shift) + cycle_.prefix(shift));
}

PointSpec PointSpec::prepend(const MultiIndex& mu) const {
  return PointSpec(mu + head_, cycle_);
}

std::string PointSpec::to_string() const {
  return head_.to_string() + "(" + cycle_.to_string() + ")";
}

Element phi_d(const Element& x) {
  std::vector<Term> kept;
  for (const Term& t : x.terms())
    if (t.alpha == t.beta) kept.push_back(t);
  return Element::from_terms(x.alphabet(), std::move(kept));
}

Element phi_f(const Element& x) {
  std::vector<Term> kept;
  for (const Term& t : x.terms())
    if (t.degree() == 0) kept.push_back(t);
  return Element::from_terms(x.alphabet(), std::move(kept));
}

Coefficient trace(const Element& x) {
  Coefficient sum;
  const mpq_class n = x.alphabet();
  for (const Term& t : x.terms()) {
    if (t.alpha != t.beta) continue;
    mpq_class weight = 1;
    for (std::size_t k = 0; k < t.alpha.size(); ++k) weight /= n;
    sum += t.coeff * Coefficient(weight);
  }
  return sum;
}

bool is_diagonal(const Element& x) {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [](const Term& t) { return t.alpha == t.beta; });
}

bool is_diagonal_projection(const Element& x) {
  // canonical diagonal terms are disjoint cylinders, so unit coefficients
  // already make x idempotent
  return std::all_of(x.terms().begin(), x.terms().end(), [](const Term& t) {
    return t.alpha == t.beta && t.coeff.is_one();
  });
}

std::vector<MultiIndex> standard_form(const Element& q) {
  if (q.is_zero_form())
    throw std::invalid_argument("standard form of the zero projection");
  if (!is_diagonal_projection(q))
    throw std::invalid_argument("standard form needs a diagonal projection");
  std::vector<MultiIndex> out;
  out.reserve(q.size());
  for (const Term& t : q.terms()) out.push_back(t.alpha);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t min_q(const Element& q) {
  auto form = standard_form(q);
  std::size_t best = form.front().size();
  for (const auto& mu : form) best = std::min(best, mu.size());
  return best;
}

Element one_w(const Element& w) {
  if (!is_positive_table_sum(w) || !is_unitary(w))
    throw std::invalid_argument("one_w needs a unitary finite word sum");
  Element p = phi_d(w);
  const Element one = Element::one(w.alphabet());
  if (!is_diagonal_projection(p) || !(w == p + (one - p) * w))
    throw std::logic_error("diagonal part of a table unitary failed its checks");
  return p;
}

Coefficient char_eval(const Element& d, const PointSpec& x) {
  if (!is_diagonal(d))
    throw std::invalid_argument("characters are evaluated on diagonal elements");
  if (d.alphabet() != x.alphabet())
    throw std::invalid_argument("point and element over different alphabets");
  Coefficient sum;
  for (const Term& t : d.terms())
    if (x.has_prefix(t.alpha)) sum += t.coeff;
  return sum;
}

}  // namespace cuntz
