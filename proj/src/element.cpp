#include "cuntz/element.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace cuntz {

namespace {

void check_alphabet(int n) {
  if (n < 2 || n > 255)
    throw std::invalid_argument("alphabet size must lie in [2, 255]");
}

bool term_order(const Term& a, const Term& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (int c = a.beta.raw().compare(b.beta.raw()); c != 0) return c < 0;
  return a.alpha.raw() < b.alpha.raw();
}

// One tree per root pair. Node 0 is the root itself; a path gamma below it
// stands for the word S_{alpha gamma} S_{beta gamma}^*.
class CylinderTrie {
 public:
  explicit CylinderTrie(int n) : n_(n) { nodes_.emplace_back(); }

  void add(const std::string& path, const Coefficient& c) {
    std::size_t node = 0;
    for (char letter : path) {
      auto& kids = nodes_[node].children;
      if (kids.empty()) kids.assign(static_cast<std::size_t>(n_), 0);
      std::size_t slot = static_cast<unsigned char>(letter) - 1u;
      if (kids[slot] == 0) {
        kids[slot] = nodes_.size();
        nodes_.emplace_back();
        // `kids` may dangle after emplace_back
      }
      node = nodes_[node].children[slot];
    }
    nodes_[node].coeff += c;
  }

  void emit(const MultiIndex& alpha, const MultiIndex& beta,
            std::vector<Term>& out) const {
    MultiIndex a = alpha, b = beta;
    if (auto v = visit(0, Coefficient(), a, b, out); v && !v->is_zero())
      out.push_back({*v, alpha, beta});
  }

 private:
  struct Node {
    Coefficient coeff;
    std::vector<std::size_t> children;  // 0 = absent (root is never a child)
  };

  // Returns the constant value of the subtree when it is uniform, otherwise
  // emits the subtree's terms and returns nullopt.
  std::optional<Coefficient> visit(std::size_t node, const Coefficient& above,
                                   MultiIndex& alpha, MultiIndex& beta,
                                   std::vector<Term>& out) const {
    Coefficient value = above + nodes_[node].coeff;
    const auto& kids = nodes_[node].children;
    if (kids.empty()) return value;

    std::vector<std::optional<Coefficient>> results;
    results.reserve(static_cast<std::size_t>(n_));
    bool uniform = true;
    for (int i = 1; i <= n_; ++i) {
      std::size_t child = kids[static_cast<std::size_t>(i - 1)];
      if (child == 0) {
        results.emplace_back(value);
      } else {
        alpha.push_back(i);
        beta.push_back(i);
        results.push_back(visit(child, value, alpha, beta, out));
        alpha = alpha.prefix(alpha.size() - 1);
        beta = beta.prefix(beta.size() - 1);
      }
      if (!results.back() || !(*results.back() == *results.front()))
        uniform = false;
    }
    if (uniform) return results.front();
    for (int i = 1; i <= n_; ++i) {
      const auto& r = results[static_cast<std::size_t>(i - 1)];
      if (r && !r->is_zero()) out.push_back({*r, alpha.child(i), beta.child(i)});
    }
    return std::nullopt;
  }

  int n_;
  std::vector<Node> nodes_;
};

}  // namespace

void require_same_alphabet(const Element& a, const Element& b) {
  if (a.alphabet() != b.alphabet())
    throw std::invalid_argument("elements over different alphabets (" +
                                std::to_string(a.alphabet()) + " vs " +
                                std::to_string(b.alphabet()) + ")");
}

std::vector<Term> canonicalize(int n, std::vector<Term> raw) {
  std::map<std::pair<std::string, std::string>, CylinderTrie> roots;
  for (const Term& t : raw) {
    if (t.alpha.alphabet() != n || t.beta.alphabet() != n)
      throw std::invalid_argument("term over a different alphabet");
    if (t.coeff.is_zero()) continue;
    std::size_t k = 0;
    const std::size_t la = t.alpha.size(), lb = t.beta.size();
    while (k < la && k < lb && t.alpha[la - 1 - k] == t.beta[lb - 1 - k]) ++k;
    auto key = std::make_pair(t.alpha.raw().substr(0, la - k),
                              t.beta.raw().substr(0, lb - k));
    auto it = roots.try_emplace(std::move(key), n).first;
    it->second.add(t.alpha.raw().substr(la - k), t.coeff);
  }
  std::vector<Term> out;
  for (const auto& [key, trie] : roots) {
    MultiIndex alpha(n), beta(n);
    for (char c : key.first) alpha.push_back(static_cast<unsigned char>(c));
    for (char c : key.second) beta.push_back(static_cast<unsigned char>(c));
    trie.emit(alpha, beta, out);
  }
  std::sort(out.begin(), out.end(), term_order);
  return out;
}

Element::Element(int n) : n_(n) { check_alphabet(n); }

Element Element::one(int n) { return word(MultiIndex(n), MultiIndex(n)); }

Element Element::scalar(int n, const Coefficient& c) {
  return from_terms(n, {{c, MultiIndex(n), MultiIndex(n)}});
}

Element Element::word(const MultiIndex& alpha, const MultiIndex& beta,
                      const Coefficient& c) {
  if (alpha.alphabet() != beta.alphabet())
    throw std::invalid_argument("word over mixed alphabets");
  return from_terms(alpha.alphabet(), {{c, alpha, beta}});
}

Element Element::isometry(const MultiIndex& mu) {
  return word(mu, MultiIndex(mu.alphabet()));
}

Element Element::projection(const MultiIndex& mu) { return word(mu, mu); }

Element Element::projection_sum(int n, std::span<const MultiIndex> words) {
  std::vector<Term> raw;
  raw.reserve(words.size());
  for (const auto& w : words) raw.push_back({1, w, w});
  return from_terms(n, std::move(raw));
}

Element Element::from_terms(int n, std::vector<Term> raw) {
  Element e(n);
  e.terms_ = canonicalize(n, std::move(raw));
  return e;
}

Element Element::adjoint() const {
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (const Term& t : terms_) raw.push_back({t.coeff.conj(), t.beta, t.alpha});
  // the adjoint of a canonical form is canonical; only the order changes
  std::sort(raw.begin(), raw.end(), term_order);
  Element e(n_);
  e.terms_ = std::move(raw);
  return e;
}

Element& Element::operator+=(const Element& o) {
  require_same_alphabet(*this, o);
  std::vector<Term> raw = terms_;
  raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
  terms_ = canonicalize(n_, std::move(raw));
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_alphabet(*this, o);
  std::vector<Term> raw = terms_;
  for (const Term& t : o.terms_) raw.push_back({-t.coeff, t.alpha, t.beta});
  terms_ = canonicalize(n_, std::move(raw));
  return *this;
}

Element& Element::operator*=(const Element& o) { return *this = *this * o; }

Element Element::operator-() const {
  Element e = *this;
  for (Term& t : e.terms_) t.coeff = -t.coeff;
  return e;
}

Element operator*(const Element& a, const Element& b) {
  require_same_alphabet(a, b);
  std::vector<Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_)
      if (auto p = multiply_terms(s, t)) raw.push_back(std::move(*p));
  return Element::from_terms(a.n_, std::move(raw));
}

Element operator*(const Coefficient& c, const Element& x) {
  if (c.is_zero()) return Element(x.n_);
  Element e = x;
  for (Term& t : e.terms_) t.coeff *= c;
  return e;
}

Element Element::pow(unsigned exponent) const {
  Element result = one(n_);
  Element base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    if (k) out += " + ";
    if (!t.coeff.is_one()) out += "(" + t.coeff.to_string() + ")";
    if (!t.alpha.empty()) out += "S" + t.alpha.to_string();
    if (!t.beta.empty()) out += "S" + t.beta.to_string() + "*";
    if (t.alpha.empty() && t.beta.empty()) out += "1";
  }
  return out;
}

std::optional<Term> multiply_terms(const Term& s, const Term& t) {
  // (c S_mu S_nu^*)(d S_a S_b^*)
  const MultiIndex& nu = s.beta;
  const MultiIndex& a = t.alpha;
  if (nu.is_prefix_of(a))
    return Term{s.coeff * t.coeff, s.alpha + a.drop(nu.size()), t.beta};
  if (a.is_prefix_of(nu))
    return Term{s.coeff * t.coeff, s.alpha, t.beta + nu.drop(a.size())};
  return std::nullopt;
}

Element term_mul(const Term& s, const Term& t) {
  if (s.alpha.alphabet() != t.alpha.alphabet())
    throw std::invalid_argument("terms over different alphabets");
  const int n = s.alpha.alphabet();
  auto p = multiply_terms(s, t);
  if (!p) return Element(n);
  return Element::from_terms(n, {std::move(*p)});
}

bool expansion_is_zero(int n, std::span<const Term> raw) {
  std::map<long, std::size_t> longest_beta;
  for (const Term& t : raw) {
    auto& l = longest_beta[t.degree()];
    l = std::max(l, t.beta.size());
  }
  std::map<std::pair<std::string, std::string>, Coefficient> expanded;
  for (const Term& t : raw) {
    const std::size_t extra = longest_beta[t.degree()] - t.beta.size();
    for (const MultiIndex& gamma : words_of_length(n, extra))
      expanded[{(t.alpha + gamma).raw(), (t.beta + gamma).raw()}] += t.coeff;
  }
  return std::all_of(expanded.begin(), expanded.end(),
                     [](const auto& kv) { return kv.second.is_zero(); });
}

bool is_zero(const Element& x) {
  return expansion_is_zero(x.alphabet(), x.terms());
}

bool equals(const Element& x, const Element& y) {
  require_same_alphabet(x, y);
  std::vector<Term> raw(x.terms().begin(), x.terms().end());
  for (const Term& t : y.terms()) raw.push_back({-t.coeff, t.alpha, t.beta});
  return expansion_is_zero(x.alphabet(), raw);
}

bool is_positive_table_sum(const Element& x) {
  return std::all_of(x.terms().begin(), x.terms().end(), [](const Term& t) {
    return t.coeff.is_positive_integer();
  });
}

bool is_projection(const Element& x) {
  return x == x.adjoint() && x * x == x;
}

bool is_isometry(const Element& x) {
  return x.adjoint() * x == Element::one(x.alphabet());
}

bool is_unitary(const Element& x) {
  const Element one = Element::one(x.alphabet());
  const Element xs = x.adjoint();
  return xs * x == one && x * xs == one;
}

Element gauge(const Coefficient& z, const Element& x) {
  const bool supported = z == Coefficient(1) || z == Coefficient(-1) ||
                         z == Coefficient::i() || z == -Coefficient::i();
  if (!supported)
    throw std::invalid_argument("gauge action is only housed at 1, -1, i, -i");
  std::vector<Term> raw(x.terms().begin(), x.terms().end());
  for (Term& t : raw) t.coeff *= z.pow(t.degree());
  return Element::from_terms(x.alphabet(), std::move(raw));
}

}  // namespace cuntz
