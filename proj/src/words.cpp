#include "cuntz/words.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cuntz {

namespace {

void check_alphabet(int n) {
  if (n < 2 || n > 255)
    throw std::invalid_argument("alphabet size must lie in [2, 255], got " +
                                std::to_string(n));
}

void check_letter(int n, int letter) {
  if (letter < 1 || letter > n)
    throw std::invalid_argument("letter " + std::to_string(letter) +
                                " outside {1.." + std::to_string(n) + "}");
}

void check_same_alphabet(const MultiIndex& a, const MultiIndex& b) {
  if (a.alphabet() != b.alphabet())
    throw std::invalid_argument("multi-indices over different alphabets");
}

}  // namespace

MultiIndex::MultiIndex(int n) : n_(n) { check_alphabet(n); }

MultiIndex::MultiIndex(int n, std::initializer_list<int> letters)
    : MultiIndex(n, std::span<const int>(letters.begin(), letters.size())) {}

MultiIndex::MultiIndex(int n, std::span<const int> letters) : n_(n) {
  check_alphabet(n);
  letters_.reserve(letters.size());
  for (int l : letters) push_back(l);
}

MultiIndex MultiIndex::parse(int n, std::string_view text) {
  MultiIndex w(n);
  if (text.empty() || text == "e") return w;
  if (n <= 9) {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("bad letter '" + std::string(1, c) +
                                    "' in word \"" + std::string(text) + "\"");
      w.push_back(c - '0');
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view part = text.substr(pos, comma - pos);
    int letter = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(),
                                     letter);
    if (ec != std::errc() || end != part.data() + part.size() || part.empty())
      throw std::invalid_argument("bad word \"" + std::string(text) + "\"");
    w.push_back(letter);
    pos = comma + 1;
  }
  return w;
}

void MultiIndex::push_back(int letter) {
  check_letter(n_, letter);
  letters_.push_back(static_cast<char>(letter));
}

MultiIndex MultiIndex::prefix(std::size_t k) const {
  MultiIndex w = *this;
  w.letters_.resize(std::min(k, size()));
  return w;
}

MultiIndex MultiIndex::drop(std::size_t k) const {
  MultiIndex w(n_);
  if (k < size()) w.letters_ = letters_.substr(k);
  return w;
}

MultiIndex MultiIndex::operator+(const MultiIndex& rhs) const {
  MultiIndex w = *this;
  w += rhs;
  return w;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& rhs) {
  check_same_alphabet(*this, rhs);
  letters_ += rhs.letters_;
  return *this;
}

MultiIndex MultiIndex::child(int letter) const {
  MultiIndex w = *this;
  w.push_back(letter);
  return w;
}

MultiIndex MultiIndex::power(std::size_t times) const {
  MultiIndex w(n_);
  w.letters_.reserve(size() * times);
  for (std::size_t i = 0; i < times; ++i) w.letters_ += letters_;
  return w;
}

bool MultiIndex::is_prefix_of(const MultiIndex& other) const noexcept {
  return n_ == other.n_ && size() <= other.size() &&
         other.letters_.compare(0, size(), letters_) == 0;
}

std::string MultiIndex::to_string() const {
  std::string out;
  if (n_ <= 9) {
    out.reserve(size());
    for (char c : letters_) out.push_back(static_cast<char>('0' + c));
    return out;
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string((*this)[i]);
  }
  return out;
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Equal: return "Equal";
    case Relation::StrictPrefixOf: return "StrictPrefixOf";
    case Relation::StrictExtensionOf: return "StrictExtensionOf";
    case Relation::OrthogonalLess: return "OrthogonalLess";
    case Relation::OrthogonalGreater: return "OrthogonalGreater";
  }
  return "?";
}

Relation relation(const MultiIndex& mu, const MultiIndex& nu) {
  check_same_alphabet(mu, nu);
  const std::size_t common = std::min(mu.size(), nu.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (mu[i] != nu[i])
      return mu[i] < nu[i] ? Relation::OrthogonalLess
                           : Relation::OrthogonalGreater;
  }
  if (mu.size() == nu.size()) return Relation::Equal;
  return mu.size() < nu.size() ? Relation::StrictPrefixOf
                               : Relation::StrictExtensionOf;
}

bool orthogonal(const MultiIndex& mu, const MultiIndex& nu) {
  Relation r = relation(mu, nu);
  return r == Relation::OrthogonalLess || r == Relation::OrthogonalGreater;
}

MultiIndex repeat(int n, int letter, int k) {
  if (k < 0) throw std::invalid_argument("repeat count must be >= 0");
  MultiIndex w(n);
  for (int j = 0; j < k; ++j) w.push_back(letter);
  if (k == 0) check_letter(n, letter);
  return w;
}

std::vector<MultiIndex> words_of_length(int n, std::size_t length) {
  std::vector<MultiIndex> level{MultiIndex(n)};
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<MultiIndex> next;
    next.reserve(level.size() * static_cast<std::size_t>(n));
    for (const auto& w : level)
      for (int i = 1; i <= n; ++i) next.push_back(w.child(i));
    level = std::move(next);
  }
  return level;
}

std::vector<MultiIndex> words_up_to(int n, std::size_t min_length,
                                    std::size_t max_length) {
  std::vector<MultiIndex> out;
  for (std::size_t l = min_length; l <= max_length; ++l) {
    auto level = words_of_length(n, l);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

bool is_complete_prefix_code(std::span<const MultiIndex> code) {
  if (code.empty()) return false;
  const int n = code.front().alphabet();
  std::vector<MultiIndex> sorted(code.begin(), code.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i].alphabet() != n || !orthogonal(sorted[i], sorted[i + 1]))
      return false;
  }
  // In lex order a complete code is exactly the leaf sequence of a finite
  // n-ary tree: walk it and check each leaf is the next one expected.
  MultiIndex expected(n);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const MultiIndex& w = sorted[i];
    if (!expected.is_prefix_of(w)) return false;
    // every letter after `expected` must be 1 (leftmost descent)
    for (std::size_t j = expected.size(); j < w.size(); ++j)
      if (w[j] != 1) return false;
    // advance to the next leaf position: strip trailing n's, bump last letter
    MultiIndex next = w;
    while (!next.empty() && next.back() == n) next = next.prefix(next.size() - 1);
    if (next.empty()) return i + 1 == sorted.size();
    MultiIndex bumped = next.prefix(next.size() - 1);
    bumped.push_back(next.back() + 1);
    expected = bumped;
  }
  return false;
}

namespace {

void complement_rec(const MultiIndex& node, std::span<const MultiIndex> words,
                    std::vector<MultiIndex>& out) {
  bool touches = false;
  for (const auto& w : words) {
    if (w.is_prefix_of(node)) return;  // node lies inside a given cylinder
    if (node.is_prefix_of(w)) touches = true;
  }
  if (!touches) {
    out.push_back(node);
    return;
  }
  for (int i = 1; i <= node.alphabet(); ++i)
    complement_rec(node.child(i), words, out);
}

}  // namespace

std::vector<MultiIndex> complement_code(int n,
                                        std::span<const MultiIndex> words) {
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (!orthogonal(words[i], words[j]))
        throw std::invalid_argument("complement_code needs orthogonal words");
  std::vector<MultiIndex> out;
  complement_rec(MultiIndex(n), words, out);
  return out;
}

std::vector<MultiIndex> refine_to(std::vector<MultiIndex> code,
                                  std::size_t count) {
  std::sort(code.begin(), code.end());
  while (code.size() < count) {
    if (code.empty()) throw std::invalid_argument("cannot refine empty code");
    auto it = std::min_element(code.begin(), code.end(),
                               [](const MultiIndex& a, const MultiIndex& b) {
                                 if (a.size() != b.size())
                                   return a.size() < b.size();
                                 return a < b;
                               });
    MultiIndex w = *it;
    code.erase(it);
    for (int i = 1; i <= w.alphabet(); ++i) code.push_back(w.child(i));
    std::sort(code.begin(), code.end());
  }
  if (code.size() != count)
    throw std::invalid_argument("code cannot be refined to exactly " +
                                std::to_string(count) + " words");
  return code;
}

}  // namespace cuntz
