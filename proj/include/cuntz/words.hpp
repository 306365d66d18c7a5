#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cuntz {

/// A finite word over the alphabet {1..n}. The empty word is valid and
/// indexes the identity.
///
/// Letters are stored one per char, so lexicographic comparison of the
/// underlying string is the lexicographic order on words.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int n);
  MultiIndex(int n, std::initializer_list<int> letters);
  MultiIndex(int n, std::span<const int> letters);

  /// Digit string for n <= 9 ("121"), comma-separated integers otherwise.
  /// "" and "e" both denote the empty word.
  static MultiIndex parse(int n, std::string_view text);

  int alphabet() const noexcept { return n_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const noexcept {
    return static_cast<unsigned char>(letters_[i]);
  }
  int back() const noexcept { return (*this)[size() - 1]; }

  void push_back(int letter);
  MultiIndex prefix(std::size_t k) const;
  MultiIndex drop(std::size_t k) const;  // suffix after the first k letters
  MultiIndex operator+(const MultiIndex& rhs) const;
  MultiIndex& operator+=(const MultiIndex& rhs);
  MultiIndex child(int letter) const;
  MultiIndex power(std::size_t times) const;

  bool is_prefix_of(const MultiIndex& other) const noexcept;

  std::string to_string() const;
  const std::string& raw() const noexcept { return letters_; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a,
                                          const MultiIndex& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    int r = a.letters_.compare(b.letters_);
    return r < 0 ? std::strong_ordering::less
                 : (r > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  int n_ = 2;
  std::string letters_;
};

enum class Relation {
  Equal,
  StrictPrefixOf,
  StrictExtensionOf,
  OrthogonalLess,
  OrthogonalGreater,
};

std::string_view to_string(Relation r);

Relation relation(const MultiIndex& mu, const MultiIndex& nu);

/// P_mu P_nu = 0, i.e. neither word is a prefix of the other.
bool orthogonal(const MultiIndex& mu, const MultiIndex& nu);

/// The word i(k) = i i ... i of length k; i(0) is the empty word.
MultiIndex repeat(int n, int letter, int k);

/// All words of length exactly `length`, in lexicographic order.
std::vector<MultiIndex> words_of_length(int n, std::size_t length);

/// All words with min_length <= |w| <= max_length, shortest first.
std::vector<MultiIndex> words_up_to(int n, std::size_t min_length,
                                    std::size_t max_length);

/// Finite set of pairwise orthogonal words whose cylinders cover everything.
bool is_complete_prefix_code(std::span<const MultiIndex> code);

/// Coarsest set of cylinders covering the complement of the given pairwise
/// orthogonal words, in lexicographic order.
std::vector<MultiIndex> complement_code(int n,
                                        std::span<const MultiIndex> words);

/// Splits the shortest word (lex-first on ties) into its n children until the
/// code has `count` words. Result is lexicographically sorted.
std::vector<MultiIndex> refine_to(std::vector<MultiIndex> code,
                                  std::size_t count);

}  // namespace cuntz

template <>
struct std::hash<cuntz::MultiIndex> {
  std::size_t operator()(const cuntz::MultiIndex& w) const noexcept {
    return std::hash<std::string>{}(w.raw()) * 31u +
           static_cast<std::size_t>(w.alphabet());
  }
};
