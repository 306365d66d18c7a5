#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuntz/element.hpp"

namespace cuntz {

enum class ThompsonClass { NotUnitary, UnitaryNotInV, V, T, F };

std::string_view to_string(ThompsonClass c);
std::optional<ThompsonClass> parse_thompson_class(std::string_view text);
/// F ⊂ T ⊂ V containment on verdicts (NotUnitary / UnitaryNotInV are in nothing).
bool within(ThompsonClass verdict, ThompsonClass group);

/// One row S_alpha S_beta^* of a table: the cylinder beta is carried onto alpha.
struct TablePair {
  MultiIndex alpha;
  MultiIndex beta;
  friend bool operator==(const TablePair&, const TablePair&) = default;
};

/// Element of V = S_2: a reduced pairing between two complete binary prefix
/// codes. Rows are kept sorted by beta.
class TableUnitary {
 public:
  /// The identity.
  TableUnitary();

  /// Reduces the given rows; throws unless they form a unitary table.
  static TableUnitary from_pairs(std::vector<TablePair> pairs);
  static TableUnitary from_element(const Element& x);
  static std::optional<TableUnitary> try_from_element(const Element& x);

  std::span<const TablePair> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  /// The alpha words (J_1) in lexicographic order.
  std::vector<MultiIndex> range_code() const;
  /// The beta words (J_2) in lexicographic order.
  std::vector<MultiIndex> domain_code() const;

  Element to_element() const;
  TableUnitary inverse() const;
  friend TableUnitary operator*(const TableUnitary& a, const TableUnitary& b);
  friend bool operator==(const TableUnitary&, const TableUnitary&) = default;

  std::string to_string() const;

 private:
  explicit TableUnitary(std::vector<TablePair> reduced);
  std::vector<TablePair> pairs_;
};

/// Finest of F, T, V containing x, or why it is in none of them.
ThompsonClass classify(const Element& x);
ThompsonClass classify(const TableUnitary& w);

/// x_0 = S_11 S_1^* + S_12 S_21^* + S_2 S_22^*, and
/// x_k = 1 - P_{2(k)} + S_{2(k)} x_0 S_{2(k)}^* for k >= 1.
TableUnitary generator_x(int k);
/// S_22 S_1^* + S_1 S_21^* + S_21 S_22^*.
TableUnitary t_generator();
/// S_1 S_2^* + S_2 S_1^*.
TableUnitary flip_flop();

/// Order-preserving pairing of two equal-size complete codes (an element of F).
TableUnitary f_from_codes(std::span<const MultiIndex> range_code,
                          std::span<const MultiIndex> domain_code);

/// Two uniformly random binary trees with `leaf_count` leaves, paired by the
/// identity (F), a uniform rotation (T) or a uniform permutation (V).
/// Deterministic in `seed`.
TableUnitary random_table(ThompsonClass group, int leaf_count,
                          std::uint64_t seed);

// ---------------------------------------------------------------------------
// Piecewise-linear view

/// Dyadic interval [lo, hi] of the cylinder of a binary word.
std::pair<mpq_class, mpq_class> dyadic_interval(const MultiIndex& w);

/// "p/2^k" for dyadic rationals, plain integers otherwise.
std::string dyadic_string(const mpq_class& q);

struct PLPiece {
  mpq_class source_lo, source_hi;
  mpq_class target_lo, target_hi;
  /// log2 of the slope.
  long slope_exponent = 0;

  friend bool operator==(const PLPiece&, const PLPiece&) = default;
};

/// Piecewise-affine bijection of [0,1]; pieces sorted by source.
class PLMap {
 public:
  PLMap() = default;
  explicit PLMap(std::vector<PLPiece> pieces);

  std::span<const PLPiece> pieces() const noexcept { return pieces_; }

  mpq_class operator()(const mpq_class& x) const;
  /// (*this) ∘ inner.
  PLMap compose(const PLMap& inner) const;
  /// Merges neighbouring pieces that are the same affine map.
  PLMap normalized() const;
  /// Sources tile [0,1] and every piece is affine with slope 2^e.
  bool is_well_formed() const;
  bool is_continuous_increasing() const;

  friend bool operator==(const PLMap& a, const PLMap& b) {
    return a.normalized().pieces_ == b.normalized().pieces_;
  }

 private:
  std::vector<PLPiece> pieces_;
};

/// Row (alpha, beta) becomes the affine piece from the interval of beta onto
/// the interval of alpha.
PLMap to_pl_map(const TableUnitary& w);

// ---------------------------------------------------------------------------
// Tree-pair data for renderers

struct TreePair {
  /// Leaves of the domain tree and range tree, each in left-to-right order.
  std::vector<MultiIndex> domain_leaves;
  std::vector<MultiIndex> range_leaves;
  /// domain leaf k is carried to range leaf pairing[k].
  std::vector<std::size_t> pairing;
};

TreePair tree_pair(const TableUnitary& w);

}  // namespace cuntz
