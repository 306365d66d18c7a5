#include "cuntz/thompson.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cuntz {

namespace {

constexpr int kBinary = 2;

MultiIndex word2(std::string_view digits) {
  return MultiIndex::parse(kBinary, digits);
}

std::vector<TablePair> sorted_by_beta(std::vector<TablePair> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const TablePair& a, const TablePair& b) { return a.beta < b.beta; });
  return pairs;
}

// Pairs of a canonical Element when it is a table; nullopt otherwise.
std::optional<std::vector<TablePair>> table_rows(const Element& x) {
  if (x.alphabet() != kBinary) return std::nullopt;
  std::vector<TablePair> rows;
  std::vector<MultiIndex> alphas, betas;
  for (const Term& t : x.terms()) {
    if (!t.coeff.is_one()) return std::nullopt;
    rows.push_back({t.alpha, t.beta});
    alphas.push_back(t.alpha);
    betas.push_back(t.beta);
  }
  if (!is_complete_prefix_code(alphas) || !is_complete_prefix_code(betas))
    return std::nullopt;
  return sorted_by_beta(std::move(rows));
}

// Alpha words listed in beta order.
std::vector<MultiIndex> alphas_in_beta_order(std::span<const TablePair> rows) {
  std::vector<MultiIndex> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.alpha);
  return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // rejection sampling keeps the stream identical across standard libraries
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

// Leaves (in lex order) of a uniformly random plane binary tree, grown by
// Remy's algorithm.
std::vector<MultiIndex> random_binary_code(std::mt19937_64& rng,
                                           int leaf_count) {
  struct Node {
    long parent = -1;
    long child[2] = {-1, -1};
  };
  std::vector<Node> nodes(1);
  long root = 0;
  for (int leaves = 1; leaves < leaf_count; ++leaves) {
    const long picked = static_cast<long>(uniform_below(rng, nodes.size()));
    const long internal = static_cast<long>(nodes.size());
    const long leaf = internal + 1;
    nodes.emplace_back();
    nodes.emplace_back();
    const long parent = nodes[static_cast<std::size_t>(picked)].parent;
    nodes[static_cast<std::size_t>(internal)].parent = parent;
    if (parent < 0) {
      root = internal;
    } else {
      auto& p = nodes[static_cast<std::size_t>(parent)];
      (p.child[0] == picked ? p.child[0] : p.child[1]) = internal;
    }
    const bool leaf_left = uniform_below(rng, 2) == 0;
    auto& in = nodes[static_cast<std::size_t>(internal)];
    in.child[0] = leaf_left ? leaf : picked;
    in.child[1] = leaf_left ? picked : leaf;
    nodes[static_cast<std::size_t>(picked)].parent = internal;
    nodes[static_cast<std::size_t>(leaf)].parent = internal;
  }
  std::vector<MultiIndex> code;
  std::vector<std::pair<long, MultiIndex>> stack{{root, MultiIndex(kBinary)}};
  while (!stack.empty()) {
    auto [id, word] = std::move(stack.back());
    stack.pop_back();
    const Node& node = nodes[static_cast<std::size_t>(id)];
    if (node.child[0] < 0) {
      code.push_back(std::move(word));
      continue;
    }
    stack.emplace_back(node.child[1], word.child(2));
    stack.emplace_back(node.child[0], word.child(1));
  }
  return code;  // depth-first, left first: already lexicographic
}

}  // namespace

std::string_view to_string(ThompsonClass c) {
  switch (c) {
    case ThompsonClass::NotUnitary: return "NotUnitary";
    case ThompsonClass::UnitaryNotInV: return "UnitaryNotInV";
    case ThompsonClass::V: return "V";
    case ThompsonClass::T: return "T";
    case ThompsonClass::F: return "F";
  }
  return "?";
}

std::optional<ThompsonClass> parse_thompson_class(std::string_view text) {
  for (auto c : {ThompsonClass::NotUnitary, ThompsonClass::UnitaryNotInV,
                 ThompsonClass::V, ThompsonClass::T, ThompsonClass::F})
    if (to_string(c) == text) return c;
  return std::nullopt;
}

bool within(ThompsonClass verdict, ThompsonClass group) {
  auto rank = [](ThompsonClass c) {
    switch (c) {
      case ThompsonClass::F: return 3;
      case ThompsonClass::T: return 2;
      case ThompsonClass::V: return 1;
      default: return 0;
    }
  };
  return rank(group) > 0 && rank(verdict) >= rank(group);
}

TableUnitary::TableUnitary()
    : pairs_{{MultiIndex(kBinary), MultiIndex(kBinary)}} {}

TableUnitary::TableUnitary(std::vector<TablePair> reduced)
    : pairs_(std::move(reduced)) {}

TableUnitary TableUnitary::from_pairs(std::vector<TablePair> pairs) {
  std::vector<MultiIndex> alphas, betas;
  std::vector<Term> raw;
  for (const auto& p : pairs) {
    if (p.alpha.alphabet() != kBinary || p.beta.alphabet() != kBinary)
      throw std::invalid_argument("table rows must be binary words");
    alphas.push_back(p.alpha);
    betas.push_back(p.beta);
    raw.push_back({1, p.alpha, p.beta});
  }
  if (!is_complete_prefix_code(alphas) || !is_complete_prefix_code(betas))
    throw std::invalid_argument(
        "table rows must pair two complete prefix codes");
  return from_element(Element::from_terms(kBinary, std::move(raw)));
}

TableUnitary TableUnitary::from_element(const Element& x) {
  auto t = try_from_element(x);
  if (!t) throw std::invalid_argument("element is not a table unitary: " +
                                      x.to_string());
  return *t;
}

std::optional<TableUnitary> TableUnitary::try_from_element(const Element& x) {
  auto rows = table_rows(x);
  if (!rows) return std::nullopt;
  return TableUnitary(std::move(*rows));
}

std::vector<MultiIndex> TableUnitary::range_code() const {
  std::vector<MultiIndex> out;
  for (const auto& p : pairs_) out.push_back(p.alpha);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> TableUnitary::domain_code() const {
  std::vector<MultiIndex> out;
  for (const auto& p : pairs_) out.push_back(p.beta);
  return out;  // rows are already beta-sorted
}

Element TableUnitary::to_element() const {
  std::vector<Term> raw;
  raw.reserve(pairs_.size());
  for (const auto& p : pairs_) raw.push_back({1, p.alpha, p.beta});
  return Element::from_terms(kBinary, std::move(raw));
}

TableUnitary TableUnitary::inverse() const {
  std::vector<TablePair> rows;
  for (const auto& p : pairs_) rows.push_back({p.beta, p.alpha});
  return TableUnitary(sorted_by_beta(std::move(rows)));
}

TableUnitary operator*(const TableUnitary& a, const TableUnitary& b) {
  return TableUnitary::from_element(a.to_element() * b.to_element());
}

std::string TableUnitary::to_string() const { return to_element().to_string(); }

ThompsonClass classify(const TableUnitary& w) {
  const auto alphas = alphas_in_beta_order(w.pairs());
  if (std::is_sorted(alphas.begin(), alphas.end())) return ThompsonClass::F;
  auto lowest = std::min_element(alphas.begin(), alphas.end());
  std::vector<MultiIndex> rotated(lowest, alphas.end());
  rotated.insert(rotated.end(), alphas.begin(), lowest);
  if (std::is_sorted(rotated.begin(), rotated.end())) return ThompsonClass::T;
  return ThompsonClass::V;
}

ThompsonClass classify(const Element& x) {
  if (x.alphabet() != kBinary)
    throw std::invalid_argument("Thompson classification needs n = 2");
  if (!is_unitary(x)) return ThompsonClass::NotUnitary;
  auto table = TableUnitary::try_from_element(x);
  if (!table) return ThompsonClass::UnitaryNotInV;
  return classify(*table);
}

TableUnitary generator_x(int k) {
  if (k < 0) throw std::invalid_argument("generator index must be >= 0");
  const TableUnitary x0 = TableUnitary::from_pairs(
      {{word2("11"), word2("1")}, {word2("12"), word2("21")},
       {word2("2"), word2("22")}});
  if (k == 0) return x0;
  const MultiIndex twos = repeat(kBinary, 2, k);
  const Element s = Element::isometry(twos);
  const Element xk = Element::one(kBinary) - Element::projection(twos) +
                     s * x0.to_element() * s.adjoint();
  return TableUnitary::from_element(xk);
}

TableUnitary t_generator() {
  return TableUnitary::from_pairs({{word2("22"), word2("1")},
                                   {word2("1"), word2("21")},
                                   {word2("21"), word2("22")}});
}

TableUnitary flip_flop() {
  return TableUnitary::from_pairs(
      {{word2("1"), word2("2")}, {word2("2"), word2("1")}});
}

TableUnitary f_from_codes(std::span<const MultiIndex> range_code,
                          std::span<const MultiIndex> domain_code) {
  if (range_code.size() != domain_code.size())
    throw std::invalid_argument("codes of unequal size (" +
                                std::to_string(range_code.size()) + " vs " +
                                std::to_string(domain_code.size()) + ")");
  if (!is_complete_prefix_code(range_code) ||
      !is_complete_prefix_code(domain_code))
    throw std::invalid_argument("f_from_codes needs complete prefix codes");
  std::vector<MultiIndex> r(range_code.begin(), range_code.end());
  std::vector<MultiIndex> d(domain_code.begin(), domain_code.end());
  std::sort(r.begin(), r.end());
  std::sort(d.begin(), d.end());
  std::vector<TablePair> rows;
  for (std::size_t k = 0; k < r.size(); ++k) rows.push_back({r[k], d[k]});
  return TableUnitary::from_pairs(std::move(rows));
}

TableUnitary random_table(ThompsonClass group, int leaf_count,
                          std::uint64_t seed) {
  if (leaf_count < 1) throw std::invalid_argument("leaf_count must be >= 1");
  if (group != ThompsonClass::F && group != ThompsonClass::T &&
      group != ThompsonClass::V)
    throw std::invalid_argument("random_table samples from F, T or V");
  std::mt19937_64 rng(seed);
  const auto domain = random_binary_code(rng, leaf_count);
  const auto range = random_binary_code(rng, leaf_count);
  const std::size_t m = domain.size();
  std::vector<std::size_t> target(m);
  std::iota(target.begin(), target.end(), 0);
  if (group == ThompsonClass::T) {
    const std::size_t shift = uniform_below(rng, m);
    for (auto& t : target) t = (t + shift) % m;
  } else if (group == ThompsonClass::V) {
    for (std::size_t k = m; k > 1; --k)
      std::swap(target[k - 1], target[uniform_below(rng, k)]);
  }
  std::vector<TablePair> rows;
  for (std::size_t k = 0; k < m; ++k) rows.push_back({range[target[k]], domain[k]});
  return TableUnitary::from_pairs(std::move(rows));
}

std::pair<mpq_class, mpq_class> dyadic_interval(const MultiIndex& w) {
  if (w.alphabet() != kBinary)
    throw std::invalid_argument("dyadic intervals need binary words");
  mpq_class lo = 0, width = 1;
  for (std::size_t k = 0; k < w.size(); ++k) {
    width /= 2;
    if (w[k] == 2) lo += width;
  }
  return {lo, lo + width};
}

std::string dyadic_string(const mpq_class& q) {
  const mpz_class& den = q.get_den();
  if (den == 1) return q.get_num().get_str();
  const std::size_t bits = mpz_sizeinbase(den.get_mpz_t(), 2);
  if (mpz_popcount(den.get_mpz_t()) != 1) return q.get_str();
  return q.get_num().get_str() + "/2^" + std::to_string(bits - 1);
}

PLMap::PLMap(std::vector<PLPiece> pieces) : pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end(),
            [](const PLPiece& a, const PLPiece& b) { return a.source_lo < b.source_lo; });
}

namespace {

mpq_class pow2(long e) {
  mpq_class r = 1;
  if (e >= 0) {
    mpz_class num = 1;
    num <<= static_cast<mp_bitcnt_t>(e);
    r = num;
  } else {
    mpz_class den = 1;
    den <<= static_cast<mp_bitcnt_t>(-e);
    r = mpq_class(1, den);
  }
  r.canonicalize();
  return r;
}

}  // namespace

mpq_class PLMap::operator()(const mpq_class& x) const {
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const auto& p = pieces_[k];
    const bool last = k + 1 == pieces_.size();
    if (p.source_lo <= x && (x < p.source_hi || (last && x == p.source_hi)))
      return p.target_lo + (x - p.source_lo) * pow2(p.slope_exponent);
  }
  throw std::out_of_range("point outside [0,1]");
}

PLMap PLMap::compose(const PLMap& inner) const {
  std::vector<PLPiece> out;
  for (const auto& g : inner.pieces_) {
    const mpq_class inv_slope = pow2(-g.slope_exponent);
    for (const auto& f : pieces_) {
      mpq_class lo = std::max(g.target_lo, f.source_lo);
      mpq_class hi = std::min(g.target_hi, f.source_hi);
      if (!(lo < hi)) continue;
      const mpq_class f_slope = pow2(f.slope_exponent);
      PLPiece piece;
      piece.source_lo = g.source_lo + (lo - g.target_lo) * inv_slope;
      piece.source_hi = g.source_lo + (hi - g.target_lo) * inv_slope;
      piece.target_lo = f.target_lo + (lo - f.source_lo) * f_slope;
      piece.target_hi = f.target_lo + (hi - f.source_lo) * f_slope;
      piece.slope_exponent = f.slope_exponent + g.slope_exponent;
      out.push_back(std::move(piece));
    }
  }
  return PLMap(std::move(out));
}

PLMap PLMap::normalized() const {
  std::vector<PLPiece> out;
  for (const auto& p : pieces_) {
    if (!out.empty()) {
      auto& back = out.back();
      if (back.source_hi == p.source_lo && back.target_hi == p.target_lo &&
          back.slope_exponent == p.slope_exponent) {
        back.source_hi = p.source_hi;
        back.target_hi = p.target_hi;
        continue;
      }
    }
    out.push_back(p);
  }
  return PLMap(std::move(out));
}

bool PLMap::is_well_formed() const {
  if (pieces_.empty()) return false;
  mpq_class cursor = 0;
  for (const auto& p : pieces_) {
    if (p.source_lo != cursor || !(p.source_lo < p.source_hi)) return false;
    if (p.target_hi - p.target_lo !=
        (p.source_hi - p.source_lo) * pow2(p.slope_exponent))
      return false;
    cursor = p.source_hi;
  }
  return cursor == 1;
}

bool PLMap::is_continuous_increasing() const {
  if (!is_well_formed()) return false;
  mpq_class cursor = 0;
  for (const auto& p : pieces_) {
    if (p.target_lo != cursor) return false;
    cursor = p.target_hi;
  }
  return cursor == 1;
}

PLMap to_pl_map(const TableUnitary& w) {
  std::vector<PLPiece> pieces;
  for (const auto& row : w.pairs()) {
    auto [slo, shi] = dyadic_interval(row.beta);
    auto [tlo, thi] = dyadic_interval(row.alpha);
    pieces.push_back({slo, shi, tlo, thi,
                      static_cast<long>(row.beta.size()) -
                          static_cast<long>(row.alpha.size())});
  }
  return PLMap(std::move(pieces));
}

TreePair tree_pair(const TableUnitary& w) {
  TreePair tp;
  tp.domain_leaves = w.domain_code();
  tp.range_leaves = w.range_code();
  for (const auto& row : w.pairs()) {
    auto it = std::lower_bound(tp.range_leaves.begin(), tp.range_leaves.end(),
                               row.alpha);
    tp.pairing.push_back(static_cast<std::size_t>(it - tp.range_leaves.begin()));
  }
  return tp;
}

}  // namespace cuntz
