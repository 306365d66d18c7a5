#include "cuntz/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "cuntz/diagonal.hpp"

namespace cuntz {

namespace {

constexpr int kBinary = 2;

bool all_letters(const MultiIndex& w, int letter) {
  if (w.empty()) return false;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] != letter) return false;
  return true;
}

MultiIndex mirror(const MultiIndex& w) {
  MultiIndex out(kBinary);
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back(3 - w[k]);
  return out;
}

TableUnitary mirror(const TableUnitary& w) {
  std::vector<TablePair> rows;
  for (const auto& p : w.pairs()) rows.push_back({mirror(p.alpha), mirror(p.beta)});
  return TableUnitary::from_pairs(std::move(rows));
}

bool below(const Element& p, const Element& q) { return p * q == p; }

void append(std::vector<MultiIndex>& dst, const std::vector<MultiIndex>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

TableUnitary separator_nu_side(const OrthTriple& t) {
  const MultiIndex given[] = {t.mu, t.nu};
  const auto complement = complement_code(kBinary, given);
  std::vector<MultiIndex> p1, p2, after;
  for (const auto& w : complement) {
    if (w < t.mu) p1.push_back(w);
    else if (w < t.nu) p2.push_back(w);
    else after.push_back(w);
  }
  if (p2.empty() || after.empty())
    throw std::logic_error("separator blocks p2 and p3 + p4 must be non-empty");
  std::vector<MultiIndex> p3, p4;
  if (after.size() >= 2) {
    p3.push_back(after.front());
    p4.assign(after.begin() + 1, after.end());
  } else {
    p3.push_back(after.front().child(1));
    p4.push_back(after.front().child(2));
  }

  std::vector<MultiIndex> domain, range;
  // p1 + P_mu fixed
  append(domain, p1);
  domain.push_back(t.mu);
  append(range, p1);
  range.push_back(t.mu);
  // p2 onto p2 + P_nu
  append(domain, refine_to(p2, p2.size() + 1));
  append(range, p2);
  range.push_back(t.nu);
  // P_nu onto p3
  append(domain, refine_to({t.nu}, p3.size()));
  append(range, p3);
  // p3 + p4 onto p4
  append(domain, p3);
  append(domain, p4);
  append(range, refine_to(p4, p3.size() + p4.size()));

  return f_from_codes(range, domain);
}

}  // namespace

bool OrthTriple::valid() const {
  for (const auto* w : {&mu, &kappa, &nu})
    if (w->alphabet() != kBinary || w->empty()) return false;
  return relation(mu, kappa) == Relation::OrthogonalLess &&
         relation(kappa, nu) == Relation::OrthogonalLess &&
         relation(mu, nu) == Relation::OrthogonalLess;
}

std::string_view to_string(SeparatorSide side) {
  return side == SeparatorSide::NuNotAll2s ? "NuNotAll2s" : "MuNotAll1s";
}

TableUnitary unitary_fixing_projection(const Element& p) {
  if (p.alphabet() != kBinary || !is_diagonal_projection(p))
    throw std::invalid_argument("expected a diagonal projection in O_2, got " +
                                p.to_string());
  const Element one = Element::one(kBinary);
  if (p == one) return TableUnitary();
  const Element x0 = generator_x(0).to_element();
  Element w = p;
  for (const MultiIndex& mu : standard_form(one - p)) {
    const Element s = Element::isometry(mu);
    w += s * x0 * s.adjoint();
  }
  auto table = TableUnitary::from_element(w);
  if (classify(table) != ThompsonClass::F || !(one_w(w) == p))
    throw std::logic_error("fixed-projection unitary failed its postconditions");
  return table;
}

TableUnitary cylinder_swap(const MultiIndex& mu, const MultiIndex& nu) {
  if (mu.alphabet() != kBinary || nu.alphabet() != kBinary)
    throw std::invalid_argument("cylinder_swap works over O_2");
  if (!orthogonal(mu, nu) || mu.size() < 2 || nu.size() < 2)
    throw std::invalid_argument(
        "cylinder_swap needs orthogonal words of length >= 2");
  std::optional<MultiIndex> kappa;
  for (const auto& w : words_of_length(kBinary, std::max(mu.size(), nu.size()))) {
    if (orthogonal(w, mu) && orthogonal(w, nu)) {
      kappa = w;
      break;
    }
  }
  // two cylinders of depth >= 2 leave a gap at their common depth
  if (!kappa) throw std::logic_error("no free cylinder next to mu and nu");

  const MultiIndex moved[] = {nu, *kappa};
  std::vector<TablePair> rows{{nu, *kappa}, {*kappa, nu}};
  for (const auto& w : complement_code(kBinary, moved)) rows.push_back({w, w});
  auto table = TableUnitary::from_pairs(std::move(rows));

  const Element w = table.to_element();
  const Element pm = Element::projection(mu), pn = Element::projection(nu);
  if (!below(pm, one_w(w)) || !(pn * w * pn).is_zero_form())
    throw std::logic_error("cylinder swap failed its postconditions");
  return table;
}

TableUnitary order_preserving_separator(const OrthTriple& triple,
                                        SeparatorSide side) {
  if (!triple.valid())
    throw std::invalid_argument(
        "triple must be pairwise orthogonal non-empty binary words with "
        "mu < kappa < nu");
  TableUnitary table;
  if (side == SeparatorSide::NuNotAll2s) {
    if (all_letters(triple.nu, 2))
      throw std::invalid_argument("nu = 2...2 leaves no room to its right");
    table = separator_nu_side(triple);
  } else {
    if (all_letters(triple.mu, 1))
      throw std::invalid_argument("mu = 1...1 leaves no room to its left");
    table = mirror(separator_nu_side(
        {mirror(triple.nu), mirror(triple.kappa), mirror(triple.mu)}));
  }

  const Element w = table.to_element();
  const bool nu_side = side == SeparatorSide::NuNotAll2s;
  const Element fixed = Element::projection(nu_side ? triple.mu : triple.nu);
  const Element moved = Element::projection(nu_side ? triple.nu : triple.mu);
  if (classify(table) != ThompsonClass::F || !below(fixed, one_w(w)) ||
      !(moved * w * moved).is_zero_form())
    throw std::logic_error("order-preserving separator failed its postconditions");
  return table;
}

}  // namespace cuntz
