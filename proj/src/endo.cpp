#include "cuntz/endo.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cuntz/diagonal.hpp"

namespace cuntz {

Endo::Endo(Element u) : u_(std::move(u)) {
  if (!is_unitary(u_))
    throw std::invalid_argument("endomorphisms are defined by unitaries; got " +
                                u_.to_string());
}

const Element& Endo::image_of_isometry(const MultiIndex& mu) const {
  if (auto it = isometry_cache_.find(mu); it != isometry_cache_.end())
    return it->second;
  Element image = Element::one(alphabet());
  if (!mu.empty()) {
    const MultiIndex last(alphabet(), {mu.back()});
    image = image_of_isometry(mu.prefix(mu.size() - 1)) * u_ *
            Element::isometry(last);
  }
  return isometry_cache_.emplace(mu, std::move(image)).first->second;
}

Element Endo::image_of_projection(const MultiIndex& mu) const {
  const Element& s = image_of_isometry(mu);
  return s * s.adjoint();
}

Element Endo::operator()(const Element& x) const {
  require_same_alphabet(u_, x);
  std::vector<Term> raw;
  for (const Term& t : x.terms()) {
    const Element piece = t.coeff * (image_of_isometry(t.alpha) *
                                     image_of_isometry(t.beta).adjoint());
    raw.insert(raw.end(), piece.terms().begin(), piece.terms().end());
  }
  return Element::from_terms(alphabet(), std::move(raw));
}

Element apply(const Endo& e, const Element& x) { return e(x); }

Element convolve(const Element& u, const Element& w) {
  const Endo lu(u);
  if (!is_unitary(w)) throw std::invalid_argument("convolve needs unitaries");
  return lu(w) * u;
}

Element shift(const Element& x) {
  const int n = x.alphabet();
  std::vector<Term> raw;
  for (int i = 1; i <= n; ++i) {
    const MultiIndex letter(n, {i});
    for (const Term& t : x.terms())
      raw.push_back({t.coeff, letter + t.alpha, letter + t.beta});
  }
  return Element::from_terms(n, std::move(raw));
}

Element ad_unitary(const Element& u) {
  if (!is_unitary(u)) throw std::invalid_argument("ad_unitary needs a unitary");
  return u * shift(u.adjoint());
}

Element recover(std::span<const Element> images) {
  if (images.empty()) throw std::invalid_argument("recover needs n images");
  const int n = images.front().alphabet();
  if (images.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("recover needs exactly n images");
  Element u(n);
  for (int i = 1; i <= n; ++i)
    u += images[static_cast<std::size_t>(i - 1)] *
         Element::isometry(MultiIndex(n, {i})).adjoint();
  return u;
}

DiagonalProbe diagonal_preservation_probe(const Endo& e, int depth) {
  if (depth < 1) throw std::invalid_argument("probe depth must be >= 1");
  const int n = e.alphabet();
  DiagonalProbe probe;
  probe.depth = depth;
  std::map<MultiIndex, Element> expected;  // phi_D(lambda(P_mu))
  for (const MultiIndex& mu : words_up_to(n, 1, static_cast<std::size_t>(depth))) {
    Element image = e.image_of_projection(mu);
    if (!is_diagonal(image) && probe.images_diagonal) {
      probe.images_diagonal = false;
      probe.first_nondiagonal = mu;
    }
    expected.emplace(mu, phi_d(image));
  }
  // Every orthogonal pair sits below a sibling pair (c i, c j) at its branch
  // point, and lambda and phi_D are order preserving, so sibling pairs suffice.
  for (const MultiIndex& c :
       words_up_to(n, 0, static_cast<std::size_t>(depth - 1))) {
    for (int i = 1; i <= n && probe.pairwise_orthogonal; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const Element prod = expected.at(c.child(i)) * expected.at(c.child(j));
        if (!prod.is_zero_form()) {
          probe.pairwise_orthogonal = false;
          probe.first_overlap = std::make_pair(c.child(i), c.child(j));
          break;
        }
      }
    }
    if (!probe.pairwise_orthogonal) break;
  }
  return probe;
}

std::string_view to_string(ScalingVerdict v) {
  switch (v) {
    case ScalingVerdict::VerifiedToDepth: return "VerifiedToDepth";
    case ScalingVerdict::NonModestWitness: return "NonModestWitness";
    case ScalingVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

bool shorter_then_lex(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

ScalingReport modest_scaling_probe(const Endo& e, int depth, int period_budget) {
  if (depth < 1 || period_budget < 1)
    throw std::invalid_argument("probe depth and budget must be >= 1");
  if (!diagonal_preservation_probe(e, depth).preserves())
    throw std::invalid_argument(
        "modest scaling probe needs an endomorphism preserving the diagonal");

  const int n = e.alphabet();
  ScalingReport report;
  report.depth = depth;
  report.period_budget = period_budget;
  for (const Term& t : e.unitary().terms())
    report.threshold_divisor = std::max(
        {report.threshold_divisor, t.alpha.size(), t.beta.size()});
  const std::size_t m = report.threshold_divisor;
  auto schedule = [m](std::size_t length) { return ceil_div(length, m); };

  std::map<MultiIndex, Element> images;
  for (const MultiIndex& mu : words_up_to(n, 1, static_cast<std::size_t>(depth))) {
    Element q = e.image_of_projection(mu);
    report.profile.emplace_back(mu, min_q(q));
    images.emplace(mu, std::move(q));
  }

  const auto budget = static_cast<std::size_t>(period_budget);
  const auto max_len = static_cast<std::size_t>(depth);
  for (std::size_t nu_len = 1; nu_len * budget <= max_len && !report.witness;
       ++nu_len) {
    for (const MultiIndex& nu : words_of_length(n, nu_len)) {
      for (std::size_t mu_len = 0;
           mu_len + nu_len * budget <= max_len && !report.witness; ++mu_len) {
        for (const MultiIndex& mu : words_of_length(n, mu_len)) {
          const MultiIndex path = mu + nu.power(budget);
          auto kappas = standard_form(images.at(path));
          std::sort(kappas.begin(), kappas.end(), shorter_then_lex);
          for (const MultiIndex& kappa : kappas) {
            if (kappa.size() >= schedule(path.size())) break;
            const Element pk = Element::projection(kappa);
            bool below_all = true;
            for (std::size_t l = 1; l <= budget && below_all; ++l)
              below_all = pk * images.at(mu + nu.power(l)) == pk;
            if (below_all) {
              report.witness = ScalingWitness{kappa, mu, nu, period_budget};
              break;
            }
          }
          if (report.witness) break;
        }
      }
      if (report.witness) break;
    }
  }

  if (report.witness) {
    report.verdict = ScalingVerdict::NonModestWitness;
  } else {
    const bool grows = std::all_of(
        report.profile.begin(), report.profile.end(), [&](const auto& entry) {
          return entry.second >= schedule(entry.first.size());
        });
    report.verdict =
        grows ? ScalingVerdict::VerifiedToDepth : ScalingVerdict::Inconclusive;
  }
  return report;
}

Element stalled_cylinder_unitary(int letter, int k) {
  constexpr int n = 2;
  if (letter < 1 || letter > n)
    throw std::invalid_argument("letter must be 1 or 2");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const MultiIndex short_run = repeat(n, letter, k);
  const MultiIndex long_run = repeat(n, letter, k + 1);
  auto domain = complement_code(n, std::span<const MultiIndex>(&long_run, 1));
  auto range = complement_code(n, std::span<const MultiIndex>(&short_run, 1));
  const std::size_t size = std::max(domain.size(), range.size());
  domain = refine_to(std::move(domain), size);
  range = refine_to(std::move(range), size);

  std::vector<Term> rows;
  for (std::size_t j = 0; j < size; ++j) rows.push_back({1, range[j], domain[j]});
  const Element v = Element::from_terms(n, std::move(rows));
  const Element one = Element::one(n);
  if (!(v.adjoint() * v == one - Element::projection(long_run)) ||
      !(v * v.adjoint() == one - Element::projection(short_run)))
    throw std::logic_error("complement pairing is not the required partial isometry");

  Element w = v + Element::word(short_run, long_run);
  if (!is_unitary(w)) throw std::logic_error("stalled cylinder unitary is not unitary");
  return w;
}

}  // namespace cuntz
