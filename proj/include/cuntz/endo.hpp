#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cuntz/element.hpp"

namespace cuntz {

/// The unital endomorphism lambda_u of O_n determined by S_i -> u S_i.
class Endo {
 public:
  /// Throws unless u is unitary.
  explicit Endo(Element u);

  static Endo identity(int n) { return Endo(Element::one(n)); }

  const Element& unitary() const noexcept { return u_; }
  int alphabet() const noexcept { return u_.alphabet(); }

  /// lambda_u(S_mu) = (u S_mu1)(u S_mu2)...; memoized per instance.
  const Element& image_of_isometry(const MultiIndex& mu) const;
  /// lambda_u(P_mu).
  Element image_of_projection(const MultiIndex& mu) const;

  Element operator()(const Element& x) const;

 private:
  Element u_;
  mutable std::unordered_map<MultiIndex, Element> isometry_cache_;
};

Element apply(const Endo& e, const Element& x);

/// The unitary of lambda_u ∘ lambda_w, namely lambda_u(w) u.
Element convolve(const Element& u, const Element& w);

/// u phi(u^*), the unitary whose endomorphism is Ad(u).
Element ad_unitary(const Element& u);

/// phi(x) = sum_i S_i x S_i^*.
Element shift(const Element& x);

/// sum_i images[i] S_{i+1}^*: recovers u from the images lambda_u(S_i).
Element recover(std::span<const Element> images);

struct DiagonalProbe {
  int depth = 0;
  bool images_diagonal = true;    // lambda(P_mu) in D for all 1 <= |mu| <= depth
  bool pairwise_orthogonal = true;  // phi_D(lambda P_mu) phi_D(lambda P_nu) = 0
  std::optional<MultiIndex> first_nondiagonal;
  std::optional<std::pair<MultiIndex, MultiIndex>> first_overlap;

  bool preserves() const { return images_diagonal && pairwise_orthogonal; }
  /// The pairwise criterion is necessary for diagonal images; when only the
  /// criterion holds at this depth the two checks disagree.
  bool checks_disagree() const { return images_diagonal != pairwise_orthogonal; }
};

/// Depth-bounded check that lambda_u maps the diagonal into itself.
DiagonalProbe diagonal_preservation_probe(const Endo& e, int depth);

enum class ScalingVerdict { VerifiedToDepth, NonModestWitness, Inconclusive };
std::string_view to_string(ScalingVerdict v);

struct ScalingWitness {
  MultiIndex kappa;
  MultiIndex mu;
  MultiIndex nu;
  /// P_kappa <= lambda(P_{mu nu^l}) was verified for l = 1..checked_range.
  int checked_range = 0;
};

struct ScalingReport {
  ScalingVerdict verdict = ScalingVerdict::Inconclusive;
  int depth = 0;
  int period_budget = 0;
  /// Growth rate m of the threshold schedule ceil(|mu| / m).
  std::size_t threshold_divisor = 1;
  /// min(lambda(P_mu)) for every explored mu, shortest first then lex.
  std::vector<std::pair<MultiIndex, std::size_t>> profile;
  std::optional<ScalingWitness> witness;
};

/// Semi-decision procedure for modest scaling of a diagonal-preserving
/// endomorphism.
///
/// Computes min(lambda(P_mu)) for all 1 <= |mu| <= depth. A witness is a
/// periodic path mu nu nu ... with |mu nu^budget| <= depth and a cylinder
/// kappa lying under lambda(P_{mu nu^l}) for every l <= budget while being
/// shorter than the schedule value ceil(|mu nu^budget| / m), where m is the
/// longest word occurring in u. Without a witness the verdict is
/// VerifiedToDepth when every explored mu meets the schedule, and
/// Inconclusive otherwise.
ScalingReport modest_scaling_probe(const Endo& e, int depth, int period_budget);

/// w = v + S_{i(k)} S_{i(k+1)}^* where v is the order-preserving table from
/// the complement code of i(k+1) onto the complement code of i(k). The
/// endomorphism of w keeps P_{i(k)} under the image of every P_{i(r)}, so it
/// is not modestly scaling.
Element stalled_cylinder_unitary(int letter, int k);

}  // namespace cuntz
