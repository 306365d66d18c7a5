#pragma once

#include <string_view>

#include "cuntz/element.hpp"
#include "cuntz/thompson.hpp"

namespace cuntz {

/// Three pairwise orthogonal binary words ordered mu < kappa < nu.
struct OrthTriple {
  MultiIndex mu;
  MultiIndex kappa;
  MultiIndex nu;

  bool valid() const;
};

/// Which end of the triple has room: nu is not 22...2, or mu is not 11...1.
enum class SeparatorSide { NuNotAll2s, MuNotAll1s };
std::string_view to_string(SeparatorSide side);

/// An element w of F whose diagonal part one_w(w) is exactly p:
/// w = p + sum_j S_{mu_j} x_0 S_{mu_j}^* over the standard form of 1 - p.
TableUnitary unitary_fixing_projection(const Element& p);

/// An element w of V that fixes P_mu pointwise and moves P_nu off itself, by
/// swapping nu with the lex-first cylinder kappa of length max(|mu|, |nu|)
/// orthogonal to both. Needs |mu|, |nu| >= 2.
TableUnitary cylinder_swap(const MultiIndex& mu, const MultiIndex& nu);

/// An element w of F with P_mu <= one_w(w) and P_nu w P_nu = 0 (NuNotAll2s),
/// or with P_nu <= one_w(w) and P_mu w P_mu = 0 (MuNotAll1s).
///
/// The complement of {mu, nu} is cut into blocks p1 < mu < p2 < nu < p3 < p4
/// (coarsest cylinders, p3 the first cylinder after nu). w fixes p1 + P_mu,
/// stretches p2 over p2 + P_nu, carries P_nu onto p3 and squeezes p3 + p4 into
/// p4; each block is realized by an order-preserving code pairing.
TableUnitary order_preserving_separator(const OrthTriple& triple,
                                        SeparatorSide side);

}  // namespace cuntz
