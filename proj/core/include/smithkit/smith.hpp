#pragma once

#include <optional>
#include <vector>

#include "smithkit/betti_vector.hpp"
#include "smithkit/simplicial_complex.hpp"

namespace smithkit {

/// Everything the Smith sequences say about one simplicial involution (X, c).
/// F is the fixed subcomplex and X/c the orbit complex. All Betti vectors are
/// padded to dim X + 1 entries.
struct SmithReport {
  BettiVector betti_X;
  BettiVector betti_F;
  // H_*(X/c, F), computed directly from the orbit complex.
  BettiVector betti_rel;
  // dim coker(H_p(X/c, F) + H_p(F) -> H_p(X)) for each degree p.
  std::vector<Count> coker_dims;
  Count deficiency = 0;
  bool maximal = false;
  // Image equals kernel at every position of the computed long sequence.
  bool exactness_verified = false;
  // The orbit-sum complex im(1 + c) has the homology of (X/c, F).
  bool transfer_verified = false;
  // Size of the complex the computation ran on, after regularization.
  std::size_t regular_vertex_count = 0;
};

SmithReport smith_report(const SimplicialInvolution& k);

/// Hypotheses under which the stronger relative identities hold: X is a
/// closed manifold of dimension 2n and every component of F has dimension n.
struct ManifoldHypothesis {
  int half_dimension = 0;
};

struct RelativeQuotientCheck {
  // beta_r(X/c, F) = sum_{k >= r} (beta_k(X) - beta_k(F)) for every r.
  bool tail_sums = false;
  // beta_r(X/c, F) = sum_{k >= r} beta_k(X) for r > n.
  std::optional<bool> upper_degrees;
  // 2 beta_*(X/c, F) = n beta_*(X).
  std::optional<bool> total;

  [[nodiscard]] bool passed() const {
    return tail_sums && upper_degrees.value_or(true) && total.value_or(true);
  }
};

// Requires a maximal involution; throws PreconditionError otherwise.
RelativeQuotientCheck check_relative_quotient(const SimplicialInvolution& k,
                                              std::optional<ManifoldHypothesis> manifold = std::nullopt);
RelativeQuotientCheck check_relative_quotient(const SmithReport& report,
                                              std::optional<ManifoldHypothesis> manifold = std::nullopt);

bool verify_relative_quotient(const SimplicialInvolution& k,
                              std::optional<ManifoldHypothesis> manifold = std::nullopt);

}  // namespace smithkit
