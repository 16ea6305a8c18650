#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smithkit/betti_vector.hpp"
#include "smithkit/complete_intersection.hpp"

namespace smithkit {

struct ProfileFlags {
  bool maximal = false;
  std::optional<CompleteIntersection> complete_intersection;
  bool h_odd_zero = false;
  bool torsion2_free = false;
  bool real_algebraic_generation = false;
};

/// Cohomological data of a real nonsingular projective variety X of complex
/// dimension n: the F2 Betti numbers of X (length 2n+1) and of each connected
/// component of the real locus (length n+1 each).
struct RealVarietyProfile {
  int n = 0;
  BettiVector complex_betti;
  std::vector<BettiVector> real_components;
  ProfileFlags flags;
};

struct Violation {
  std::string code;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Every broken invariant, in a fixed order. Empty means the profile is valid.
std::vector<Violation> validate(const RealVarietyProfile& p);

// Component-wise sum of the real components, padded to n+1 entries.
BettiVector aggregate_real_betti(const RealVarietyProfile& p);

// Euler characteristic of the real locus: the alternating sum for even n and
// 0 for odd n.
Count real_euler_characteristic(const RealVarietyProfile& p);

/// The three (odd n) or two (even n) sums over the aggregate real Betti
/// numbers that maximality and duality force, each stored with the value it
/// must equal. Quantities are scaled to stay integral.
struct BettiIdentity {
  std::string name;
  Count lhs = 0;
  Count rhs = 0;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

// Requires p.flags.maximal; throws PreconditionError otherwise.
std::vector<BettiIdentity> betti_identities(const RealVarietyProfile& p);
bool check_betti_identities(const RealVarietyProfile& p);

}  // namespace smithkit
