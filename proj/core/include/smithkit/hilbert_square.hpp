#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smithkit/betti_vector.hpp"
#include "smithkit/profile.hpp"

namespace smithkit {

// Real locus of the Hilbert square X^[2] splits, away from the exceptional
// divisor E, into pieces H0 = (X/conj) minus X(R), H_i = Sym^2(F_i) minus the
// diagonal, and the extra components F_s x F_t for s < t.

/// Betti numbers of the piece H0 in degrees 0..n-1, plus twice its total.
struct H0Betti {
  BettiVector low_degrees;
  Count twice_total = 0;
  // Throws ConsistencyError when twice_total is odd.
  [[nodiscard]] Count total() const;
};

struct StrataReport {
  std::optional<H0Betti> h0;  // present for maximal profiles
  std::vector<BettiVector> components;
  std::vector<Count> component_totals;
  BettiVector exceptional;  // E(R), degrees 0..2n-1
  BettiVector extra;        // union of F_s x F_t, degrees 0..2n
};

struct SquareTotal {
  Count value = 0;
  // False when X has 2-torsion; value is then only a lower bound.
  bool exact = true;
};

enum class Verdict { maximal, not_maximal, undetermined };

std::string to_string(Verdict v);

namespace reason {
inline constexpr const char* empty_real_locus = "empty_real_locus";
inline constexpr const char* variety_not_maximal = "variety_not_maximal";
inline constexpr const char* ci_deficiency_formula = "ci_deficiency_formula";
inline constexpr const char* real_betti_mismatch = "real_betti_not_matching_even_complex_betti";
inline constexpr const char* algebraic_generation = "real_cycles_algebraic_generation";
inline constexpr const char* no_criterion = "no_applicable_criterion";
}  // namespace reason

struct DeficiencyReport {
  std::optional<Count> deficiency;
  // Betti numbers of X^[2](R) in the degrees that are determined.
  std::map<int, Count> per_degree_real_betti;
  SquareTotal total_square_complex;
  std::optional<Count> total_square_real;
  std::optional<Count> euler_square_real;
  Verdict verdict = Verdict::undetermined;
  std::vector<std::string> reasons;
  StrataReport strata;
};

// chi(X^[2](R)). chi_real must equal real_euler_characteristic(p).
Count euler_char_square_real(const RealVarietyProfile& p, Count chi_real);
Count euler_char_square_real(const RealVarietyProfile& p);

// Requires b of length 2n+1.
SquareTotal betti_total_square_complex(int n, const BettiVector& b, bool torsion2_free);

H0Betti betti_H0(const RealVarietyProfile& p);
// Degrees 0..2n. Requires f palindromic of length n+1.
BettiVector betti_Hi(const BettiVector& f, int n);
Count betti_Hi_total(const BettiVector& f, int n);
BettiVector betti_ER(const RealVarietyProfile& p);
Count betti_extra(const RealVarietyProfile& p, int k);
StrataReport strata(const RealVarietyProfile& p);

Count rank_inc0(int k, const RealVarietyProfile& p);
Count rank_inc(int m, const RealVarietyProfile& p);
Count rank_mu(int k, const RealVarietyProfile& p);

// Closed form for beta_k(X^[2](R)): even k < n when n is odd, odd k < n when n
// is even. Cross-checked against the Mayer-Vietoris assembly of the strata.
Count betti_square_real(const RealVarietyProfile& p, int k);
Count betti_square_real_mayer_vietoris(const RealVarietyProfile& p, int k);
std::vector<int> determined_degrees(int n);

// Maximal complete intersection profiles with n >= 2 only.
DeficiencyReport deficiency_square(const RealVarietyProfile& p);

Count deficiency_via_mu(Count rank_mu_total, int n, Count beta_star, Count beta_odd);
Count implied_rank_mu(Count deficiency, int n, Count beta_star, Count beta_odd);

// Requires a valid profile. Fills verdict, reasons and whatever else the
// profile's hypotheses allow.
DeficiencyReport maximality_verdict(const RealVarietyProfile& p);

// Deficiency of the Fano variety of lines of a cubic of dimension n.
Count cubic_fano_deficiency(int n, Count defi_x, Count defi_square);

}  // namespace smithkit
