#include "smithkit/hilbert_square.hpp"

#include <algorithm>

#include "smithkit/complete_intersection.hpp"
#include "smithkit/errors.hpp"

namespace smithkit {
namespace {

Count halve(Count twice, const char* what) {
  if (twice % 2 != 0) throw ConsistencyError(std::string(what) + " is not an integer");
  return twice / 2;
}

void require_maximal(const RealVarietyProfile& p, const char* op) {
  if (!p.flags.maximal) throw PreconditionError(std::string(op) + " needs a maximal profile");
}

void require_maximal_ci(const RealVarietyProfile& p, const char* op) {
  require_maximal(p, op);
  if (!p.flags.complete_intersection) throw PreconditionError(std::string(op) + " needs a complete intersection");
}

// sum_{a+b=k, a<b} x_a x_b
Count mixed_products(const BettiVector& x, int k) {
  Count s = 0;
  for (int a = 0; 2 * a < k; ++a) s += x[a] * x[k - a];
  return s;
}

}  // namespace

Count H0Betti::total() const { return halve(twice_total, "total Betti number of H0"); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::maximal:
      return "maximal";
    case Verdict::not_maximal:
      return "not_maximal";
    case Verdict::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

Count euler_char_square_real(const RealVarietyProfile& p, Count chi_real) {
  if (chi_real != real_euler_characteristic(p))
    throw ConsistencyError("supplied Euler characteristic of the real locus disagrees with its Betti numbers");
  const BettiVector& b = p.complex_betti;
  const Count twice = b.total() - 2 * b.odd() + chi_real * chi_real - 2 * chi_real;
  return halve(twice, "Euler characteristic of the real Hilbert square");
}

Count euler_char_square_real(const RealVarietyProfile& p) { return euler_char_square_real(p, real_euler_characteristic(p)); }

SquareTotal betti_total_square_complex(int n, const BettiVector& b, bool torsion2_free) {
  if (n < 0 || b.size() != static_cast<std::size_t>(2 * n + 1))
    throw PreconditionError("complex Betti vector must have 2n+1 entries");
  const Count beta = b.total();
  return {beta * (beta - 1) / 2 + n * beta - b.odd(), torsion2_free};
}

H0Betti betti_H0(const RealVarietyProfile& p) {
  require_maximal(p, "betti_H0");
  const int n = p.n;
  std::vector<Count> low(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) low[static_cast<std::size_t>(k)] = p.complex_betti.range_sum(2 * n - k, 2 * n);
  return {BettiVector(std::move(low)), n * p.complex_betti.total()};
}

Count betti_Hi_total(const BettiVector& f, int n) {
  Count weighted = 0;
  for (int k = 0; k <= n; ++k) weighted += (n - k) * f[k];
  const Count beta = f.total();
  return beta * (beta - 1) / 2 + weighted;
}

BettiVector betti_Hi(const BettiVector& f, int n) {
  if (n < 1 || f.size() != static_cast<std::size_t>(n + 1) || !f.palindromic())
    throw PreconditionError("a real component needs a palindromic Betti vector of length n+1");
  std::vector<Count> out(static_cast<std::size_t>(2 * n + 1), 0);
  for (int d = 0; d <= 2 * n; ++d) {
    const int k = d / 2;
    Count v = mixed_products(f, d);
    if (d % 2 == 0) {
      v += f[k] * (f[k] - 1) / 2 + f.range_sum(2 * k - n + 1, k);
    } else {
      v += f.range_sum(2 * k - n + 2, k);
    }
    out[static_cast<std::size_t>(d)] = v;
  }
  BettiVector result(std::move(out));
  if (result.total() != betti_Hi_total(f, n))
    throw ConsistencyError("per-degree Betti numbers of a symmetric square do not add up to the closed form");
  return result;
}

BettiVector betti_ER(const RealVarietyProfile& p) {
  const int n = p.n;
  const BettiVector r = aggregate_real_betti(p);
  std::vector<Count> out(static_cast<std::size_t>(std::max(2 * n, 0)), 0);
  for (int k = 0; k < 2 * n; ++k) out[static_cast<std::size_t>(k)] = r.range_sum(k - n + 1, k);
  return BettiVector(std::move(out));
}

Count betti_extra(const RealVarietyProfile& p, int k) {
  const auto& comps = p.real_components;
  Count sum = 0;
  for (std::size_t s = 0; s < comps.size(); ++s)
    for (std::size_t t = s + 1; t < comps.size(); ++t)
      for (int i = 0; i <= k; ++i) sum += comps[s][i] * comps[t][k - i];
  return sum;
}

StrataReport strata(const RealVarietyProfile& p) {
  StrataReport s;
  if (p.flags.maximal) s.h0 = betti_H0(p);
  for (const auto& f : p.real_components) {
    s.components.push_back(betti_Hi(f, p.n));
    s.component_totals.push_back(betti_Hi_total(f, p.n));
  }
  s.exceptional = betti_ER(p);
  std::vector<Count> extra(static_cast<std::size_t>(2 * p.n + 1), 0);
  for (int k = 0; k <= 2 * p.n; ++k) extra[static_cast<std::size_t>(k)] = betti_extra(p, k);
  s.extra = BettiVector(std::move(extra));
  return s;
}

Count rank_inc0(int k, const RealVarietyProfile& p) {
  require_maximal(p, "rank_inc0");
  if (k < 0 || k >= p.n) throw DomainError("rank_inc0 is known only for 0 <= k < n");
  return p.complex_betti.range_sum(0, k);
}

Count rank_inc(int m, const RealVarietyProfile& p) {
  if (m < 0 || m > 2 * p.n) throw DomainError("rank_inc needs 0 <= m <= 2n");
  return aggregate_real_betti(p).range_sum(std::max(0, m - p.n + 1), m / 2);
}

Count rank_mu(int k, const RealVarietyProfile& p) {
  require_maximal_ci(p, "rank_mu");
  if (k < 0 || k > p.n - 1) throw PreconditionError("rank_mu is known only for 0 <= k <= n-1");
  return aggregate_real_betti(p).range_sum(0, k / 2);
}

std::vector<int> determined_degrees(int n) {
  std::vector<int> out;
  for (int k = n % 2 == 1 ? 0 : 1; k <= n - 1; k += 2) out.push_back(k);
  return out;
}

namespace {

void require_determined_degree(const RealVarietyProfile& p, int k) {
  const bool parity_ok = p.n % 2 == 1 ? k % 2 == 0 : k % 2 != 0;
  if (k < 0 || k > p.n - 1 || !parity_ok)
    throw DomainError("degree " + std::to_string(k) + " of the real Hilbert square is not determined for n = " +
                      std::to_string(p.n));
}

Count closed_form(const RealVarietyProfile& p, int k) {
  const BettiVector r = aggregate_real_betti(p);
  if (p.n % 2 == 1) {
    const int l = k / 2;
    Count squares = 0;
    for (int i = 0; i <= 2 * l; ++i) squares += r[i] * r[2 * l - i];
    const Count twice =
        2 * (l + 1) + squares + 2 * r.range_sum(0, 2 * l - 1) - r[l] - 2 * r.range_sum(0, l - 1);
    return halve(twice, "real Hilbert square Betti number");
  }
  const int l = (k + 1) / 2;
  return l + mixed_products(r, 2 * l - 1) + r.range_sum(0, 2 * l - 2) - r.range_sum(0, l - 1);
}

}  // namespace

Count betti_square_real_mayer_vietoris(const RealVarietyProfile& p, int k) {
  require_maximal_ci(p, "betti_square_real");
  require_determined_degree(p, k);
  const H0Betti h0 = betti_H0(p);
  const BettiVector e = betti_ER(p);
  Count v = h0.low_degrees[k] + e[k - 1] + betti_extra(p, k);
  for (const auto& f : p.real_components) v += betti_Hi(f, p.n)[k];
  v -= rank_mu(k, p);
  if (k >= 1) v -= rank_mu(k - 1, p);
  return v;
}

Count betti_square_real(const RealVarietyProfile& p, int k) {
  require_maximal_ci(p, "betti_square_real");
  require_determined_degree(p, k);
  const Count v = closed_form(p, k);
  if (v != betti_square_real_mayer_vietoris(p, k))
    throw ConsistencyError("closed form and Mayer-Vietoris assembly disagree in degree " + std::to_string(k));
  return v;
}

DeficiencyReport deficiency_square(const RealVarietyProfile& p) {
  require_maximal_ci(p, "deficiency_square");
  const int n = p.n;
  if (n < 2) throw PreconditionError("deficiency_square needs n >= 2");
  const BettiVector r = aggregate_real_betti(p);

  Count sum = 0;
  for (int l = 1; l <= n / 2; ++l) sum += r.range_sum(0, l - 1);
  const Count defi = 4 * (sum - d_of_n(n));
  if (defi < 0) throw ConsistencyError("negative Hilbert square deficiency; the profile is inconsistent");

  bool low_degrees_trivial = true;
  for (int i = 0; i <= n / 2 - 1; ++i) low_degrees_trivial = low_degrees_trivial && r[i] == 1;
  if (low_degrees_trivial != (defi == 0))
    throw ConsistencyError("deficiency formula and low-degree Betti criterion disagree");

  DeficiencyReport rep;
  rep.strata = strata(p);
  rep.total_square_complex = betti_total_square_complex(n, p.complex_betti, true);
  rep.euler_square_real = euler_char_square_real(p);
  Count determined = 0;
  for (int k : determined_degrees(n)) {
    rep.per_degree_real_betti[k] = betti_square_real(p, k);
    determined += rep.per_degree_real_betti[k];
  }
  // X^[2](R) is a closed 2n-manifold: duality plus chi recover its total.
  rep.total_square_real = n % 2 == 1 ? 4 * determined - *rep.euler_square_real : 4 * determined + *rep.euler_square_real;
  if (rep.total_square_complex.value - *rep.total_square_real != defi)
    throw ConsistencyError("deficiency formula disagrees with the total Betti numbers of the square");

  rep.deficiency = defi;
  rep.verdict = defi == 0 ? Verdict::maximal : Verdict::not_maximal;
  rep.reasons = {reason::ci_deficiency_formula};
  return rep;
}

Count deficiency_via_mu(Count rank_mu_total, int n, Count beta_star, Count beta_odd) {
  return 2 * rank_mu_total - n * beta_star - beta_odd;
}

Count implied_rank_mu(Count deficiency, int n, Count beta_star, Count beta_odd) {
  return halve(deficiency + n * beta_star + beta_odd, "implied Mayer-Vietoris rank");
}

DeficiencyReport maximality_verdict(const RealVarietyProfile& p) {
  const auto violations = validate(p);
  if (!violations.empty()) throw PreconditionError("invalid profile: " + violations.front().message);

  const bool dim_ok = p.n >= 2;
  const BettiVector r = aggregate_real_betti(p);
  auto decided = [&](Verdict v, const char* why) {
    DeficiencyReport rep;
    rep.strata = strata(p);
    rep.total_square_complex = betti_total_square_complex(p.n, p.complex_betti, p.flags.torsion2_free);
    rep.verdict = v;
    rep.reasons = {why};
    return rep;
  };

  if (dim_ok && p.real_components.empty()) return decided(Verdict::not_maximal, reason::empty_real_locus);
  if (dim_ok && !p.flags.maximal) return decided(Verdict::not_maximal, reason::variety_not_maximal);
  if (dim_ok && p.flags.complete_intersection) return deficiency_square(p);

  if (p.flags.h_odd_zero) {
    bool all_match = true;
    for (int k = 0; k <= p.n; ++k) all_match = all_match && r[k] == p.complex_betti[2 * k];
    if (dim_ok && !all_match) return decided(Verdict::not_maximal, reason::real_betti_mismatch);
    if (p.flags.maximal && all_match && p.flags.real_algebraic_generation) {
      DeficiencyReport rep = decided(Verdict::maximal, reason::algebraic_generation);
      rep.deficiency = 0;
      return rep;
    }
  }
  return decided(Verdict::undetermined, reason::no_criterion);
}

Count cubic_fano_deficiency(int n, Count defi_x, Count defi_square) {
  if (n < 1) throw DomainError("cubic dimension must be at least 1");
  if (defi_x < 0 || defi_square < 0) throw ConsistencyError("deficiencies are nonnegative");
  const Count fano = defi_square - (n + 1) * defi_x;
  if (fano < 0) throw ConsistencyError("negative Fano variety deficiency; inputs are inconsistent");
  return fano;
}

}  // namespace smithkit
