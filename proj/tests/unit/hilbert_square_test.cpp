#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "profiles.hpp"
#include "smithkit/errors.hpp"
#include "smithkit/hilbert_square.hpp"

using namespace smithkit;
using namespace smithkit::testing;

namespace {

long long oracle_total(int n, const BettiVector& b) {
  long long t = 0;
  for (long long x : oracle::hilbert_square_betti(n, {b.values().begin(), b.values().end()})) t += x;
  return t;
}

}  // namespace

TEST(EulerSquareReal, KnownValues) {
  EXPECT_EQ(euler_char_square_real(cubic_surface_max(), -5), 22);
  EXPECT_EQ(euler_char_square_real(quadric_surface_max(), 0), 2);
  // X(R) empty: the square's real locus is X/conj, whose Euler characteristic is chi(X)/2.
  const auto empty = quadric_surface_empty();
  EXPECT_EQ(euler_char_square_real(empty, 0), empty.complex_betti.alternating_sum() / 2);
  EXPECT_THROW(euler_char_square_real(cubic_surface_max(), 3), ConsistencyError);
}

TEST(TotalSquareComplex, KnownValues) {
  const auto p2 = betti_total_square_complex(2, {1, 0, 1, 0, 1}, true);
  EXPECT_EQ(p2.value, 9);
  EXPECT_TRUE(p2.exact);
  EXPECT_EQ(betti_total_square_complex(2, {1, 0, 7, 0, 1}, true).value, 54);
  EXPECT_EQ(betti_total_square_complex(2, {1, 0, 2, 0, 1}, true).value, 14);
  EXPECT_EQ(betti_total_square_complex(1, {1, 2, 1}, true).value, 8);
  EXPECT_FALSE(betti_total_square_complex(1, {1, 2, 1}, false).exact);
  EXPECT_THROW(betti_total_square_complex(2, {1, 0, 1}, true), PreconditionError);
}

TEST(TotalSquareComplex, MatchesPoincarePolynomialCount) {
  EXPECT_EQ(oracle::hilbert_square_betti(2, {1, 0, 1, 0, 1}), (std::vector<long long>{1, 0, 2, 0, 3, 0, 2, 0, 1}));
  EXPECT_EQ(oracle::hilbert_square_betti(1, {1, 2, 1}), (std::vector<long long>{1, 2, 2, 2, 1}));
  std::mt19937_64 rng(51);
  for (int i = 0; i < 300; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto p = random_maximal_profile(rng, n);
    EXPECT_EQ(betti_total_square_complex(n, p.complex_betti, true).value, oracle_total(n, p.complex_betti));
  }
}

TEST(BettiH0, KnownValues) {
  const auto cubic = betti_H0(cubic_surface_max());
  EXPECT_EQ(cubic.low_degrees, (BettiVector{1, 1}));
  EXPECT_EQ(cubic.total(), 9);
  const auto threefold = betti_H0(cubic_threefold_max());
  EXPECT_EQ(threefold.low_degrees, (BettiVector{1, 1, 2}));
  EXPECT_EQ(threefold.total(), 21);
  const auto p2 = betti_H0(projective_plane_max());
  EXPECT_EQ(p2.low_degrees, (BettiVector{1, 1}));
  EXPECT_EQ(p2.total(), 3);
  EXPECT_THROW(betti_H0(quadric_surface_empty()), PreconditionError);
}

TEST(BettiHi, KnownValues) {
  EXPECT_EQ(betti_Hi({1, 7, 1}, 2), (BettiVector{1, 8, 29, 7, 0}));
  EXPECT_EQ(betti_Hi_total({1, 7, 1}, 2), 45);
  EXPECT_EQ(betti_Hi({1, 1}, 1), (BettiVector{1, 1, 0}));
  EXPECT_THROW(betti_Hi({1}, 1), PreconditionError);
}

TEST(BettiHi, PerDegreeSumsMatchClosedForm) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 500; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const auto comps = random_components(rng, n, 2 * std::uniform_int_distribution<Count>(1, 15)(rng), 1);
    if (comps.empty()) continue;
    EXPECT_EQ(betti_Hi(comps[0], n).total(), betti_Hi_total(comps[0], n));
  }
}

TEST(BettiHi, MaximalTotalsMatchSquareAndHalfDimensionTerms) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const auto p = random_maximal_profile(rng, n);
    Count totals = 0, squares = 0;
    for (const auto& f : p.real_components) {
      totals += betti_Hi(f, n).total();
      squares += f.total() * f.total();
    }
    // 2 * sum = sum beta(F_i)^2 + (n-1) beta_*
    EXPECT_EQ(2 * totals, squares + (n - 1) * p.complex_betti.total());
    EXPECT_EQ(betti_H0(p).twice_total, n * p.complex_betti.total());
  }
}

TEST(BettiER, KnownValues) {
  const auto cubic = betti_ER(cubic_surface_max());
  EXPECT_EQ(cubic, (BettiVector{1, 8, 8, 1}));
  EXPECT_EQ(cubic.total(), 18);
  const auto curve = make_profile(1, {1, 2, 1}, {{1, 1}}, false);
  EXPECT_EQ(betti_ER(curve), (BettiVector{1, 1}));
  const auto threefold = betti_ER(cubic_threefold_max());
  EXPECT_EQ(threefold, (BettiVector{1, 7, 13, 13, 7, 1}));
  EXPECT_EQ(threefold.total(), 42);
}

TEST(BettiER, TotalIsNTimesRealTotal) {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 300; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const auto p = random_maximal_profile(rng, n);
    EXPECT_EQ(betti_ER(p).total(), n * aggregate_real_betti(p).total());
  }
}

TEST(BettiExtra, KnownValues) {
  EXPECT_EQ(betti_extra(cubic_surface_max(), 2), 0);
  const auto tori = make_profile(2, {1, 0, 6, 0, 1}, {{1, 2, 1}, {1, 2, 1}}, false);
  EXPECT_EQ(betti_extra(tori, 2), 6);
  const auto spheres = make_profile(2, {1, 0, 4, 0, 1}, {{1, 0, 1}, {1, 0, 1}}, false);
  EXPECT_EQ(betti_extra(spheres, 1), 0);
}

TEST(Ranks, KnownValues) {
  const auto cubic = cubic_surface_max();
  EXPECT_EQ(rank_inc0(0, cubic), 1);
  EXPECT_EQ(rank_inc0(1, cubic), 1);
  EXPECT_EQ(rank_inc0(2, cubic_threefold_max()), 2);
  EXPECT_THROW(rank_inc0(2, cubic), DomainError);

  EXPECT_EQ(rank_inc(2, cubic), 7);
  EXPECT_EQ(rank_inc(0, cubic), 1);
  EXPECT_EQ(rank_inc(3, cubic), 0);
  EXPECT_THROW(rank_inc(5, cubic), DomainError);

  EXPECT_EQ(rank_mu(0, cubic), 1);
  EXPECT_EQ(rank_mu(1, cubic), 1);
  EXPECT_EQ(rank_mu(2, cubic_threefold_max()), 7);
  EXPECT_THROW(rank_mu(2, cubic), PreconditionError);
  auto no_ci = cubic;
  no_ci.flags.complete_intersection.reset();
  EXPECT_THROW(rank_mu(0, no_ci), PreconditionError);
}

TEST(Ranks, MuBoundedBySourceAndTarget) {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 300; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    const CompleteIntersection ci(n + 1, {std::uniform_int_distribution<int>(2, 4)(rng)});
    const auto p = random_maximal_ci_profile(rng, ci);
    if (p.real_components.empty()) continue;
    const auto e = betti_ER(p);
    const auto h0 = betti_H0(p);
    for (int k = 0; k <= n - 1; ++k) {
      Count target = h0.low_degrees[k];
      for (const auto& f : p.real_components) target += betti_Hi(f, n)[k];
      EXPECT_LE(rank_mu(k, p), std::min(e[k], target));
    }
  }
}

TEST(BettiSquareReal, KnownValues) {
  EXPECT_EQ(betti_square_real(cubic_surface_max(), 1), 8);
  EXPECT_EQ(betti_square_real(cubic_threefold_max(), 0), 1);
  EXPECT_THROW(betti_square_real(cubic_surface_max(), 2), DomainError);
  EXPECT_THROW(betti_square_real(cubic_threefold_max(), 1), DomainError);
  EXPECT_EQ(betti_square_real_mayer_vietoris(quartic_k3_two_components(), 1), 41);
}

TEST(DeficiencySquare, KnownValues) {
  EXPECT_EQ(deficiency_square(cubic_surface_max()).deficiency, 0);
  EXPECT_EQ(deficiency_square(cubic_surface_max()).verdict, Verdict::maximal);
  EXPECT_EQ(deficiency_square(quadric_surface_max()).deficiency, 0);
  EXPECT_EQ(deficiency_square(two_quadrics_surface_max()).deficiency, 0);
  EXPECT_EQ(deficiency_square(cubic_threefold_max()).deficiency, 0);
  const auto k3 = deficiency_square(quartic_k3_two_components());
  EXPECT_EQ(k3.deficiency, 4);
  EXPECT_EQ(k3.verdict, Verdict::not_maximal);
  EXPECT_EQ(k3.total_square_real, 320);
  EXPECT_EQ(k3.total_square_complex.value, 324);
  EXPECT_THROW(deficiency_square(quadric_surface_empty()), PreconditionError);
}

TEST(DeficiencySquare, RoutesAgreeOnRandomProfiles) {
  std::mt19937_64 rng(56);
  const std::vector<CompleteIntersection> cis{{3, {2}}, {3, {3}}, {3, {4}}, {4, {2, 2}}, {4, {3}}, {5, {3}},
                                              {6, {2, 2}}, {5, {4}}, {6, {3}}, {7, {3}}, {8, {2}}};
  int checked = 0;
  for (int i = 0; checked < 500 && i < 2000; ++i) {
    const auto& ci = cis[static_cast<std::size_t>(i) % cis.size()];
    const auto p = random_maximal_ci_profile(rng, ci);
    if (p.real_components.empty()) continue;
    const auto rep = deficiency_square(p);
    ASSERT_TRUE(rep.deficiency.has_value());
    EXPECT_GE(*rep.deficiency, 0);
    EXPECT_EQ(*rep.deficiency % 4, 0);
    ++checked;
  }
  EXPECT_EQ(checked, 500);
}

TEST(DeficiencyViaMu, KnownValues) {
  EXPECT_EQ(implied_rank_mu(0, 2, 9, 0), 9);
  EXPECT_EQ(deficiency_via_mu(9, 2, 9, 0), 0);
  EXPECT_THROW(implied_rank_mu(1, 2, 9, 0), ConsistencyError);
  for (Count r = 0; r < 10; ++r)
    for (int n = 1; n < 10; ++n)
      for (Count b = 1; b < 10; ++b) EXPECT_EQ(implied_rank_mu(deficiency_via_mu(r, n, b, b / 2), n, b, b / 2), r);
}

TEST(MaximalityVerdict, KnownValues) {
  const auto empty = maximality_verdict(quadric_surface_empty());
  EXPECT_EQ(empty.verdict, Verdict::not_maximal);
  EXPECT_EQ(empty.reasons, std::vector<std::string>{reason::empty_real_locus});

  const auto fourfold = make_profile(4, {1, 0, 1, 0, 23, 0, 1, 0, 1}, {{1, 2, 21, 2, 1}}, true,
                                     CompleteIntersection(5, {3}));
  const auto v = maximality_verdict(fourfold);
  EXPECT_EQ(v.verdict, Verdict::not_maximal);
  EXPECT_EQ(v.reasons, std::vector<std::string>{reason::ci_deficiency_formula});
  EXPECT_EQ(v.deficiency, 4);

  auto quadric = make_profile(4, {1, 0, 1, 0, 2, 0, 1, 0, 1}, {{1, 1, 2, 1, 1}}, true);
  quadric.flags.real_algebraic_generation = true;
  const auto q = maximality_verdict(quadric);
  EXPECT_EQ(q.verdict, Verdict::maximal);
  EXPECT_EQ(q.reasons, std::vector<std::string>{reason::algebraic_generation});
}

TEST(MaximalityVerdict, DecisionOrder) {
  auto not_max = make_profile(2, {1, 0, 7, 0, 1}, {{1, 3, 1}}, false, CompleteIntersection(3, {3}));
  EXPECT_EQ(maximality_verdict(not_max).reasons, std::vector<std::string>{reason::variety_not_maximal});

  auto mismatch = make_profile(4, {1, 0, 1, 0, 2, 0, 1, 0, 1}, {{1, 0, 4, 0, 1}}, true);
  EXPECT_EQ(maximality_verdict(mismatch).verdict, Verdict::not_maximal);
  EXPECT_EQ(maximality_verdict(mismatch).reasons, std::vector<std::string>{reason::real_betti_mismatch});

  auto no_flag = make_profile(4, {1, 0, 1, 0, 2, 0, 1, 0, 1}, {{1, 1, 2, 1, 1}}, true);
  EXPECT_EQ(maximality_verdict(no_flag).verdict, Verdict::undetermined);
  EXPECT_FALSE(maximality_verdict(no_flag).deficiency.has_value());

  // Complete intersections never come out undetermined.
  EXPECT_EQ(maximality_verdict(cubic_surface_max()).verdict, Verdict::maximal);

  auto invalid = cubic_surface_max();
  invalid.real_components = {{1, 9, 1}};
  EXPECT_THROW(maximality_verdict(invalid), PreconditionError);
}

TEST(CubicFano, KnownValues) {
  EXPECT_EQ(cubic_fano_deficiency(3, 0, 0), 0);
  const auto square = deficiency_square(cubic_fourfold_max());
  ASSERT_TRUE(square.deficiency.has_value());
  EXPECT_EQ(*square.deficiency, 8);
  EXPECT_GT(cubic_fano_deficiency(4, 0, *square.deficiency), 0);
  EXPECT_EQ(cubic_fano_deficiency(3, 2, 8), 0);
  EXPECT_THROW(cubic_fano_deficiency(3, 2, 4), ConsistencyError);
}
