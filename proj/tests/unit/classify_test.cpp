#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "smithkit/classify.hpp"
#include "smithkit/errors.hpp"

using namespace smithkit;

namespace {

std::set<std::pair<int, std::vector<int>>> equality_rows(const std::vector<ScanRow>& rows) {
  std::set<std::pair<int, std::vector<int>>> out;
  for (const auto& r : rows)
    if (r.admits_maximal_square) out.insert({r.n, r.ci.degrees()});
  return out;
}

bool exceptional(int n, const std::vector<int>& d) {
  return d.empty() || d == std::vector<int>{2} || d == std::vector<int>{2, 2} || (d == std::vector<int>{3} && n == 2);
}

}  // namespace

TEST(Scan, SmallRangeEqualityFamilies) {
  const auto rows = scan({6, 3, 4});
  for (const auto& [n, d] : equality_rows(rows)) EXPECT_TRUE(exceptional(n, d)) << n;
  std::set<std::vector<int>> families;
  for (const auto& [n, d] : equality_rows(rows)) families.insert(d);
  EXPECT_EQ(families, (std::set<std::vector<int>>{{}, {2}, {2, 2}, {3}}));
  for (const auto& r : rows) {
    EXPECT_LE(r.h_kk, r.b_2k);
    if (exceptional(r.n, r.ci.degrees())) EXPECT_TRUE(r.admits_maximal_square);
  }
}

TEST(Scan, CubicFourfoldRow) {
  const auto rows = scan({6, 3, 4});
  const auto it = std::find_if(rows.begin(), rows.end(), [](const ScanRow& r) {
    return r.n == 4 && r.ci.degrees() == std::vector<int>{3};
  });
  ASSERT_NE(it, rows.end());
  EXPECT_EQ(it->h_kk, 21);
  EXPECT_EQ(it->b_2k, 23);
  EXPECT_FALSE(it->admits_maximal_square);
}

TEST(Scan, TwoQuadricsFourfoldRow) {
  const auto rows = scan({6, 3, 4});
  const auto it = std::find_if(rows.begin(), rows.end(), [](const ScanRow& r) {
    return r.n == 4 && r.ci.degrees() == std::vector<int>{2, 2};
  });
  ASSERT_NE(it, rows.end());
  EXPECT_EQ(it->ci.ambient_dim(), 6);
  EXPECT_TRUE(it->admits_maximal_square);
}

TEST(Scan, SortedAndDeterministic) {
  const auto a = scan({8, 3, 5});
  const auto b = scan({8, 3, 5});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].ci, b[i].ci);
  for (std::size_t i = 1; i < a.size(); ++i) {
    const bool ordered = a[i - 1].n < a[i].n || (a[i - 1].n == a[i].n && a[i - 1].ci.degrees() < a[i].ci.degrees());
    EXPECT_TRUE(ordered);
  }
  for (const auto& [n, d] : equality_rows(a)) EXPECT_TRUE(exceptional(n, d));
}

TEST(Scan, RejectsBadBounds) { EXPECT_THROW(scan({0, 1, 1}), DomainError); }

TEST(Scan, LargerRangeContainsSmaller) {
  const auto small = scan({4, 2, 3});
  const auto large = scan({6, 3, 4});
  for (const auto& r : small) {
    const auto it = std::find_if(large.begin(), large.end(), [&](const ScanRow& x) { return x.ci == r.ci; });
    ASSERT_NE(it, large.end());
    EXPECT_EQ(it->h_kk, r.h_kk);
    EXPECT_EQ(it->admits_maximal_square, r.admits_maximal_square);
  }
}

TEST(LefschetzTrace, KnownValues) {
  EXPECT_TRUE(lefschetz_trace_check({3, {2}}, {1, 2, 1}));
  EXPECT_FALSE(lefschetz_trace_check({5, {3}}, {1, 1, 21, 1, 1}));
  EXPECT_TRUE(lefschetz_trace_check({2, {}}, {1, 1, 1}));
  EXPECT_THROW(lefschetz_trace_check({4, {3}}, {1, 1, 1, 1}), PreconditionError);
  EXPECT_THROW(lefschetz_trace_check({5, {3}}, {1, 2, 21, 2, 1}), PreconditionError);
}

TEST(Csv, HeaderAndRows) {
  std::ostringstream os;
  write_csv(os, scan({2, 1, 3}));
  EXPECT_EQ(os.str(),
            "ambient,degrees,n,h_kk,b_2k,equal,verdict\n"
            "2,\"()\",2,1,1,true,admits_maximal_square\n"
            "3,\"(2)\",2,2,2,true,admits_maximal_square\n"
            "3,\"(3)\",2,7,7,true,admits_maximal_square\n");
}
