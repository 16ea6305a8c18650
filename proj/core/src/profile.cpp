#include "smithkit/profile.hpp"

#include <algorithm>
#include <sstream>

#include "smithkit/errors.hpp"

namespace smithkit {
namespace {

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

bool has_negative(const BettiVector& b) {
  return std::any_of(b.values().begin(), b.values().end(), [](Count v) { return v < 0; });
}

}  // namespace

BettiVector aggregate_real_betti(const RealVarietyProfile& p) {
  BettiVector sum(std::vector<Count>(static_cast<std::size_t>(std::max(p.n, 0) + 1), 0));
  for (const auto& c : p.real_components) sum += c;
  return sum;
}

Count real_euler_characteristic(const RealVarietyProfile& p) {
  return p.n % 2 == 0 ? aggregate_real_betti(p).alternating_sum() : 0;
}

std::vector<Violation> validate(const RealVarietyProfile& p) {
  std::vector<Violation> out;
  auto flag = [&](std::string code, std::string message) { out.push_back({std::move(code), std::move(message)}); };

  if (p.n < 1) {
    flag("dimension", cat("dimension must be at least 1, got ", p.n));
    return out;
  }
  const auto expected = static_cast<std::size_t>(2 * p.n + 1);
  const BettiVector& b = p.complex_betti;
  if (b.size() != expected) flag("complex_betti_length", cat("complex Betti vector has ", b.size(), " entries, expected ", expected));
  if (has_negative(b)) flag("negative_betti", "complex Betti numbers must be nonnegative");
  if (b[0] != 1 || b[2 * p.n] != 1)
    flag("complex_not_connected", cat("expected b_0 = b_2n = 1, got ", b[0], " and ", b[2 * p.n]));
  if (!b.palindromic()) flag("complex_duality", cat("complex Betti vector ", b, " is not palindromic"));

  for (std::size_t i = 0; i < p.real_components.size(); ++i) {
    const BettiVector& c = p.real_components[i];
    if (c.size() != static_cast<std::size_t>(p.n + 1))
      flag("component_length", cat("real component ", i, " has ", c.size(), " entries, expected ", p.n + 1));
    if (has_negative(c)) flag("negative_betti", cat("real component ", i, " has a negative Betti number"));
    if (c[0] != 1) flag("component_not_connected", cat("real component ", i, " has b_0 = ", c[0]));
    if (!c.palindromic()) flag("component_duality", cat("real component ", i, " ", c, " is not palindromic"));
  }

  const BettiVector real = aggregate_real_betti(p);
  if (real.total() > b.total())
    flag("smith_inequality", cat("real total ", real.total(), " exceeds complex total ", b.total()));
  if (p.flags.maximal != (real.total() == b.total()))
    flag("maximal_flag", cat("maximal flag is ", p.flags.maximal ? "set" : "unset", " but real total is ", real.total(),
                             " and complex total is ", b.total()));

  if (const auto& ci = p.flags.complete_intersection) {
    if (ci->dimension() != p.n) {
      flag("ci_dimension", cat("complete intersection has dimension ", ci->dimension(), ", profile has ", p.n));
    } else if (complex_betti(*ci) != b) {
      flag("ci_betti", cat("complex Betti vector ", b, " differs from the complete intersection's ", complex_betti(*ci)));
    }
    if (p.flags.maximal) {
      for (int r = 0; r <= p.n / 2; ++r)
        if (real[r] < 1) flag("hyperplane_bound", cat("real Betti number in degree ", r, " is 0"));
    }
  }

  if (p.flags.h_odd_zero) {
    if (b.odd() != 0) flag("h_odd_nonzero", "odd-degree cohomology flagged zero but complex Betti vector has odd entries");
    if (!p.flags.torsion2_free) flag("torsion_flag", "vanishing odd cohomology implies no 2-torsion");
  }
  return out;
}

std::vector<BettiIdentity> betti_identities(const RealVarietyProfile& p) {
  if (!p.flags.maximal) throw PreconditionError("Betti identities need a maximal profile");
  const BettiVector r = aggregate_real_betti(p);
  const Count beta = p.complex_betti.total();
  const int n = p.n;
  std::vector<BettiIdentity> ids;
  if (n % 2 == 1) {
    const int top = (n - 1) / 2;
    Count squares = 0, low = 0, prefix = 0;
    for (int l = 0; l <= top; ++l) {
      for (int i = 0; i <= 2 * l; ++i) squares += r[i] * r[2 * l - i];
      low += r[l];
      prefix += r.range_sum(0, 2 * l - 1);
    }
    ids.push_back({"4*sum_{i+j=2l} b_i b_j = b^2", 4 * squares, beta * beta});
    ids.push_back({"2*sum_l b_l = b", 2 * low, beta});
    ids.push_back({"4*sum_l sum_{i<2l} b_i = (n-1) b", 4 * prefix, (n - 1) * beta});
  } else {
    Count mixed = 0, prefix = 0;
    for (int l = 1; l <= n / 2; ++l) {
      for (int a = 0; 2 * a < 2 * l - 1; ++a) mixed += r[a] * r[2 * l - 1 - a];
      prefix += r.range_sum(0, 2 * l - 2);
    }
    ids.push_back({"2*sum_{a+b=2l-1,a<b} b_a b_b = b_even b_odd", 2 * mixed, r.even() * r.odd()});
    ids.push_back({"4*sum_l sum_{i<=2l-2} b_i = n b - 2 b_odd", 4 * prefix, n * beta - 2 * r.odd()});
  }
  return ids;
}

bool check_betti_identities(const RealVarietyProfile& p) {
  const auto ids = betti_identities(p);
  return std::all_of(ids.begin(), ids.end(), [](const BettiIdentity& id) { return id.holds(); });
}

}  // namespace smithkit
