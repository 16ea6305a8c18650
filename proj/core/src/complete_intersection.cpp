#include "smithkit/complete_intersection.hpp"

#include <algorithm>
#include <limits>

#include "smithkit/errors.hpp"

namespace smithkit {
namespace {

// Univariate polynomial with big coefficients, index = exponent.
using Poly = std::vector<BigInt>;
// Power series in z truncated at z^order, coefficients in Z[y]; index = z exponent.
using Series = std::vector<Poly>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b, int sign = 1) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += sign * b[i];
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// Exact division by (1 + y).
Poly div_one_plus_y(const Poly& p) {
  if (p.empty()) return {};
  Poly q(p.size() - 1);
  BigInt carry = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    carry = p[i] - carry;
    q[i] = carry;
  }
  if (p.back() != carry) throw ConsistencyError("polynomial not divisible by 1 + y");
  trim(q);
  return q;
}

Series series_mul(const Series& a, const Series& b, std::size_t order) {
  Series out(order + 1);
  for (std::size_t i = 0; i <= order && i < a.size(); ++i)
    for (std::size_t j = 0; i + j <= order && j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
  return out;
}

// Inverse of a series whose z^0 coefficient is the constant 1.
Series series_inverse(const Series& a, std::size_t order) {
  if (a.empty() || a[0] != Poly{1}) throw ConsistencyError("series inverse needs constant term 1");
  Series inv(order + 1);
  inv[0] = Poly{1};
  for (std::size_t k = 1; k <= order; ++k) {
    Poly acc;
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) acc = add(acc, mul(a[i], inv[k - i]));
    inv[k] = add(Poly{}, acc, -1);
  }
  return inv;
}

// (1 + z y)^d and (1 - z)^d as series in z.
Series one_plus_zy_pow(int d, std::size_t order) {
  Series s(order + 1);
  BigInt binom = 1;
  for (int k = 0; k <= d && static_cast<std::size_t>(k) <= order; ++k) {
    s[k] = Poly(static_cast<std::size_t>(k) + 1);
    s[k][k] = binom;
    binom = binom * (d - k) / (k + 1);
  }
  return s;
}

Series one_minus_z_pow(int d, std::size_t order, const Poly& factor) {
  Series s(order + 1);
  BigInt binom = 1;
  for (int k = 0; k <= d && static_cast<std::size_t>(k) <= order; ++k) {
    const BigInt c = (k % 2 == 0) ? binom : BigInt(-binom);
    Poly term;
    for (const auto& f : factor) term.push_back(f * c);
    trim(term);
    s[k] = term;
    binom = binom * (d - k) / (k + 1);
  }
  return s;
}

Series series_add(const Series& a, const Series& b, int sign) {
  Series out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = add(i < a.size() ? a[i] : Poly{}, i < b.size() ? b[i] : Poly{}, sign);
  return out;
}

}  // namespace

CompleteIntersection::CompleteIntersection(int ambient_dim, std::vector<int> degrees) : ambient_(ambient_dim) {
  if (ambient_dim < 0) throw DomainError("ambient dimension must be nonnegative");
  for (int d : degrees)
    if (d < 1) throw DomainError("degrees must be at least 1");
  const auto linear = std::count(degrees.begin(), degrees.end(), 1);
  std::erase(degrees, 1);
  if (static_cast<long>(degrees.size()) + linear > ambient_dim)
    throw DomainError("more equations than the ambient dimension");
  ambient_ -= static_cast<int>(linear);
  std::sort(degrees.begin(), degrees.end());
  degrees_ = std::move(degrees);
}

std::string CompleteIntersection::degree_label() const {
  std::string s = "(";
  for (std::size_t i = 0; i < degrees_.size(); ++i) s += (i ? "," : "") + std::to_string(degrees_[i]);
  return s + ")";
}

HodgeDiamond::HodgeDiamond(int n) : n_(n), entries_(static_cast<std::size_t>((n + 1) * (n + 1)), 0) {
  if (n < 0) throw DomainError("negative dimension");
}

Count HodgeDiamond::at(int p, int q) const {
  if (p < 0 || q < 0 || p > n_ || q > n_) return 0;
  return entries_[static_cast<std::size_t>(p * (n_ + 1) + q)];
}

void HodgeDiamond::set(int p, int q, Count value) {
  if (p < 0 || q < 0 || p > n_ || q > n_) throw DomainError("Hodge index out of range");
  entries_[static_cast<std::size_t>(p * (n_ + 1) + q)] = value;
}

std::vector<Count> HodgeDiamond::middle_row() const {
  std::vector<Count> row;
  for (int p = 0; p <= n_; ++p) row.push_back(at(p, n_ - p));
  return row;
}

Count HodgeDiamond::betti(int k) const {
  Count sum = 0;
  for (int p = 0; p <= k; ++p) sum += at(p, k - p);
  return sum;
}

Count to_count(const BigInt& v) {
  if (v > std::numeric_limits<Count>::max() || v < std::numeric_limits<Count>::min())
    throw DomainError("value exceeds the 64-bit range");
  return static_cast<Count>(v);
}

BigInt euler_characteristic(const CompleteIntersection& ci) {
  const int n = ci.dimension();
  const auto order = static_cast<std::size_t>(n);
  // Coefficients in h of (1+h)^{N+1} / prod (1 + d h), truncated at h^n.
  std::vector<BigInt> c(order + 1, 0);
  BigInt binom = 1;
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] = binom;
    binom = binom * (ci.ambient_dim() + 1 - k) / (k + 1);
  }
  BigInt degree_product = 1;
  for (int d : ci.degrees()) {
    degree_product *= d;
    // Multiply by 1/(1 + d h) = sum (-d h)^k: c_k <- c_k - d c_{k-1}.
    for (std::size_t k = 1; k <= order; ++k) c[k] -= d * c[k - 1];
  }
  return degree_product * c[order];
}

BettiVector complex_betti(const CompleteIntersection& ci) {
  const int n = ci.dimension();
  if (n < 1) throw PreconditionError("complex_betti needs dimension at least 1");
  const Count chi = to_count(euler_characteristic(ci));
  std::vector<Count> b(static_cast<std::size_t>(2 * n + 1), 0);
  for (int k = 0; k <= 2 * n; k += 2) b[static_cast<std::size_t>(k)] = 1;
  b[static_cast<std::size_t>(n)] = n % 2 == 0 ? chi - n : n + 1 - chi;
  return BettiVector(std::move(b));
}

std::vector<BigInt> chi_y_coefficients(const CompleteIntersection& ci) {
  const int n = ci.dimension();
  const auto order = static_cast<std::size_t>(ci.ambient_dim());
  // prefix = 1 / ((1 + z y)(1 - z)) = sum_{a,b} (-y)^a z^{a+b}
  Series total(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    Poly p(k + 1);
    for (std::size_t a = 0; a <= k; ++a) p[a] = (a % 2 == 0) ? 1 : -1;
    total[k] = p;
  }
  for (int d : ci.degrees()) {
    const Series up = one_plus_zy_pow(d, order);
    Series num = series_add(up, one_minus_z_pow(d, order, Poly{1}), -1);
    Series den = series_add(up, one_minus_z_pow(d, order, Poly{0, 1}), 1);
    // Both vanish at y = -1; dividing by (1 + y) makes the denominator's
    // constant term 1, so the quotient stays in Z[y][[z]].
    for (auto& p : num) p = div_one_plus_y(p);
    for (auto& p : den) p = div_one_plus_y(p);
    total = series_mul(total, series_mul(num, series_inverse(den, order), order), order);
  }
  const Poly& top = total[order];
  std::vector<BigInt> chi(static_cast<std::size_t>(n + 1), 0);
  for (std::size_t p = 0; p < top.size(); ++p) {
    if (p > static_cast<std::size_t>(n)) {
      if (top[p] != 0) throw ConsistencyError("chi_y has a term beyond the dimension");
      continue;
    }
    chi[p] = top[p];
  }
  return chi;
}

HodgeDiamond hodge_numbers(const CompleteIntersection& ci) {
  const int n = ci.dimension();
  if (n < 1) throw PreconditionError("hodge_numbers needs dimension at least 1");
  const auto chi = chi_y_coefficients(ci);
  HodgeDiamond h(n);
  for (int p = 0; p <= n; ++p) {
    const Count x = to_count(chi[static_cast<std::size_t>(p)]);
    const Count sign_p = p % 2 == 0 ? 1 : -1;
    const Count sign_q = (n - p) % 2 == 0 ? 1 : -1;
    if (2 * p == n) {
      h.set(p, p, sign_p * x);
    } else {
      h.set(p, p, 1);
      h.set(p, n - p, sign_q * (x - sign_p));
    }
  }
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      if (h.at(p, q) < 0) throw ConsistencyError("negative Hodge number");
  return h;
}

bool hkk_equals_b2k(const CompleteIntersection& ci) {
  const int n = ci.dimension();
  if (n < 2 || n % 2 != 0) throw PreconditionError("hkk_equals_b2k needs even dimension at least 2");
  const int k = n / 2;
  return hodge_numbers(ci).at(k, k) == complex_betti(ci)[n];
}

Count d_of_n(int n) {
  if (n < 2) throw DomainError("d(n) is defined for n >= 2");
  const Count m = n;
  return m % 2 == 0 ? m * (m + 2) / 8 : (m * m - 1) / 8;
}

}  // namespace smithkit
