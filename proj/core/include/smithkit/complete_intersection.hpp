#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "smithkit/betti_vector.hpp"

namespace smithkit {

using BigInt = boost::multiprecision::cpp_int;

/// Nonsingular complete intersection of multidegree (d_1..d_r) in P^N.
///
/// The constructor canonicalizes: degrees are sorted and linear factors are
/// absorbed into the ambient space, so (N, (1, d)) and (N-1, (d)) are the same
/// value.
class CompleteIntersection {
 public:
  // Throws DomainError for N < 0, a degree < 1, or more equations than N.
  CompleteIntersection(int ambient_dim, std::vector<int> degrees);

  [[nodiscard]] int ambient_dim() const { return ambient_; }
  [[nodiscard]] const std::vector<int>& degrees() const { return degrees_; }
  [[nodiscard]] int codim() const { return static_cast<int>(degrees_.size()); }
  [[nodiscard]] int dimension() const { return ambient_ - codim(); }
  [[nodiscard]] bool is_linear() const { return degrees_.empty(); }
  // "(2,2)" style label; "()" for a linear space.
  [[nodiscard]] std::string degree_label() const;

  friend bool operator==(const CompleteIntersection&, const CompleteIntersection&) = default;
  friend auto operator<=>(const CompleteIntersection&, const CompleteIntersection&) = default;

 private:
  int ambient_;
  std::vector<int> degrees_;
};

/// Hodge numbers h^{p,q}, 0 <= p,q <= n.
class HodgeDiamond {
 public:
  explicit HodgeDiamond(int n);

  [[nodiscard]] int dimension() const { return n_; }
  [[nodiscard]] Count at(int p, int q) const;
  void set(int p, int q, Count value);
  // h^{p, n-p} for p = 0..n.
  [[nodiscard]] std::vector<Count> middle_row() const;
  // sum_{p+q=k} h^{p,q}.
  [[nodiscard]] Count betti(int k) const;

 private:
  int n_;
  std::vector<Count> entries_;
};

BigInt euler_characteristic(const CompleteIntersection& ci);

// Requires n >= 1.
BettiVector complex_betti(const CompleteIntersection& ci);

// chi^p = sum_q (-1)^q h^{p,q} for p = 0..n, from the chi_y generating series.
std::vector<BigInt> chi_y_coefficients(const CompleteIntersection& ci);

// Requires n >= 1.
HodgeDiamond hodge_numbers(const CompleteIntersection& ci);

// Requires even n >= 2; compares h^{k,k} with b_{2k} for n = 2k.
bool hkk_equals_b2k(const CompleteIntersection& ci);

// n(n+2)/8 for even n, (n^2-1)/8 for odd n. Requires n >= 2.
Count d_of_n(int n);

// Narrowing with overflow detection (DomainError).
Count to_count(const BigInt& v);

}  // namespace smithkit
