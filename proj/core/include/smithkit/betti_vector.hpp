#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace smithkit {

using Count = std::int64_t;

/// F2 Betti numbers of a space, indexed from degree 0.
///
/// Reading a degree outside the stored range yields 0, so formulas can use
/// beta_i for negative or large i the way the mathematics does.
class BettiVector {
 public:
  BettiVector() = default;
  BettiVector(std::initializer_list<Count> values) : values_(values) {}
  explicit BettiVector(std::vector<Count> values) : values_(std::move(values)) {}

  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] bool empty() const { return values_.empty(); }

  [[nodiscard]] Count operator[](std::ptrdiff_t degree) const {
    if (degree < 0 || static_cast<std::size_t>(degree) >= values_.size()) return 0;
    return values_[static_cast<std::size_t>(degree)];
  }

  [[nodiscard]] const std::vector<Count>& values() const { return values_; }

  [[nodiscard]] Count total() const {
    Count sum = 0;
    for (Count v : values_) sum += v;
    return sum;
  }
  [[nodiscard]] Count odd() const {
    Count sum = 0;
    for (std::size_t i = 1; i < values_.size(); i += 2) sum += values_[i];
    return sum;
  }
  [[nodiscard]] Count even() const {
    Count sum = 0;
    for (std::size_t i = 0; i < values_.size(); i += 2) sum += values_[i];
    return sum;
  }
  // Sum of beta_i for lo <= i <= hi; empty when hi < lo.
  [[nodiscard]] Count range_sum(std::ptrdiff_t lo, std::ptrdiff_t hi) const {
    Count sum = 0;
    for (std::ptrdiff_t i = lo; i <= hi; ++i) sum += (*this)[i];
    return sum;
  }
  [[nodiscard]] Count alternating_sum() const {
    Count sum = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) sum += (i % 2 == 0) ? values_[i] : -values_[i];
    return sum;
  }

  [[nodiscard]] bool palindromic() const {
    for (std::size_t i = 0, j = values_.size(); i < j; ++i) {
      --j;
      if (values_[i] != values_[j]) return false;
    }
    return true;
  }

  // Drops trailing zeros so that vectors of equal homology compare equal.
  [[nodiscard]] BettiVector trimmed() const {
    std::vector<Count> out = values_;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return BettiVector(std::move(out));
  }

  // Component-wise sum, extended with zeros.
  BettiVector& operator+=(const BettiVector& other) {
    if (other.values_.size() > values_.size()) values_.resize(other.values_.size(), 0);
    for (std::size_t i = 0; i < other.values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
  }

  friend bool operator==(const BettiVector&, const BettiVector&) = default;

 private:
  std::vector<Count> values_;
};

inline std::ostream& operator<<(std::ostream& os, const BettiVector& b) {
  os << '(';
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[static_cast<std::ptrdiff_t>(i)];
  return os << ')';
}

}  // namespace smithkit
