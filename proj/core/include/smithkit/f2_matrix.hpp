#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace smithkit {

using Index = std::uint32_t;

/// A vector over F2 of fixed dimension, stored as the sorted list of its
/// nonzero coordinates.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(std::size_t dim) : dim_(dim) {}
  // Indices may repeat; repeated indices cancel in pairs.
  F2Vector(std::size_t dim, std::vector<Index> support);

  static F2Vector unit(std::size_t dim, Index i);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<Index>& support() const { return support_; }
  [[nodiscard]] bool is_zero() const { return support_.empty(); }
  [[nodiscard]] bool get(Index i) const;
  [[nodiscard]] std::size_t weight() const { return support_.size(); }

  F2Vector& operator+=(const F2Vector& other);
  friend F2Vector operator+(F2Vector a, const F2Vector& b) { return a += b; }
  friend bool operator==(const F2Vector&, const F2Vector&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Index> support_;
};

/// Matrix over F2 stored column-wise; each column is the sorted list of rows
/// holding a 1. Boundary matrices are sparse, so this keeps 10^5-sized
/// complexes cheap.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  static F2Matrix identity(std::size_t n);
  // Dense 0/1 row lists; all rows must have the same length.
  static F2Matrix from_rows(const std::vector<std::vector<int>>& rows);
  static F2Matrix from_columns(std::size_t rows, std::vector<F2Vector> columns);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return columns_.size(); }
  [[nodiscard]] bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);

  [[nodiscard]] const std::vector<Index>& column_support(std::size_t c) const { return columns_[c]; }
  [[nodiscard]] F2Vector column(std::size_t c) const;
  void set_column(std::size_t c, const F2Vector& v);
  [[nodiscard]] std::size_t nonzeros() const;
  [[nodiscard]] bool is_zero() const;

  [[nodiscard]] F2Matrix transpose() const;
  [[nodiscard]] F2Vector operator*(const F2Vector& v) const;
  [[nodiscard]] F2Matrix operator*(const F2Matrix& rhs) const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Index>> columns_;
};

/// Outcome of a left-to-right column reduction.
struct ColumnReduction {
  std::size_t rank = 0;
  // pivot_row_of_column[c] is the lowest row of reduced column c, if nonzero.
  std::vector<std::optional<Index>> pivot_row_of_column;
};

// Reduces columns with the pivot-lookup algorithm. Columns flagged in
// `cleared` are known to reduce to zero and are skipped.
ColumnReduction reduce_columns(const F2Matrix& m, std::span<const bool> cleared = {});

std::size_t rank(const F2Matrix& m);
std::vector<F2Vector> kernel_basis(const F2Matrix& m);

/// Bases of ker m and im m from a single reduction. The image basis has
/// pairwise distinct lowest entries; kernel vector j has lowest entry equal to
/// the column it came from. Columns flagged in `cleared` are skipped, so the
/// kernel part then spans only a complement of whatever they contribute.
struct KernelImage {
  std::vector<F2Vector> kernel;
  std::vector<F2Vector> image;
};
KernelImage kernel_and_image(const F2Matrix& m, std::span<const bool> cleared = {});
std::size_t coker_dim(const F2Matrix& m);

/// Incrementally built basis of a subspace of F2^dim that can express any
/// member of the span in terms of the generators accepted so far.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  // Returns false (and keeps nothing) when v already lies in the span.
  bool insert(const F2Vector& v);
  // Like insert, but v gets no coordinate: coordinates() treats it as zero.
  bool absorb(const F2Vector& v);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t rank() const { return reduced_.size(); }
  [[nodiscard]] std::size_t generators() const { return tracked_; }
  [[nodiscard]] bool contains(const F2Vector& v) const;
  // Coefficients over the generators accepted by insert, in insertion order,
  // modulo the absorbed subspace.
  [[nodiscard]] std::optional<F2Vector> coordinates(const F2Vector& v) const;

 private:
  struct Reduced {
    std::vector<Index> vec;
    std::vector<Index> combo;
  };
  // Returns the residue of v after reduction and the combination used.
  void reduce(std::vector<Index>& vec, std::vector<Index>& combo) const;
  bool add(const F2Vector& v, bool tracked);

  std::size_t dim_;
  std::vector<Reduced> reduced_;
  std::vector<std::int64_t> pivot_owner_;  // row -> index into reduced_, or -1
  std::size_t tracked_ = 0;
};

}  // namespace smithkit
