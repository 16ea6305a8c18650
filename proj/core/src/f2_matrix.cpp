#include "smithkit/f2_matrix.hpp"

#include <algorithm>
#include <cassert>

#include "smithkit/errors.hpp"

namespace smithkit {
namespace {

// a <- a xor b for sorted index lists.
void xor_into(std::vector<Index>& a, const std::vector<Index>& b, std::vector<Index>& scratch) {
  scratch.clear();
  scratch.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(scratch));
  a.swap(scratch);
}

std::vector<Index> normalize(std::vector<Index> support) {
  std::sort(support.begin(), support.end());
  std::vector<Index> out;
  out.reserve(support.size());
  for (std::size_t i = 0; i < support.size();) {
    std::size_t j = i;
    while (j < support.size() && support[j] == support[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(support[i]);
    i = j;
  }
  return out;
}

}  // namespace

F2Vector::F2Vector(std::size_t dim, std::vector<Index> support) : dim_(dim), support_(normalize(std::move(support))) {
  if (!support_.empty() && support_.back() >= dim_) throw StructuralError("F2Vector index out of range");
}

F2Vector F2Vector::unit(std::size_t dim, Index i) { return F2Vector(dim, {i}); }

bool F2Vector::get(Index i) const { return std::binary_search(support_.begin(), support_.end(), i); }

F2Vector& F2Vector::operator+=(const F2Vector& other) {
  if (other.dim_ != dim_) throw StructuralError("F2Vector dimension mismatch");
  std::vector<Index> scratch;
  xor_into(support_, other.support_, scratch);
  return *this;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back(static_cast<Index>(i));
  return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  F2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw StructuralError("ragged rows in F2Matrix::from_rows");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] % 2 != 0) m.columns_[c].push_back(static_cast<Index>(r));
  }
  return m;
}

F2Matrix F2Matrix::from_columns(std::size_t rows, std::vector<F2Vector> columns) {
  F2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

bool F2Matrix::get(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  return std::binary_search(col.begin(), col.end(), static_cast<Index>(r));
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= columns_.size()) throw StructuralError("F2Matrix::set out of range");
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), static_cast<Index>(r));
  const bool present = it != col.end() && *it == r;
  if (value && !present) col.insert(it, static_cast<Index>(r));
  if (!value && present) col.erase(it);
}

F2Vector F2Matrix::column(std::size_t c) const { return F2Vector(rows_, columns_.at(c)); }

void F2Matrix::set_column(std::size_t c, const F2Vector& v) {
  if (v.dim() != rows_) throw StructuralError("column length does not match row count");
  columns_.at(c) = v.support();
}

std::size_t F2Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

bool F2Matrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols(), rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (Index r : columns_[c]) t.columns_[r].push_back(static_cast<Index>(c));
  return t;
}

F2Vector F2Matrix::operator*(const F2Vector& v) const {
  if (v.dim() != cols()) throw StructuralError("matrix-vector dimension mismatch");
  std::vector<Index> acc;
  for (Index c : v.support()) acc.insert(acc.end(), columns_[c].begin(), columns_[c].end());
  return F2Vector(rows_, std::move(acc));
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  if (cols() != rhs.rows()) throw StructuralError("matrix product dimension mismatch");
  F2Matrix out(rows_, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    std::vector<Index> acc;
    for (Index k : rhs.columns_[c]) acc.insert(acc.end(), columns_[k].begin(), columns_[k].end());
    out.columns_[c] = normalize(std::move(acc));
  }
  return out;
}

ColumnReduction reduce_columns(const F2Matrix& m, std::span<const bool> cleared) {
  ColumnReduction result;
  result.pivot_row_of_column.assign(m.cols(), std::nullopt);
  std::vector<std::int64_t> owner(m.rows(), -1);
  std::vector<std::vector<Index>> reduced(m.cols());
  std::vector<Index> work;
  std::vector<Index> scratch;

  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!cleared.empty() && cleared[c]) continue;
    work = m.column_support(c);
    while (!work.empty()) {
      const std::int64_t o = owner[work.back()];
      if (o < 0) break;
      xor_into(work, reduced[static_cast<std::size_t>(o)], scratch);
    }
    if (!work.empty()) {
      owner[work.back()] = static_cast<std::int64_t>(c);
      result.pivot_row_of_column[c] = work.back();
      reduced[c].swap(work);
      ++result.rank;
    }
  }
  return result;
}

std::size_t rank(const F2Matrix& m) {
  // Reducing the narrower side keeps the pivot table small.
  if (m.cols() > m.rows() * 4 && m.rows() > 0) return reduce_columns(m.transpose()).rank;
  return reduce_columns(m).rank;
}

KernelImage kernel_and_image(const F2Matrix& m, std::span<const bool> cleared) {
  std::vector<std::int64_t> owner(m.rows(), -1);
  std::vector<std::vector<Index>> reduced(m.cols());
  std::vector<std::vector<Index>> combos(m.cols());
  KernelImage out;
  std::vector<Index> work;
  std::vector<Index> combo;
  std::vector<Index> scratch;

  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!cleared.empty() && cleared[c]) continue;
    work = m.column_support(c);
    combo.assign(1, static_cast<Index>(c));
    while (!work.empty()) {
      const std::int64_t o = owner[work.back()];
      if (o < 0) break;
      xor_into(work, reduced[static_cast<std::size_t>(o)], scratch);
      xor_into(combo, combos[static_cast<std::size_t>(o)], scratch);
    }
    if (work.empty()) {
      out.kernel.emplace_back(m.cols(), combo);
    } else {
      owner[work.back()] = static_cast<std::int64_t>(c);
      out.image.emplace_back(m.rows(), work);
      reduced[c].swap(work);
      combos[c] = combo;
    }
  }
  return out;
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m) { return kernel_and_image(m).kernel; }

std::size_t coker_dim(const F2Matrix& m) { return m.rows() - rank(m); }

void EchelonBasis::reduce(std::vector<Index>& vec, std::vector<Index>& combo) const {
  std::vector<Index> scratch;
  while (!vec.empty()) {
    const Index low = vec.back();
    if (low >= pivot_owner_.size() || pivot_owner_[low] < 0) break;
    const Reduced& r = reduced_[static_cast<std::size_t>(pivot_owner_[low])];
    xor_into(vec, r.vec, scratch);
    xor_into(combo, r.combo, scratch);
  }
}

bool EchelonBasis::add(const F2Vector& v, bool tracked) {
  if (v.dim() != dim_) throw StructuralError("EchelonBasis dimension mismatch");
  std::vector<Index> vec = v.support();
  std::vector<Index> combo;
  if (tracked) combo.push_back(static_cast<Index>(tracked_));
  reduce(vec, combo);
  if (vec.empty()) return false;
  if (pivot_owner_.empty()) pivot_owner_.assign(dim_, -1);
  pivot_owner_[vec.back()] = static_cast<std::int64_t>(reduced_.size());
  reduced_.push_back({std::move(vec), std::move(combo)});
  tracked_ += tracked;
  return true;
}

bool EchelonBasis::insert(const F2Vector& v) { return add(v, true); }

bool EchelonBasis::absorb(const F2Vector& v) { return add(v, false); }

bool EchelonBasis::contains(const F2Vector& v) const { return coordinates(v).has_value(); }

std::optional<F2Vector> EchelonBasis::coordinates(const F2Vector& v) const {
  if (v.dim() != dim_) throw StructuralError("EchelonBasis dimension mismatch");
  std::vector<Index> vec = v.support();
  std::vector<Index> combo;
  reduce(vec, combo);
  if (!vec.empty()) return std::nullopt;
  return F2Vector(tracked_, std::move(combo));
}

}  // namespace smithkit
