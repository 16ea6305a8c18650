#include "smithkit/chain_homology.hpp"

#include <algorithm>
#include <memory>

#include "smithkit/errors.hpp"

namespace smithkit {

bool ChainComplex::well_formed() const {
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    const std::size_t expected_rows = k == 0 ? 0 : boundaries[k - 1].cols();
    if (boundaries[k].rows() != expected_rows) return false;
    if (k >= 1 && !(boundaries[k - 1] * boundaries[k]).is_zero()) return false;
  }
  return true;
}

SimplexIndex::SimplexIndex(const SimplicialComplex& k) : by_dim_(k.shared_simplices()) {}

std::optional<Index> SimplexIndex::find(const Simplex& s) const {
  if (s.empty() || s.size() > by_dim_->size()) return std::nullopt;
  const auto& group = (*by_dim_)[s.size() - 1];
  auto it = std::lower_bound(group.begin(), group.end(), s);
  if (it == group.end() || *it != s) return std::nullopt;
  return static_cast<Index>(it - group.begin());
}

ChainComplex simplicial_chains(const SimplexIndex& index, const std::vector<std::vector<bool>>& keep) {
  const std::size_t n = index.degrees();
  // renumber[k][i] is the basis position of simplex i, or -1 when dropped.
  std::vector<std::vector<std::int64_t>> renumber(n);
  std::vector<std::size_t> counts(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& group = index.simplices(k);
    renumber[k].assign(group.size(), -1);
    for (std::size_t i = 0; i < group.size(); ++i)
      if (keep.empty() || keep[k][i]) renumber[k][i] = static_cast<std::int64_t>(counts[k]++);
  }

  ChainComplex c;
  c.boundaries.reserve(n);
  Simplex face;
  for (std::size_t k = 0; k < n; ++k) {
    F2Matrix d(k == 0 ? 0 : counts[k - 1], counts[k]);
    if (k > 0) {
      const auto& group = index.simplices(k);
      for (std::size_t i = 0; i < group.size(); ++i) {
        if (renumber[k][i] < 0) continue;
        std::vector<Index> rows;
        for (std::size_t drop = 0; drop < group[i].size(); ++drop) {
          face = group[i];
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
          const auto f = index.find(face);
          if (!f) throw StructuralError("complex is not closed under faces");
          const std::int64_t r = renumber[k - 1][*f];
          if (r >= 0) rows.push_back(static_cast<Index>(r));
        }
        d.set_column(static_cast<std::size_t>(renumber[k][i]), F2Vector(counts[k - 1], std::move(rows)));
      }
    }
    c.boundaries.push_back(std::move(d));
  }
  return c;
}

BettiVector homology_betti(const ChainComplex& c) {
  const std::size_t n = c.degrees();
  std::vector<std::size_t> ranks(n + 1, 0);
  // Rows that are pivots of d_{k+1} index columns of d_k that reduce to zero.
  std::vector<char> cleared;
  for (std::size_t k = n; k-- > 1;) {
    const F2Matrix& d = c.boundaries[k];
    std::unique_ptr<bool[]> skip(new bool[d.cols()]());
    for (std::size_t i = 0; i < cleared.size() && i < d.cols(); ++i) skip[i] = cleared[i] != 0;
    const ColumnReduction red = reduce_columns(d, std::span<const bool>(skip.get(), d.cols()));
    ranks[k] = red.rank;
    cleared.assign(d.rows(), 0);
    for (const auto& pivot : red.pivot_row_of_column)
      if (pivot) cleared[*pivot] = 1;
  }
  std::vector<Count> b(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    b[k] = static_cast<Count>(c.rank_of(k)) - static_cast<Count>(ranks[k]) - static_cast<Count>(ranks[k + 1]);
  return BettiVector(std::move(b));
}

Homology::Homology(const ChainComplex& c) {
  const std::size_t n = c.degrees();
  degrees_.resize(n);
  // Top down: the lowest entries of the reduced d_{k+1} mark cycles of
  // degree k that bound, so their columns of d_k are skipped. The surviving
  // kernel vectors and the reduced boundaries then have distinct lowest
  // entries and together form a basis of the cycles.
  std::vector<F2Vector> boundaries;
  for (std::size_t k = n; k-- > 0;) {
    const F2Matrix& d = c.boundaries[k];
    std::unique_ptr<bool[]> skip(new bool[d.cols()]());
    for (const auto& b : boundaries) skip[b.support().back()] = true;
    KernelImage parts = kernel_and_image(d, std::span<const bool>(skip.get(), d.cols()));

    Degree& deg = degrees_[k];
    deg.span = EchelonBasis(d.cols());
    for (const auto& b : boundaries) deg.span.absorb(b);
    for (auto& z : parts.kernel) {
      if (!deg.span.insert(z)) throw ConsistencyError("cycle basis is not independent of the boundaries");
      deg.reps.push_back(std::move(z));
    }
    boundaries = std::move(parts.image);
  }
}

BettiVector Homology::betti_vector() const {
  std::vector<Count> b;
  for (const auto& d : degrees_) b.push_back(static_cast<Count>(d.reps.size()));
  return BettiVector(std::move(b));
}

F2Vector Homology::class_of(std::size_t k, const F2Vector& z) const {
  if (k >= degrees_.size()) {
    if (!z.is_zero()) throw ConsistencyError("chain outside the complex degrees");
    return F2Vector(0);
  }
  const Degree& deg = degrees_[k];
  const auto coords = deg.span.coordinates(z);
  if (!coords) throw ConsistencyError("chain is not a cycle");
  return *coords;
}

F2Matrix induced_map(const Homology& src, const Homology& dst, std::size_t k, const F2Matrix& chain_map) {
  F2Matrix m(dst.betti(k), src.betti(k));
  if (k >= src.degrees()) return m;
  const auto& reps = src.representatives(k);
  for (std::size_t j = 0; j < reps.size(); ++j) m.set_column(j, dst.class_of(k, chain_map * reps[j]));
  return m;
}

}  // namespace smithkit
