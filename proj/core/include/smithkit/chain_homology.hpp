#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "smithkit/betti_vector.hpp"
#include "smithkit/f2_matrix.hpp"
#include "smithkit/simplicial_complex.hpp"

namespace smithkit {

/// Finite chain complex over F2 in degrees 0..top. boundaries[k] maps C_k to
/// C_{k-1}; boundaries[0] has no rows.
struct ChainComplex {
  std::vector<F2Matrix> boundaries;

  [[nodiscard]] std::size_t degrees() const { return boundaries.size(); }
  [[nodiscard]] std::size_t rank_of(std::size_t k) const { return boundaries[k].cols(); }
  // Checks boundary composition d_{k-1} d_k = 0 and shape agreement.
  [[nodiscard]] bool well_formed() const;
};

/// Simplices of a complex grouped by dimension, with lookup by vertex list.
class SimplexIndex {
 public:
  explicit SimplexIndex(const SimplicialComplex& k);

  [[nodiscard]] std::size_t degrees() const { return by_dim_->size(); }
  [[nodiscard]] const std::vector<Simplex>& simplices(std::size_t k) const { return (*by_dim_)[k]; }
  [[nodiscard]] std::optional<Index> find(const Simplex& s) const;

 private:
  std::shared_ptr<const std::vector<std::vector<Simplex>>> by_dim_;
};

// Simplicial chains; when `keep` is non-empty only the flagged simplices form
// the basis and faces outside it are dropped (relative chains).
ChainComplex simplicial_chains(const SimplexIndex& index, const std::vector<std::vector<bool>>& keep = {});

// Betti numbers via boundary ranks, clearing columns that are known to vanish.
BettiVector homology_betti(const ChainComplex& c);

/// Homology of a chain complex with explicit cycle representatives and a way
/// to read off the class of any cycle.
class Homology {
 public:
  explicit Homology(const ChainComplex& c);

  [[nodiscard]] std::size_t degrees() const { return degrees_.size(); }
  [[nodiscard]] std::size_t betti(std::size_t k) const { return k < degrees_.size() ? degrees_[k].reps.size() : 0; }
  [[nodiscard]] BettiVector betti_vector() const;
  [[nodiscard]] const std::vector<F2Vector>& representatives(std::size_t k) const { return degrees_[k].reps; }
  // Coordinates of [z] over the representatives. Throws ConsistencyError if z
  // is not a cycle.
  [[nodiscard]] F2Vector class_of(std::size_t k, const F2Vector& z) const;

 private:
  struct Degree {
    std::vector<F2Vector> reps;
    EchelonBasis span{0};  // boundaries absorbed, representatives tracked
  };
  std::vector<Degree> degrees_;
};

// Matrix of the map H_k(src) -> H_k(dst) induced by the chain map f_k.
F2Matrix induced_map(const Homology& src, const Homology& dst, std::size_t k, const F2Matrix& chain_map);

}  // namespace smithkit
