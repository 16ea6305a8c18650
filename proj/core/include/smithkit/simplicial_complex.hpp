#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "smithkit/betti_vector.hpp"
#include "smithkit/f2_matrix.hpp"

namespace smithkit {

using Vertex = Index;
// Strictly increasing vertex list.
using Simplex = std::vector<Vertex>;

/// Finite abstract simplicial complex given by its facets; the complex is the
/// downward closure. Facets are kept canonical: sorted vertex lists, no facet
/// contained in another, lexicographic order.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> facets);

  [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }
  [[nodiscard]] const std::vector<Simplex>& facets() const { return facets_; }
  [[nodiscard]] bool empty() const { return facets_.empty(); }
  // -1 for the empty complex.
  [[nodiscard]] int dimension() const;

  // Every simplex, grouped by dimension, each group in lexicographic order.
  // Computed once at construction and shared between copies.
  [[nodiscard]] const std::vector<std::vector<Simplex>>& simplices_by_dimension() const;
  [[nodiscard]] std::shared_ptr<const std::vector<std::vector<Simplex>>> shared_simplices() const { return simplices_; }
  [[nodiscard]] std::size_t simplex_count() const;
  [[nodiscard]] bool contains(const Simplex& s) const;
  [[nodiscard]] bool is_subcomplex_of(const SimplicialComplex& other) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.facets_ == b.facets_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Simplex> facets_;
  std::shared_ptr<const std::vector<std::vector<Simplex>>> simplices_ =
      std::make_shared<const std::vector<std::vector<Simplex>>>();
};

/// A simplicial complex with an involutive vertex permutation that maps
/// simplices to simplices.
class SimplicialInvolution {
 public:
  // Throws StructuralError when the map is not an involution of the complex.
  SimplicialInvolution(SimplicialComplex complex, std::vector<Vertex> involution);

  static SimplicialInvolution identity(SimplicialComplex complex);

  [[nodiscard]] const SimplicialComplex& complex() const { return complex_; }
  [[nodiscard]] const std::vector<Vertex>& involution() const { return map_; }
  [[nodiscard]] Vertex operator()(Vertex v) const { return map_[v]; }
  [[nodiscard]] Simplex image(const Simplex& s) const;

  // Every invariant simplex is fixed vertex-wise.
  [[nodiscard]] bool invariant_simplices_fixed() const;
  // Simplices with the same vertex orbits are related by the involution, so
  // the orbit space is itself a simplicial complex.
  [[nodiscard]] bool orbits_separated() const;
  [[nodiscard]] bool is_regular() const { return invariant_simplices_fixed() && orbits_separated(); }

  friend bool operator==(const SimplicialInvolution&, const SimplicialInvolution&) = default;

 private:
  SimplicialComplex complex_;
  std::vector<Vertex> map_;
};

struct QuotientComplex {
  SimplicialComplex complex;
  // projection[v] is the orbit vertex of v; orbits are numbered by their
  // smallest member.
  std::vector<Vertex> projection;
};

// Barycentric subdivision with the induced involution. Vertices of the result
// are the simplices of the input ordered by (dimension, lexicographic).
SimplicialInvolution barycentric_subdivision(const SimplicialInvolution& k);

// Returns k itself when already regular, otherwise its barycentric
// subdivision (applied a second time if one pass is not enough).
SimplicialInvolution regularize(const SimplicialInvolution& k);

// Full subcomplex on the fixed vertices. Requires a regular input.
SimplicialComplex fixed_subcomplex(const SimplicialInvolution& k);

// Orbit complex and vertex projection. Requires a regular input.
QuotientComplex quotient_complex(const SimplicialInvolution& k);

// F2 Betti numbers, one entry per degree up to the complex dimension.
BettiVector betti(const SimplicialComplex& k);

// F2 Betti numbers of C(k)/C(sub), up to the dimension of k.
BettiVector relative_betti(const SimplicialComplex& k, const SimplicialComplex& sub);

}  // namespace smithkit
