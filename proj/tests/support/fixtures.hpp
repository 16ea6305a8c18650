#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "smithkit/complete_intersection.hpp"
#include "smithkit/profile.hpp"
#include "smithkit/simplicial_complex.hpp"

namespace smithkit::testing {

inline SimplicialComplex hexagon() {
  return SimplicialComplex(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}
inline SimplicialInvolution hexagon_antipodal() { return {hexagon(), {3, 4, 5, 0, 1, 2}}; }
// Mirror through vertices 0 and 3.
inline SimplicialInvolution hexagon_reflection() { return {hexagon(), {0, 5, 4, 3, 2, 1}}; }

// Antipodal pairs (0,1), (2,3), (4,5).
inline SimplicialComplex octahedron() {
  std::vector<Simplex> faces;
  for (Vertex a : {0u, 1u})
    for (Vertex b : {2u, 3u})
      for (Vertex c : {4u, 5u}) faces.push_back({a, b, c});
  return SimplicialComplex(6, faces);
}
inline SimplicialInvolution octahedron_antipodal() { return {octahedron(), {1, 0, 3, 2, 5, 4}}; }
// Swaps the poles 4, 5 and fixes the equator 0-2-1-3.
inline SimplicialInvolution octahedron_equatorial() { return {octahedron(), {0, 1, 2, 3, 5, 4}}; }

// Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline SimplicialComplex torus7() {
  std::vector<Simplex> faces;
  for (Vertex i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex(7, faces);
}
// x -> -x mod 7, which acts like -id on the torus: four isolated fixed points.
inline SimplicialInvolution torus7_negation() { return {torus7(), {0, 6, 5, 4, 3, 2, 1}}; }

// 3 x 4 grid torus, vertex (x, y) = 4x + y, with main diagonals in strips
// y = 0, 1 and anti-diagonals in strips y = 2, 3 so that y -> -y is simplicial.
// Its fixed set is the two circles y = 0 and y = 2.
inline SimplicialInvolution grid_torus_reflection() {
  auto v = [](int x, int y) { return static_cast<Vertex>(4 * ((x + 3) % 3) + (y + 4) % 4); };
  std::vector<Simplex> faces;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 4; ++y) {
      if (y < 2) {
        faces.push_back({v(x, y), v(x + 1, y), v(x + 1, y + 1)});
        faces.push_back({v(x, y), v(x, y + 1), v(x + 1, y + 1)});
      } else {
        faces.push_back({v(x, y + 1), v(x + 1, y), v(x + 1, y + 1)});
        faces.push_back({v(x, y), v(x, y + 1), v(x + 1, y)});
      }
    }
  }
  std::vector<Vertex> map(12);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 4; ++y) map[v(x, y)] = v(x, -y);
  return {SimplicialComplex(12, faces), map};
}

inline SimplicialInvolution segment_swap() { return {SimplicialComplex(2, {{0, 1}}), {1, 0}}; }

inline std::vector<SimplicialInvolution> identity_suite() {
  return {SimplicialInvolution::identity(hexagon()), SimplicialInvolution::identity(octahedron()),
          SimplicialInvolution::identity(torus7()), SimplicialInvolution::identity(SimplicialComplex(3, {{0, 1, 2}}))};
}

// ---- random simplicial involutions --------------------------------------

inline Simplex random_simplex(std::mt19937_64& rng, std::size_t vertex_count, std::size_t max_size) {
  std::vector<Vertex> all(vertex_count);
  std::iota(all.begin(), all.end(), Vertex{0});
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t size = std::uniform_int_distribution<std::size_t>(1, std::min(max_size, vertex_count))(rng);
  Simplex s(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
  std::sort(s.begin(), s.end());
  return s;
}

inline std::vector<Simplex> closed_under(const std::vector<Simplex>& facets, const std::vector<Vertex>& map) {
  std::vector<Simplex> out = facets;
  for (const auto& f : facets) {
    Simplex g;
    for (Vertex v : f) g.push_back(map[v]);
    std::sort(g.begin(), g.end());
    out.push_back(g);
  }
  return out;
}

// Random involution on <= 12 vertices; facets are random simplices plus their images.
inline SimplicialInvolution random_symmetric(std::mt19937_64& rng, std::size_t max_size = 4) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Vertex> map(n);
  std::iota(map.begin(), map.end(), Vertex{0});
  const std::size_t pairs = std::uniform_int_distribution<std::size_t>(0, n / 2)(rng);
  for (std::size_t i = 0; i < pairs; ++i) {
    map[perm[2 * i]] = perm[2 * i + 1];
    map[perm[2 * i + 1]] = perm[2 * i];
  }
  std::vector<Simplex> facets;
  const int count = std::uniform_int_distribution<int>(1, 7)(rng);
  for (int i = 0; i < count; ++i) facets.push_back(random_simplex(rng, n, max_size));
  return {SimplicialComplex(n, closed_under(facets, map)), map};
}

// Fixed vertices A, moving vertices B and a mirror copy B'; the involution
// swaps B and B'. Total vertex count <= 12.
inline SimplicialInvolution random_doubled(std::mt19937_64& rng) {
  const std::size_t a = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
  const std::size_t b = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  const std::size_t n = a + 2 * b;
  std::vector<Vertex> map(n);
  for (std::size_t v = 0; v < a; ++v) map[v] = static_cast<Vertex>(v);
  for (std::size_t i = 0; i < b; ++i) {
    map[a + i] = static_cast<Vertex>(a + b + i);
    map[a + b + i] = static_cast<Vertex>(a + i);
  }
  std::vector<Simplex> facets;
  const int count = std::uniform_int_distribution<int>(1, 6)(rng);
  for (int i = 0; i < count; ++i) facets.push_back(random_simplex(rng, a + b, 4));
  return {SimplicialComplex(n, closed_under(facets, map)), map};
}

// Cone with a fixed apex over a random symmetric complex of dimension <= 2.
inline SimplicialInvolution random_cone(std::mt19937_64& rng) {
  SimplicialInvolution base = random_symmetric(rng, 3);
  while (base.complex().vertex_count() > 11) base = random_symmetric(rng, 3);
  const auto n = static_cast<Vertex>(base.complex().vertex_count());
  std::vector<Simplex> facets;
  for (auto f : base.complex().facets()) {
    f.push_back(n);
    facets.push_back(std::move(f));
  }
  std::vector<Vertex> map = base.involution();
  map.push_back(n);
  return {SimplicialComplex(n + 1, facets), map};
}

inline SimplicialInvolution random_involution(std::mt19937_64& rng, int i) {
  switch (i % 3) {
    case 0:
      return random_symmetric(rng);
    case 1:
      return random_doubled(rng);
    default:
      return random_cone(rng);
  }
}

// ---- random profiles ----------------------------------------------------

// Palindromic vectors of length n+1 with b_0 = b_n = 1, one per component,
// whose component-wise sum has the given total. Returns empty when the total
// cannot be met with this component count.
inline std::vector<BettiVector> random_components(std::mt19937_64& rng, int n, Count total, int components) {
  std::vector<std::vector<Count>> comps(static_cast<std::size_t>(components), std::vector<Count>(n + 1, 0));
  Count used = 0;
  for (auto& c : comps) {
    c[0] += 1;
    c[n] += 1;
    used += n == 0 ? 1 : 2;
  }
  Count left = total - used;
  if (left < 0) return {};
  // Odd n: every increment adds 2; even n: the middle degree adds 1.
  if (n % 2 == 1 && left % 2 != 0) return {};
  std::uniform_int_distribution<int> pick_comp(0, components - 1);
  std::uniform_int_distribution<int> pick_deg(0, n / 2);
  while (left > 0) {
    auto& c = comps[static_cast<std::size_t>(pick_comp(rng))];
    int i = pick_deg(rng);
    if (n % 2 == 0 && 2 * i == n) {
      c[i] += 1;
      left -= 1;
    } else if (left >= 2) {
      c[i] += 1;
      c[n - i] += 1;
      left -= 2;
    } else {
      c[n / 2] += 1;  // even n: only the middle can absorb one
      left -= 1;
    }
  }
  std::vector<BettiVector> out;
  for (auto& c : comps) out.emplace_back(std::move(c));
  return out;
}

// Maximal profile of a complete intersection with random admissible real
// components; retries until the profile validates.
inline RealVarietyProfile random_maximal_ci_profile(std::mt19937_64& rng, const CompleteIntersection& ci) {
  RealVarietyProfile p;
  p.n = ci.dimension();
  p.complex_betti = complex_betti(ci);
  p.flags.maximal = true;
  p.flags.complete_intersection = ci;
  p.flags.h_odd_zero = p.complex_betti.odd() == 0;
  p.flags.torsion2_free = true;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int comps = std::uniform_int_distribution<int>(1, 3)(rng);
    p.real_components = random_components(rng, p.n, p.complex_betti.total(), comps);
    if (!p.real_components.empty() && validate(p).empty()) return p;
  }
  p.real_components.clear();
  return p;
}

// Random palindromic complex Betti vector (b_0 = b_2n = 1) with a maximal
// real profile; no complete-intersection flag.
inline RealVarietyProfile random_maximal_profile(std::mt19937_64& rng, int n) {
  for (;;) {
    std::vector<Count> b(static_cast<std::size_t>(2 * n + 1), 0);
    b[0] = b[2 * n] = 1;
    for (int k = 1; k < n; ++k) b[k] = b[2 * n - k] = std::uniform_int_distribution<Count>(0, 4)(rng);
    b[n] = std::uniform_int_distribution<Count>(0, 12)(rng);
    if (n % 2 == 1) b[n] += b[n] % 2;  // intersection form on odd middle cohomology is alternating
    RealVarietyProfile p;
    p.n = n;
    p.complex_betti = BettiVector(b);
    p.flags.maximal = true;
    const int comps = std::uniform_int_distribution<int>(1, 3)(rng);
    p.real_components = random_components(rng, n, p.complex_betti.total(), comps);
    if (!p.real_components.empty() && validate(p).empty()) return p;
  }
}

}  // namespace smithkit::testing
