#include "smithkit/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>

#include "smithkit/chain_homology.hpp"
#include "smithkit/errors.hpp"

namespace smithkit {
namespace {

bool is_face(const Simplex& face, const Simplex& of) {
  return face.size() <= of.size() && std::includes(of.begin(), of.end(), face.begin(), face.end());
}

std::vector<Simplex> canonical_facets(std::size_t vertex_count, std::vector<Simplex> facets) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw StructuralError("facet repeats a vertex");
    if (!f.empty() && f.back() >= vertex_count) throw StructuralError("facet vertex out of range");
  }
  std::erase_if(facets, [](const Simplex& f) { return f.empty(); });
  // Larger first, so a facet only has to be tested against kept ones.
  std::sort(facets.begin(), facets.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<Simplex> kept;
  std::vector<std::vector<std::size_t>> incident(vertex_count);
  for (auto& f : facets) {
    // Any facet covering f passes through the least-used vertex of f.
    Vertex rare = f.front();
    for (Vertex v : f)
      if (incident[v].size() < incident[rare].size()) rare = v;
    const bool covered = std::any_of(incident[rare].begin(), incident[rare].end(),
                                     [&](std::size_t g) { return is_face(f, kept[g]); });
    if (covered) continue;
    for (Vertex v : f) incident[v].push_back(kept.size());
    kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<std::vector<Simplex>> enumerate_faces(const std::vector<Simplex>& facets) {
  std::size_t top = 0;
  for (const auto& f : facets) top = std::max(top, f.size());
  std::vector<std::vector<Simplex>> out(top);
  Simplex face;
  for (const auto& f : facets) {
    const std::size_t n = f.size();
    // Enumerate nonempty subsets through bit masks; facets are small.
    if (n > 24) throw StructuralError("facet dimension too large to enumerate faces");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      face.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(f[i]);
      out[face.size() - 1].push_back(face);
    }
  }
  for (auto& group : out) {
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
  }
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> facets)
    : vertex_count_(vertex_count), facets_(canonical_facets(vertex_count, std::move(facets))) {
  simplices_ = std::make_shared<const std::vector<std::vector<Simplex>>>(enumerate_faces(facets_));
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

const std::vector<std::vector<Simplex>>& SimplicialComplex::simplices_by_dimension() const { return *simplices_; }

std::size_t SimplicialComplex::simplex_count() const {
  std::size_t n = 0;
  for (const auto& group : simplices_by_dimension()) n += group.size();
  return n;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  Simplex sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) return true;
  if (sorted.size() > simplices_->size()) return false;
  const auto& group = (*simplices_)[sorted.size() - 1];
  return std::binary_search(group.begin(), group.end(), sorted);
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  if (vertex_count_ > other.vertex_count_) {
    for (const auto& f : facets_)
      if (f.back() >= other.vertex_count_) return false;
  }
  const SimplexIndex index(other);
  return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return index.find(f).has_value(); });
}

SimplicialInvolution::SimplicialInvolution(SimplicialComplex complex, std::vector<Vertex> involution)
    : complex_(std::move(complex)), map_(std::move(involution)) {
  const std::size_t n = complex_.vertex_count();
  if (map_.size() != n) throw StructuralError("involution length differs from vertex count");
  for (std::size_t v = 0; v < n; ++v) {
    if (map_[v] >= n) throw StructuralError("involution image out of range");
    if (map_[map_[v]] != v) throw StructuralError("vertex map is not an involution");
  }
  // An involution preserving the complex permutes its facets, so checking
  // facet images against the facet list is enough.
  const auto& facets = complex_.facets();
  for (const auto& f : facets)
    if (!std::binary_search(facets.begin(), facets.end(), image(f)))
      throw StructuralError("image of a facet is not a simplex of the complex");
}

SimplicialInvolution SimplicialInvolution::identity(SimplicialComplex complex) {
  std::vector<Vertex> id(complex.vertex_count());
  std::iota(id.begin(), id.end(), Vertex{0});
  return SimplicialInvolution(std::move(complex), std::move(id));
}

Simplex SimplicialInvolution::image(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(map_[v]);
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialInvolution::invariant_simplices_fixed() const {
  for (const auto& group : complex_.simplices_by_dimension()) {
    for (const auto& s : group) {
      if (image(s) != s) continue;
      for (Vertex v : s)
        if (map_[v] != v) return false;
    }
  }
  return true;
}

bool SimplicialInvolution::orbits_separated() const {
  std::vector<Vertex> orbit(map_.size());
  for (std::size_t v = 0; v < map_.size(); ++v) orbit[v] = std::min<Vertex>(static_cast<Vertex>(v), map_[v]);
  // Two simplices with the same orbit image must be each other's images.
  for (const auto& group : complex_.simplices_by_dimension()) {
    std::vector<std::pair<Simplex, Index>> projected;
    projected.reserve(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) {
      Simplex img;
      for (Vertex v : group[i]) img.push_back(orbit[v]);
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
      projected.emplace_back(std::move(img), static_cast<Index>(i));
    }
    std::sort(projected.begin(), projected.end());
    for (std::size_t i = 0; i < projected.size();) {
      std::size_t j = i + 1;
      while (j < projected.size() && projected[j].first == projected[i].first) ++j;
      if (j - i > 2) return false;
      if (j - i == 2 && image(group[projected[i].second]) != group[projected[i + 1].second]) return false;
      i = j;
    }
  }
  return true;
}

SimplicialInvolution barycentric_subdivision(const SimplicialInvolution& k) {
  const SimplexIndex index(k.complex());
  std::vector<Vertex> offset(index.degrees() + 1, 0);
  for (std::size_t d = 0; d < index.degrees(); ++d)
    offset[d + 1] = offset[d] + static_cast<Vertex>(index.simplices(d).size());
  auto vertex_of = [&](const Simplex& s) { return offset[s.size() - 1] + *index.find(s); };

  std::vector<Vertex> map(offset.back());
  for (std::size_t d = 0; d < index.degrees(); ++d)
    for (const auto& s : index.simplices(d)) map[vertex_of(s)] = vertex_of(k.image(s));

  std::vector<Simplex> facets;
  for (const auto& f : k.complex().facets()) {
    Simplex order = f;
    Simplex prefix;
    do {
      Simplex chain;
      prefix.clear();
      for (Vertex v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        chain.push_back(vertex_of(prefix));
      }
      facets.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SimplicialInvolution(SimplicialComplex(offset.back(), std::move(facets)), std::move(map));
}

SimplicialInvolution regularize(const SimplicialInvolution& k) {
  if (k.is_regular()) return k;
  SimplicialInvolution once = barycentric_subdivision(k);
  if (once.is_regular()) return once;
  SimplicialInvolution twice = barycentric_subdivision(once);
  if (!twice.is_regular()) throw ConsistencyError("second barycentric subdivision is not regular");
  return twice;
}

SimplicialComplex fixed_subcomplex(const SimplicialInvolution& k) {
  if (!k.invariant_simplices_fixed()) throw PreconditionError("fixed_subcomplex needs a regular involution");
  const auto& map = k.involution();
  std::vector<Simplex> facets;
  for (const auto& group : k.complex().simplices_by_dimension())
    for (const auto& s : group)
      if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return map[v] == v; })) facets.push_back(s);
  return SimplicialComplex(k.complex().vertex_count(), std::move(facets));
}

QuotientComplex quotient_complex(const SimplicialInvolution& k) {
  if (!k.is_regular()) throw PreconditionError("quotient_complex needs a regular involution");
  const auto& map = k.involution();
  QuotientComplex q;
  q.projection.assign(map.size(), 0);
  std::vector<std::int64_t> label(map.size(), -1);
  Vertex next = 0;
  for (std::size_t v = 0; v < map.size(); ++v) {
    const std::size_t rep = std::min<std::size_t>(v, map[v]);
    if (label[rep] < 0) label[rep] = next++;
    q.projection[v] = static_cast<Vertex>(label[rep]);
  }
  std::vector<Simplex> facets;
  for (const auto& f : k.complex().facets()) {
    Simplex img;
    for (Vertex v : f) img.push_back(q.projection[v]);
    facets.push_back(std::move(img));
  }
  q.complex = SimplicialComplex(next, std::move(facets));
  return q;
}

BettiVector betti(const SimplicialComplex& k) { return homology_betti(simplicial_chains(SimplexIndex(k))); }

BettiVector relative_betti(const SimplicialComplex& k, const SimplicialComplex& sub) {
  if (!sub.is_subcomplex_of(k)) throw StructuralError("relative_betti: second complex is not a subcomplex");
  SimplexIndex index(k);
  SimplexIndex sub_index(sub);
  std::vector<std::vector<bool>> keep(index.degrees());
  for (std::size_t d = 0; d < index.degrees(); ++d) {
    const auto& group = index.simplices(d);
    keep[d].resize(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) keep[d][i] = !sub_index.find(group[i]).has_value();
  }
  return homology_betti(simplicial_chains(index, keep));
}

}  // namespace smithkit
