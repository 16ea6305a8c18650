#include "smithkit/smith.hpp"

#include <algorithm>

#include "smithkit/chain_homology.hpp"
#include "smithkit/errors.hpp"

namespace smithkit {
namespace {

BettiVector padded(const BettiVector& b, std::size_t length) {
  std::vector<Count> v(length, 0);
  for (std::size_t i = 0; i < length; ++i) v[i] = b[static_cast<std::ptrdiff_t>(i)];
  return BettiVector(std::move(v));
}

// The chain-level data of the sequence 0 -> Sm(X) -> S(X) -> im(1+c) -> 0.
//
// In each degree a simplex is either fixed or paired with its image. Sm(X)
// has basis {fixed simplices} followed by {orbit sums}, im(1+c) has basis
// {orbit sums}; pairs are listed by their smaller simplex.
struct SmithChains {
  ChainComplex total;     // S(X)
  ChainComplex smith;     // Sm(X) = ker(1 + c)
  ChainComplex orbits;    // im(1 + c)
  std::vector<F2Matrix> inclusion;   // Sm_k(X) -> S_k(X)
  std::vector<F2Matrix> symmetrize;  // S_k(X) -> im(1+c)_k, x -> x + cx
  std::vector<F2Matrix> lift;        // im(1+c)_k -> S_k(X), orbit sum -> smaller simplex
  std::vector<std::size_t> fixed_count;
  std::vector<std::vector<std::int64_t>> pair_of;  // simplex -> pair index, -1 if fixed
  std::vector<std::vector<Index>> fixed_pos;       // fixed simplex -> position among fixed ones
  std::vector<std::vector<Index>> pair_rep;        // pair index -> smaller simplex
};

// Expresses a chain of S_k(X) that lies in Sm_k(X) in the Sm basis.
F2Vector smith_coordinates(const SmithChains& sc, std::size_t d, const F2Vector& chain) {
  const std::size_t nfixed = sc.fixed_count[d];
  const std::size_t pairs = sc.pair_rep[d].size();
  std::vector<Index> coords;
  std::vector<Index> paired;
  for (Index i : chain.support()) {
    const std::int64_t p = sc.pair_of[d][i];
    if (p < 0)
      coords.push_back(sc.fixed_pos[d][i]);
    else
      paired.push_back(static_cast<Index>(p));
  }
  // An invariant chain meets each orbit pair in both simplices or neither.
  std::sort(paired.begin(), paired.end());
  for (std::size_t i = 0; i < paired.size(); i += 2) {
    if (i + 1 >= paired.size() || paired[i] != paired[i + 1])
      throw ConsistencyError("chain is not invariant under the involution");
    coords.push_back(static_cast<Index>(nfixed + paired[i]));
  }
  return F2Vector(nfixed + pairs, std::move(coords));
}

SmithChains build_chains(const SimplicialInvolution& k) {
  SimplexIndex index(k.complex());
  SmithChains sc;
  sc.total = simplicial_chains(index);
  const std::size_t n = index.degrees();
  sc.fixed_count.assign(n, 0);
  sc.pair_of.resize(n);
  sc.pair_rep.resize(n);
  sc.fixed_pos.resize(n);
  std::vector<std::vector<Index>> image(n);
  std::vector<std::vector<Index>> fixed(n);

  for (std::size_t d = 0; d < n; ++d) {
    const auto& group = index.simplices(d);
    image[d].resize(group.size());
    sc.pair_of[d].assign(group.size(), -1);
    sc.fixed_pos[d].assign(group.size(), 0);
    for (std::size_t i = 0; i < group.size(); ++i) {
      image[d][i] = *index.find(k.image(group[i]));
      if (image[d][i] == i) {
        sc.fixed_pos[d][i] = static_cast<Index>(fixed[d].size());
        fixed[d].push_back(static_cast<Index>(i));
      } else if (i < image[d][i]) {
        sc.pair_of[d][i] = static_cast<std::int64_t>(sc.pair_rep[d].size());
        sc.pair_of[d][image[d][i]] = sc.pair_of[d][i];
        sc.pair_rep[d].push_back(static_cast<Index>(i));
      }
    }
    sc.fixed_count[d] = fixed[d].size();
  }

  for (std::size_t d = 0; d < n; ++d) {
    const std::size_t simplices = index.simplices(d).size();
    const std::size_t pairs = sc.pair_rep[d].size();
    const std::size_t nfixed = fixed[d].size();

    F2Matrix incl(simplices, nfixed + pairs);
    for (std::size_t j = 0; j < nfixed; ++j) incl.set_column(j, F2Vector::unit(simplices, fixed[d][j]));
    for (std::size_t p = 0; p < pairs; ++p) {
      const Index a = sc.pair_rep[d][p];
      incl.set_column(nfixed + p, F2Vector(simplices, {a, image[d][a]}));
    }
    sc.inclusion.push_back(std::move(incl));

    F2Matrix sym(pairs, simplices);
    for (std::size_t i = 0; i < simplices; ++i)
      if (sc.pair_of[d][i] >= 0) sym.set_column(i, F2Vector::unit(pairs, static_cast<Index>(sc.pair_of[d][i])));
    sc.symmetrize.push_back(std::move(sym));

    F2Matrix up(simplices, pairs);
    for (std::size_t p = 0; p < pairs; ++p) up.set_column(p, F2Vector::unit(simplices, sc.pair_rep[d][p]));
    sc.lift.push_back(std::move(up));
  }

  // Boundaries of the two sub/quotient complexes, read off in their bases.
  for (std::size_t d = 0; d < n; ++d) {
    const std::size_t rows_smith = d == 0 ? 0 : sc.fixed_count[d - 1] + sc.pair_rep[d - 1].size();
    const std::size_t rows_orbit = d == 0 ? 0 : sc.pair_rep[d - 1].size();
    F2Matrix smith_d(rows_smith, sc.inclusion[d].cols());
    F2Matrix orbit_d(rows_orbit, sc.pair_rep[d].size());
    if (d > 0) {
      const F2Matrix& bd = sc.total.boundaries[d];
      for (std::size_t j = 0; j < sc.inclusion[d].cols(); ++j)
        smith_d.set_column(j, smith_coordinates(sc, d - 1, bd * sc.inclusion[d].column(j)));
      for (std::size_t p = 0; p < sc.pair_rep[d].size(); ++p)
        orbit_d.set_column(p, sc.symmetrize[d - 1] * (bd * sc.lift[d].column(p)));
    }
    sc.smith.boundaries.push_back(std::move(smith_d));
    sc.orbits.boundaries.push_back(std::move(orbit_d));
  }
  return sc;
}

bool composition_zero(const F2Matrix& second, const F2Matrix& first) { return (second * first).is_zero(); }

}  // namespace

SmithReport smith_report(const SimplicialInvolution& input) {
  const SimplicialInvolution k = regularize(input);
  SmithReport report;
  report.regular_vertex_count = k.complex().vertex_count();

  const SimplicialComplex fixed = fixed_subcomplex(k);
  const QuotientComplex quotient = quotient_complex(k);
  std::vector<Simplex> fixed_in_quotient;
  for (const auto& f : fixed.facets()) {
    Simplex img;
    for (Vertex v : f) img.push_back(quotient.projection[v]);
    fixed_in_quotient.push_back(std::move(img));
  }
  const SimplicialComplex fixed_bar(quotient.complex.vertex_count(), std::move(fixed_in_quotient));

  const std::size_t length = static_cast<std::size_t>(k.complex().dimension() + 1);
  report.betti_F = padded(betti(fixed), length);
  report.betti_rel = padded(relative_betti(quotient.complex, fixed_bar), length);

  const SmithChains sc = build_chains(k);
  const Homology h_smith(sc.smith);
  const Homology h_total(sc.total);
  const Homology h_orbits(sc.orbits);
  report.betti_X = padded(h_total.betti_vector(), length);

  // Long sequence ... -> H_p(Sm) -i-> H_p(X) -j-> H_p(im) -delta-> H_{p-1}(Sm) -> ...
  std::vector<F2Matrix> inc(length), sym(length), delta(length);
  for (std::size_t p = 0; p < length; ++p) {
    inc[p] = induced_map(h_smith, h_total, p, sc.inclusion[p]);
    sym[p] = induced_map(h_total, h_orbits, p, sc.symmetrize[p]);
    const std::size_t target_dim = p == 0 ? 0 : h_smith.betti(p - 1);
    F2Matrix conn(target_dim, h_orbits.betti(p));
    if (p > 0) {
      const auto& reps = h_orbits.representatives(p);
      for (std::size_t j = 0; j < reps.size(); ++j) {
        const F2Vector lifted_boundary = sc.total.boundaries[p] * (sc.lift[p] * reps[j]);
        const F2Vector in_smith = smith_coordinates(sc, p - 1, lifted_boundary);
        conn.set_column(j, h_smith.class_of(p - 1, in_smith));
      }
    }
    delta[p] = std::move(conn);
  }

  bool exact = true;
  for (std::size_t p = 0; p < length; ++p) {
    const auto r_inc = static_cast<Count>(rank(inc[p]));
    const auto r_sym = static_cast<Count>(rank(sym[p]));
    const auto r_delta = static_cast<Count>(rank(delta[p]));
    const Count r_delta_up = p + 1 < length ? static_cast<Count>(rank(delta[p + 1])) : 0;
    // at H_p(X)
    exact = exact && composition_zero(sym[p], inc[p]) &&
            r_inc + r_sym == static_cast<Count>(h_total.betti(p));
    // at H_p(im(1+c))
    if (p > 0) exact = exact && composition_zero(delta[p], sym[p]);
    exact = exact && r_sym + r_delta == static_cast<Count>(h_orbits.betti(p));
    // at H_p(Sm)
    if (p + 1 < length) exact = exact && composition_zero(inc[p], delta[p + 1]);
    exact = exact && r_delta_up + r_inc == static_cast<Count>(h_smith.betti(p));
  }
  report.exactness_verified = exact;

  bool transfer = true;
  for (std::size_t p = 0; p < length; ++p) {
    transfer = transfer && static_cast<Count>(h_orbits.betti(p)) == report.betti_rel[static_cast<std::ptrdiff_t>(p)];
    transfer = transfer && static_cast<Count>(h_smith.betti(p)) ==
                               report.betti_F[static_cast<std::ptrdiff_t>(p)] + static_cast<Count>(h_orbits.betti(p));
  }
  report.transfer_verified = transfer;

  report.coker_dims.assign(length, 0);
  for (std::size_t p = 0; p < length; ++p) {
    report.coker_dims[p] = static_cast<Count>(h_total.betti(p)) - static_cast<Count>(rank(inc[p]));
    report.deficiency += 2 * report.coker_dims[p];
  }
  report.maximal = report.deficiency == 0;
  return report;
}

RelativeQuotientCheck check_relative_quotient(const SmithReport& report, std::optional<ManifoldHypothesis> manifold) {
  if (!report.maximal) throw PreconditionError("relative quotient identities need a maximal involution");
  const auto d = static_cast<std::ptrdiff_t>(report.betti_X.size()) - 1;
  RelativeQuotientCheck check;
  check.tail_sums = true;
  for (std::ptrdiff_t r = 0; r <= d; ++r) {
    Count tail = 0;
    for (std::ptrdiff_t k = r; k <= d; ++k) tail += report.betti_X[k] - report.betti_F[k];
    check.tail_sums = check.tail_sums && report.betti_rel[r] == tail;
  }
  if (manifold) {
    const std::ptrdiff_t n = manifold->half_dimension;
    if (n < 0 || 2 * n != d) throw PreconditionError("manifold hypothesis: dimension is not twice the fixed dimension");
    bool upper = true;
    for (std::ptrdiff_t r = n + 1; r <= 2 * n; ++r) upper = upper && report.betti_rel[r] == report.betti_X.range_sum(r, 2 * n);
    check.upper_degrees = upper;
    check.total = 2 * report.betti_rel.total() == n * report.betti_X.total();
  }
  return check;
}

RelativeQuotientCheck check_relative_quotient(const SimplicialInvolution& k, std::optional<ManifoldHypothesis> manifold) {
  return check_relative_quotient(smith_report(k), manifold);
}

bool verify_relative_quotient(const SimplicialInvolution& k, std::optional<ManifoldHypothesis> manifold) {
  return check_relative_quotient(k, manifold).passed();
}

}  // namespace smithkit
