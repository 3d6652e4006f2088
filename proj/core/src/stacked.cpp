#include "walkup/stacked.hpp"

#include <algorithm>

#include "walkup/error.hpp"

namespace walkup {

bool is_standard_sphere(const SimplicialComplex& complex) {
  if (complex.empty() || !complex.is_pure()) return false;
  const auto n = static_cast<std::size_t>(complex.dimension()) + 2;
  return complex.num_vertices() == n && complex.num_facets() == n;
}

bool is_stacked_ball(const SimplicialComplex& complex) {
  if (complex.empty() || !complex.is_pure()) return false;
  const DualGraph g = dual_graph(complex);
  return g.weak_pseudomanifold && g.connected && g.edges.size() + 1 == g.num_nodes;
}

bool is_stacked_sphere(const SimplicialComplex& complex) {
  if (complex.empty() || !complex.is_pure()) return false;
  const int d = complex.dimension();
  if (d == 0) return complex.num_facets() == 2;

  const DualGraph g = dual_graph(complex);
  if (!g.closed || !g.connected) return false;
  if (d == 1) {
    // A connected closed 1-pseudomanifold is a single cycle.
    return true;
  }
  // Cheap necessary condition before building the clique complex: a stacked
  // d-sphere has exactly (d+1) f0 - (d+2)(d+1)/2 edges.
  const auto n = static_cast<std::int64_t>(complex.num_vertices());
  const std::int64_t expected_edges = (d + 1) * n - (d + 2) * (d + 1) / 2;
  if (static_cast<std::int64_t>(complex.faces(1).size()) != expected_edges) return false;

  const SimplicialComplex ball = clique_complex(complex);
  if (!ball.is_pure() || ball.dimension() != d + 1) return false;
  if (!is_stacked_ball(ball)) return false;
  return boundary_complex(ball) == complex;
}

SimplicialComplex reduce_once(const SimplicialComplex& complex, std::string_view vertex) {
  if (!is_closed_pseudomanifold(complex))
    throw Error(Errc::NotClosedPseudomanifold, "reduction needs a closed weak pseudomanifold");
  const VertexId x = complex.vertex_id(vertex);
  const int d = complex.dimension();
  const std::size_t deg = complex.degree(x);
  if (deg != static_cast<std::size_t>(d) + 1)
    throw Error(Errc::DegreeTooHigh, "vertex '" + std::string(vertex) + "' has degree " +
                                         std::to_string(deg) + ", need " + std::to_string(d + 1));
  if (complex.num_vertices() <= static_cast<std::size_t>(d) + 2)
    throw Error(Errc::TooFewVertices, "already at d+2 vertices");

  std::vector<Simplex> kept;
  Simplex neighbours;
  for (const auto& f : complex.facet_ids()) {
    if (std::binary_search(f.begin(), f.end(), x)) {
      for (VertexId v : f)
        if (v != x) neighbours.push_back(v);
    } else {
      kept.push_back(f);
    }
  }
  std::sort(neighbours.begin(), neighbours.end());
  neighbours.erase(std::unique(neighbours.begin(), neighbours.end()), neighbours.end());
  if (complex.has_facet(neighbours))
    throw Error(Errc::DuplicateFacet, "the neighbour set of '" + std::string(vertex) +
                                          "' is already a facet");
  kept.push_back(std::move(neighbours));
  return SimplicialComplex::from_generators(complex.vertices(), kept);
}

Reduction reduce_to_core(const SimplicialComplex& complex) {
  if (!is_closed_pseudomanifold(complex))
    throw Error(Errc::NotClosedPseudomanifold, "reduction needs a closed weak pseudomanifold");
  Reduction out{complex, {}};
  const auto target = static_cast<std::size_t>(complex.dimension()) + 1;
  while (out.residue.num_vertices() > target + 1) {
    const SimplicialComplex& current = out.residue;
    const auto adj = current.adjacency();
    // Vertex ids follow label order, so the first hit is the smallest label.
    auto it = std::find_if(adj.begin(), adj.end(), [&](const auto& n) { return n.size() == target; });
    if (it == adj.end()) break;
    const auto x = static_cast<VertexId>(it - adj.begin());
    ReductionStep step{current.label(x), current.to_face(*it)};
    SimplicialComplex next = reduce_once(current, step.removed_vertex);
    out.steps.push_back(std::move(step));
    out.residue = std::move(next);
  }
  return out;
}

SimplicialComplex expand_reduction(const Reduction& reduction) {
  std::vector<std::vector<VertexLabel>> facets = reduction.residue.facets();
  for (auto step = reduction.steps.rbegin(); step != reduction.steps.rend(); ++step) {
    auto it = std::find(facets.begin(), facets.end(), step->replacing_facet);
    if (it == facets.end())
      throw Error(Errc::FaceNotPresent, "replacing facet missing while expanding");
    facets.erase(it);
    for (std::size_t skip = 0; skip < step->replacing_facet.size(); ++skip) {
      std::vector<VertexLabel> f;
      for (std::size_t p = 0; p < step->replacing_facet.size(); ++p)
        if (p != skip) f.push_back(step->replacing_facet[p]);
      f.push_back(step->removed_vertex);
      std::sort(f.begin(), f.end());
      facets.push_back(std::move(f));
    }
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace walkup
