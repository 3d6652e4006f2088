#include "walkup/complex.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include "walkup/error.hpp"
#include "detail.hpp"

namespace walkup {

bool is_valid_label(std::string_view label) noexcept {
  if (label.empty()) return false;
  for (char c : label) {
    if (c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f')
      return false;
  }
  return true;
}

namespace {

std::string describe(const std::vector<VertexLabel>& facet) {
  std::string out = "[";
  for (std::size_t i = 0; i < facet.size(); ++i) {
    if (i) out += ' ';
    out += facet[i];
  }
  return out + "]";
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<VertexLabel>>& raw) {
  if (raw.empty()) throw Error(Errc::EmptyInput, "no facets given");

  std::vector<VertexLabel> labels;
  std::size_t size = raw.front().size();
  for (const auto& facet : raw) {
    if (facet.empty()) throw Error(Errc::EmptyInput, "empty facet");
    for (const auto& label : facet) {
      if (!is_valid_label(label))
        throw Error(Errc::InvalidLabel, "invalid vertex label '" + label + "'");
    }
    std::vector<VertexLabel> sorted = facet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(Errc::DuplicateVertexInFacet, "facet " + describe(facet));
    if (facet.size() != size)
      throw Error(Errc::MixedDimensions, "facet " + describe(facet) + " has dimension " +
                                             std::to_string(facet.size() - 1) + ", expected " +
                                             std::to_string(size - 1));
    labels.insert(labels.end(), sorted.begin(), sorted.end());
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  SimplicialComplex out;
  out.labels_ = std::move(labels);
  out.facets_.reserve(raw.size());
  for (const auto& facet : raw) out.facets_.push_back(out.to_simplex(facet));
  std::sort(out.facets_.begin(), out.facets_.end());
  if (auto dup = std::adjacent_find(out.facets_.begin(), out.facets_.end());
      dup != out.facets_.end())
    throw Error(Errc::DuplicateFacet, "facet " + describe(out.to_face(*dup)));
  out.dim_ = static_cast<int>(size) - 1;
  out.pure_ = true;
  return out;
}

SimplicialComplex SimplicialComplex::from_generators(std::span<const VertexLabel> labels,
                                                     const std::vector<Simplex>& generators) {
  std::vector<Simplex> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.empty()) continue;
    Simplex s = g;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    gens.push_back(std::move(s));
  }
  // Keep only maximal generators.
  std::sort(gens.begin(), gens.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Simplex> maximal;
  for (auto& g : gens) {
    bool contained = std::any_of(maximal.begin(), maximal.end(), [&](const Simplex& m) {
      return m.size() > g.size() && std::includes(m.begin(), m.end(), g.begin(), g.end());
    });
    if (!contained) maximal.push_back(std::move(g));
  }

  // Compact the vertex table to the labels actually used, sorted.
  std::vector<VertexId> used;
  for (const auto& m : maximal) used.insert(used.end(), m.begin(), m.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<VertexId> order(used.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return labels[used[a]] < labels[used[b]]; });
  std::map<VertexId, VertexId> remap;
  SimplicialComplex out;
  out.labels_.reserve(order.size());
  for (VertexId i = 0; i < order.size(); ++i) {
    remap[used[order[i]]] = i;
    out.labels_.push_back(labels[used[order[i]]]);
  }
  for (std::size_t i = 1; i < out.labels_.size(); ++i) {
    if (out.labels_[i] == out.labels_[i - 1])
      throw Error(Errc::InvalidParameters, "duplicate label '" + out.labels_[i] + "'");
  }
  std::size_t max_size = 0, min_size = std::numeric_limits<std::size_t>::max();
  for (const auto& m : maximal) {
    Simplex s;
    s.reserve(m.size());
    for (VertexId v : m) s.push_back(remap.at(v));
    std::sort(s.begin(), s.end());
    max_size = std::max(max_size, s.size());
    min_size = std::min(min_size, s.size());
    out.facets_.push_back(std::move(s));
  }
  std::sort(out.facets_.begin(), out.facets_.end());
  out.dim_ = static_cast<int>(max_size) - 1;
  out.pure_ = out.facets_.empty() || max_size == min_size;
  return out;
}

std::optional<VertexId> SimplicialComplex::find_vertex(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const VertexLabel& a, std::string_view b) { return a < b; });
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

VertexId SimplicialComplex::vertex_id(std::string_view label) const {
  if (auto id = find_vertex(label)) return *id;
  throw Error(Errc::UnknownVertex, "vertex '" + std::string(label) + "' is not in the complex");
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) out.push_back(to_face(f));
  return out;
}

Face SimplicialComplex::to_face(const Simplex& simplex) const {
  Face out;
  out.reserve(simplex.size());
  for (VertexId v : simplex) out.push_back(labels_.at(v));
  return out;
}

Simplex SimplicialComplex::to_simplex(const Face& face) const {
  Simplex out;
  out.reserve(face.size());
  for (const auto& label : face) out.push_back(vertex_id(label));
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialComplex::has_facet(const Simplex& simplex) const {
  return std::binary_search(facets_.begin(), facets_.end(), simplex);
}

bool SimplicialComplex::has_face(const Simplex& simplex) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) {
    return std::includes(f.begin(), f.end(), simplex.begin(), simplex.end());
  });
}

std::vector<Simplex> SimplicialComplex::faces(int j) const {
  std::vector<Simplex> out;
  if (j < 0 || j > dim_) return out;
  const auto k = static_cast<std::size_t>(j) + 1;
  for (const auto& f : facets_) {
    if (f.size() < k) continue;
    detail::for_each_subset(f, k, [&](const Simplex& s) { out.push_back(s); });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<VertexId>> SimplicialComplex::adjacency() const {
  std::vector<std::vector<VertexId>> adj(labels_.size());
  for (const auto& f : facets_) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        adj[f[i]].push_back(f[j]);
        adj[f[j]].push_back(f[i]);
      }
    }
  }
  for (auto& n : adj) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
  return adj;
}

std::size_t SimplicialComplex::degree(VertexId v) const {
  std::vector<VertexId> nbrs;
  for (const auto& f : facets_) {
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    for (VertexId u : f)
      if (u != v) nbrs.push_back(u);
  }
  std::sort(nbrs.begin(), nbrs.end());
  return static_cast<std::size_t>(std::unique(nbrs.begin(), nbrs.end()) - nbrs.begin());
}

FVector f_vector(const SimplicialComplex& complex) {
  FVector out;
  for (int j = 0; j <= complex.dimension(); ++j)
    out.push_back(static_cast<std::int64_t>(complex.faces(j).size()));
  return out;
}

std::int64_t euler_characteristic(const SimplicialComplex& complex) {
  std::int64_t chi = 0;
  const FVector f = f_vector(complex);
  for (std::size_t j = 0; j < f.size(); ++j) chi += (j % 2 == 0) ? f[j] : -f[j];
  return chi;
}

SimplicialComplex link(const SimplicialComplex& complex, const Face& face) {
  Simplex target;
  for (const auto& label : face) {
    auto id = complex.find_vertex(label);
    if (!id) throw Error(Errc::FaceNotPresent, "vertex '" + label + "' is not in the complex");
    target.push_back(*id);
  }
  std::sort(target.begin(), target.end());
  std::vector<Simplex> generators;
  bool found = false;
  for (const auto& f : complex.facet_ids()) {
    if (!std::includes(f.begin(), f.end(), target.begin(), target.end())) continue;
    found = true;
    Simplex rest;
    std::set_difference(f.begin(), f.end(), target.begin(), target.end(),
                        std::back_inserter(rest));
    generators.push_back(std::move(rest));
  }
  if (!found) throw Error(Errc::FaceNotPresent, "face is not in the complex");
  return SimplicialComplex::from_generators(complex.vertices(), generators);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, const Face& vertex_set) {
  Simplex chosen = complex.to_simplex(vertex_set);
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  std::vector<Simplex> generators;
  for (const auto& f : complex.facet_ids()) {
    Simplex meet;
    std::set_intersection(f.begin(), f.end(), chosen.begin(), chosen.end(),
                          std::back_inserter(meet));
    if (!meet.empty()) generators.push_back(std::move(meet));
  }
  return SimplicialComplex::from_generators(complex.vertices(), generators);
}

DualGraph dual_graph(const SimplicialComplex& complex) {
  DualGraph g;
  const auto& facets = complex.facet_ids();
  g.num_nodes = facets.size();
  g.adjacency.assign(facets.size(), {});
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const Simplex& f = facets[i];
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      Simplex ridge;
      ridge.reserve(f.size() - 1);
      for (std::size_t p = 0; p < f.size(); ++p)
        if (p != skip) ridge.push_back(f[p]);
      g.ridges[ridge].push_back(i);
    }
  }
  g.weak_pseudomanifold = true;
  g.closed = !g.ridges.empty();
  for (const auto& [ridge, owners] : g.ridges) {
    if (owners.size() > 2) g.weak_pseudomanifold = false;
    if (owners.size() != 2) g.closed = false;
    for (std::size_t a = 0; a < owners.size(); ++a) {
      for (std::size_t b = a + 1; b < owners.size(); ++b) {
        g.adjacency[owners[a]].push_back(owners[b]);
        g.adjacency[owners[b]].push_back(owners[a]);
      }
    }
  }
  g.closed = g.closed && g.weak_pseudomanifold;
  for (std::size_t i = 0; i < g.adjacency.size(); ++i) {
    auto& n = g.adjacency[i];
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
    for (std::size_t j : n)
      if (i < j) g.edges.emplace_back(i, j);
  }
  if (g.num_nodes > 0) {
    std::vector<bool> seen(g.num_nodes, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : g.adjacency[u]) {
        if (!seen[v]) {
          seen[v] = true;
          ++reached;
          queue.push_back(v);
        }
      }
    }
    g.connected = reached == g.num_nodes;
  }
  return g;
}

bool is_closed_pseudomanifold(const SimplicialComplex& complex) {
  if (complex.empty() || !complex.is_pure() || complex.dimension() < 1) return false;
  return dual_graph(complex).closed;
}

SimplicialComplex boundary_complex(const SimplicialComplex& complex) {
  const DualGraph g = dual_graph(complex);
  if (!g.weak_pseudomanifold)
    throw Error(Errc::NotPseudomanifoldWithBoundary, "some ridge lies in more than two facets");
  std::vector<Simplex> generators;
  for (const auto& [ridge, owners] : g.ridges)
    if (owners.size() == 1) generators.push_back(ridge);
  if (generators.empty() || generators.front().empty())
    throw Error(Errc::EmptyBoundary, "every ridge lies in two facets");
  return SimplicialComplex::from_generators(complex.vertices(), generators);
}

namespace {

using Set = std::vector<VertexId>;

Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void bron_kerbosch(const std::vector<Set>& adj, Set& clique, Set candidates, Set excluded,
                   std::vector<Simplex>& out) {
  if (candidates.empty()) {
    if (excluded.empty()) out.push_back(clique);
    return;
  }
  // Pivot on the vertex with the most neighbours among the candidates.
  VertexId pivot = candidates.front();
  std::size_t best = 0;
  for (const Set* pool : {&candidates, &excluded}) {
    for (VertexId u : *pool) {
      std::size_t c = intersect(candidates, adj[u]).size();
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
  }
  Set branch;
  std::set_difference(candidates.begin(), candidates.end(), adj[pivot].begin(), adj[pivot].end(),
                      std::back_inserter(branch));
  for (VertexId v : branch) {
    clique.push_back(v);
    bron_kerbosch(adj, clique, intersect(candidates, adj[v]), intersect(excluded, adj[v]), out);
    clique.pop_back();
    candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
    excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
  }
}

}  // namespace

SimplicialComplex clique_complex(const SimplicialComplex& complex) {
  const auto adj = complex.adjacency();
  Set all(complex.num_vertices());
  std::iota(all.begin(), all.end(), VertexId{0});
  std::vector<Simplex> cliques;
  Set clique;
  bron_kerbosch(adj, clique, all, {}, cliques);
  return SimplicialComplex::from_generators(complex.vertices(), cliques);
}

std::vector<std::size_t> distances_from(const SimplicialComplex& complex, VertexId source) {
  const auto adj = complex.adjacency();
  std::vector<std::size_t> dist(adj.size(), std::numeric_limits<std::size_t>::max());
  std::deque<VertexId> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v : adj[u]) {
      if (dist[v] == std::numeric_limits<std::size_t>::max()) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> graph_distance(const SimplicialComplex& complex, std::string_view from,
                                          std::string_view to) {
  const VertexId a = complex.vertex_id(from);
  const VertexId b = complex.vertex_id(to);
  const std::size_t d = distances_from(complex, a)[b];
  if (d == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return d;
}

std::vector<Face> connected_components(const SimplicialComplex& complex) {
  const auto adj = complex.adjacency();
  std::vector<bool> seen(adj.size(), false);
  std::vector<Face> out;
  for (VertexId s = 0; s < adj.size(); ++s) {
    if (seen[s]) continue;
    Face comp;
    std::deque<VertexId> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      comp.push_back(complex.label(u));
      for (VertexId v : adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

SimplicialComplex component_subcomplex(const SimplicialComplex& complex, const Face& component) {
  const Simplex members = complex.to_simplex(component);
  std::vector<Simplex> kept;
  for (const auto& f : complex.facet_ids())
    if (std::binary_search(members.begin(), members.end(), f.front())) kept.push_back(f);
  return SimplicialComplex::from_generators(complex.vertices(), kept);
}

SimplicialComplex relabel(const SimplicialComplex& complex,
                          const std::map<VertexLabel, VertexLabel>& mapping) {
  std::vector<VertexLabel> images;
  images.reserve(complex.num_vertices());
  for (const auto& label : complex.vertices()) {
    auto it = mapping.find(label);
    const VertexLabel& image = it == mapping.end() ? label : it->second;
    if (!is_valid_label(image))
      throw Error(Errc::InvalidLabel, "invalid vertex label '" + image + "'");
    images.push_back(image);
  }
  std::vector<VertexLabel> table = images;
  std::sort(table.begin(), table.end());
  table.erase(std::unique(table.begin(), table.end()), table.end());
  auto index = [&](const VertexLabel& l) {
    return static_cast<VertexId>(std::lower_bound(table.begin(), table.end(), l) - table.begin());
  };
  std::vector<Simplex> generators;
  for (const auto& f : complex.facet_ids()) {
    Simplex s;
    for (VertexId v : f) s.push_back(index(images[v]));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(Errc::DuplicateVertexInFacet, "renaming collapses a facet");
    generators.push_back(std::move(s));
  }
  std::vector<Simplex> sorted = generators;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::DuplicateFacet, "renaming identifies two facets");
  return SimplicialComplex::from_generators(table, generators);
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.dimension() != b.dimension())
    throw Error(Errc::InvalidParameters, "disjoint union needs equal dimensions");
  std::vector<VertexLabel> labels = a.vertices();
  for (const auto& l : b.vertices()) {
    if (a.find_vertex(l)) throw Error(Errc::InvalidParameters, "shared vertex '" + l + "'");
    labels.push_back(l);
  }
  std::vector<Simplex> generators = a.facet_ids();
  const auto offset = static_cast<VertexId>(a.num_vertices());
  for (const auto& f : b.facet_ids()) {
    Simplex s;
    for (VertexId v : f) s.push_back(v + offset);
    generators.push_back(std::move(s));
  }
  return SimplicialComplex::from_generators(labels, generators);
}

std::size_t face_degree(const SimplicialComplex& complex, const Face& face) {
  const Simplex s = complex.to_simplex(face);
  return static_cast<std::size_t>(
      std::count_if(complex.facet_ids().begin(), complex.facet_ids().end(), [&](const Simplex& f) {
        return std::includes(f.begin(), f.end(), s.begin(), s.end());
      }));
}

}  // namespace walkup
