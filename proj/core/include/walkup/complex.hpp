#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace walkup {

/// Vertex names. Ordered lexicographically; never empty, never contain
/// whitespace or '#'.
using VertexLabel = std::string;

/// A face by labels: strictly increasing, duplicate-free.
using Face = std::vector<VertexLabel>;

/// Dense index into a complex's sorted vertex table. Because the table is
/// sorted, comparing id sequences is the same as comparing label sequences.
using VertexId = std::uint32_t;

/// A face by vertex ids of its owning complex, strictly increasing.
using Simplex = std::vector<VertexId>;

/// Face counts (f_0, ..., f_d). Empty for the empty complex.
using FVector = std::vector<std::int64_t>;

bool is_valid_label(std::string_view label) noexcept;

/// Finite simplicial complex stored by its maximal faces.
///
/// Complexes built by `from_facets` are pure; `induced_subcomplex` may yield
/// a non-pure one, in which case `is_pure()` is false and `dimension()` is
/// the largest face dimension. Instances are immutable and hold no caches,
/// so sharing one across threads is safe.
class SimplicialComplex {
 public:
  /// The empty complex: no vertices, dimension -1.
  SimplicialComplex() = default;

  /// Canonicalizes every facet. Throws EmptyInput, DuplicateVertexInFacet,
  /// MixedDimensions, DuplicateFacet or InvalidLabel.
  static SimplicialComplex from_facets(const std::vector<std::vector<VertexLabel>>& raw);

  /// Builds from id-based faces over `labels` (any order, unused labels are
  /// dropped). Faces contained in other faces are discarded, so the input
  /// may be any generating set. Does not require purity.
  static SimplicialComplex from_generators(std::span<const VertexLabel> labels,
                                           const std::vector<Simplex>& generators);

  int dimension() const noexcept { return dim_; }
  bool empty() const noexcept { return facets_.empty(); }
  bool is_pure() const noexcept { return pure_; }

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_facets() const noexcept { return facets_.size(); }

  const std::vector<VertexLabel>& vertices() const noexcept { return labels_; }
  const VertexLabel& label(VertexId id) const { return labels_.at(id); }
  std::optional<VertexId> find_vertex(std::string_view label) const;
  /// Throws UnknownVertex.
  VertexId vertex_id(std::string_view label) const;

  /// Maximal faces in canonical (lexicographic) order.
  const std::vector<Simplex>& facet_ids() const noexcept { return facets_; }
  std::vector<Face> facets() const;

  Face to_face(const Simplex& simplex) const;
  /// Sorts and translates labels. Throws UnknownVertex.
  Simplex to_simplex(const Face& face) const;

  bool has_facet(const Simplex& simplex) const;
  bool has_face(const Simplex& simplex) const;

  /// All j-faces in canonical order (0 <= j <= dimension()).
  std::vector<Simplex> faces(int j) const;

  /// Edge graph: sorted neighbour lists indexed by vertex id.
  std::vector<std::vector<VertexId>> adjacency() const;
  std::size_t degree(VertexId v) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) = default;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<Simplex> facets_;
  int dim_ = -1;
  bool pure_ = true;
};

FVector f_vector(const SimplicialComplex& complex);

/// Alternating sum of the f-vector.
std::int64_t euler_characteristic(const SimplicialComplex& complex);

/// Link of a face. Throws FaceNotPresent. The link of a facet is the empty
/// complex.
SimplicialComplex link(const SimplicialComplex& complex, const Face& face);

/// All faces of `complex` whose vertices lie in `vertex_set`. Possibly
/// non-pure. Throws UnknownVertex.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, const Face& vertex_set);

struct DualGraph {
  std::size_t num_nodes = 0;
  /// Sorted neighbour lists indexed by facet position in `facet_ids()`.
  std::vector<std::vector<std::size_t>> adjacency;
  /// Each edge once, (smaller, larger), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Every codimension-one face with the facets containing it.
  std::map<Simplex, std::vector<std::size_t>> ridges;
  /// Every ridge lies in at most two facets.
  bool weak_pseudomanifold = false;
  /// Every ridge lies in exactly two facets.
  bool closed = false;
  bool connected = false;
};

DualGraph dual_graph(const SimplicialComplex& complex);

bool is_closed_pseudomanifold(const SimplicialComplex& complex);

/// Complex generated by the ridges that lie in exactly one facet. Throws
/// NotPseudomanifoldWithBoundary or EmptyBoundary.
SimplicialComplex boundary_complex(const SimplicialComplex& complex);

/// Complex of all cliques of the edge graph; facets are the maximal cliques.
SimplicialComplex clique_complex(const SimplicialComplex& complex);

/// Edge-graph distance; std::nullopt when the vertices are disconnected.
/// Throws UnknownVertex.
std::optional<std::size_t> graph_distance(const SimplicialComplex& complex,
                                          std::string_view from, std::string_view to);

/// Breadth-first distances from one vertex; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> distances_from(const SimplicialComplex& complex, VertexId source);

/// Connected components of the edge graph, as vertex-label sets, ordered by
/// their smallest label.
std::vector<Face> connected_components(const SimplicialComplex& complex);

/// The subcomplex made of the facets that lie in one edge-graph component.
SimplicialComplex component_subcomplex(const SimplicialComplex& complex, const Face& component);

/// Applies a vertex renaming. Labels absent from `mapping` are kept. Throws
/// DuplicateVertexInFacet / DuplicateFacet if the renaming collapses faces.
SimplicialComplex relabel(const SimplicialComplex& complex,
                          const std::map<VertexLabel, VertexLabel>& mapping);

/// Union of two vertex-disjoint complexes of equal dimension. Throws
/// InvalidParameters on shared labels or mismatched dimensions.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// Number of facets containing the given face (given by labels).
std::size_t face_degree(const SimplicialComplex& complex, const Face& face);

}  // namespace walkup
