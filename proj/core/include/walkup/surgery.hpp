#pragma once

#include <utility>
#include <vector>

#include "walkup/complex.hpp"

namespace walkup {

/// A bijection psi between two disjoint facets, as (source, target) pairs.
/// Handle addition renames every source to its target.
struct VertexBijection {
  std::vector<std::pair<VertexLabel, VertexLabel>> pairs;

  Face source_facet() const;
  Face target_facet() const;
  /// Throws InvalidParameters if sources or targets repeat or overlap.
  void validate() const;

  friend bool operator==(const VertexBijection&, const VertexBijection&) = default;
};

struct HandleRecord {
  Face sigma1;
  Face sigma2;
  VertexBijection psi;

  friend bool operator==(const HandleRecord&, const HandleRecord&) = default;
};

/// A stacked base sphere and the handle additions that rebuild a complex
/// from it, in application order.
struct HandleLedger {
  SimplicialComplex base;
  std::vector<HandleRecord> handles;
};

/// Every pair (x, psi(x)) is at edge-graph distance >= 3. Throws NotAFacet
/// if either side is not a facet.
bool is_admissible(const SimplicialComplex& complex, const VertexBijection& psi);

/// Removes the facets sigma1, sigma2 and identifies each source with its
/// target. Throws NotClosedPseudomanifold, NotAFacet, NotAdmissible or
/// WouldCreateDuplicateFacet.
SimplicialComplex handle_addition(const SimplicialComplex& complex, const VertexBijection& psi);

/// Handle addition on the disjoint union. Labels of `second` that collide
/// with `first` get a "_2" suffix (repeated until fresh); psi targets refer
/// to the original labels of `second`.
SimplicialComplex connected_sum(const SimplicialComplex& first, const SimplicialComplex& second,
                                const VertexBijection& psi);

/// True when the d+1 vertices of `vertex_set` induce the boundary of a
/// d-simplex: every proper subset is a face, the set itself is not.
bool induces_standard_sphere(const SimplicialComplex& complex, const Face& vertex_set);

/// Vertex sets inducing the boundary of a d-simplex, found by scanning the
/// interior (d-1)-faces of the clique complex of each vertex link (complete
/// for Walkup-class members). Sorted, duplicate-free. Throws DimensionTooLow
/// for d < 3.
std::vector<Face> find_induced_standard_spheres(const SimplicialComplex& complex);

/// Separator appended to a label when handle deletion clones a vertex.
inline constexpr char kCloneMarker = '~';

struct HandleDeletion {
  SimplicialComplex result;
  /// Maps the clone labels back onto `vertex_set`; handle_addition(result,
  /// psi) reproduces the input exactly.
  VertexBijection psi;
  /// facet_images[i][p] is the new label of vertex p of the input's i-th
  /// facet (positions follow the input facet, not re-sorted).
  std::vector<Face> facet_images;
};

/// Cuts a closed manifold along an induced boundary-of-simplex on
/// `vertex_set` and caps both sides. Vertices on one side receive fresh
/// labels "<label>~<k>". Throws DimensionTooLow, NotClosedPseudomanifold,
/// NotInducedStandardSphere or CutValidationFailed.
HandleDeletion handle_deletion(const SimplicialComplex& complex, const Face& vertex_set);

/// Splits a connected Walkup-class complex (d >= 4) into a stacked sphere
/// plus beta_1 handles, always deleting the lexicographically smallest
/// induced standard sphere. Replaying the ledger reproduces the input
/// exactly. Throws DimensionTooLow, NotWalkup, InvalidParameters
/// (disconnected input) or CutValidationFailed.
HandleLedger kalai_decompose(const SimplicialComplex& complex);

/// Applies every handle of the ledger to its base.
SimplicialComplex replay(const HandleLedger& ledger);

}  // namespace walkup
