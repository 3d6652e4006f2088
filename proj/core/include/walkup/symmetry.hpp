#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walkup/complex.hpp"

namespace walkup {

/// A bijection between vertex sets, keyed by source label.
class VertexPermutation {
 public:
  VertexPermutation() = default;
  explicit VertexPermutation(std::map<VertexLabel, VertexLabel> mapping);

  /// The identity on the given labels.
  static VertexPermutation identity(const std::vector<VertexLabel>& labels);

  const std::map<VertexLabel, VertexLabel>& mapping() const noexcept { return mapping_; }
  /// Labels outside the domain are fixed.
  const VertexLabel& operator()(const VertexLabel& label) const;

  bool is_identity() const;
  /// (this * other)(x) = this(other(x)). Domains must coincide.
  VertexPermutation compose(const VertexPermutation& other) const;
  VertexPermutation inverse() const;
  /// Smallest k >= 1 with p^k = id.
  std::size_t order() const;

  /// Disjoint cycles, each starting at its smallest label, ordered by that
  /// label; fixed points omitted; "()" for the identity.
  std::string cycle_notation() const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
  friend bool operator<(const VertexPermutation& a, const VertexPermutation& b) {
    return a.mapping_ < b.mapping_;
  }

 private:
  std::map<VertexLabel, VertexLabel> mapping_;
};

/// Image of the complex under a relabelling.
SimplicialComplex apply(const VertexPermutation& p, const SimplicialComplex& complex);

/// Every vertex permutation mapping the facet set onto itself, sorted by
/// mapping. The identity is always present.
std::vector<VertexPermutation> automorphism_group(const SimplicialComplex& complex);

/// A bijection vertices(a) -> vertices(b) carrying facets onto facets, or
/// nullopt when the complexes are not isomorphic.
std::optional<VertexPermutation> find_isomorphism(const SimplicialComplex& a,
                                                  const SimplicialComplex& b);

/// Cells of the stable colour refinement seeded by (degree, incident edge
/// degrees, facet count). Automorphisms never mix cells. Cells are sorted.
std::vector<std::vector<VertexLabel>> refined_vertex_classes(const SimplicialComplex& complex);

}  // namespace walkup
