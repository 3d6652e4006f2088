#pragma once

#include <string_view>
#include <vector>

#include "walkup/complex.hpp"

namespace walkup {

/// One bistellar-style collapse: a vertex of degree d+1 and the facet (its
/// neighbour set) that replaces its star.
struct ReductionStep {
  VertexLabel removed_vertex;
  Face replacing_facet;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct Reduction {
  SimplicialComplex residue;
  std::vector<ReductionStep> steps;
};

/// The boundary of a simplex: d+2 vertices, all d+2 possible d-faces.
bool is_standard_sphere(const SimplicialComplex& complex);

/// Weak pseudomanifold with boundary whose dual graph is a tree.
bool is_stacked_ball(const SimplicialComplex& complex);

/// Recognizes stacked spheres through their clique complex: for d >= 2 the
/// clique complex must be a stacked (d+1)-ball with boundary equal to the
/// input. Dimension 1 accepts exactly the cycles, dimension 0 the pairs of
/// points. Never throws; arbitrary input yields false.
bool is_stacked_sphere(const SimplicialComplex& complex);

/// Replaces the star of `vertex` (degree d+1) by the single facet spanned by
/// its neighbours. Throws NotClosedPseudomanifold, UnknownVertex,
/// DegreeTooHigh or TooFewVertices.
SimplicialComplex reduce_once(const SimplicialComplex& complex, std::string_view vertex);

/// Applies `reduce_once` at the smallest degree-(d+1) vertex until none is
/// left or only d+2 vertices remain. The residue is the standard sphere
/// exactly when the input was stacked. Throws NotClosedPseudomanifold.
Reduction reduce_to_core(const SimplicialComplex& complex);

/// Undoes a reduction by re-attaching each removed vertex over its facet, in
/// reverse order.
SimplicialComplex expand_reduction(const Reduction& reduction);

}  // namespace walkup
