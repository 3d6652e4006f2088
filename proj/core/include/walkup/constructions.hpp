#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "walkup/complex.hpp"
#include "walkup/surgery.hpp"

namespace walkup {

/// All d-faces of the vertex set {1, ..., d+2}.
SimplicialComplex standard_sphere(int d);
/// A single facet on {1, ..., d+1}.
SimplicialComplex standard_ball(int d);

struct NamedFacet {
  std::string name;  // "delta", "alpha1".."alpha8", "lambda1".., "gamma1"..
  Face vertices;     // in the written order, which carries the orientation
};

/// The 25 facets of the 30-vertex stacked 5-ball, in written order. Primed
/// labels carry a "p" suffix (a1p for a1').
const std::vector<NamedFacet>& b5_30_facets();

SimplicialComplex build_b5_30();
/// Boundary of build_b5_30().
SimplicialComplex build_s4_30();

/// The three identifications a_i' -> a_i, b_i' -> b_i, c_i' -> c_i, in that
/// order, as source -> target bijections.
std::vector<VertexBijection> m4_15_identifications();

/// S4_30 with the three handle additions. Throws Error(NotAdmissible) if an
/// identification is not admissible at its step (a construction bug).
SimplicialComplex build_m4_15();
/// build_b5_30() with the identifications applied to every facet.
SimplicialComplex build_n5_15();

/// Index (into b5_30_facets()) of a named B5_30 facet; throws InvalidParameters.
std::size_t b5_30_index(const std::string& name);

/// Starts from standard_sphere(d) and subdivides a uniformly chosen facet by
/// a new vertex until there are n vertices. New vertices are labelled
/// d+3, d+4, ... Throws InvalidParameters unless d >= 1 and n >= d+2.
SimplicialComplex random_stacked_sphere(int d, std::size_t n, std::uint64_t seed);

}  // namespace walkup
