#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "walkup/complex.hpp"

namespace walkup {

/// Exact binomial coefficient; zero outside 0 <= k <= n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Every vertex link is a stacked (d-1)-sphere. In dimension 2 this is the
/// closed-surface test (every link a cycle).
bool in_walkup_class(const SimplicialComplex& complex);

/// f-vector of any stacked d-sphere with f0 vertices. Throws
/// InvalidParameters unless d >= 1 and f0 >= d+2.
FVector stacked_sphere_fvector(int d, std::int64_t f0);

/// f-vector of a connected even-dimensional Walkup-class member from
/// (f0, chi). Throws OddDimension, InvalidParameters, NonIntegralResult.
FVector walkup_fvector_even(int d, std::int64_t f0, std::int64_t chi);

/// f-vector of a Walkup-class member from (f0, f1), any dimension d >= 2.
/// Throws InvalidParameters or NonIntegralResult.
FVector fvector_from_f0_f1(int d, std::int64_t f0, std::int64_t f1);

/// Dehn-Sommerville completion for closed 4-manifolds.
FVector dehn_sommerville_4(std::int64_t f0, std::int64_t f1, std::int64_t chi);

struct BoundInstance {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool tight = false;
};

/// Lower-bound inequalities lhs >= rhs for a closed connected 4-manifold.
/// Instances "a.f1".."a.f4" are the face-count bounds in doubled integer
/// form (2 f_j >= ...); "b" is f0 (f0 - 11) >= -15 chi.
struct BoundReport {
  std::int64_t chi = 0;
  std::vector<BoundInstance> instances;
  /// Every "a.*" instance is tight (equality forces Walkup-class membership).
  bool walkup_equality = false;
  /// Instance "b" is tight (2-neighborly Walkup-class member).
  bool neighborly_equality = false;
  bool overall_equality = false;
};

/// Verifies closedness, connectivity and that every vertex link has the Z/2
/// homology of a 3-sphere (not full PL-manifoldness), then evaluates the
/// bounds with chi from Z/2 Betti numbers. Throws NotClosedConnected4Manifold.
BoundReport check_bounds_4manifold(const SimplicialComplex& complex);

/// f1 == C(f0, 2).
bool is_two_neighborly(const SimplicialComplex& complex);

}  // namespace walkup
