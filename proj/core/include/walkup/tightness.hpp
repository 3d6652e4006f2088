#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "walkup/complex.hpp"

namespace walkup {

/// True iff H_k(X[S]) -> H_k(X) is injective over Z/2, decided literally:
/// dim(Z_k(Y) cap B_k(X)) == dim B_k(Y), with the intersection dimension
/// taken from the rank of the stacked bases. Throws UnknownVertex, or
/// InvalidParameters for k outside [0, d].
bool homology_map_injective(const SimplicialComplex& complex, const Face& vertex_set, int k);

enum class TightnessMode { Exhaustive, Sampled };

struct TightnessOptions {
  TightnessMode mode = TightnessMode::Exhaustive;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  /// Exhaustive mode refuses complexes with more vertices than this.
  std::size_t ceiling = 20;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned jobs = 0;
  /// Keep scanning after the first violation and report all of them.
  bool collect_all = false;
};

struct Violation {
  Face subset;
  int degree = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

enum class TightVerdict { Tight, NotTight, TightOnSample };

struct TightnessReport {
  TightnessMode mode = TightnessMode::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  /// Subsets examined. When the scan stops at the first violation this is
  /// the position of the witness in the scan order.
  std::uint64_t checked = 0;
  /// In scan order; degrees ascending within a subset.
  std::vector<Violation> violations;
  TightVerdict verdict = TightVerdict::NotTight;
};

/// Fast per-subset test. For Y = X[S] and 1 <= k < d, the inclusion is
/// injective in degree k iff rank(d_{k+1} on Y) + rank(d_{k+1} on the faces
/// outside Y) == rank(d_{k+1} on X); degree 0 is a component count and
/// degree d is always injective. Immutable after construction, so one
/// checker can be shared by worker threads.
class TightnessChecker {
 public:
  /// Throws InvalidParameters for complexes with more than 63 vertices.
  explicit TightnessChecker(const SimplicialComplex& complex);

  std::size_t num_vertices() const noexcept { return n_; }

  /// Degrees k at which the map fails to be injective for the vertex subset
  /// `mask` (bit i = vertex id i), ascending. Stops at the first one unless
  /// `all` is set.
  std::vector<int> failing_degrees(std::uint64_t mask, bool all = false) const;

 private:
  struct Level {
    std::vector<std::uint64_t> row_masks;                 // k-faces
    std::vector<std::uint64_t> col_masks;                 // (k+1)-faces
    std::vector<std::vector<std::uint32_t>> col_entries;  // boundary rows of each column
    std::size_t full_rank = 0;
  };

  bool degree0_injective(std::uint64_t mask) const;
  bool degree_injective(const Level& level, std::uint64_t mask) const;

  std::size_t n_ = 0;
  int dim_ = -1;
  std::vector<std::vector<std::uint32_t>> neighbours_;
  std::vector<std::uint32_t> component_;
  std::vector<Level> levels_;  // levels_[k - 1] for 1 <= k < d
};

/// Checks every non-empty proper vertex subset (Gray-code order) or a seeded
/// sample of them. Throws SubsetSpaceTooLarge in exhaustive mode when f0
/// exceeds the ceiling.
TightnessReport is_tight_z2(const SimplicialComplex& complex, const TightnessOptions& options = {});

}  // namespace walkup
