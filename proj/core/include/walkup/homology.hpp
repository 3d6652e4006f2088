#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "walkup/complex.hpp"

namespace walkup {

/// Dense GF(2) matrix, rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c);

  std::span<const std::uint64_t> row(std::size_t r) const;
  std::span<std::uint64_t> row(std::size_t r);

  /// Rank by Gaussian elimination on a copy.
  std::size_t rank() const;
  /// Rank, destroying the contents.
  std::size_t rank_in_place();

  /// Rows form a basis of {x : A x = 0}.
  BitMatrix kernel_basis() const;

  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& rhs) const;
  bool is_zero() const noexcept;

  /// Row-wise concatenation; column counts must match.
  static BitMatrix stack(const BitMatrix& top, const BitMatrix& bottom);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Boundary operator from j-chains to (j-1)-chains: rows follow the canonical
/// (j-1)-face order, columns the canonical j-face order. Requires
/// 1 <= j <= dimension().
BitMatrix boundary_matrix(const SimplicialComplex& complex, int j);

enum class Orientability { Orientable, NonOrientable, NotApplicable };

struct HomologyProfile {
  /// (beta_0, ..., beta_d) over Z/2.
  std::vector<std::int64_t> betti;
  std::int64_t euler = 0;
  Orientability orientable = Orientability::NotApplicable;
  bool connected = false;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile homology_profile(const SimplicialComplex& complex);

/// Z/2 Betti numbers only (no orientation work).
std::vector<std::int64_t> betti_numbers(const SimplicialComplex& complex);

enum class Traversal { BreadthFirst, DepthFirst };

/// Facet signs (+1/-1, indexed like `facet_ids()`) such that every interior
/// ridge receives opposite induced orientations from its two facets, or
/// nullopt when none exists. Each dual-graph component is rooted at its
/// first facet with sign +1. Throws NotPseudomanifoldWithBoundary if some
/// ridge lies in more than two facets.
std::optional<std::vector<int>> coherent_orientation(const SimplicialComplex& complex,
                                                     Traversal order = Traversal::BreadthFirst);

/// Throws NotClosedPseudomanifold unless the input is a closed weak
/// pseudomanifold.
bool is_orientable(const SimplicialComplex& complex);

/// Sign of the face obtained by deleting position `position` from an
/// oriented simplex listed in increasing order: (-1)^position.
constexpr int deletion_sign(std::size_t position) noexcept { return position % 2 == 0 ? 1 : -1; }

/// Parity of the permutation sorting `sequence` (+1 even, -1 odd). Entries
/// must be distinct.
int permutation_sign(std::span<const VertexId> sequence);

}  // namespace walkup
