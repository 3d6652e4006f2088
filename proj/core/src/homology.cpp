#include "walkup/homology.hpp"

#include <algorithm>
#include <deque>

#include "walkup/error.hpp"

namespace walkup {

namespace {

std::size_t index_of(const std::vector<Simplex>& sorted, const Simplex& s) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
  return static_cast<std::size_t>(it - sorted.begin());
}

BitMatrix build_boundary(const std::vector<Simplex>& lower, const std::vector<Simplex>& upper) {
  BitMatrix m(lower.size(), upper.size());
  Simplex ridge;
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const Simplex& s = upper[c];
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      ridge.clear();
      for (std::size_t p = 0; p < s.size(); ++p)
        if (p != skip) ridge.push_back(s[p]);
      m.set(index_of(lower, ridge), c);
    }
  }
  return m;
}

}  // namespace

BitMatrix boundary_matrix(const SimplicialComplex& complex, int j) {
  if (j < 1 || j > complex.dimension())
    throw Error(Errc::InvalidParameters, "boundary_matrix needs 1 <= j <= dimension");
  return build_boundary(complex.faces(j - 1), complex.faces(j));
}

std::vector<std::int64_t> betti_numbers(const SimplicialComplex& complex) {
  const int d = complex.dimension();
  if (d < 0) return {};
  std::vector<std::vector<Simplex>> faces;
  for (int j = 0; j <= d; ++j) faces.push_back(complex.faces(j));
  // ranks[j] = rank of the boundary from j-chains, ranks[0] = ranks[d+1] = 0.
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(d) + 2, 0);
  for (int j = 1; j <= d; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    ranks[uj] = static_cast<std::int64_t>(build_boundary(faces[uj - 1], faces[uj]).rank_in_place());
  }
  std::vector<std::int64_t> betti;
  for (int j = 0; j <= d; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    betti.push_back(static_cast<std::int64_t>(faces[uj].size()) - ranks[uj] - ranks[uj + 1]);
  }
  return betti;
}

HomologyProfile homology_profile(const SimplicialComplex& complex) {
  HomologyProfile p;
  if (complex.empty()) return p;
  p.betti = betti_numbers(complex);
  p.euler = euler_characteristic(complex);
  p.connected = p.betti[0] == 1;
  if (is_closed_pseudomanifold(complex))
    p.orientable = is_orientable(complex) ? Orientability::Orientable : Orientability::NonOrientable;
  return p;
}

int permutation_sign(std::span<const VertexId> sequence) {
  int sign = 1;
  for (std::size_t i = 0; i < sequence.size(); ++i)
    for (std::size_t j = i + 1; j < sequence.size(); ++j)
      if (sequence[i] > sequence[j]) sign = -sign;
  return sign;
}

std::optional<std::vector<int>> coherent_orientation(const SimplicialComplex& complex,
                                                     Traversal order) {
  const DualGraph g = dual_graph(complex);
  if (!g.weak_pseudomanifold)
    throw Error(Errc::NotPseudomanifoldWithBoundary, "some ridge lies in more than two facets");
  const auto& facets = complex.facet_ids();

  // For each shared ridge, the deletion positions within both facets.
  struct Glue {
    std::size_t other;
    std::size_t my_pos;
    std::size_t other_pos;
  };
  std::vector<std::vector<Glue>> glue(facets.size());
  for (const auto& [ridge, owners] : g.ridges) {
    if (owners.size() != 2) continue;
    auto missing = [&](std::size_t f) {
      const Simplex& s = facets[f];
      std::size_t p = 0;
      while (p < ridge.size() && s[p] == ridge[p]) ++p;
      return p;
    };
    const std::size_t a = owners[0], b = owners[1];
    glue[a].push_back({b, missing(a), missing(b)});
    glue[b].push_back({a, missing(b), missing(a)});
  }

  // Coherence: sign_a * (-1)^pos_a == -sign_b * (-1)^pos_b.
  auto required = [](int sign, const Glue& e) {
    return -sign * deletion_sign(e.my_pos) * deletion_sign(e.other_pos);
  };

  std::vector<int> sign(facets.size(), 0);
  for (std::size_t root = 0; root < facets.size(); ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::deque<std::size_t> work{root};
    while (!work.empty()) {
      std::size_t u;
      if (order == Traversal::BreadthFirst) {
        u = work.front();
        work.pop_front();
      } else {
        u = work.back();
        work.pop_back();
      }
      for (const Glue& e : glue[u]) {
        if (sign[e.other] == 0) {
          sign[e.other] = required(sign[u], e);
          work.push_back(e.other);
        }
      }
    }
  }
  for (std::size_t u = 0; u < facets.size(); ++u)
    for (const Glue& e : glue[u])
      if (sign[e.other] != required(sign[u], e)) return std::nullopt;
  return sign;
}

bool is_orientable(const SimplicialComplex& complex) {
  if (!is_closed_pseudomanifold(complex))
    throw Error(Errc::NotClosedPseudomanifold, "orientability needs a closed weak pseudomanifold");
  return coherent_orientation(complex).has_value();
}

}  // namespace walkup
