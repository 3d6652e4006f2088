#include "walkup/constructions.hpp"

#include <sstream>

#include "walkup/error.hpp"
#include "walkup/rng.hpp"

namespace walkup {

namespace {

Face words(const char* text) {
  std::istringstream in(text);
  Face out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<VertexLabel> numbered(int count) {
  std::vector<VertexLabel> out;
  for (int i = 1; i <= count; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

SimplicialComplex standard_sphere(int d) {
  if (d < 0) throw Error(Errc::InvalidParameters, "dimension must be non-negative");
  const auto all = numbered(d + 2);
  std::vector<std::vector<VertexLabel>> facets;
  for (std::size_t skip = 0; skip < all.size(); ++skip) {
    std::vector<VertexLabel> f;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (i != skip) f.push_back(all[i]);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex standard_ball(int d) {
  if (d < 0) throw Error(Errc::InvalidParameters, "dimension must be non-negative");
  return SimplicialComplex::from_facets({numbered(d + 1)});
}

const std::vector<NamedFacet>& b5_30_facets() {
  static const std::vector<NamedFacet> facets = {
      {"delta", words("a1 a2 b1 b2 c2 c1")},
      {"alpha1", words("a1 a2 a4 b1 b2 c2")},
      {"alpha2", words("a1 a2 a3 a4 b1 b2")},
      {"alpha3", words("a1 a2 a3 a4 a5 b1")},
      {"alpha4", words("a2 a3 a4 a5 b1 c5p")},
      {"alpha5", words("a3 a4 a5 b1 c5p c4p")},
      {"alpha6", words("a3 a4 a5 c3p c4p c5p")},
      {"alpha7", words("a3 a5 c2p c3p c4p c5p")},
      {"alpha8", words("c1p c2p c3p c4p c5p a3")},
      {"lambda1", words("a1 a2 b2 c1 c2 c4")},
      {"lambda2", words("a1 a2 c1 c2 c3 c4")},
      {"lambda3", words("a1 c1 c2 c3 c5 c4")},
      {"lambda4", words("a1 c2 c3 c4 c5 b5p")},
      {"lambda5", words("a1 c3 c4 c5 b4p b5p")},
      {"lambda6", words("c3 c4 c5 b3p b4p b5p")},
      {"lambda7", words("c3 c5 b2p b3p b4p b5p")},
      {"lambda8", words("b1p b2p b3p b4p b5p c3")},
      {"gamma1", words("a2 b1 b2 b4 c2 c1")},
      {"gamma2", words("b1 b2 b3 b4 c1 c2")},
      {"gamma3", words("b1 b2 b3 b4 b5 c1")},
      {"gamma4", words("a5p b2 b3 b5 b4 c1")},
      {"gamma5", words("a4p a5p b3 b4 b5 c1")},
      {"gamma6", words("a3p a4p a5p b3 b5 b4")},
      {"gamma7", words("a2p a3p a4p a5p b3 b5")},
      {"gamma8", words("a1p a2p a3p a4p a5p b3")},
  };
  return facets;
}

std::size_t b5_30_index(const std::string& name) {
  const auto& facets = b5_30_facets();
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (facets[i].name == name) return i;
  throw Error(Errc::InvalidParameters, "no facet named '" + name + "'");
}

SimplicialComplex build_b5_30() {
  std::vector<std::vector<VertexLabel>> facets;
  for (const auto& f : b5_30_facets()) facets.push_back(f.vertices);
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex build_s4_30() { return boundary_complex(build_b5_30()); }

std::vector<VertexBijection> m4_15_identifications() {
  std::vector<VertexBijection> out;
  for (const char letter : {'a', 'b', 'c'}) {
    VertexBijection psi;
    for (int i = 1; i <= 5; ++i) {
      const std::string base = std::string(1, letter) + std::to_string(i);
      psi.pairs.emplace_back(base + "p", base);
    }
    out.push_back(std::move(psi));
  }
  return out;
}

SimplicialComplex build_m4_15() {
  SimplicialComplex x = build_s4_30();
  for (const auto& psi : m4_15_identifications()) {
    if (!is_admissible(x, psi))
      throw Error(Errc::NotAdmissible, "identification onto " + psi.target_facet().front() +
                                           "... is not admissible");
    x = handle_addition(x, psi);
  }
  return x;
}

SimplicialComplex build_n5_15() {
  std::map<VertexLabel, VertexLabel> rename;
  for (const auto& psi : m4_15_identifications())
    for (const auto& [src, tgt] : psi.pairs) rename[src] = tgt;
  return relabel(build_b5_30(), rename);
}

SimplicialComplex random_stacked_sphere(int d, std::size_t n, std::uint64_t seed) {
  if (d < 1) throw Error(Errc::InvalidParameters, "dimension must be at least 1");
  if (n < static_cast<std::size_t>(d) + 2)
    throw Error(Errc::InvalidParameters, "need at least d + 2 vertices");
  std::vector<std::vector<VertexLabel>> facets = standard_sphere(d).facets();
  Xorshift64Star rng(seed);
  for (std::size_t v = static_cast<std::size_t>(d) + 3; v <= n; ++v) {
    const auto idx = static_cast<std::size_t>(rng.uniform(facets.size()));
    const std::vector<VertexLabel> old = facets[idx];
    const std::string apex = std::to_string(v);
    for (std::size_t skip = 0; skip < old.size(); ++skip) {
      std::vector<VertexLabel> f;
      for (std::size_t i = 0; i < old.size(); ++i)
        if (i != skip) f.push_back(old[i]);
      f.push_back(apex);
      if (skip == 0)
        facets[idx] = std::move(f);
      else
        facets.push_back(std::move(f));
    }
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace walkup
