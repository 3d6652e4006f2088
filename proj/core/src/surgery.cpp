#include "walkup/surgery.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "walkup/error.hpp"
#include "walkup/homology.hpp"
#include "walkup/stacked.hpp"
#include "walkup/walkup_class.hpp"
#include "detail.hpp"

namespace walkup {

Face VertexBijection::source_facet() const {
  Face f;
  for (const auto& [s, t] : pairs) f.push_back(s);
  std::sort(f.begin(), f.end());
  return f;
}

Face VertexBijection::target_facet() const {
  Face f;
  for (const auto& [s, t] : pairs) f.push_back(t);
  std::sort(f.begin(), f.end());
  return f;
}

void VertexBijection::validate() const {
  if (pairs.empty()) throw Error(Errc::InvalidParameters, "empty bijection");
  const Face src = source_facet();
  const Face tgt = target_facet();
  if (std::adjacent_find(src.begin(), src.end()) != src.end())
    throw Error(Errc::InvalidParameters, "bijection repeats a source vertex");
  if (std::adjacent_find(tgt.begin(), tgt.end()) != tgt.end())
    throw Error(Errc::InvalidParameters, "bijection repeats a target vertex");
  Face meet;
  std::set_intersection(src.begin(), src.end(), tgt.begin(), tgt.end(), std::back_inserter(meet));
  if (!meet.empty())
    throw Error(Errc::InvalidParameters, "source and target facets share '" + meet.front() + "'");
}

namespace {

Simplex facet_or_throw(const SimplicialComplex& complex, const Face& face) {
  Simplex s;
  for (const auto& label : face) {
    auto id = complex.find_vertex(label);
    if (!id) throw Error(Errc::NotAFacet, "vertex '" + label + "' is not in the complex");
    s.push_back(*id);
  }
  std::sort(s.begin(), s.end());
  if (!complex.has_facet(s)) throw Error(Errc::NotAFacet, "not a facet of the complex");
  return s;
}

}  // namespace

bool is_admissible(const SimplicialComplex& complex, const VertexBijection& psi) {
  psi.validate();
  facet_or_throw(complex, psi.source_facet());
  facet_or_throw(complex, psi.target_facet());
  for (const auto& [src, tgt] : psi.pairs) {
    const auto dist = distances_from(complex, complex.vertex_id(src));
    if (dist[complex.vertex_id(tgt)] < 3) return false;
  }
  return true;
}

SimplicialComplex handle_addition(const SimplicialComplex& complex, const VertexBijection& psi) {
  psi.validate();
  if (!is_closed_pseudomanifold(complex))
    throw Error(Errc::NotClosedPseudomanifold, "handle addition needs a closed weak pseudomanifold");
  if (!is_admissible(complex, psi))
    throw Error(Errc::NotAdmissible, "some vertex is within distance 2 of its image");
  const Simplex s1 = complex.to_simplex(psi.source_facet());
  const Simplex s2 = complex.to_simplex(psi.target_facet());

  std::vector<VertexId> image(complex.num_vertices());
  std::iota(image.begin(), image.end(), VertexId{0});
  for (const auto& [src, tgt] : psi.pairs) image[complex.vertex_id(src)] = complex.vertex_id(tgt);

  std::vector<Simplex> generators;
  for (const auto& f : complex.facet_ids()) {
    if (f == s1 || f == s2) continue;
    Simplex g;
    for (VertexId v : f) g.push_back(image[v]);
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end())
      throw Error(Errc::WouldCreateDuplicateFacet, "identification collapses a facet");
    generators.push_back(std::move(g));
  }
  std::vector<Simplex> sorted = generators;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::WouldCreateDuplicateFacet, "identification merges two facets");
  return SimplicialComplex::from_generators(complex.vertices(), generators);
}

SimplicialComplex connected_sum(const SimplicialComplex& first, const SimplicialComplex& second,
                                const VertexBijection& psi) {
  std::map<VertexLabel, VertexLabel> rename;
  for (const auto& label : second.vertices()) {
    if (!first.find_vertex(label)) continue;
    VertexLabel fresh = label;
    do {
      fresh += "_2";
    } while (first.find_vertex(fresh) || second.find_vertex(fresh));
    rename[label] = fresh;
  }
  const SimplicialComplex moved = rename.empty() ? second : relabel(second, rename);
  VertexBijection shifted = psi;
  for (auto& [src, tgt] : shifted.pairs) {
    if (auto it = rename.find(tgt); it != rename.end()) tgt = it->second;
  }
  return handle_addition(disjoint_union(first, moved), shifted);
}

bool induces_standard_sphere(const SimplicialComplex& complex, const Face& vertex_set) {
  const int d = complex.dimension();
  if (d < 1 || vertex_set.size() != static_cast<std::size_t>(d) + 1) return false;
  Simplex s;
  for (const auto& label : vertex_set) {
    auto id = complex.find_vertex(label);
    if (!id) return false;
    s.push_back(*id);
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  if (complex.has_face(s)) return false;
  bool all_present = true;
  detail::for_each_subset(s, s.size() - 1, [&](const Simplex& sub) {
    if (all_present && !complex.has_face(sub)) all_present = false;
  });
  return all_present;
}

std::vector<Face> find_induced_standard_spheres(const SimplicialComplex& complex) {
  const int d = complex.dimension();
  if (d < 3) throw Error(Errc::DimensionTooLow, "induced sphere search needs d >= 3");
  std::set<Face> found;
  const auto adj = complex.adjacency();
  for (VertexId x = 0; x < complex.num_vertices(); ++x) {
    if (adj[x].size() < static_cast<std::size_t>(d) + 2) continue;
    const VertexLabel& xl = complex.label(x);
    const SimplicialComplex lk = link(complex, {xl});
    const SimplicialComplex ball = clique_complex(lk);
    // Interior (d-1)-faces: d-subsets shared by two d-simplices of the ball.
    std::map<Simplex, int> count;
    for (const auto& f : ball.facet_ids()) {
      if (f.size() != static_cast<std::size_t>(d) + 1) continue;
      detail::for_each_subset(f, f.size() - 1, [&](const Simplex& r) { ++count[r]; });
    }
    for (const auto& [ridge, c] : count) {
      if (c < 2) continue;
      Face candidate = ball.to_face(ridge);
      candidate.push_back(xl);
      std::sort(candidate.begin(), candidate.end());
      if (!found.count(candidate) && induces_standard_sphere(complex, candidate))
        found.insert(std::move(candidate));
    }
  }
  return {found.begin(), found.end()};
}

HandleDeletion handle_deletion(const SimplicialComplex& complex, const Face& vertex_set) {
  const int d = complex.dimension();
  if (d < 3) throw Error(Errc::DimensionTooLow, "handle deletion needs d >= 3");
  if (!is_closed_pseudomanifold(complex))
    throw Error(Errc::NotClosedPseudomanifold, "handle deletion needs a closed weak pseudomanifold");
  if (!induces_standard_sphere(complex, vertex_set))
    throw Error(Errc::NotInducedStandardSphere, "vertex set does not induce a simplex boundary");

  const Simplex cut = complex.to_simplex(vertex_set);
  const auto& facets = complex.facet_ids();
  const std::size_t nf = facets.size();
  auto in_cut = [&](VertexId v) { return std::binary_search(cut.begin(), cut.end(), v); };

  // Dual graph with the adjacencies across the d-subsets of the cut removed.
  std::vector<std::vector<std::size_t>> adj(nf);
  for (const auto& [ridge, owners] : dual_graph(complex).ridges) {
    const bool inside = std::all_of(ridge.begin(), ridge.end(), in_cut);
    if (inside || owners.size() != 2) continue;
    adj[owners[0]].push_back(owners[1]);
    adj[owners[1]].push_back(owners[0]);
  }

  // For each cut vertex, split its star into parts connected in the cut graph.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::size_t>> part(cut.size(), std::vector<std::size_t>(nf, kNone));
  std::vector<std::size_t> part_vertex;  // part id -> index into cut
  for (std::size_t xi = 0; xi < cut.size(); ++xi) {
    const VertexId x = cut[xi];
    for (std::size_t start = 0; start < nf; ++start) {
      if (part[xi][start] != kNone || !std::binary_search(facets[start].begin(), facets[start].end(), x))
        continue;
      const std::size_t id = part_vertex.size();
      part_vertex.push_back(xi);
      std::vector<std::size_t> stack{start};
      part[xi][start] = id;
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : adj[u]) {
          if (part[xi][v] == kNone && std::binary_search(facets[v].begin(), facets[v].end(), x)) {
            part[xi][v] = id;
            stack.push_back(v);
          }
        }
      }
    }
  }

  // Parts that share a facet lie on the same side of the cut.
  std::vector<std::size_t> parent(part_vertex.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::size_t first_star_facet = kNone;
  for (std::size_t f = 0; f < nf; ++f) {
    std::size_t anchor = kNone;
    for (std::size_t xi = 0; xi < cut.size(); ++xi) {
      if (part[xi][f] == kNone) continue;
      if (first_star_facet == kNone) first_star_facet = f;
      if (anchor == kNone)
        anchor = part[xi][f];
      else
        parent[find(part[xi][f])] = find(anchor);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> sides;
  for (std::size_t p = 0; p < part_vertex.size(); ++p) sides[find(p)].push_back(part_vertex[p]);
  bool well_formed = sides.size() == 2;
  for (auto& [root, members] : sides) {
    std::sort(members.begin(), members.end());
    std::vector<std::size_t> expected(cut.size());
    std::iota(expected.begin(), expected.end(), std::size_t{0});
    well_formed = well_formed && members == expected;
  }
  if (!well_formed)
    throw Error(Errc::CutValidationFailed, "cut does not separate the stars into two sides");

  std::size_t kept_side = kNone;
  for (std::size_t xi = 0; xi < cut.size() && kept_side == kNone; ++xi)
    if (part[xi][first_star_facet] != kNone) kept_side = find(part[xi][first_star_facet]);

  std::vector<VertexLabel> clone(cut.size());
  for (std::size_t xi = 0; xi < cut.size(); ++xi) {
    const VertexLabel& original = complex.label(cut[xi]);
    const VertexLabel base = original.substr(0, original.find(kCloneMarker));
    for (std::size_t k = 1;; ++k) {
      VertexLabel candidate = base + kCloneMarker + std::to_string(k);
      if (!complex.find_vertex(candidate)) {
        clone[xi] = std::move(candidate);
        break;
      }
    }
  }

  HandleDeletion out;
  std::vector<std::vector<VertexLabel>> new_facets;
  out.facet_images.reserve(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    Face image;
    for (VertexId v : facets[f]) {
      auto pos = std::lower_bound(cut.begin(), cut.end(), v);
      if (pos != cut.end() && *pos == v) {
        const auto xi = static_cast<std::size_t>(pos - cut.begin());
        image.push_back(find(part[xi][f]) == kept_side ? complex.label(v) : clone[xi]);
      } else {
        image.push_back(complex.label(v));
      }
    }
    new_facets.push_back(image);
    out.facet_images.push_back(std::move(image));
  }
  new_facets.push_back(complex.to_face(cut));
  new_facets.push_back(clone);
  out.result = SimplicialComplex::from_facets(new_facets);
  for (std::size_t xi = 0; xi < cut.size(); ++xi)
    out.psi.pairs.emplace_back(clone[xi], complex.label(cut[xi]));

  bool round_trip = false;
  try {
    round_trip = handle_addition(out.result, out.psi) == complex;
  } catch (const Error& e) {
    throw Error(Errc::CutValidationFailed, std::string("re-adding the handle failed: ") + e.what());
  }
  if (!round_trip)
    throw Error(Errc::CutValidationFailed, "re-adding the handle does not reproduce the input");
  return out;
}

namespace {

struct DeletionStep {
  std::vector<VertexLabel> sources;  // clone side, paired by position
  std::vector<VertexLabel> targets;
  bool joins_components = false;
};

void track(std::vector<VertexLabel>& side, const SimplicialComplex& before,
           const HandleDeletion& del) {
  Face sorted = side;
  std::sort(sorted.begin(), sorted.end());
  const Simplex s = before.to_simplex(sorted);
  const auto& facets = before.facet_ids();
  auto it = std::lower_bound(facets.begin(), facets.end(), s);
  if (it == facets.end() || *it != s)
    throw Error(Errc::CutValidationFailed, "lost track of a capping facet");
  const auto idx = static_cast<std::size_t>(it - facets.begin());
  std::map<VertexLabel, VertexLabel> moved;
  for (std::size_t p = 0; p < s.size(); ++p) moved[before.label(s[p])] = del.facet_images[idx][p];
  for (auto& label : side) label = moved.at(label);
}

}  // namespace

HandleLedger kalai_decompose(const SimplicialComplex& complex) {
  if (complex.dimension() < 4) throw Error(Errc::DimensionTooLow, "decomposition needs d >= 4");
  if (connected_components(complex).size() != 1)
    throw Error(Errc::InvalidParameters, "decomposition needs a connected complex");
  if (!in_walkup_class(complex)) throw Error(Errc::NotWalkup, "some vertex link is not stacked");

  SimplicialComplex current = complex;
  std::vector<DeletionStep> steps;
  while (true) {
    const auto components = connected_components(current);
    std::optional<Face> sphere;
    for (const auto& comp : components) {
      const SimplicialComplex piece = component_subcomplex(current, comp);
      if (is_stacked_sphere(piece)) continue;
      const auto spheres = find_induced_standard_spheres(piece);
      if (spheres.empty())
        throw Error(Errc::NotWalkup, "non-stacked component without an induced simplex boundary");
      sphere = spheres.front();
      break;
    }
    if (!sphere) break;

    HandleDeletion del = handle_deletion(current, *sphere);
    for (auto& step : steps) {
      track(step.sources, current, del);
      track(step.targets, current, del);
    }
    DeletionStep step;
    for (const auto& [src, tgt] : del.psi.pairs) {
      step.sources.push_back(src);
      step.targets.push_back(tgt);
    }
    step.joins_components = connected_components(del.result).size() > components.size();
    steps.push_back(std::move(step));
    if (!in_walkup_class(del.result))
      throw Error(Errc::CutValidationFailed, "handle deletion left the Walkup class");
    current = std::move(del.result);
  }

  // Rebuild forwards: first the connected sums that reassemble the base,
  // then the genuine handles, each in reverse deletion order.
  std::map<VertexLabel, VertexLabel> renamed;
  auto resolve = [&](const VertexLabel& l) {
    auto it = renamed.find(l);
    return it == renamed.end() ? l : it->second;
  };
  auto apply = [&](SimplicialComplex& target, const DeletionStep& step) {
    VertexBijection psi;
    for (std::size_t i = 0; i < step.sources.size(); ++i)
      psi.pairs.emplace_back(resolve(step.sources[i]), resolve(step.targets[i]));
    target = handle_addition(target, psi);
    for (const auto& [src, tgt] : psi.pairs) {
      renamed[src] = tgt;
      for (auto& [from, to] : renamed)
        if (to == src) to = tgt;
    }
    return psi;
  };

  HandleLedger ledger;
  ledger.base = current;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    if (it->joins_components) apply(ledger.base, *it);
  if (!is_stacked_sphere(ledger.base))
    throw Error(Errc::CutValidationFailed, "reassembled base is not a stacked sphere");

  SimplicialComplex rebuilt = ledger.base;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->joins_components) continue;
    VertexBijection psi = apply(rebuilt, *it);
    ledger.handles.push_back({psi.source_facet(), psi.target_facet(), std::move(psi)});
  }
  if (rebuilt != complex)
    throw Error(Errc::CutValidationFailed, "replaying the ledger does not reproduce the input");
  return ledger;
}

SimplicialComplex replay(const HandleLedger& ledger) {
  SimplicialComplex out = ledger.base;
  for (const auto& h : ledger.handles) out = handle_addition(out, h.psi);
  return out;
}

}  // namespace walkup
