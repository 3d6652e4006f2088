#include "walkup/symmetry.hpp"

#include <algorithm>
#include <set>

#include "walkup/error.hpp"

namespace walkup {

VertexPermutation::VertexPermutation(std::map<VertexLabel, VertexLabel> mapping)
    : mapping_(std::move(mapping)) {
  std::set<VertexLabel> images;
  for (const auto& [from, to] : mapping_) images.insert(to);
  if (images.size() != mapping_.size())
    throw Error(Errc::InvalidParameters, "mapping is not injective");
}

VertexPermutation VertexPermutation::identity(const std::vector<VertexLabel>& labels) {
  std::map<VertexLabel, VertexLabel> m;
  for (const auto& l : labels) m.emplace(l, l);
  return VertexPermutation(std::move(m));
}

const VertexLabel& VertexPermutation::operator()(const VertexLabel& label) const {
  auto it = mapping_.find(label);
  return it == mapping_.end() ? label : it->second;
}

bool VertexPermutation::is_identity() const {
  return std::all_of(mapping_.begin(), mapping_.end(),
                     [](const auto& kv) { return kv.first == kv.second; });
}

VertexPermutation VertexPermutation::compose(const VertexPermutation& other) const {
  std::map<VertexLabel, VertexLabel> m;
  for (const auto& [from, to] : other.mapping_) m.emplace(from, (*this)(to));
  return VertexPermutation(std::move(m));
}

VertexPermutation VertexPermutation::inverse() const {
  std::map<VertexLabel, VertexLabel> m;
  for (const auto& [from, to] : mapping_) m.emplace(to, from);
  return VertexPermutation(std::move(m));
}

std::size_t VertexPermutation::order() const {
  std::size_t k = 1;
  VertexPermutation p = *this;
  while (!p.is_identity()) {
    p = compose(p);
    ++k;
  }
  return k;
}

std::string VertexPermutation::cycle_notation() const {
  std::string out;
  std::set<VertexLabel> done;
  for (const auto& [start, image] : mapping_) {
    if (done.count(start) || start == image) continue;
    out += '(';
    VertexLabel cur = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += cur;
      done.insert(cur);
      cur = (*this)(cur);
    } while (cur != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

SimplicialComplex apply(const VertexPermutation& p, const SimplicialComplex& complex) {
  return relabel(complex, p.mapping());
}

namespace {

/// Edge degree matrix: number of facets containing each edge, 0 for non-edges.
std::vector<std::vector<std::uint32_t>> edge_degrees(const SimplicialComplex& x) {
  const std::size_t n = x.num_vertices();
  std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n, 0));
  for (const auto& f : x.facet_ids())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        ++m[f[i]][f[j]];
        ++m[f[j]][f[i]];
      }
  return m;
}

std::vector<std::size_t> facet_counts(const SimplicialComplex& x) {
  std::vector<std::size_t> c(x.num_vertices(), 0);
  for (const auto& f : x.facet_ids())
    for (VertexId v : f) ++c[v];
  return c;
}

struct Side {
  const SimplicialComplex* complex;
  std::vector<std::vector<std::uint32_t>> edeg;
  std::vector<std::size_t> colour;
};

Side make_side(const SimplicialComplex& x) {
  return {&x, edge_degrees(x), std::vector<std::size_t>(x.num_vertices(), 0)};
}

/// Joint colour refinement of both sides so colours are comparable across them.
void refine(std::vector<Side*> sides) {
  using Key = std::vector<std::size_t>;
  {
    std::map<Key, std::size_t> palette;
    std::vector<std::vector<Key>> keys;
    for (Side* s : sides) {
      const auto counts = facet_counts(*s->complex);
      std::vector<Key> k(s->colour.size());
      for (std::size_t v = 0; v < k.size(); ++v) {
        Key incident;
        for (auto e : s->edeg[v])
          if (e) incident.push_back(e);
        std::sort(incident.begin(), incident.end());
        k[v] = {incident.size(), counts[v]};
        k[v].insert(k[v].end(), incident.begin(), incident.end());
        palette.emplace(k[v], 0);
      }
      keys.push_back(std::move(k));
    }
    std::size_t next = 0;
    for (auto& [key, id] : palette) id = next++;
    for (std::size_t i = 0; i < sides.size(); ++i)
      for (std::size_t v = 0; v < keys[i].size(); ++v) sides[i]->colour[v] = palette[keys[i][v]];
  }
  std::size_t classes = 0;
  while (true) {
    std::map<Key, std::size_t> palette;
    std::vector<std::vector<Key>> keys;
    for (Side* s : sides) {
      std::vector<Key> k(s->colour.size());
      for (std::size_t v = 0; v < k.size(); ++v) {
        std::vector<std::pair<std::size_t, std::size_t>> nb;
        for (std::size_t u = 0; u < k.size(); ++u)
          if (s->edeg[v][u]) nb.emplace_back(s->colour[u], s->edeg[v][u]);
        std::sort(nb.begin(), nb.end());
        k[v] = {s->colour[v]};
        for (auto [c, e] : nb) {
          k[v].push_back(c);
          k[v].push_back(e);
        }
        palette.emplace(k[v], 0);
      }
      keys.push_back(std::move(k));
    }
    std::size_t next = 0;
    for (auto& [key, id] : palette) id = next++;
    for (std::size_t i = 0; i < sides.size(); ++i)
      for (std::size_t v = 0; v < keys[i].size(); ++v) sides[i]->colour[v] = palette[keys[i][v]];
    if (palette.size() == classes) break;
    classes = palette.size();
  }
}

/// Backtracking search for facet-preserving bijections a -> b.
class Matcher {
 public:
  Matcher(const Side& a, const Side& b, bool find_all) : a_(a), b_(b), all_(find_all) {
    const std::size_t n = a.colour.size();
    // Visit rare colours first, then grow along edges so adjacency prunes early.
    std::map<std::size_t, std::size_t> freq;
    for (auto c : a.colour) ++freq[c];
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> attach(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == n || std::make_tuple(-static_cast<long>(attach[v]), freq[a.colour[v]], v) <
                             std::make_tuple(-static_cast<long>(attach[best]),
                                             freq[a.colour[best]], best))
          best = v;
      }
      placed[best] = true;
      order_.push_back(static_cast<VertexId>(best));
      for (std::size_t u = 0; u < n; ++u)
        if (a.edeg[best][u]) ++attach[u];
    }
    std::vector<std::size_t> depth_of(n);
    for (std::size_t i = 0; i < n; ++i) depth_of[order_[i]] = i;
    completes_.assign(n, {});
    for (std::size_t f = 0; f < a.complex->num_facets(); ++f) {
      std::size_t last = 0;
      for (VertexId v : a.complex->facet_ids()[f]) last = std::max(last, depth_of[v]);
      completes_[last].push_back(f);
    }
    image_.assign(n, kUnset);
    used_.assign(n, false);
  }

  void run() {
    if (a_.colour.size() == b_.colour.size()) search(0);
  }
  const std::vector<std::vector<VertexId>>& found() const { return found_; }

 private:
  static constexpr VertexId kUnset = ~VertexId{0};

  bool consistent(VertexId x, VertexId y, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const VertexId px = order_[i];
      if (a_.edeg[x][px] != b_.edeg[y][image_[px]]) return false;
    }
    return true;
  }

  bool facets_ok(std::size_t depth) const {
    Simplex img;
    for (std::size_t f : completes_[depth]) {
      img.clear();
      for (VertexId v : a_.complex->facet_ids()[f]) img.push_back(image_[v]);
      std::sort(img.begin(), img.end());
      if (!b_.complex->has_facet(img)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) {
      found_.push_back(image_);
      return !all_;
    }
    const VertexId x = order_[depth];
    for (VertexId y = 0; y < b_.colour.size(); ++y) {
      if (used_[y] || b_.colour[y] != a_.colour[x] || !consistent(x, y, depth)) continue;
      image_[x] = y;
      used_[y] = true;
      const bool stop = facets_ok(depth) && search(depth + 1);
      used_[y] = false;
      image_[x] = kUnset;
      if (stop) return true;
    }
    return false;
  }

  const Side& a_;
  const Side& b_;
  bool all_;
  std::vector<VertexId> order_;
  std::vector<std::vector<std::size_t>> completes_;
  std::vector<VertexId> image_;
  std::vector<bool> used_;
  std::vector<std::vector<VertexId>> found_;
};

VertexPermutation to_permutation(const SimplicialComplex& a, const SimplicialComplex& b,
                                 const std::vector<VertexId>& image) {
  std::map<VertexLabel, VertexLabel> m;
  for (VertexId v = 0; v < image.size(); ++v) m.emplace(a.label(v), b.label(image[v]));
  return VertexPermutation(std::move(m));
}

bool same_colour_histogram(const Side& a, const Side& b) {
  auto ca = a.colour, cb = b.colour;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ca == cb;
}

}  // namespace

std::vector<VertexPermutation> automorphism_group(const SimplicialComplex& complex) {
  Side s = make_side(complex);
  refine({&s});
  Matcher m(s, s, true);
  m.run();
  std::vector<VertexPermutation> out;
  for (const auto& image : m.found()) out.push_back(to_permutation(complex, complex, image));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<VertexPermutation> find_isomorphism(const SimplicialComplex& a,
                                                  const SimplicialComplex& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_facets() != b.num_facets() ||
      a.dimension() != b.dimension() || a.is_pure() != b.is_pure())
    return std::nullopt;
  if (f_vector(a) != f_vector(b)) return std::nullopt;
  Side sa = make_side(a);
  Side sb = make_side(b);
  refine({&sa, &sb});
  if (!same_colour_histogram(sa, sb)) return std::nullopt;
  Matcher m(sa, sb, false);
  m.run();
  if (m.found().empty()) return std::nullopt;
  return to_permutation(a, b, m.found().front());
}

std::vector<std::vector<VertexLabel>> refined_vertex_classes(const SimplicialComplex& complex) {
  Side s = make_side(complex);
  refine({&s});
  std::map<std::size_t, std::vector<VertexLabel>> cells;
  for (VertexId v = 0; v < s.colour.size(); ++v) cells[s.colour[v]].push_back(complex.label(v));
  std::vector<std::vector<VertexLabel>> out;
  for (auto& [c, labels] : cells) out.push_back(std::move(labels));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace walkup
