#include "walkup/tightness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>

#include "walkup/error.hpp"
#include "walkup/homology.hpp"
#include "walkup/rng.hpp"

namespace walkup {

namespace {

std::uint64_t face_mask(const Simplex& s) {
  std::uint64_t m = 0;
  for (VertexId v : s) m |= std::uint64_t{1} << v;
  return m;
}

std::size_t index_of(const std::vector<Simplex>& sorted, const Simplex& s) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin());
}

/// Boundary of every j-face as positions in the sorted (j-1)-face list.
std::vector<std::vector<std::uint32_t>> boundaries(const std::vector<Simplex>& upper,
                                                   const std::vector<Simplex>& lower) {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(upper.size());
  Simplex facet;
  for (const auto& s : upper) {
    std::vector<std::uint32_t> rows;
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      facet.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) facet.push_back(s[i]);
      rows.push_back(static_cast<std::uint32_t>(index_of(lower, facet)));
    }
    out.push_back(std::move(rows));
  }
  return out;
}

/// Rank of `rows` packed rows of `words` 64-bit words each; destroys `buf`.
std::size_t rank_rows(std::uint64_t* buf, std::size_t rows, std::size_t words) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    std::uint64_t* ri = buf + i * words;
    std::size_t w = 0;
    while (w < words && ri[w] == 0) ++w;
    if (w == words) continue;
    ++rank;
    const std::uint64_t bit = ri[w] & (~ri[w] + 1);
    for (std::size_t j = i + 1; j < rows; ++j) {
      std::uint64_t* rj = buf + j * words;
      if (rj[w] & bit)
        for (std::size_t k = w; k < words; ++k) rj[k] ^= ri[k];
    }
  }
  return rank;
}

}  // namespace

bool homology_map_injective(const SimplicialComplex& complex, const Face& vertex_set, int k) {
  const int d = complex.dimension();
  if (k < 0 || k > d) throw Error(Errc::InvalidParameters, "degree out of range");
  std::vector<bool> in_y(complex.num_vertices(), false);
  for (const auto& label : vertex_set) in_y[complex.vertex_id(label)] = true;
  auto inside = [&](const Simplex& s) {
    return std::all_of(s.begin(), s.end(), [&](VertexId v) { return in_y[v]; });
  };

  const std::vector<Simplex> fk = complex.faces(k);
  // Z_k(Y) as vectors in the k-chain space of X.
  BitMatrix cycles;
  {
    std::vector<std::size_t> y_faces;
    for (std::size_t i = 0; i < fk.size(); ++i)
      if (inside(fk[i])) y_faces.push_back(i);
    BitMatrix dk;
    if (k == 0) {
      dk = BitMatrix(0, y_faces.size());
    } else {
      const std::vector<Simplex> lower = complex.faces(k - 1);
      const auto bd = boundaries(fk, lower);
      dk = BitMatrix(lower.size(), y_faces.size());
      for (std::size_t c = 0; c < y_faces.size(); ++c)
        for (auto r : bd[y_faces[c]]) dk.set(r, c);
    }
    const BitMatrix kernel = dk.kernel_basis();
    cycles = BitMatrix(kernel.rows(), fk.size());
    for (std::size_t r = 0; r < kernel.rows(); ++r)
      for (std::size_t c = 0; c < y_faces.size(); ++c)
        if (kernel.get(r, c)) cycles.set(r, y_faces[c]);
  }

  if (k == d) return true;  // no (d+1)-faces: both boundary spaces vanish
  const std::vector<Simplex> upper = complex.faces(k + 1);
  const auto bd = boundaries(upper, fk);
  // B_k(X) spanned by the rows below; B_k(Y) by the rows of faces inside Y.
  BitMatrix bx(upper.size(), fk.size());
  BitMatrix by(0, fk.size());
  std::size_t y_count = 0;
  for (std::size_t i = 0; i < upper.size(); ++i) {
    for (auto r : bd[i]) bx.set(i, r);
    if (inside(upper[i])) ++y_count;
  }
  by = BitMatrix(y_count, fk.size());
  for (std::size_t i = 0, row = 0; i < upper.size(); ++i) {
    if (!inside(upper[i])) continue;
    for (auto r : bd[i]) by.set(row, r);
    ++row;
  }
  const std::size_t dim_z = cycles.rank();
  const std::size_t dim_bx = bx.rank();
  const std::size_t dim_sum = BitMatrix::stack(cycles, bx).rank();
  const std::size_t dim_meet = dim_z + dim_bx - dim_sum;
  return dim_meet == by.rank();
}

TightnessChecker::TightnessChecker(const SimplicialComplex& complex)
    : n_(complex.num_vertices()), dim_(complex.dimension()) {
  if (n_ > 63) throw Error(Errc::InvalidParameters, "tightness checks support at most 63 vertices");
  const auto adj = complex.adjacency();
  neighbours_.assign(adj.begin(), adj.end());

  component_.assign(n_, 0);
  std::vector<bool> seen(n_, false);
  std::uint32_t comp = 0;
  for (std::size_t s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      component_[u] = comp;
      for (auto v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    ++comp;
  }

  std::vector<std::vector<Simplex>> faces;
  for (int j = 0; j <= dim_; ++j) faces.push_back(complex.faces(j));
  for (int k = 1; k < dim_; ++k) {
    Level level;
    const auto& rows = faces[static_cast<std::size_t>(k)];
    const auto& cols = faces[static_cast<std::size_t>(k) + 1];
    for (const auto& s : rows) level.row_masks.push_back(face_mask(s));
    for (const auto& s : cols) level.col_masks.push_back(face_mask(s));
    level.col_entries = boundaries(cols, rows);
    BitMatrix m(cols.size(), rows.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (auto r : level.col_entries[c]) m.set(c, r);
    level.full_rank = m.rank_in_place();
    levels_.push_back(std::move(level));
  }
}

bool TightnessChecker::degree0_injective(std::uint64_t mask) const {
  // Each component of X may contain at most one component of Y.
  std::uint64_t seen = 0;
  std::vector<bool> hit_component(n_, false);
  std::uint32_t stack[64];
  for (std::size_t s = 0; s < n_; ++s) {
    const std::uint64_t bit = std::uint64_t{1} << s;
    if (!(mask & bit) || (seen & bit)) continue;
    if (hit_component[component_[s]]) return false;
    hit_component[component_[s]] = true;
    std::size_t top = 0;
    stack[top++] = static_cast<std::uint32_t>(s);
    seen |= bit;
    while (top) {
      const std::uint32_t u = stack[--top];
      for (auto v : neighbours_[u]) {
        const std::uint64_t vb = std::uint64_t{1} << v;
        if ((mask & vb) && !(seen & vb)) {
          seen |= vb;
          stack[top++] = v;
        }
      }
    }
  }
  return true;
}

bool TightnessChecker::degree_injective(const Level& level, std::uint64_t mask) const {
  thread_local std::vector<std::uint32_t> local;
  thread_local std::vector<std::uint64_t> buf;
  const std::uint64_t outside = ~mask;
  const std::size_t nrows = level.row_masks.size();
  local.resize(nrows);
  std::size_t y_rows = 0, o_rows = 0;
  for (std::size_t r = 0; r < nrows; ++r)
    local[r] = static_cast<std::uint32_t>((level.row_masks[r] & outside) ? o_rows++ : y_rows++);
  if (y_rows == 0) return true;

  auto block_rank = [&](bool in_y, std::size_t width) -> std::size_t {
    if (width == 0) return 0;
    const std::size_t words = (width + 63) / 64;
    std::size_t count = 0;
    for (auto cm : level.col_masks)
      if (((cm & outside) == 0) == in_y) ++count;
    buf.assign(count * words, 0);
    std::size_t row = 0;
    for (std::size_t c = 0; c < level.col_masks.size(); ++c) {
      if (((level.col_masks[c] & outside) == 0) != in_y) continue;
      std::uint64_t* dst = buf.data() + row * words;
      for (auto r : level.col_entries[c]) {
        if (((level.row_masks[r] & outside) == 0) != in_y) continue;
        dst[local[r] / 64] |= std::uint64_t{1} << (local[r] % 64);
      }
      ++row;
    }
    return rank_rows(buf.data(), count, words);
  };
  const std::size_t ry = block_rank(true, y_rows);
  const std::size_t ro = block_rank(false, o_rows);
  return ry + ro == level.full_rank;
}

std::vector<int> TightnessChecker::failing_degrees(std::uint64_t mask, bool all) const {
  std::vector<int> out;
  if (dim_ < 0) return out;
  if (!degree0_injective(mask)) {
    out.push_back(0);
    if (!all) return out;
  }
  for (int k = 1; k < dim_; ++k) {
    if (!degree_injective(levels_[static_cast<std::size_t>(k) - 1], mask)) {
      out.push_back(k);
      if (!all) return out;
    }
  }
  return out;
}

TightnessReport is_tight_z2(const SimplicialComplex& complex, const TightnessOptions& options) {
  const std::size_t n = complex.num_vertices();
  if (options.mode == TightnessMode::Exhaustive && n > options.ceiling)
    throw Error(Errc::SubsetSpaceTooLarge, std::to_string(n) + " vertices exceed the ceiling of " +
                                               std::to_string(options.ceiling));
  const TightnessChecker checker(complex);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  // Scan positions 1..total; position i maps to one vertex subset.
  std::uint64_t total = 0;
  std::vector<std::uint64_t> sample;
  if (options.mode == TightnessMode::Exhaustive) {
    total = n < 2 ? 0 : full - 1;  // Gray codes of 1..2^n - 1, minus the full set
  } else {
    Xorshift64Star rng(options.seed);
    if (n >= 2) {
      for (std::uint64_t s = 0; s < options.samples; ++s) {
        std::uint64_t m = 0;
        do {
          m = rng.next() & full;
        } while (m == 0 || m == full);
        sample.push_back(m);
      }
    }
    total = sample.size();
  }
  auto subset_at = [&](std::uint64_t pos) -> std::uint64_t {
    if (options.mode == TightnessMode::Sampled) return sample[pos - 1];
    return pos ^ (pos >> 1);
  };
  // Scan position whose Gray code is the full set; it is skipped.
  std::uint64_t full_index = 0;
  if (options.mode == TightnessMode::Exhaustive)
    for (std::uint64_t g = full; g; g >>= 1) full_index ^= g;

  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  constexpr std::uint64_t kChunk = 512;
  const std::uint64_t limit = options.mode == TightnessMode::Exhaustive ? full : total;
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> first_hit{std::numeric_limits<std::uint64_t>::max()};
  std::mutex merge;
  std::vector<std::pair<std::uint64_t, Violation>> hits;

  auto worker = [&] {
    std::vector<std::pair<std::uint64_t, Violation>> local;
    while (true) {
      const std::uint64_t lo = next_chunk.fetch_add(1) * kChunk + 1;
      if (lo > limit || (!options.collect_all && lo > first_hit.load())) break;
      const std::uint64_t hi = std::min(limit, lo + kChunk - 1);
      for (std::uint64_t pos = lo; pos <= hi; ++pos) {
        if (!options.collect_all && pos > first_hit.load(std::memory_order_relaxed)) break;
        if (pos == full_index && options.mode == TightnessMode::Exhaustive) continue;
        const std::uint64_t mask = subset_at(pos);
        const auto bad = checker.failing_degrees(mask, options.collect_all);
        if (bad.empty()) continue;
        Face subset;
        for (std::size_t v = 0; v < n; ++v)
          if (mask >> v & 1) subset.push_back(complex.label(static_cast<VertexId>(v)));
        for (int k : bad) local.push_back({pos, {subset, k}});
        std::uint64_t cur = first_hit.load();
        while (pos < cur && !first_hit.compare_exchange_weak(cur, pos)) {
        }
      }
    }
    std::lock_guard lock(merge);
    hits.insert(hits.end(), local.begin(), local.end());
  };
  if (limit > 0) {
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, (limit + kChunk - 1) / kChunk));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }
  std::stable_sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second.degree < b.second.degree;
  });

  TightnessReport report;
  report.mode = options.mode;
  if (options.mode == TightnessMode::Sampled) {
    report.samples = options.samples;
    report.seed = options.seed;
  }
  if (!options.collect_all && !hits.empty()) {
    const std::uint64_t pos = hits.front().first;
    report.violations.push_back(hits.front().second);
    report.checked = options.mode == TightnessMode::Exhaustive && pos > full_index ? pos - 1 : pos;
  } else {
    for (auto& [pos, v] : hits) report.violations.push_back(std::move(v));
    report.checked = total;
  }
  if (!report.violations.empty())
    report.verdict = TightVerdict::NotTight;
  else
    report.verdict = options.mode == TightnessMode::Exhaustive ? TightVerdict::Tight
                                                               : TightVerdict::TightOnSample;
  return report;
}

}  // namespace walkup
