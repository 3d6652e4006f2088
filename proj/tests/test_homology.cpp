#include <gtest/gtest.h>

#include <sstream>

#include "support/oracles.hpp"

using namespace walkup;

namespace {

std::vector<std::uint32_t> random_rows(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::vector<std::uint32_t> out;
  for (std::size_t r = 0; r < rows; ++r) out.push_back(static_cast<std::uint32_t>(rng()) & ((1u << cols) - 1));
  return out;
}

BitMatrix to_matrix(const std::vector<std::uint32_t>& rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r] >> c & 1) m.set(r, c);
  return m;
}

/// Vertex ids of a written face, in written order.
std::vector<VertexId> ids(const SimplicialComplex& x, const Face& written) {
  std::vector<VertexId> out;
  for (const auto& l : written) out.push_back(x.vertex_id(l));
  return out;
}

Face split(const std::string& s) {
  std::istringstream in(s);
  Face f;
  for (std::string w; in >> w;) f.push_back(w);
  return f;
}

}  // namespace

TEST(BitMatrix, RankMatchesSpanOracle) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 12;
    auto r = random_rows(rng, rows, cols);
    auto m = to_matrix(r, cols);
    EXPECT_EQ(m.rank(), oracle::span_rank(r));
    EXPECT_EQ(m.transpose().rank(), m.rank());
    EXPECT_LE(m.rank(), std::min(rows, cols));
  }
}

TEST(BitMatrix, WideMatricesCrossWordBoundaries) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    BitMatrix m(70, 150);
    for (int k = 0; k < 600; ++k) m.set(rng() % 70, rng() % 150);
    EXPECT_EQ(m.rank(), m.transpose().rank());
    BitMatrix copy = m;
    EXPECT_EQ(copy.rank_in_place(), m.rank());
  }
}

TEST(BitMatrix, KernelBasis) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 12;
    auto m = to_matrix(random_rows(rng, rows, cols), cols);
    auto k = m.kernel_basis();
    EXPECT_EQ(k.cols(), cols);
    EXPECT_EQ(k.rows(), cols - m.rank());
    EXPECT_EQ(k.rank(), k.rows());
    EXPECT_TRUE((m * k.transpose()).is_zero());
  }
}

TEST(BoundaryMatrix, Triangle) {
  auto m = boundary_matrix(standard_sphere(1), 1);
  EXPECT_EQ(m.rows(), 3u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(m.rank(), 2u);
  EXPECT_THROW(boundary_matrix(standard_sphere(1), 2), Error);
  EXPECT_THROW(boundary_matrix(standard_sphere(1), 0), Error);
}

TEST(BoundaryMatrix, SquaresToZero) {
  for (const auto& x : {build_m4_15(), build_b5_30(), oracle::torus7()}) {
    for (int j = 2; j <= x.dimension(); ++j)
      EXPECT_TRUE((boundary_matrix(x, j - 1) * boundary_matrix(x, j)).is_zero());
  }
  auto d1 = boundary_matrix(build_m4_15(), 1);
  EXPECT_EQ(d1.rows(), 15u);
  EXPECT_EQ(d1.cols(), 105u);
  EXPECT_EQ(d1.rank(), 14u);
}

TEST(Homology, KnownProfiles) {
  for (int d = 1; d <= 5; ++d) {
    auto p = homology_profile(standard_sphere(d));
    std::vector<std::int64_t> expected(static_cast<std::size_t>(d) + 1, 0);
    expected.front() = expected.back() = 1;
    EXPECT_EQ(p.betti, expected);
    EXPECT_EQ(p.euler, 1 + (d % 2 == 0 ? 1 : -1));
    EXPECT_EQ(p.orientable, Orientability::Orientable);
  }
  auto t = homology_profile(oracle::torus7());
  EXPECT_EQ(t.betti, (std::vector<std::int64_t>{1, 2, 1}));
  EXPECT_EQ(t.orientable, Orientability::Orientable);
  auto rp = homology_profile(oracle::rp2_6());
  EXPECT_EQ(rp.betti, (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(rp.orientable, Orientability::NonOrientable);
  auto ball = homology_profile(build_b5_30());
  EXPECT_EQ(ball.orientable, Orientability::NotApplicable);
  EXPECT_EQ(ball.betti, (std::vector<std::int64_t>{1, 0, 0, 0, 0, 0}));
}

TEST(Homology, M4_15) {
  auto p = homology_profile(build_m4_15());
  EXPECT_EQ(p.betti, (std::vector<std::int64_t>{1, 3, 0, 3, 1}));
  EXPECT_EQ(p.euler, -4);
  EXPECT_TRUE(p.connected);
  EXPECT_EQ(p.orientable, Orientability::NonOrientable);
  EXPECT_TRUE(is_orientable(build_s4_30()));
}

TEST(Homology, Disconnected) {
  auto two = disjoint_union(standard_sphere(2), relabel(standard_sphere(2), {{"1", "x1"}, {"2", "x2"},
                                                                             {"3", "x3"}, {"4", "x4"}}));
  auto p = homology_profile(two);
  EXPECT_EQ(p.betti[0], 2);
  EXPECT_FALSE(p.connected);
}

TEST(Homology, EulerPoincareAndRelabelInvariance) {
  std::mt19937_64 rng(9);
  std::vector<SimplicialComplex> corpus{build_m4_15(), build_n5_15(), oracle::torus7(),
                                        oracle::rp2_6(), oracle::cyclic_polytope_boundary(5, 9)};
  for (int i = 0; i < 8; ++i) corpus.push_back(random_stacked_sphere(2 + i % 3, 9 + i, rng()));
  for (const auto& x : corpus) {
    auto p = homology_profile(x);
    std::int64_t alt = 0;
    for (std::size_t j = 0; j < p.betti.size(); ++j) alt += (j % 2 ? -1 : 1) * p.betti[j];
    EXPECT_EQ(alt, p.euler);
    EXPECT_EQ(p.euler, euler_characteristic(x));
    EXPECT_EQ(homology_profile(relabel(x, oracle::shuffled_labels(x, rng))), p);
    if (is_closed_pseudomanifold(x) && p.connected) {
      EXPECT_EQ(p.betti.back(), 1);
    }
  }
}

TEST(Orientation, TraversalOrderDoesNotMatter) {
  for (const auto& x : {build_s4_30(), build_m4_15(), oracle::torus7(), oracle::rp2_6(),
                        build_b5_30()}) {
    auto bfs = coherent_orientation(x, Traversal::BreadthFirst);
    auto dfs = coherent_orientation(x, Traversal::DepthFirst);
    EXPECT_EQ(bfs.has_value(), dfs.has_value());
    if (bfs) {
      EXPECT_EQ(*bfs, *dfs);
    }
  }
}

TEST(Orientation, NotClosed) {
  EXPECT_THROW(is_orientable(build_b5_30()), Error);
}

TEST(Orientation, WrittenOrderOfBallFacets) {
  // The written vertex order agrees with a coherent orientation on every
  // facet except lambda1 and gamma5, whose written order is reversed.
  auto b = build_b5_30();
  auto signs = coherent_orientation(b);
  ASSERT_TRUE(signs.has_value());
  const auto& facets = b.facet_ids();
  std::map<std::string, int> product;
  for (const auto& named : b5_30_facets()) {
    const auto written = ids(b, named.vertices);
    Simplex sorted = written;
    std::sort(sorted.begin(), sorted.end());
    const auto idx = std::lower_bound(facets.begin(), facets.end(), sorted) - facets.begin();
    product[named.name] = (*signs)[static_cast<std::size_t>(idx)] * permutation_sign(written);
  }
  const int majority = product.at("delta");
  std::set<std::string> reversed;
  for (const auto& [name, p] : product)
    if (p != majority) reversed.insert(name);
  EXPECT_EQ(reversed, (std::set<std::string>{"gamma5", "lambda1"}));
}

TEST(Orientation, InducedBoundaryOrientation) {
  // Boundary faces listed as positively oriented on the 30-vertex sphere.
  const std::vector<std::string> listed{
      "b5p c2 c3 c4 c5",     "a1 c3 c4 c5 c1",      "a1 c4 c5 c1 c2",      "a1 c5 c1 c2 c3",
      "a2 c1 c2 c3 c4",      "a5 c2p c3p c4p c5p",  "a3 c3p c4p c5p c1p",  "a3 c4p c5p c1p c2p",
      "a3 c5p c1p c2p c3p",  "a3 c1p c2p c3p c4p"};
  auto b = build_b5_30();
  std::set<int> induced;
  for (const auto& text : listed) {
    const Face t = split(text);
    const auto tid = ids(b, t);
    Simplex ts = tid;
    std::sort(ts.begin(), ts.end());
    int found = 0;
    for (const auto& named : b5_30_facets()) {
      const auto w = ids(b, named.vertices);
      for (std::size_t i = 0; i < w.size(); ++i) {
        std::vector<VertexId> rest;
        for (std::size_t p = 0; p < w.size(); ++p)
          if (p != i) rest.push_back(w[p]);
        Simplex rs = rest;
        std::sort(rs.begin(), rs.end());
        if (rs != ts) continue;
        ++found;
        // sign of rest relative to t
        std::vector<VertexId> pos;
        for (auto v : rest) pos.push_back(static_cast<VertexId>(std::find(tid.begin(), tid.end(), v) - tid.begin()));
        induced.insert(deletion_sign(i) * permutation_sign(pos));
      }
    }
    EXPECT_EQ(found, 1) << text;
  }
  EXPECT_EQ(induced.size(), 1u);

  // The sphere's own coherent orientation agrees with the listed faces.
  auto s = build_s4_30();
  auto signs = coherent_orientation(s);
  ASSERT_TRUE(signs.has_value());
  std::set<int> sphere;
  for (const auto& text : listed) {
    const auto tid = ids(s, split(text));
    Simplex ts = tid;
    std::sort(ts.begin(), ts.end());
    const auto& facets = s.facet_ids();
    const auto idx = std::lower_bound(facets.begin(), facets.end(), ts) - facets.begin();
    sphere.insert((*signs)[static_cast<std::size_t>(idx)] * permutation_sign(tid));
  }
  EXPECT_EQ(sphere.size(), 1u);
}
