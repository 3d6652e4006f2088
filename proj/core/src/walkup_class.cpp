#include "walkup/walkup_class.hpp"

#include "walkup/error.hpp"
#include "walkup/homology.hpp"
#include "walkup/stacked.hpp"

namespace walkup {

namespace {

std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
  if (num % den != 0)
    throw Error(Errc::NonIntegralResult, std::string(what) + " is not an integer");
  return num / den;
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool in_walkup_class(const SimplicialComplex& complex) {
  if (complex.empty() || !complex.is_pure() || complex.dimension() < 1) return false;
  for (const auto& v : complex.vertices()) {
    if (!is_stacked_sphere(link(complex, {v}))) return false;
  }
  return true;
}

FVector stacked_sphere_fvector(int d, std::int64_t f0) {
  if (d < 1 || f0 < d + 2)
    throw Error(Errc::InvalidParameters, "need d >= 1 and f0 >= d + 2");
  FVector f{f0};
  for (int j = 1; j < d; ++j) f.push_back(binomial(d + 1, j) * f0 - j * binomial(d + 2, j + 1));
  f.push_back(static_cast<std::int64_t>(d) * f0 - static_cast<std::int64_t>(d + 2) * (d - 1));
  return f;
}

FVector walkup_fvector_even(int d, std::int64_t f0, std::int64_t chi) {
  if (d % 2 != 0) throw Error(Errc::OddDimension, "dimension must be even");
  if (d < 2) throw Error(Errc::InvalidParameters, "dimension must be at least 2");
  FVector f{f0};
  for (int j = 1; j < d; ++j) {
    const std::int64_t twice = 2 * binomial(d + 1, j) * f0 - j * binomial(d + 2, j + 1) * chi;
    f.push_back(exact_div(twice, 2, "f_j"));
  }
  const std::int64_t twice_top =
      2 * static_cast<std::int64_t>(d) * f0 - static_cast<std::int64_t>(d + 2) * (d - 1) * chi;
  f.push_back(exact_div(twice_top, 2, "f_d"));
  return f;
}

FVector fvector_from_f0_f1(int d, std::int64_t f0, std::int64_t f1) {
  if (d < 2) throw Error(Errc::InvalidParameters, "dimension must be at least 2");
  FVector f{f0};
  for (int j = 1; j < d; ++j) {
    const std::int64_t num = 2 * binomial(d, j - 1) * f1 - (j - 1) * binomial(d + 1, j) * f0;
    f.push_back(exact_div(num, j + 1, "f_j"));
  }
  const std::int64_t top = exact_div((2 * d - 2) * f1, d + 1, "f_d");
  f.push_back(top - static_cast<std::int64_t>(d - 2) * f0);
  return f;
}

FVector dehn_sommerville_4(std::int64_t f0, std::int64_t f1, std::int64_t chi) {
  const std::int64_t r = f0 - chi;
  return {f0, f1, 4 * f1 - 10 * r, 5 * f1 - 15 * r, 2 * f1 - 6 * r};
}

BoundReport check_bounds_4manifold(const SimplicialComplex& complex) {
  auto reject = [](const std::string& why) {
    return Error(Errc::NotClosedConnected4Manifold, why);
  };
  if (complex.dimension() != 4 || !complex.is_pure()) throw reject("not a pure 4-dimensional complex");
  const DualGraph g = dual_graph(complex);
  if (!g.closed) throw reject("not a closed weak pseudomanifold");
  if (!g.connected) throw reject("not connected");
  const std::vector<std::int64_t> sphere3{1, 0, 0, 1};
  for (const auto& v : complex.vertices()) {
    if (betti_numbers(link(complex, {v})) != sphere3)
      throw reject("link of '" + v + "' is not a Z/2 homology 3-sphere");
  }

  const std::vector<std::int64_t> betti = betti_numbers(complex);
  BoundReport r;
  for (std::size_t j = 0; j < betti.size(); ++j) r.chi += (j % 2 == 0) ? betti[j] : -betti[j];
  const FVector f = f_vector(complex);
  const std::int64_t f0 = f[0], chi = r.chi;

  for (int j = 1; j < 4; ++j) {
    const std::int64_t lhs = 2 * f[static_cast<std::size_t>(j)];
    const std::int64_t rhs = 2 * binomial(5, j) * f0 - j * binomial(6, j + 1) * chi;
    r.instances.push_back({"a.f" + std::to_string(j), lhs, rhs, lhs == rhs});
  }
  r.instances.push_back({"a.f4", 2 * f[4], 8 * f0 - 18 * chi, 2 * f[4] == 8 * f0 - 18 * chi});
  r.instances.push_back({"b", f0 * (f0 - 11), -15 * chi, f0 * (f0 - 11) == -15 * chi});

  r.walkup_equality = true;
  for (const auto& inst : r.instances)
    if (inst.name.starts_with("a.") && !inst.tight) r.walkup_equality = false;
  r.neighborly_equality = r.instances.back().tight;
  r.overall_equality = r.walkup_equality && r.neighborly_equality;
  return r;
}

bool is_two_neighborly(const SimplicialComplex& complex) {
  if (complex.dimension() < 1) return complex.num_vertices() <= 1 && !complex.empty();
  const auto n = static_cast<std::int64_t>(complex.num_vertices());
  return static_cast<std::int64_t>(complex.faces(1).size()) == binomial(n, 2);
}

}  // namespace walkup
