#include "ddkg/algebra.hpp"

#include <limits>
#include <sstream>

namespace ddkg {

const char* to_string(Mode mode) {
  return mode == Mode::FiniteGldim ? "finite" : "infinite";
}

GentleTriple GentleTriple::validate(std::int64_t r, std::int64_t n, std::int64_t m) {
  constexpr std::int64_t kMax = std::numeric_limits<int>::max() / 4;
  if (r < 1 || r > n || m < 0 || n > kMax || m > kMax) {
    std::ostringstream os;
    os << "(r, n, m) = (" << r << ", " << n << ", " << m
       << ") is not in Omega: need 1 <= r <= n and m >= 0";
    throw OmegaViolation(os.str());
  }
  return GentleTriple(static_cast<int>(r), static_cast<int>(n), static_cast<int>(m));
}

bool has_finite_global_dimension(const GentleTriple& t) { return t.r() < t.n(); }

std::string QuiverArrow::name() const { return "alpha_" + std::to_string(index); }

const QuiverArrow& BoundQuiver::arrow(int index) const {
  for (const auto& a : arrows) {
    if (a.index == index) return a;
  }
  throw std::out_of_range("no arrow alpha_" + std::to_string(index));
}

BoundQuiver build_bound_quiver(const GentleTriple& t) {
  const int n = t.n();
  const int m = t.m();
  const int r = t.r();

  BoundQuiver q;
  for (int j = -m; j <= n - 1; ++j) {
    q.vertices.push_back(j);
    q.arrows.push_back({j, j, j < n - 1 ? j + 1 : 0});
  }
  // alpha_{j+1} alpha_j for j = n-r, ..., n-2, then alpha_0 alpha_{n-1}.
  for (int j = n - r; j <= n - 2; ++j) q.relations.push_back({j, j + 1});
  q.relations.push_back({n - 1, 0});
  return q;
}

}  // namespace ddkg
