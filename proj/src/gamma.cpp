#include "ddkg/gamma.hpp"

#include <string>

namespace ddkg {
namespace {

constexpr std::array<Family, 3> kFiniteFamilies{Family::X, Family::Y, Family::Z};
constexpr std::array<Family, 1> kInfiniteFamilies{Family::X};

Coord delta(int i, int j) { return i == j ? 1 : 0; }

Region box(Bound xlo, Bound xhi, Bound ylo, Bound yhi) { return Region{xlo, xhi, ylo, yhi, {}, {}}; }

}  // namespace

char family_letter(Family f) {
  switch (f) {
    case Family::X: return 'X';
    case Family::Y: return 'Y';
    case Family::Z: return 'Z';
  }
  return '?';
}

GammaCategory::GammaCategory(GentleTriple t) : triple_(t) {}

std::span<const Family> GammaCategory::families() const {
  if (mode() == Mode::FiniteGldim) return kFiniteFamilies;
  return kInfiniteFamilies;
}

std::optional<Region> GammaCategory::index_set(Family family, int orbit) const {
  if (orbit < 0 || orbit >= orbit_count()) return std::nullopt;
  const Coord m = triple_.m();
  const Coord n = triple_.n();
  const Coord d0 = delta(orbit, 0);
  switch (family) {
    case Family::X: return Region::plane().diff_in({}, d0 * m);
    case Family::Y:
      if (mode() == Mode::InfiniteGldim) return std::nullopt;
      return Region::plane().diff_in({}, -d0 * n);
    case Family::Z:
      if (mode() == Mode::InfiniteGldim) return std::nullopt;
      return Region::plane();
  }
  return std::nullopt;
}

bool GammaCategory::vertex_valid(const VertexId& v) const {
  const auto set = index_set(v.family, v.orbit);
  return set && set->contains(v.coord);
}

FanTable GammaCategory::fan_table(const VertexId& v) const {
  const Coord m = triple_.m();
  const Coord n = triple_.n();
  const int i = v.orbit;
  const int next = next_orbit(i);
  const Coord a = v.coord.x;
  const Coord b = v.coord.y;
  const Coord d0 = delta(i, 0);
  const Coord d1 = delta(i, orbit_count() - 1);

  FanTable t;
  auto add = [&](Family f, int orbit, int degree, Region region, bool excludes) {
    t.entries[t.size++] = FanEntry{f, orbit, degree, region, excludes};
  };

  if (mode() == Mode::InfiniteGldim) {
    add(Family::X, i, 0, box(a, b + d0 * m, b, {}), true);
    add(Family::X, next, 1, box({}, a + d1 * m, a, b + d0 * m), false);
    return t;
  }
  switch (v.family) {
    case Family::X:
      add(Family::X, i, 0, box(a, b + d0 * m, b, {}), true);
      add(Family::Z, i, 1, box(a, b + d0 * m, {}, {}), false);
      add(Family::X, next, 2, box({}, a + d1 * m, a, b + d0 * m), false);
      break;
    case Family::Y:
      add(Family::Y, i, 0, box(a, b - d0 * n, b, {}), true);
      add(Family::Z, i, 1, box({}, {}, a, b - d0 * n), false);
      add(Family::Y, next, 2, box({}, a - d1 * n, a, b - d0 * n), false);
      break;
    case Family::Z:
      add(Family::Z, i, 0, box(a, {}, b, {}), true);
      add(Family::X, next, 1, box({}, a + d1 * m, a, {}), false);
      add(Family::Y, next, 1, box({}, b - d1 * n, b, {}), false);
      // The printed upper-left bound "(infinity, ...]" is read as (-infinity, ...].
      add(Family::Z, next, 2, box({}, a + d1 * m, {}, b - d1 * n), false);
      break;
  }
  return t;
}

ArrowFan GammaCategory::arrow_fan(const VertexId& v) const {
  if (!vertex_valid(v)) throw InvalidVertex("vertex is not in the index set of its family");
  const FanTable t = fan_table(v);
  ArrowFan fan{v, {}};
  fan.entries.assign(t.entries.begin(), t.entries.begin() + t.size);
  return fan;
}

DegreeMask GammaCategory::hom_mask(const VertexId& u, const VertexId& v) const {
  if (!vertex_valid(u) || !vertex_valid(v)) return 0;
  return fan_table(u).mask_at(v);
}

bool GammaCategory::arrow_exists(const VertexId& src, const VertexId& dst, int degree) const {
  if (degree < 0 || degree > max_degree()) return false;
  if (degree == 0 && src == dst) return false;
  return (hom_mask(src, dst) >> degree) & 1u;
}

std::vector<MorphismKey> GammaCategory::hom_basis(const VertexId& u, const VertexId& v) const {
  std::vector<MorphismKey> out;
  const DegreeMask mask = hom_mask(u, v);
  for (int d = 0; d <= max_degree(); ++d) {
    if (!((mask >> d) & 1u)) continue;
    out.push_back(d == 0 && u == v ? MorphismKey::identity(u) : MorphismKey::arrow(u, v, d));
  }
  return out;
}

MorphismKey GammaCategory::compose(const MorphismKey& g, const MorphismKey& f) const {
  if (f.is_zero() || g.is_zero()) return MorphismKey::zero();
  if (f.target() != g.source()) throw NotComposable("target of f differs from source of g");
  if (f.is_identity()) return g;
  if (g.is_identity()) return f;
  const int degree = f.degree() + g.degree();
  if (arrow_exists(f.source(), g.target(), degree)) return MorphismKey::arrow(f.source(), g.target(), degree);
  return MorphismKey::zero();
}

MorphismKey GammaCategory::morphism(const VertexId& src, const VertexId& dst, int degree) const {
  if (!vertex_valid(src)) throw InvalidVertex("source of a morphism must be a vertex");
  if (degree == 0 && src == dst) return MorphismKey::identity(src);
  if (arrow_exists(src, dst, degree)) return MorphismKey::arrow(src, dst, degree);
  return MorphismKey::zero();
}

std::pair<MorphismKey, MorphismKey> GammaCategory::ar_sink_maps(const VertexId& v) const {
  return {morphism(v, v.shifted(1, 0), 0), morphism(v, v.shifted(0, 1), 0)};
}

std::vector<VertexId> GammaCategory::vertices_in(const Region& window, Family family) const {
  std::vector<VertexId> out;
  for (int i = 0; i < orbit_count(); ++i) {
    const auto set = index_set(family, i);
    if (!set) continue;
    for (const Point& p : enumerate(*set, window)) out.push_back({family, i, p});
  }
  return out;
}

std::vector<VertexId> GammaCategory::vertices_in(const Region& window) const {
  std::vector<VertexId> out;
  for (Family f : families()) {
    auto part = vertices_in(window, f);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace ddkg
