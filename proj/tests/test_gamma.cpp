#include <doctest.h>

#include "ddkg/gamma.hpp"
#include "oracle.hpp"

using namespace ddkg;

namespace {

const GentleTriple kAuslander = GentleTriple::validate(1, 2, 0);
const GentleTriple kDual = GentleTriple::validate(1, 1, 0);

VertexId X(Coord a, Coord b, int i = 0) { return {Family::X, i, {a, b}}; }
VertexId Y(Coord a, Coord b, int i = 0) { return {Family::Y, i, {a, b}}; }
VertexId Z(Coord a, Coord b, int i = 0) { return {Family::Z, i, {a, b}}; }

std::vector<GentleTriple> triples() {
  std::vector<GentleTriple> out;
  const int table[][3] = {{1, 2, 0}, {1, 1, 0}, {2, 3, 0}, {1, 3, 2}, {2, 2, 0},
                          {2, 2, 1}, {2, 3, 1}, {3, 4, 2}, {3, 3, 1}};
  for (const auto& row : table) out.push_back(GentleTriple::validate(row[0], row[1], row[2]));
  return out;
}

}  // namespace

TEST_CASE("vertex validity") {
  const GammaCategory cat(kAuslander);
  CHECK(cat.vertex_valid(X(0, 1)));
  CHECK_FALSE(cat.vertex_valid(Y(0, 1)));
  CHECK(cat.vertex_valid(Z(17, -4)));
  CHECK_FALSE(cat.vertex_valid(X(0, 1, 1)));
  const GammaCategory inf(kDual);
  CHECK_FALSE(inf.vertex_valid(Z(0, 0)));
  CHECK_FALSE(inf.vertex_valid(Y(0, 5)));
  for (const auto& t : triples()) {
    const GammaCategory c(t);
    for (Family f : {Family::X, Family::Y, Family::Z})
      for (int i = -1; i <= 4; ++i)
        for (Coord a = -4; a <= 4; ++a)
          for (Coord b = -4; b <= 4; ++b) CHECK(c.vertex_valid({f, i, {a, b}}) == oracle::valid(t, {f, i, {a, b}}));
  }
}

TEST_CASE("fan of X(0,1) in Lambda(1,2,0)") {
  const GammaCategory cat(kAuslander);
  const ArrowFan fan = cat.arrow_fan(X(0, 1));
  REQUIRE(fan.entries.size() == 3);
  CHECK(fan.entries[0] == FanEntry{Family::X, 0, 0, Region{}.x_in(0, 1).y_in(1, {}), true});
  CHECK(fan.entries[1] == FanEntry{Family::Z, 0, 1, Region{}.x_in(0, 1), false});
  CHECK(fan.entries[2] == FanEntry{Family::X, 0, 2, Region{}.x_in({}, 0).y_in(0, 1), false});
  CHECK_THROWS_AS(cat.arrow_fan(Y(0, 1)), InvalidVertex);
}

TEST_CASE("arrow existence examples") {
  const GammaCategory cat(kAuslander);
  CHECK(cat.arrow_exists(X(0, 1), X(0, 2), 0));
  CHECK_FALSE(cat.arrow_exists(X(0, 1), X(0, 1), 0));
  CHECK(cat.arrow_exists(X(0, 1), X(0, 1), 2));
}

TEST_CASE("arrow existence agrees with the raw inequalities") {
  for (const auto& t : triples()) {
    const GammaCategory cat(t);
    const auto vs = oracle::vertices(t, -3, 3);
    for (const auto& u : vs)
      for (const auto& v : vs)
        for (int d = 0; d <= 3; ++d) {
          INFO(t.r(), t.n(), t.m(), " ", int(u.family), u.orbit, u.coord.x, u.coord.y, " ", int(v.family), v.orbit,
               v.coord.x, v.coord.y, " d=", d);
          CHECK(cat.arrow_exists(u, v, d) == oracle::arrow(t, u, v, d));
        }
  }
}

TEST_CASE("fan regions consist of valid targets") {
  for (const auto& t : triples()) {
    const GammaCategory cat(t);
    for (const auto& u : oracle::vertices(t, -3, 3)) {
      const FanTable table = cat.fan_table(u);
      for (const auto& e : cat.arrow_fan(u).entries) {
        const auto index = cat.index_set(e.target_family, e.target_orbit);
        REQUIRE(index);
        CHECK(subtract(e.region, *index).empty());
        CHECK(table.find(e.target_family, e.target_orbit, e.degree) != nullptr);
      }
      // at most one entry per (family, orbit, degree)
      const auto entries = cat.arrow_fan(u).entries;
      for (std::size_t a = 0; a < entries.size(); ++a)
        for (std::size_t b = a + 1; b < entries.size(); ++b)
          CHECK_FALSE((entries[a].target_family == entries[b].target_family &&
                       entries[a].target_orbit == entries[b].target_orbit && entries[a].degree == entries[b].degree));
    }
  }
}

TEST_CASE("hom bases") {
  const GammaCategory cat(kAuslander);
  const auto end = cat.hom_basis(X(0, 1), X(0, 1));
  REQUIRE(end.size() == 2);
  CHECK(end[0] == MorphismKey::identity(X(0, 1)));
  CHECK(end[1] == MorphismKey::arrow(X(0, 1), X(0, 1), 2));
  CHECK(cat.hom_basis(X(0, 1), Z(0, 5)) == std::vector{MorphismKey::arrow(X(0, 1), Z(0, 5), 1)});
  for (Coord y = -3; y <= 3; ++y) CHECK(cat.hom_basis(Z(0, 0), X(5, y)).empty());
}

TEST_CASE("dual numbers") {
  const GammaCategory cat(kDual);
  const auto end = cat.hom_basis(X(0, 0), X(0, 0));
  REQUIRE(end.size() == 2);
  CHECK(end[0].is_identity());
  CHECK(end[1] == MorphismKey::arrow(X(0, 0), X(0, 0), 1));
  CHECK(cat.compose(end[1], end[1]).is_zero());
  CHECK(cat.compose(end[0], end[1]) == end[1]);
}

TEST_CASE("composition examples") {
  const GammaCategory cat(kAuslander);
  const auto f = MorphismKey::arrow(X(0, 1), X(0, 2), 0);
  CHECK(cat.compose(MorphismKey::identity(X(0, 2)), f) == f);
  CHECK(cat.compose(MorphismKey::arrow(X(0, 2), Z(0, 5), 1), f) == MorphismKey::arrow(X(0, 1), Z(0, 5), 1));
  CHECK(cat.compose(MorphismKey::arrow(X(1, 2), X(1, 1), 2), MorphismKey::arrow(X(0, 2), X(1, 2), 0)).is_zero());
  CHECK(cat.compose(MorphismKey::zero(), f).is_zero());
  CHECK(cat.compose(f, MorphismKey::zero()).is_zero());
  CHECK_THROWS_AS(cat.compose(f, f), NotComposable);
  CHECK_THROWS_AS(cat.compose(MorphismKey::identity(X(0, 1)), f), NotComposable);
}

TEST_CASE("composition laws") {
  for (const auto& t : {kAuslander, kDual, GentleTriple::validate(2, 3, 1), GentleTriple::validate(2, 2, 1)}) {
    const GammaCategory cat(t);
    const auto vs = oracle::vertices(t, -2, 2);
    std::vector<MorphismKey> all;
    for (const auto& u : vs)
      for (const auto& v : vs)
        for (const auto& b : cat.hom_basis(u, v)) all.push_back(b);
    for (const auto& f : all) {
      CHECK(cat.compose(MorphismKey::identity(f.target()), f) == f);
      CHECK(cat.compose(f, MorphismKey::identity(f.source())) == f);
      for (const auto& g : all) {
        if (g.source() != f.target()) continue;
        const auto gf = cat.compose(g, f);
        CHECK_FALSE((gf.is_identity() && !(f.is_identity() && g.is_identity())));
        if (gf.is_arrow()) CHECK(gf.degree() == f.degree() + g.degree());
        if (!gf.is_zero()) CHECK(oracle::arrow(t, f.source(), g.target(), f.degree() + g.degree()) == gf.is_arrow());
      }
    }
  }
}

TEST_CASE("AR sink maps") {
  const GammaCategory cat(kAuslander);
  const auto [zr, zu] = cat.ar_sink_maps(Z(0, 0));
  CHECK(zr == MorphismKey::arrow(Z(0, 0), Z(1, 0), 0));
  CHECK(zu == MorphismKey::arrow(Z(0, 0), Z(0, 1), 0));
  const auto [xr, xu] = cat.ar_sink_maps(X(0, 0));
  CHECK(xr.is_zero());
  CHECK(xu == MorphismKey::arrow(X(0, 0), X(0, 1), 0));
  const auto [yr, yu] = cat.ar_sink_maps(Y(0, 2));
  CHECK(yr.is_zero());
  CHECK(yu == MorphismKey::arrow(Y(0, 2), Y(0, 3), 0));
}

TEST_CASE("morphism lookup follows the zero convention") {
  const GammaCategory cat(kAuslander);
  CHECK(cat.morphism(X(0, 1), X(1, 1), 0) == MorphismKey::arrow(X(0, 1), X(1, 1), 0));
  CHECK(cat.morphism(X(0, 0), X(1, 0), 0).is_zero());
  CHECK(cat.morphism(X(0, 1), X(0, 1), 0).is_identity());
  CHECK(cat.morphism(Z(0, 0), X(1, 0), 1).is_zero());
}

TEST_CASE("infinite mode has only X vertices and degrees up to one") {
  const GammaCategory cat(GentleTriple::validate(2, 2, 1));
  CHECK(cat.max_degree() == 1);
  for (const auto& v : cat.vertices_in(Region::box(-3, 3, -3, 3))) {
    CHECK(v.family == Family::X);
    for (const auto& e : cat.arrow_fan(v).entries) CHECK(e.degree <= 1);
  }
}

TEST_CASE("hom degrees are invariant under the diagonal shift") {
  for (const auto& t : triples()) {
    const GammaCategory cat(t);
    const auto verts = oracle::vertices(t, -3, 3);
    for (Coord k : {-7, 5}) {
      auto shift = [k](VertexId v) {
        v.coord.x += k;
        v.coord.y += k;
        return v;
      };
      for (const auto& u : verts)
        for (const auto& v : verts) {
          std::vector<int> here, there;
          for (const auto& f : cat.hom_basis(u, v)) here.push_back(f.degree());
          for (const auto& f : cat.hom_basis(shift(u), shift(v))) there.push_back(f.degree());
          CHECK(here == there);
        }
    }
  }
}
