#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ddkg/algebra.hpp"
#include "ddkg/region.hpp"

namespace ddkg {

enum class Family : std::uint8_t { X, Y, Z };

char family_letter(Family f);

struct VertexId {
  Family family = Family::X;
  int orbit = 0;
  Point coord;

  VertexId shifted(Coord dx, Coord dy) const { return {family, orbit, {coord.x + dx, coord.y + dy}}; }
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

class InvalidVertex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotComposable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A basis morphism of the Gamma-category, the identity of a vertex, or zero.
// Relations are monomial with coefficient one, so no scalar is carried.
class MorphismKey {
 public:
  enum class Kind : std::uint8_t { Zero, Identity, Arrow };

  static MorphismKey zero() { return MorphismKey(); }
  static MorphismKey identity(const VertexId& v) { return MorphismKey(Kind::Identity, v, v, 0); }
  static MorphismKey arrow(const VertexId& src, const VertexId& dst, int degree) {
    return MorphismKey(Kind::Arrow, src, dst, degree);
  }

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_identity() const { return kind_ == Kind::Identity; }
  bool is_arrow() const { return kind_ == Kind::Arrow; }

  // Endpoints and degree are meaningful only for non-zero keys; the identity
  // has degree 0.
  const VertexId& source() const { return source_; }
  const VertexId& target() const { return target_; }
  int degree() const { return degree_; }

  friend bool operator==(const MorphismKey&, const MorphismKey&) = default;

 private:
  MorphismKey() = default;
  MorphismKey(Kind kind, const VertexId& src, const VertexId& dst, int degree)
      : kind_(kind), source_(src), target_(dst), degree_(degree) {}

  Kind kind_ = Kind::Zero;
  VertexId source_;
  VertexId target_;
  int degree_ = 0;
};

struct FanEntry {
  Family target_family;
  int target_orbit;
  int degree;
  Region region;
  bool excludes_source;  // the degree-0 same-family entry ("u != v")

  friend bool operator==(const FanEntry&, const FanEntry&) = default;
};

struct ArrowFan {
  VertexId source;
  std::vector<FanEntry> entries;
};

// Bit d is set iff Hom(u, v) has a basis element of degree d. The identity
// occupies bit 0 of Hom(u, u).
using DegreeMask = std::uint8_t;

// Fixed-capacity fan used on hot paths. The degree-0 same-family region keeps
// the source point, which then stands for the identity.
struct FanTable {
  std::array<FanEntry, 4> entries{};
  int size = 0;

  DegreeMask mask_at(const VertexId& v) const {
    DegreeMask mask = 0;
    for (int k = 0; k < size; ++k) {
      const auto& e = entries[k];
      if (e.target_family == v.family && e.target_orbit == v.orbit && e.region.contains(v.coord)) {
        mask |= static_cast<DegreeMask>(1u << e.degree);
      }
    }
    return mask;
  }
  const FanEntry* find(Family family, int orbit, int degree) const {
    for (int k = 0; k < size; ++k) {
      const auto& e = entries[k];
      if (e.target_family == family && e.target_orbit == orbit && e.degree == degree) return &e;
    }
    return nullptr;
  }
};

// The quiver-with-relations model of perfect complexes over Lambda(r, n, m):
// X/Y/Z vertex families (only X when r = n), degree-graded arrows given by
// difference-bound target regions, and monomial composition.
class GammaCategory {
 public:
  explicit GammaCategory(GentleTriple t);

  const GentleTriple& triple() const { return triple_; }
  Mode mode() const { return triple_.mode(); }
  int orbit_count() const { return triple_.orbit_count(); }
  int max_degree() const { return mode() == Mode::FiniteGldim ? 2 : 1; }
  std::span<const Family> families() const;
  int next_orbit(int i) const { return (i + 1) % orbit_count(); }

  // Index set of (family, orbit); an empty optional means the family does
  // not exist in this mode or the orbit is out of range.
  std::optional<Region> index_set(Family family, int orbit) const;
  bool vertex_valid(const VertexId& v) const;

  ArrowFan arrow_fan(const VertexId& v) const;
  FanTable fan_table(const VertexId& v) const;  // no validity check

  bool arrow_exists(const VertexId& src, const VertexId& dst, int degree) const;
  DegreeMask hom_mask(const VertexId& u, const VertexId& v) const;
  std::vector<MorphismKey> hom_basis(const VertexId& u, const VertexId& v) const;

  MorphismKey compose(const MorphismKey& g, const MorphismKey& f) const;

  // The basis morphism src -> dst of the given degree, the identity for
  // (v, v, 0), and zero when dst is not a vertex or no such arrow exists.
  MorphismKey morphism(const VertexId& src, const VertexId& dst, int degree) const;

  // Degree-0 maps v -> v+(1,0) and v -> v+(0,1), zero where the shifted
  // coordinate leaves the index set.
  std::pair<MorphismKey, MorphismKey> ar_sink_maps(const VertexId& v) const;

  std::vector<VertexId> vertices_in(const Region& window) const;
  std::vector<VertexId> vertices_in(const Region& window, Family family) const;

 private:
  GentleTriple triple_;
};

}  // namespace ddkg
