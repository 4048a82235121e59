#include "ddkg/region.hpp"

#include <algorithm>
#include <array>

namespace ddkg {
namespace {

Coord checked_add(Coord a, Coord b) {
  Coord out;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("coordinate overflow in region arithmetic");
  return out;
}

Coord checked_neg(Coord a) {
  Coord out;
  if (__builtin_sub_overflow(Coord{0}, a, &out)) throw ArithmeticOverflow("coordinate overflow in region arithmetic");
  return out;
}

// Difference-bound matrix over {0, x, y}: m[i][j] bounds v_i - v_j.
using Matrix = std::array<std::array<Bound, 3>, 3>;
constexpr int kZero = 0, kX = 1, kY = 2;

Bound negate(const Bound& b) { return b ? Bound{checked_neg(*b)} : Bound{}; }

Matrix to_matrix(const Region& r) {
  Matrix m{};
  m[kZero][kZero] = m[kX][kX] = m[kY][kY] = 0;
  m[kX][kZero] = r.upper_x;
  m[kZero][kX] = negate(r.lower_x);
  m[kY][kZero] = r.upper_y;
  m[kZero][kY] = negate(r.lower_y);
  m[kX][kY] = r.upper_diff;
  m[kY][kX] = negate(r.lower_diff);
  return m;
}

Region from_matrix(const Matrix& m) {
  Region r;
  r.upper_x = m[kX][kZero];
  r.lower_x = negate(m[kZero][kX]);
  r.upper_y = m[kY][kZero];
  r.lower_y = negate(m[kZero][kY]);
  r.upper_diff = m[kX][kY];
  r.lower_diff = negate(m[kY][kX]);
  return r;
}

bool tighter(const Bound& candidate, const Bound& current) {
  return candidate && (!current || *candidate < *current);
}

Bound min_upper(const Bound& a, const Bound& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

Bound max_lower(const Bound& a, const Bound& b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

}  // namespace

bool Region::contains(Point p) const {
  if (lower_x && p.x < *lower_x) return false;
  if (upper_x && p.x > *upper_x) return false;
  if (lower_y && p.y < *lower_y) return false;
  if (upper_y && p.y > *upper_y) return false;
  if (lower_diff || upper_diff) {
    const Coord d = checked_add(p.x, checked_neg(p.y));
    if (lower_diff && d < *lower_diff) return false;
    if (upper_diff && d > *upper_diff) return false;
  }
  return true;
}

bool RegionSet::contains(Point p) const {
  return std::any_of(regions.begin(), regions.end(), [&](const Region& r) { return r.contains(p); });
}

bool RegionSet::is_finite() const {
  return std::all_of(regions.begin(), regions.end(), [](const Region& r) { return ddkg::is_finite(r); });
}

std::optional<Region> close(const Region& r) {
  Matrix m = to_matrix(r);
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      if (!m[i][k]) continue;
      for (int j = 0; j < 3; ++j) {
        if (!m[k][j]) continue;
        const Bound via = checked_add(*m[i][k], *m[k][j]);
        if (tighter(via, m[i][j])) m[i][j] = via;
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (*m[i][i] < 0) return std::nullopt;
  }
  return from_matrix(m);
}

bool member(const Region& r, Point p) { return r.contains(p); }

bool is_empty(const Region& r) { return !close(r).has_value(); }

bool is_finite(const Region& r) {
  const auto c = close(r);
  if (!c) return true;
  return c->lower_x && c->upper_x && c->lower_y && c->upper_y;
}

std::optional<Region> intersect(const Region& a, const Region& b) {
  Region r;
  r.lower_x = max_lower(a.lower_x, b.lower_x);
  r.upper_x = min_upper(a.upper_x, b.upper_x);
  r.lower_y = max_lower(a.lower_y, b.lower_y);
  r.upper_y = min_upper(a.upper_y, b.upper_y);
  r.lower_diff = max_lower(a.lower_diff, b.lower_diff);
  r.upper_diff = min_upper(a.upper_diff, b.upper_diff);
  return close(r);
}

RegionSet subtract(const Region& a, const Region& b) {
  RegionSet out;
  auto rest = close(a);
  if (!rest) return out;
  const auto cut = intersect(*rest, b);
  if (!cut) {
    out.regions.push_back(*rest);
    return out;
  }

  // Peel off one complemented constraint of b at a time; each piece keeps the
  // constraints already peeled, so the pieces are pairwise disjoint.
  struct Side {
    Bound Region::*lower;
    Bound Region::*upper;
  };
  constexpr std::array<Side, 3> sides{{{&Region::lower_x, &Region::upper_x},
                                       {&Region::lower_y, &Region::upper_y},
                                       {&Region::lower_diff, &Region::upper_diff}}};
  for (const auto& side : sides) {
    if (const Bound lo = b.*side.lower) {
      Region piece = *rest;
      piece.*side.upper = min_upper(piece.*side.upper, checked_add(*lo, -1));
      if (auto c = close(piece)) out.regions.push_back(*c);
      Region keep = *rest;
      keep.*side.lower = max_lower(keep.*side.lower, lo);
      rest = close(keep);
      if (!rest) return out;
    }
    if (const Bound hi = b.*side.upper) {
      Region piece = *rest;
      piece.*side.lower = max_lower(piece.*side.lower, checked_add(*hi, 1));
      if (auto c = close(piece)) out.regions.push_back(*c);
      Region keep = *rest;
      keep.*side.upper = min_upper(keep.*side.upper, hi);
      rest = close(keep);
      if (!rest) return out;
    }
  }
  return out;
}

RegionSet subtract(const RegionSet& a, const Region& b) {
  RegionSet out;
  for (const auto& r : a.regions) {
    auto pieces = subtract(r, b);
    out.regions.insert(out.regions.end(), pieces.regions.begin(), pieces.regions.end());
  }
  return out;
}

RegionSet subtract(const RegionSet& a, const RegionSet& b) {
  RegionSet out = a;
  for (const auto& r : b.regions) {
    if (out.empty()) break;
    out = subtract(out, r);
  }
  return out;
}

std::vector<Point> enumerate(const Region& r, const Region& window) {
  if (!is_finite(window)) throw InfiniteWindow("enumeration window must be finite");
  std::vector<Point> out;
  const auto box = intersect(r, window);
  if (!box) return out;
  for (Coord x = *box->lower_x; x <= *box->upper_x; ++x) {
    for (Coord y = *box->lower_y; y <= *box->upper_y; ++y) {
      if (box->contains({x, y})) out.push_back({x, y});
    }
  }
  return out;
}

std::uint64_t cardinality(const Region& r) {
  const auto c = close(r);
  if (!c) return 0;
  if (!is_finite(*c)) throw InfiniteWindow("cardinality of an infinite region");
  std::uint64_t count = 0;
  for (Coord x = *c->lower_x; x <= *c->upper_x; ++x) {
    // Column x: y in [lower_y, upper_y] intersected with [x - upper_diff, x - lower_diff].
    Coord lo = *c->lower_y;
    Coord hi = *c->upper_y;
    if (c->upper_diff) lo = std::max(lo, checked_add(x, checked_neg(*c->upper_diff)));
    if (c->lower_diff) hi = std::min(hi, checked_add(x, checked_neg(*c->lower_diff)));
    if (hi >= lo) count += static_cast<std::uint64_t>(hi - lo + 1);
  }
  return count;
}

}  // namespace ddkg
