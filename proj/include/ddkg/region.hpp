#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ddkg {

using Coord = std::int64_t;

struct Point {
  Coord x = 0;
  Coord y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

// A bound that is absent is infinite: -inf when used as a lower bound, +inf
// when used as an upper bound.
using Bound = std::optional<Coord>;

class InfiniteWindow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Conjunction of bounds on x, y and x - y over Z^2. Default-constructed
// regions denote the whole plane.
struct Region {
  Bound lower_x, upper_x;
  Bound lower_y, upper_y;
  Bound lower_diff, upper_diff;

  static Region plane() { return {}; }
  static Region box(Coord xlo, Coord xhi, Coord ylo, Coord yhi) {
    return Region{xlo, xhi, ylo, yhi, {}, {}};
  }
  static Region point(Point p) { return box(p.x, p.x, p.y, p.y); }

  Region& x_in(Bound lo, Bound hi) {
    lower_x = lo;
    upper_x = hi;
    return *this;
  }
  Region& y_in(Bound lo, Bound hi) {
    lower_y = lo;
    upper_y = hi;
    return *this;
  }
  Region& diff_in(Bound lo, Bound hi) {
    lower_diff = lo;
    upper_diff = hi;
    return *this;
  }

  bool contains(Point p) const;

  friend bool operator==(const Region&, const Region&) = default;
};

// Finite union of regions.
struct RegionSet {
  std::vector<Region> regions;

  bool contains(Point p) const;
  bool empty() const { return regions.empty(); }
  // Decided piecewise after closure; a union is finite iff every piece is.
  bool is_finite() const;
};

// Shortest-path closure over the constraint graph on {0, x, y}. Returns
// nullopt iff the region has no integer points.
std::optional<Region> close(const Region& r);

bool member(const Region& r, Point p);
bool is_empty(const Region& r);
bool is_finite(const Region& r);

std::optional<Region> intersect(const Region& a, const Region& b);

// Pairwise disjoint pieces whose union is a \ b.
RegionSet subtract(const Region& a, const Region& b);
RegionSet subtract(const RegionSet& a, const Region& b);
RegionSet subtract(const RegionSet& a, const RegionSet& b);

// Sorted points of r inside a finite window.
std::vector<Point> enumerate(const Region& r, const Region& window);

// Number of integer points of a finite region.
std::uint64_t cardinality(const Region& r);

}  // namespace ddkg
