#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ddkg {

class OmegaViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Mode { FiniteGldim, InfiniteGldim };

const char* to_string(Mode mode);

// Parameters (r, n, m) of the one-cycle gentle algebra Lambda(r, n, m) with
// 1 <= r <= n and m >= 0. Only constructible through validate().
class GentleTriple {
 public:
  static GentleTriple validate(std::int64_t r, std::int64_t n, std::int64_t m);

  int r() const { return r_; }
  int n() const { return n_; }
  int m() const { return m_; }

  Mode mode() const { return r_ < n_ ? Mode::FiniteGldim : Mode::InfiniteGldim; }

  // Number of upper indices of the combinatorial model: r when the global
  // dimension is finite, n otherwise.
  int orbit_count() const { return mode() == Mode::FiniteGldim ? r_ : n_; }

  friend bool operator==(const GentleTriple&, const GentleTriple&) = default;

 private:
  GentleTriple(int r, int n, int m) : r_(r), n_(n), m_(m) {}
  int r_;
  int n_;
  int m_;
};

bool has_finite_global_dimension(const GentleTriple& t);

struct QuiverArrow {
  int index;  // j of alpha_j
  int source;
  int target;

  std::string name() const;
  friend bool operator==(const QuiverArrow&, const QuiverArrow&) = default;
};

// A zero relation on the path "first, then second" (written second*first).
struct ZeroRelation {
  int first;   // arrow index
  int second;  // arrow index
  friend bool operator==(const ZeroRelation&, const ZeroRelation&) = default;
};

struct BoundQuiver {
  std::vector<int> vertices;  // [-m, n-1], in increasing order
  std::vector<QuiverArrow> arrows;
  std::vector<ZeroRelation> relations;

  const QuiverArrow& arrow(int index) const;
  friend bool operator==(const BoundQuiver&, const BoundQuiver&) = default;
};

BoundQuiver build_bound_quiver(const GentleTriple& t);

}  // namespace ddkg
