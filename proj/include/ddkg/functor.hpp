#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddkg/gamma.hpp"
#include "ddkg/region.hpp"

namespace ddkg {

class IncompatibleTops : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotASubfunctor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Subfunctor of H_top = Hom(top, -) generated by basis morphisms out of top.
struct Subfunctor {
  VertexId top;
  std::vector<MorphismKey> generators;

  static Subfunctor zero(const VertexId& top) { return {top, {}}; }
  static Subfunctor whole(const VertexId& top) { return {top, {MorphismKey::identity(top)}}; }
  static Subfunctor image(const MorphismKey& f);  // Im H_f; f must be non-zero

  // Sum of subfunctors of the same representable.
  Subfunctor operator+(const Subfunctor& other) const;
};

// H_top / (sum of Im H_g for the listed generators).
struct FpFunctor {
  VertexId top;
  std::vector<MorphismKey> generators;

  static FpFunctor representable(const VertexId& top) { return {top, {}}; }
  Subfunctor denominators() const { return {top, generators}; }
};

// Finite coordinate box on which pointwise checks are run for every family
// and orbit.
class Window {
 public:
  explicit Window(Region box);  // throws InfiniteWindow
  static Window square(Coord lo, Coord hi) { return Window(Region::box(lo, hi, lo, hi)); }
  static Window box(Coord xlo, Coord xhi, Coord ylo, Coord yhi) { return Window(Region::box(xlo, xhi, ylo, yhi)); }

  const Region& region() const { return box_; }
  bool contains(Point p) const { return box_.contains(p); }
  // Middle half of the box in each direction.
  Window inner_half() const;

 private:
  Region box_;
};

struct CheckResult {
  bool passed = true;
  std::string detail;
  std::uint64_t points = 0;

  explicit operator bool() const { return passed; }
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
  void absorb(const CheckResult& other) {
    if (!other.passed) fail(other.detail);
    points += other.points;
  }
};

// Subquotient (upper / lower) of H_top together with a map top -> W that is
// claimed to induce H_W / presented.generators ~= upper / lower.
struct LayerPresentation {
  Subfunctor lower;
  Subfunctor upper;
  MorphismKey map;
  FpFunctor presented;
};

// One channel of a symbolic support: the points of family/orbit at which
// the basis element of the given degree survives.
struct SupportChannel {
  Family family;
  int orbit;
  int degree;
  RegionSet regions;
};

struct Support {
  std::vector<SupportChannel> channels;

  bool contains(const VertexId& v) const;
  bool is_finite() const;
  bool empty() const;
};

void validate(const GammaCategory& cat, const Subfunctor& s);

std::vector<MorphismKey> eval_sub(const GammaCategory& cat, const Subfunctor& s, const VertexId& v);
std::vector<MorphismKey> eval_intersection(const GammaCategory& cat, const Subfunctor& a, const Subfunctor& b,
                                           const VertexId& v);
std::size_t eval_fp(const GammaCategory& cat, const FpFunctor& f, const VertexId& v);

// Window vertices at which f is non-zero, with the dimension there.
std::vector<std::pair<VertexId, std::size_t>> nonzero_points(const GammaCategory& cat, const FpFunctor& f,
                                                             const Window& window);

// Degree-mask forms of the evaluations above.
DegreeMask sub_mask(const GammaCategory& cat, const Subfunctor& s, const VertexId& v);

Support support_region(const GammaCategory& cat, const FpFunctor& f);
// Support of g / f for subfunctors f <= g of the same representable.
Support quotient_support(const GammaCategory& cat, const Subfunctor& g, const Subfunctor& f);
bool is_in_c0(const GammaCategory& cat, const FpFunctor& f);

CheckResult containment_check(const GammaCategory& cat, const Subfunctor& inner, const Subfunctor& outer,
                              const Window& window);
CheckResult layer_presentation_check(const GammaCategory& cat, const LayerPresentation& layer, const Window& window);
CheckResult image_presentation_check(const GammaCategory& cat, const MorphismKey& f, const FpFunctor& q,
                                     const Window& window);
CheckResult ses_check(const GammaCategory& cat, const Subfunctor& sub, const Subfunctor& mid_denoms,
                      const FpFunctor& quot, const Window& window);

}  // namespace ddkg
