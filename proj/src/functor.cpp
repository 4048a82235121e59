#include "ddkg/functor.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "ddkg/syntax.hpp"

namespace ddkg {
namespace {

// Generator with the fan of its target precomputed, for fast pointwise masks.
struct PreparedGenerator {
  int shift = 0;
  bool whole = false;
  FanTable target_fan;
};

class PreparedSub {
 public:
  PreparedSub(const GammaCategory& cat, const Subfunctor& s) {
    for (const auto& g : s.generators) {
      if (g.is_zero()) continue;
      PreparedGenerator p;
      if (g.is_identity()) {
        p.whole = true;
      } else {
        p.shift = g.degree();
        p.target_fan = cat.fan_table(g.target());
      }
      gens_.push_back(p);
    }
  }

  // Mask of the subfunctor at v, given the mask of Hom(top, v).
  DegreeMask at(const VertexId& v, DegreeMask top_mask) const {
    DegreeMask reach = 0;
    for (const auto& g : gens_) {
      if (g.whole) return top_mask;
      reach |= static_cast<DegreeMask>(g.target_fan.mask_at(v) << g.shift);
    }
    return reach & top_mask;
  }

 private:
  std::vector<PreparedGenerator> gens_;
};

std::string describe(const VertexId& v) { return format_vertex(v); }

// Visits every vertex of the window lying in the fan of at least one anchor.
// Outside those fans every Hom from an anchor vanishes, so all checks below
// hold there trivially.
template <typename Visit>
std::uint64_t sweep(const GammaCategory& cat, std::initializer_list<VertexId> anchors, const Window& window,
                    Visit&& visit) {
  struct Channel {
    Family family;
    int orbit;
    std::vector<Region> regions;
  };
  std::vector<Channel> channels;
  for (const auto& anchor : anchors) {
    const FanTable fan = cat.fan_table(anchor);
    for (int k = 0; k < fan.size; ++k) {
      const auto& e = fan.entries[k];
      const auto clipped = intersect(e.region, window.region());
      if (!clipped) continue;
      auto it = std::find_if(channels.begin(), channels.end(), [&](const Channel& c) {
        return c.family == e.target_family && c.orbit == e.target_orbit;
      });
      if (it == channels.end()) {
        channels.push_back({e.target_family, e.target_orbit, {}});
        it = std::prev(channels.end());
      }
      it->regions.push_back(*clipped);
    }
  }

  std::uint64_t count = 0;
  for (const auto& ch : channels) {
    const auto index = cat.index_set(ch.family, ch.orbit);
    if (!index) continue;
    Coord xlo = *ch.regions.front().lower_x, xhi = *ch.regions.front().upper_x;
    Coord ylo = *ch.regions.front().lower_y, yhi = *ch.regions.front().upper_y;
    for (const auto& r : ch.regions) {
      xlo = std::min(xlo, *r.lower_x);
      xhi = std::max(xhi, *r.upper_x);
      ylo = std::min(ylo, *r.lower_y);
      yhi = std::max(yhi, *r.upper_y);
    }
    for (Coord x = xlo; x <= xhi; ++x) {
      for (Coord y = ylo; y <= yhi; ++y) {
        const Point p{x, y};
        if (!index->contains(p)) continue;
        if (std::none_of(ch.regions.begin(), ch.regions.end(), [&](const Region& r) { return r.contains(p); }))
          continue;
        ++count;
        if (!visit(VertexId{ch.family, ch.orbit, p})) return count;
      }
    }
  }
  return count;
}

void require_same_top(const VertexId& a, const VertexId& b, const char* what) {
  if (a != b) throw IncompatibleTops(std::string(what) + ": " + describe(a) + " vs " + describe(b));
}

std::vector<MorphismKey> keys_from_mask(const VertexId& top, const VertexId& v, DegreeMask mask) {
  std::vector<MorphismKey> out;
  for (int d = 0; d < 8; ++d) {
    if (!((mask >> d) & 1u)) continue;
    out.push_back(d == 0 && top == v ? MorphismKey::identity(top) : MorphismKey::arrow(top, v, d));
  }
  return out;
}

RegionSet channel_image(const GammaCategory& cat, const Subfunctor& s, const FanEntry& entry) {
  RegionSet out;
  for (const auto& g : s.generators) {
    if (g.is_zero()) continue;
    if (g.is_identity()) {
      out.regions.assign({entry.region});
      return out;
    }
    const FanTable fan = cat.fan_table(g.target());
    const FanEntry* hit = fan.find(entry.target_family, entry.target_orbit, entry.degree - g.degree());
    if (!hit) continue;
    if (auto r = intersect(entry.region, hit->region)) out.regions.push_back(*r);
  }
  return out;
}

}  // namespace

Subfunctor Subfunctor::image(const MorphismKey& f) {
  if (f.is_zero()) throw PreconditionViolation("the image of the zero morphism has no top");
  return {f.source(), {f}};
}

Subfunctor Subfunctor::operator+(const Subfunctor& other) const {
  require_same_top(top, other.top, "sum of subfunctors");
  Subfunctor out = *this;
  out.generators.insert(out.generators.end(), other.generators.begin(), other.generators.end());
  return out;
}

Window::Window(Region box) : box_(box) {
  if (!ddkg::is_finite(box_)) throw InfiniteWindow("window must be a finite box");
}

Window Window::inner_half() const {
  const auto c = close(box_);
  if (!c) return *this;
  const Coord qx = (*c->upper_x - *c->lower_x) / 4;
  const Coord qy = (*c->upper_y - *c->lower_y) / 4;
  return Window::box(*c->lower_x + qx, *c->upper_x - qx, *c->lower_y + qy, *c->upper_y - qy);
}

bool Support::contains(const VertexId& v) const {
  return std::any_of(channels.begin(), channels.end(), [&](const SupportChannel& c) {
    return c.family == v.family && c.orbit == v.orbit && c.regions.contains(v.coord);
  });
}

bool Support::is_finite() const {
  return std::all_of(channels.begin(), channels.end(), [](const SupportChannel& c) { return c.regions.is_finite(); });
}

bool Support::empty() const {
  return std::all_of(channels.begin(), channels.end(), [](const SupportChannel& c) { return c.regions.empty(); });
}

void validate(const GammaCategory& cat, const Subfunctor& s) {
  if (!cat.vertex_valid(s.top)) throw InvalidVertex("top " + describe(s.top) + " is not a vertex");
  for (const auto& g : s.generators) {
    if (g.is_zero()) continue;
    require_same_top(s.top, g.source(), "generator source must be the top");
    if (g.is_arrow() && !cat.arrow_exists(g.source(), g.target(), g.degree()))
      throw PreconditionViolation("generator " + format_morphism(g) + " is not an arrow");
  }
}

DegreeMask sub_mask(const GammaCategory& cat, const Subfunctor& s, const VertexId& v) {
  validate(cat, s);
  if (!cat.vertex_valid(v)) return 0;
  return PreparedSub(cat, s).at(v, cat.fan_table(s.top).mask_at(v));
}

std::vector<MorphismKey> eval_sub(const GammaCategory& cat, const Subfunctor& s, const VertexId& v) {
  return keys_from_mask(s.top, v, sub_mask(cat, s, v));
}

std::vector<MorphismKey> eval_intersection(const GammaCategory& cat, const Subfunctor& a, const Subfunctor& b,
                                           const VertexId& v) {
  require_same_top(a.top, b.top, "intersection of subfunctors");
  return keys_from_mask(a.top, v, sub_mask(cat, a, v) & sub_mask(cat, b, v));
}

std::size_t eval_fp(const GammaCategory& cat, const FpFunctor& f, const VertexId& v) {
  const DegreeMask hom = cat.hom_mask(f.top, v);
  const DegreeMask killed = sub_mask(cat, f.denominators(), v);
  return static_cast<std::size_t>(std::popcount(static_cast<unsigned>(hom & ~killed)));
}

std::vector<std::pair<VertexId, std::size_t>> nonzero_points(const GammaCategory& cat, const FpFunctor& f,
                                                             const Window& window) {
  const Subfunctor denoms = f.denominators();
  validate(cat, denoms);
  const FanTable top_fan = cat.fan_table(f.top);
  const PreparedSub killed(cat, denoms);
  std::vector<std::pair<VertexId, std::size_t>> out;
  sweep(cat, {f.top}, window, [&](const VertexId& v) {
    const DegreeMask hom = top_fan.mask_at(v);
    const auto dim = std::popcount(static_cast<unsigned>(hom & ~killed.at(v, hom)));
    if (dim > 0) out.emplace_back(v, static_cast<std::size_t>(dim));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

Support quotient_support(const GammaCategory& cat, const Subfunctor& g, const Subfunctor& f) {
  require_same_top(g.top, f.top, "quotient of subfunctors");
  validate(cat, g);
  validate(cat, f);
  Support out;
  const FanTable fan = cat.fan_table(g.top);
  for (int k = 0; k < fan.size; ++k) {
    const FanEntry& e = fan.entries[k];
    const RegionSet big = channel_image(cat, g, e);
    const RegionSet small = channel_image(cat, f, e);
    if (!subtract(small, big).empty()) {
      throw NotASubfunctor("denominator is not contained in the numerator in channel " +
                           std::string(1, family_letter(e.target_family)) + std::to_string(e.target_orbit) +
                           "@" + std::to_string(e.degree));
    }
    out.channels.push_back({e.target_family, e.target_orbit, e.degree, subtract(big, small)});
  }
  return out;
}

Support support_region(const GammaCategory& cat, const FpFunctor& f) {
  return quotient_support(cat, Subfunctor::whole(f.top), f.denominators());
}

bool is_in_c0(const GammaCategory& cat, const FpFunctor& f) { return support_region(cat, f).is_finite(); }

CheckResult containment_check(const GammaCategory& cat, const Subfunctor& inner, const Subfunctor& outer,
                              const Window& window) {
  require_same_top(inner.top, outer.top, "containment");
  validate(cat, inner);
  validate(cat, outer);
  const FanTable top_fan = cat.fan_table(inner.top);
  const PreparedSub in(cat, inner), out(cat, outer);
  CheckResult res;
  res.points = sweep(cat, {inner.top}, window, [&](const VertexId& v) {
    const DegreeMask hom = top_fan.mask_at(v);
    if (in.at(v, hom) & ~out.at(v, hom)) {
      res.fail("not contained at " + describe(v));
      return false;
    }
    return true;
  });
  return res;
}

CheckResult layer_presentation_check(const GammaCategory& cat, const LayerPresentation& layer, const Window& window) {
  if (layer.map.is_zero()) throw PreconditionViolation("layer map must be non-zero");
  const VertexId& top = layer.map.source();
  const VertexId& w = layer.map.target();
  require_same_top(layer.lower.top, top, "lower subfunctor");
  require_same_top(layer.upper.top, top, "upper subfunctor");
  require_same_top(layer.presented.top, w, "presented functor");
  validate(cat, layer.lower);
  validate(cat, layer.upper);
  validate(cat, Subfunctor::image(layer.map));
  validate(cat, layer.presented.denominators());

  const FanTable top_fan = cat.fan_table(top);
  const FanTable w_fan = cat.fan_table(w);
  const PreparedSub lower(cat, layer.lower), upper(cat, layer.upper), image(cat, Subfunctor::image(layer.map));
  const PreparedSub presented(cat, layer.presented.denominators());
  const int shift = layer.map.degree();

  CheckResult res;
  res.points = sweep(cat, {top, w}, window, [&](const VertexId& v) {
    const DegreeMask hom_top = top_fan.mask_at(v);
    const DegreeMask hom_w = w_fan.mask_at(v);
    const DegreeMask lo = lower.at(v, hom_top);
    const DegreeMask up = upper.at(v, hom_top);
    const DegreeMask img = image.at(v, hom_top);
    if (lo & ~up) {
      res.fail("lower not contained in upper at " + describe(v));
      return false;
    }
    if ((lo | img) != up) {
      res.fail("lower + image differs from upper at " + describe(v));
      return false;
    }
    // h of degree q dies iff h . map (degree q + shift) is zero or lies in lower.
    const DegreeMask survivors = hom_top & static_cast<DegreeMask>(~lo);
    const DegreeMask kernel = hom_w & static_cast<DegreeMask>(~(survivors >> shift));
    if (kernel != presented.at(v, hom_w)) {
      res.fail("kernel differs from the presented denominators at " + describe(v));
      return false;
    }
    return true;
  });
  return res;
}

CheckResult image_presentation_check(const GammaCategory& cat, const MorphismKey& f, const FpFunctor& q,
                                     const Window& window) {
  if (!f.is_arrow()) throw PreconditionViolation("image presentation needs a non-zero, non-identity arrow");
  const Subfunctor im = Subfunctor::image(f);
  return layer_presentation_check(cat, {Subfunctor::zero(f.source()), im, f, q}, window);
}

CheckResult ses_check(const GammaCategory& cat, const Subfunctor& sub, const Subfunctor& mid_denoms,
                      const FpFunctor& quot, const Window& window) {
  require_same_top(sub.top, mid_denoms.top, "ses sub vs middle");
  require_same_top(sub.top, quot.top, "ses sub vs quotient");
  validate(cat, sub);
  validate(cat, mid_denoms);
  const Subfunctor quot_denoms = quot.denominators();
  validate(cat, quot_denoms);

  const FanTable top_fan = cat.fan_table(sub.top);
  const PreparedSub s(cat, sub), d2(cat, mid_denoms), d3(cat, quot_denoms);
  auto count = [](DegreeMask m) { return std::popcount(static_cast<unsigned>(m)); };

  CheckResult res;
  res.points = sweep(cat, {sub.top}, window, [&](const VertexId& v) {
    const DegreeMask hom = top_fan.mask_at(v);
    const DegreeMask ms = s.at(v, hom), m2 = d2.at(v, hom), m3 = d3.at(v, hom);
    const auto not_in = [](DegreeMask a, DegreeMask b) { return static_cast<DegreeMask>(a & ~b); };
    if (not_in(m2, m3)) {
      res.fail("middle-to-quotient map is not defined at " + describe(v));
      return false;
    }
    if (not_in(ms, m3)) {
      res.fail("sub is not inside the quotient's denominators at " + describe(v));
      return false;
    }
    if (count(not_in(hom, m2)) != count(not_in(ms, m2)) + count(not_in(hom, m3))) {
      std::ostringstream os;
      os << "dimension identity fails at " << describe(v) << ": " << count(not_in(hom, m2))
         << " != " << count(not_in(ms, m2)) << " + " << count(not_in(hom, m3));
      res.fail(os.str());
      return false;
    }
    return true;
  });
  return res;
}

}  // namespace ddkg
