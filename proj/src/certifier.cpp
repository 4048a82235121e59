#include "ddkg/certifier.hpp"

#include <algorithm>

#include "ddkg/syntax.hpp"

namespace ddkg {
namespace {

// Row of the case table for a simple1 instance: which coordinate kills the
// same-family maps, the channel of the second denominator generator, and the
// coordinate along which maps into that channel form a finite chain.
struct Shape {
  int same_killed;
  Point step;
  Family s2_family;
  int s2_orbit;
  int s2_degree;
  int s2_killed;
  Coord s2_pivot;
  int s2_chain;
  Coord s2_threshold;
};

Coord axis(Point p, int a) { return a == 0 ? p.x : p.y; }
Point unit(int a) { return a == 0 ? Point{1, 0} : Point{0, 1}; }

Coord delta_last(const GammaCategory& cat, int orbit) { return orbit == cat.orbit_count() - 1 ? 1 : 0; }
Coord delta_first(int orbit) { return orbit == 0 ? 1 : 0; }

void require_mode(const GammaCategory& cat, Mode mode, const std::string& what) {
  if (cat.mode() != mode) throw ModeMismatch(what + " needs " + to_string(mode) + " mode");
}

void require_valid(const GammaCategory& cat, const VertexId& v) {
  if (!cat.vertex_valid(v)) throw InvalidVertex(format_vertex(v) + " is not a vertex");
}

Shape shape_of(const GammaCategory& cat, const Simple1Params& p) {
  const int i = p.orbit, next = cat.next_orbit(p.orbit);
  const Coord a = p.corner.x, b = p.corner.y;
  switch (p.kind) {
    case SimpleKind::BPrime: return {0, {0, 1}, Family::Z, i, 1, 0, a, 1, p.aux};
    case SimpleKind::BDoublePrime: return {0, {0, 1}, Family::Z, i, 1, 1, a, 0, p.aux};
    case SimpleKind::CPrime: return {0, {0, 1}, Family::X, next, 1, 1, a, 0, p.aux};
    case SimpleKind::CDoublePrime: return {1, {1, 0}, Family::Y, next, 1, 1, b, 0, p.aux};
    case SimpleKind::B: return {0, {0, 1}, Family::X, next, 1, 1, a, 0, p.aux};
  }
  throw ParameterRange("unknown simple kind");
}

std::string describe(const Simple1Params& p) {
  return std::string(to_string(p.kind)) + "[" + std::to_string(p.orbit) + "](" + std::to_string(p.corner.x) + "," +
         std::to_string(p.corner.y) + ";" + std::to_string(p.aux) + ")";
}

void absorb_in(CheckResult& res, const CheckResult& part, const std::string& where) {
  CheckResult copy = part;
  if (!copy.passed) copy.detail = where + ": " + copy.detail;
  res.absorb(copy);
}

}  // namespace

const char* to_string(SimpleKind kind) {
  switch (kind) {
    case SimpleKind::BPrime: return "Bp";
    case SimpleKind::BDoublePrime: return "Bpp";
    case SimpleKind::CPrime: return "Cp";
    case SimpleKind::CDoublePrime: return "Cpp";
    case SimpleKind::B: return "B";
  }
  return "?";
}

const char* to_string(LemmaId id) {
  switch (id) {
    case LemmaId::Simple0: return "simple0";
    case LemmaId::Simple1: return "simple1";
    case LemmaId::Finite1: return "finite1";
    case LemmaId::Nonsimple1: return "nonsimple1";
    case LemmaId::C2Simple: return "c2_simple";
    case LemmaId::InfSimple0: return "inf_simple0";
    case LemmaId::InfSimple1: return "inf_simple1";
    case LemmaId::InfFinite1: return "inf_finite1";
    case LemmaId::NotC0: return "not_c0";
  }
  return "?";
}

FpFunctor build_simple0(const GammaCategory& cat, const VertexId& v) {
  require_valid(cat, v);
  const auto [right, up] = cat.ar_sink_maps(v);
  return {v, {right, up}};
}

VertexId simple1_top(const GammaCategory& cat, const Simple1Params& p) {
  Family family = Family::X;
  switch (p.kind) {
    case SimpleKind::BPrime:
    case SimpleKind::B: family = Family::X; break;
    case SimpleKind::BDoublePrime: family = Family::Y; break;
    case SimpleKind::CPrime:
    case SimpleKind::CDoublePrime: family = Family::Z; break;
  }
  if (p.kind == SimpleKind::B) {
    require_mode(cat, Mode::InfiniteGldim, "simple B");
  } else {
    require_mode(cat, Mode::FiniteGldim, std::string("simple ") + to_string(p.kind));
  }
  if (p.orbit < 0 || p.orbit >= cat.orbit_count()) throw ParameterRange("orbit out of range");
  const VertexId top{family, p.orbit, p.corner};
  if (!cat.vertex_valid(top)) throw ParameterRange(format_vertex(top) + " is not a vertex");
  return top;
}

FpFunctor build_simple1(const GammaCategory& cat, const Simple1Params& p) {
  const VertexId top = simple1_top(cat, p);
  const int i = p.orbit, next = cat.next_orbit(i);
  const Coord a = p.corner.x, b = p.corner.y;
  const Coord m = cat.triple().m(), n = cat.triple().n();
  const Coord d = delta_last(cat, i);
  auto bound = [&](Coord limit) {
    if (p.aux > limit) {
      throw ParameterRange(describe(p) + ": parameter must be at most " + std::to_string(limit));
    }
  };
  switch (p.kind) {
    case SimpleKind::BPrime:
      return {top, {cat.morphism(top, top.shifted(1, 0), 0), cat.morphism(top, {Family::Z, i, {a, p.aux}}, 1)}};
    case SimpleKind::BDoublePrime:
      return {top, {cat.morphism(top, top.shifted(1, 0), 0), cat.morphism(top, {Family::Z, i, {p.aux, a}}, 1)}};
    case SimpleKind::CPrime:
      bound(a + d * m + 1);
      return {top, {cat.morphism(top, top.shifted(1, 0), 0), cat.morphism(top, {Family::X, next, {p.aux, a}}, 1)}};
    case SimpleKind::CDoublePrime:
      bound(b - d * n + 1);
      return {top, {cat.morphism(top, top.shifted(0, 1), 0), cat.morphism(top, {Family::Y, next, {p.aux, b}}, 1)}};
    case SimpleKind::B:
      bound(a + d * m);
      return {top, {cat.morphism(top, top.shifted(1, 0), 0), cat.morphism(top, {Family::X, next, {p.aux, a}}, 1)}};
  }
  throw ParameterRange("unknown simple kind");
}

Certifier::Certifier(const GammaCategory& cat, const Window& window, Perturbation perturbation)
    : cat_(cat), window_(window), perturbation_(perturbation) {}

FpFunctor Certifier::presented(const FpFunctor& f) const {
  if (perturbation_ == Perturbation::SubstituteSimple) return build_simple0(cat_, f.top);
  return f;
}

CheckResult Certifier::simple0(const VertexId& v) {
  require_valid(cat_, v);
  FpFunctor a = build_simple0(cat_, v);
  if (perturbation_ == Perturbation::ShiftCoordinate) a.generators[1] = cat_.morphism(v, v.shifted(0, 2), 0);
  CheckResult res;
  const auto points = nonzero_points(cat_, a, window_);
  for (const auto& [w, dim] : points) {
    if (w != v) {
      res.fail("non-zero at " + format_vertex(w));
      break;
    }
    if (dim != 1) res.fail("dimension " + std::to_string(dim) + " at the vertex itself");
  }
  if (window_.contains(v.coord)) {
    if (points.empty()) res.fail("zero at the vertex itself");
  } else if (res.passed) {
    res.detail = "vertex outside the window; singleton value not checked";
  }
  const Support s = support_region(cat_, a);
  if (!s.is_finite() || !s.contains(v)) res.fail("symbolic support is not the single vertex");
  std::uint64_t total = 0;
  for (const auto& ch : s.channels)
    for (const auto& r : ch.regions.regions) total += cardinality(r);
  if (total != 1) res.fail("symbolic support has " + std::to_string(total) + " points");
  res.points = points.size();
  return res;
}

CheckResult Certifier::simple1_cases(const Simple1Params& p) {
  const FpFunctor f_all = build_simple1(cat_, p);
  const VertexId& top = f_all.top;
  const Subfunctor denoms = f_all.denominators();
  const Shape s = shape_of(cat_, p);
  const int stride = perturbation_ == Perturbation::SkipChainStep ? 2 : 1;
  CheckResult res;

  for (const auto& e : cat_.arrow_fan(top).entries) {
    const auto clipped = intersect(e.region, window_.region());
    if (!clipped) continue;
    const bool same = e.target_family == top.family && e.target_orbit == top.orbit && e.degree == 0;
    const bool second = e.target_family == s.s2_family && e.target_orbit == s.s2_orbit && e.degree == s.s2_degree;
    for (const Point q : enumerate(*clipped, window_.region())) {
      const VertexId w{e.target_family, e.target_orbit, q};
      if (!cat_.vertex_valid(w) || (same && w == top)) continue;
      const MorphismKey f = cat_.morphism(top, w, e.degree);
      const std::string where = describe(p) + " at " + format_morphism(f);
      ++res.points;

      enum class Case { Zero, Equal, Finite } kind = Case::Zero;
      if (same && axis(q, s.same_killed) <= axis(top.coord, s.same_killed)) kind = Case::Equal;
      if (second && axis(q, s.s2_killed) <= s.s2_pivot && axis(q, s.s2_chain) < s.s2_threshold) kind = Case::Finite;

      if (kind == Case::Zero) {
        // Im H_f lies in the denominators iff f itself does (Yoneda).
        if (!((sub_mask(cat_, denoms, w) >> f.degree()) & 1u)) {
          res.fail(where + ": expected to vanish in the quotient");
          return res;
        }
        bool witnessed = false;
        for (const auto& g : f_all.generators) {
          if (g.is_zero() || g.degree() > f.degree()) continue;
          const MorphismKey k = cat_.morphism(g.target(), w, f.degree() - g.degree());
          if (!k.is_zero() && cat_.compose(k, g) == f) witnessed = true;
        }
        if (!witnessed) {
          res.fail(where + ": no factorisation through a denominator generator");
          return res;
        }
        continue;
      }

      const Subfunctor im = Subfunctor::image(f);
      if (kind == Case::Equal) {
        const int chain = 1 - s.same_killed;
        const Point back = unit(chain);
        const MorphismKey prev = cat_.morphism(top, w.shifted(-stride * back.x, -stride * back.y), 0);
        if (prev.is_zero()) {
          res.fail(where + ": chain predecessor vanishes");
          return res;
        }
        const FpFunctor shown = presented(build_simple0(cat_, prev.target()));
        absorb_in(res, layer_presentation_check(cat_, {im + denoms, Subfunctor::image(prev) + denoms, prev, shown},
                                                window_),
                  where);
        if (!quotient_support(cat_, Subfunctor::whole(top), im + denoms).is_finite())
          res.fail(where + ": quotient by the image is not of finite length");
      } else {
        const Point fwd = unit(s.s2_chain);
        const MorphismKey next = cat_.morphism(top, w.shifted(stride * fwd.x, stride * fwd.y), e.degree);
        const Subfunctor lower = next.is_zero() ? denoms : Subfunctor::image(next) + denoms;
        const FpFunctor shown = presented(build_simple0(cat_, w));
        absorb_in(res, layer_presentation_check(cat_, {lower, im + denoms, f, shown}, window_), where);
        if (!quotient_support(cat_, im + denoms, denoms).is_finite())
          res.fail(where + ": image is not of finite length in the quotient");
      }
      if (!res.passed) return res;
    }
  }
  return res;
}

CheckResult Certifier::simple1_sequences(const Simple1Params& p, int chain_length) {
  const Shape s = shape_of(cat_, p);
  const int stride = perturbation_ == Perturbation::SkipChainStep ? 2 : 1;
  auto at = [&](int k) {
    Simple1Params q = p;
    q.corner = {p.corner.x + k * s.step.x, p.corner.y + k * s.step.y};
    return q;
  };

  CheckResult res;
  for (int k = 0; k <= chain_length && res.passed; ++k) {
    const FpFunctor fk = build_simple1(cat_, at(k));
    Simple1Params q = at(k + stride);
    const FpFunctor fn = build_simple1(cat_, q);
    const MorphismKey psi = cat_.morphism(fk.top, fn.top, 0);
    if (psi.is_zero()) {
      res.fail(describe(p) + ": tower map vanishes at step " + std::to_string(k));
      break;
    }
    FpFunctor shown = fn;
    if (perturbation_ == Perturbation::ShiftCoordinate) {
      q.aux -= 1;
      shown = build_simple1(cat_, q);
    }
    shown = presented(shown);
    const Subfunctor denoms = fk.denominators();
    const Subfunctor im = Subfunctor::image(psi);
    const std::string where = describe(p) + " step " + std::to_string(k);
    absorb_in(res, ses_check(cat_, im, denoms, build_simple0(cat_, fk.top), window_), where);
    absorb_in(res, layer_presentation_check(cat_, {denoms, denoms + im, psi, shown}, window_), where);
  }
  return res;
}

CheckResult Certifier::simple1_tower(const Simple1Params& p, int chain_length) {
  const auto key = std::make_pair(p, chain_length);
  if (const auto it = tower_cache_.find(key); it != tower_cache_.end()) return it->second;
  CheckResult res;
  if (is_in_c0(cat_, build_simple1(cat_, p))) res.fail(describe(p) + " has finite length");
  if (res.passed) res.absorb(simple1_sequences(p, chain_length));
  if (res.passed) res.absorb(simple1_cases(p));
  tower_cache_.emplace(key, res);
  return res;
}

CheckResult Certifier::finite1(const VertexId& v) {
  if (const auto it = finite1_cache_.find(v); it != finite1_cache_.end()) return it->second;
  require_valid(cat_, v);
  if (v.family == Family::Z) throw WrongFamily("finite1 applies to X and Y vertices only");

  const bool infinite = cat_.mode() == Mode::InfiniteGldim;
  const int i = v.orbit, next = cat_.next_orbit(i);
  const Coord m = cat_.triple().m(), n = cat_.triple().n();
  const Coord d0 = delta_first(i), d1 = delta_last(cat_, i);
  const Coord a = v.coord.x, b = v.coord.y;
  const Coord last = v.family == Family::X ? b + d0 * m : b - d0 * n;
  const int stride = perturbation_ == Perturbation::SkipChainStep ? 2 : 1;
  const Coord shift = perturbation_ == Perturbation::ShiftCoordinate ? 1 : 0;

  CheckResult res;
  for (Coord level = a; level <= last && res.passed; ++level) {
    const VertexId top{v.family, i, {level, b}};
    const MorphismKey f_next = cat_.morphism(top, top.shifted(stride, 0), 0);
    VertexId w;
    FpFunctor shown, quot;
    if (infinite) {
      w = {Family::X, next, {level + d1 * m, level}};
      shown = build_simple0(cat_, w);
      if (shift) shown.generators[1] = cat_.morphism(w, w.shifted(0, 2), 0);
      quot = build_simple1(cat_, {SimpleKind::B, i, {level, b}, level + d1 * m});
    } else if (v.family == Family::X) {
      w = {Family::Z, i, {level, 0}};
      shown = build_simple1(cat_, {SimpleKind::CPrime, i, {level, 0}, level + d1 * m + 1 - shift});
      quot = build_simple1(cat_, {SimpleKind::BPrime, i, {level, b}, 0});
    } else {
      w = {Family::Z, i, {0, level}};
      shown = build_simple1(cat_, {SimpleKind::CDoublePrime, i, {0, level}, level - d1 * n + 1 - shift});
      quot = build_simple1(cat_, {SimpleKind::BDoublePrime, i, {level, b}, 0});
    }
    shown = presented(shown);
    const MorphismKey g = cat_.morphism(top, w, 1);
    const std::string where = format_vertex(top);
    if (g.is_zero()) {
      res.fail(where + ": connecting map vanishes");
      break;
    }
    const Subfunctor lower{top, {f_next}};
    absorb_in(res, ses_check(cat_, lower, Subfunctor::zero(top), FpFunctor{top, {f_next}}, window_), where);
    absorb_in(res, layer_presentation_check(cat_, {lower, lower + Subfunctor::image(g), g, shown}, window_), where);
    absorb_in(res, ses_check(cat_, Subfunctor::image(g), lower, quot, window_), where);
  }
  const VertexId bottom{v.family, i, {last, b}};
  if (res.passed && !cat_.morphism(bottom, bottom.shifted(1, 0), 0).is_zero())
    res.fail(format_vertex(bottom) + ": induction does not reach its base");
  finite1_cache_.emplace(v, res);
  return res;
}

CheckResult Certifier::nonsimple1(const VertexId& v, int depth) {
  require_mode(cat_, Mode::FiniteGldim, "nonsimple1");
  require_valid(cat_, v);
  if (v.family != Family::Z) throw WrongFamily("nonsimple1 applies to Z vertices only");
  const Coord a = v.coord.x, b = v.coord.y;
  const Coord d1 = delta_last(cat_, v.orbit), m = cat_.triple().m();
  const int stride = perturbation_ == Perturbation::SkipChainStep ? 2 : 1;
  const Coord shift = perturbation_ == Perturbation::ShiftCoordinate ? 1 : 0;

  CheckResult res;
  for (int k = 0; k <= depth && res.passed; ++k) {
    const MorphismKey up = cat_.morphism(v, v.shifted(k, 0), 0);
    const MorphismKey lo = cat_.morphism(v, v.shifted(k + stride, 0), 0);
    const Simple1Params cp{SimpleKind::CPrime, v.orbit, {a + k, b}, a + d1 * m + 1};
    Simple1Params shifted = cp;
    shifted.aux -= shift;
    const FpFunctor shown = presented(build_simple1(cat_, shifted));
    const std::string where = format_vertex(v) + " layer " + std::to_string(k);
    absorb_in(res, layer_presentation_check(cat_, {Subfunctor::image(lo), Subfunctor::image(up), up, shown}, window_),
              where);
    if (is_in_c0(cat_, shown)) res.fail(where + ": layer has finite length");
    absorb_in(res, simple1_tower(cp, kNestedChainLength), where);
  }
  return res;
}

CheckResult Certifier::c2_simple(const VertexId& v) {
  require_mode(cat_, Mode::FiniteGldim, "c2_simple");
  require_valid(cat_, v);
  if (v.family != Family::Z) throw WrongFamily("c2_simple applies to Z vertices only");
  const int i = v.orbit, next = cat_.next_orbit(i);
  const Coord a = v.coord.x, b = v.coord.y;
  const Coord d1 = delta_last(cat_, i), m = cat_.triple().m(), n = cat_.triple().n();
  const int stride = perturbation_ == Perturbation::SkipChainStep ? 2 : 1;
  const Coord shift = perturbation_ == Perturbation::ShiftCoordinate ? 1 : 0;

  CheckResult res;
  for (const auto& e : cat_.arrow_fan(v).entries) {
    const auto clipped = intersect(e.region, window_.region());
    if (!clipped) continue;
    for (const Point q : enumerate(*clipped, window_.region())) {
      const VertexId w{e.target_family, e.target_orbit, q};
      if (!cat_.vertex_valid(w)) continue;
      const MorphismKey f = cat_.morphism(v, w, e.degree);
      const std::string where = format_morphism(f);
      ++res.points;
      if (e.target_family == Family::Z && e.degree == 0) {
        if (w == v) continue;
        MorphismKey prev = MorphismKey::zero();
        Simple1Params cp{};
        if (q.x > a) {
          prev = cat_.morphism(v, w.shifted(-stride, 0), 0);
          cp = {SimpleKind::CPrime, i, {q.x - 1, q.y}, a + d1 * m + 1};
        } else {
          prev = cat_.morphism(v, w.shifted(0, -stride), 0);
          cp = {SimpleKind::CDoublePrime, i, {a, q.y - 1}, b - d1 * n + 1};
        }
        Simple1Params shifted = cp;
        shifted.aux -= shift;
        const FpFunctor shown = presented(build_simple1(cat_, shifted));
        if (prev.is_zero() || prev.target() != shown.top) {
          res.fail(where + ": no predecessor presenting the layer");
          return res;
        }
        absorb_in(res,
                  layer_presentation_check(cat_, {Subfunctor::image(f), Subfunctor::image(prev), prev, shown}, window_),
                  where);
        if (is_in_c0(cat_, shown)) res.fail(where + ": layer has finite length");
        absorb_in(res, simple1_tower(cp, kNestedChainLength), where);
      } else if (e.degree == 1) {
        absorb_in(res, finite1(w), where);
      } else {
        const VertexId via{Family::X, next, {q.x, a}};
        const MorphismKey h = cat_.morphism(v, via, 1);
        const MorphismKey g = h.is_zero() ? MorphismKey::zero() : cat_.morphism(via, w, 1);
        if (g.is_zero() || cat_.compose(g, h) != f) {
          res.fail(where + ": no factorisation through " + format_vertex(via));
          return res;
        }
        if (!((sub_mask(cat_, Subfunctor::image(h), w) >> f.degree()) & 1u))
          res.fail(where + ": image not inside the image of " + format_morphism(h));
        absorb_in(res, finite1(via), where);
        if (!quotient_support(cat_, Subfunctor::image(f), Subfunctor::zero(v)).is_finite())
          res.fail(where + ": image is not of finite length");
      }
      if (!res.passed) return res;
    }
  }
  return res;
}

CheckResult Certifier::infinite_mode(int depth) {
  require_mode(cat_, Mode::InfiniteGldim, "infinite-mode check");
  const Coord m = cat_.triple().m();
  CheckResult res;
  for (const auto& v : cat_.vertices_in(window_.inner_half().region())) {
    absorb_in(res, simple0(v), format_vertex(v));
    const Simple1Params bp{SimpleKind::B, v.orbit, v.coord, v.coord.x + delta_last(cat_, v.orbit) * m};
    absorb_in(res, simple1_tower(bp, depth), format_vertex(v));
    if (is_in_c0(cat_, FpFunctor::representable(v))) res.fail(format_vertex(v) + ": representable has finite length");
  }
  for (const auto& v : cat_.vertices_in(window_.region())) absorb_in(res, finite1(v), format_vertex(v));
  return res;
}

CheckResult check_simple0(const GammaCategory& cat, const VertexId& v, const Window& window) {
  return Certifier(cat, window).simple0(v);
}

CheckResult check_simple1_tower(const GammaCategory& cat, const Simple1Params& p, int chain_length,
                                const Window& window) {
  return Certifier(cat, window).simple1_tower(p, chain_length);
}

CheckResult check_finite1(const GammaCategory& cat, const VertexId& v, const Window& window) {
  return Certifier(cat, window).finite1(v);
}

CheckResult check_nonsimple1(const GammaCategory& cat, const VertexId& v, int depth, const Window& window) {
  return Certifier(cat, window).nonsimple1(v, depth);
}

CheckResult check_c2_simple(const GammaCategory& cat, const VertexId& v, const Window& window) {
  return Certifier(cat, window).c2_simple(v);
}

CheckResult check_infinite_mode(const GammaCategory& cat, const Window& window, int depth) {
  return Certifier(cat, window).infinite_mode(depth);
}

Certificate certify(const GentleTriple& t, const Window& window, int depth) {
  if (depth < 0) throw ParameterRange("depth must be non-negative");
  const GammaCategory cat(t);
  Certifier cert(cat, window);
  const Window inner = window.inner_half();
  const bool finite = cat.mode() == Mode::FiniteGldim;
  const Coord m = t.m(), n = t.n();

  Certificate out{t, 0, window.region(), depth, {}, {}, false};

  auto record = [&](LemmaInstance inst, std::string kind, const CheckResult& r) {
    out.checks.push_back({std::move(inst), std::move(kind), r.passed, r.detail, r.points});
    return r.passed;
  };

  for (const auto& v : cat.vertices_in(window.region())) {
    record({finite ? LemmaId::Simple0 : LemmaId::InfSimple0, v, std::nullopt, 0}, "pointwise+symbolic",
           cert.simple0(v));
  }

  for (const auto& v : cat.vertices_in(inner.region())) {
    const Coord d1 = v.orbit == cat.orbit_count() - 1 ? 1 : 0;
    std::vector<Simple1Params> instances;
    if (!finite) {
      instances.push_back({SimpleKind::B, v.orbit, v.coord, v.coord.x + d1 * m});
    } else if (v.family == Family::X) {
      instances.push_back({SimpleKind::BPrime, v.orbit, v.coord, 0});
    } else if (v.family == Family::Y) {
      instances.push_back({SimpleKind::BDoublePrime, v.orbit, v.coord, 0});
    } else {
      instances.push_back({SimpleKind::CPrime, v.orbit, v.coord, v.coord.x + d1 * m + 1});
      instances.push_back({SimpleKind::CDoublePrime, v.orbit, v.coord, v.coord.y - d1 * n + 1});
    }
    for (const auto& p : instances) {
      record({finite ? LemmaId::Simple1 : LemmaId::InfSimple1, v, p, depth}, "pointwise+symbolic",
             cert.simple1_tower(p, depth));
    }
    const bool infinite_length = !is_in_c0(cat, FpFunctor::representable(v));
    CheckResult r;
    if (!infinite_length) r.fail("representable has finite length");
    record({LemmaId::NotC0, v, std::nullopt, 0}, "symbolic", r);
  }

  for (const auto& v : cat.vertices_in(window.region())) {
    if (v.family == Family::Z) continue;
    const bool ok = record({finite ? LemmaId::Finite1 : LemmaId::InfFinite1, v, std::nullopt, 0}, "pointwise",
                           cert.finite1(v));
    if (ok) out.layers.push_back({v, 1});
  }

  if (finite) {
    for (const auto& v : cat.vertices_in(inner.region(), Family::Z)) {
      const bool ns = record({LemmaId::Nonsimple1, v, std::nullopt, depth}, "pointwise+symbolic",
                             cert.nonsimple1(v, depth));
      const bool c2 = record({LemmaId::C2Simple, v, std::nullopt, 0}, "pointwise+symbolic", cert.c2_simple(v));
      if (ns && c2) out.layers.push_back({v, 2});
    }
  }

  out.verdict = std::all_of(out.checks.begin(), out.checks.end(), [](const CheckRecord& c) { return c.pass; });
  for (const auto& l : out.layers) out.kg = std::max(out.kg, l.layer);
  return out;
}

}  // namespace ddkg
