#include <doctest.h>

#include "ddkg/certifier.hpp"
#include "ddkg/json_io.hpp"

using namespace ddkg;

namespace {

const GentleTriple kAuslander = GentleTriple::validate(1, 2, 0);

VertexId X(Coord a, Coord b, int i = 0) { return {Family::X, i, {a, b}}; }
VertexId Y(Coord a, Coord b, int i = 0) { return {Family::Y, i, {a, b}}; }
VertexId Z(Coord a, Coord b, int i = 0) { return {Family::Z, i, {a, b}}; }

}  // namespace

TEST_CASE("simple functors at a vertex") {
  const GammaCategory cat(kAuslander);
  const FpFunctor z = build_simple0(cat, Z(0, 0));
  REQUIRE(z.generators.size() == 2);
  CHECK(z.generators[0].is_arrow());
  CHECK(z.generators[1].is_arrow());
  const FpFunctor x = build_simple0(cat, X(0, 0));
  CHECK(x.generators[0].is_zero());
  CHECK(x.generators[1] == MorphismKey::arrow(X(0, 0), X(0, 1), 0));
  CHECK_THROWS_AS(build_simple0(cat, Y(0, 0)), InvalidVertex);
}

TEST_CASE("simple1 constructions") {
  const GammaCategory cat(kAuslander);
  const FpFunctor b = build_simple1(cat, {SimpleKind::BPrime, 0, {0, 1}, 0});
  CHECK(b.top == X(0, 1));
  CHECK(b.generators[0] == MorphismKey::arrow(X(0, 1), X(1, 1), 0));
  CHECK(b.generators[1] == MorphismKey::arrow(X(0, 1), Z(0, 0), 1));
  const FpFunctor c = build_simple1(cat, {SimpleKind::CPrime, 0, {0, 0}, 1});
  CHECK(c.generators[1].is_zero());
  CHECK_THROWS_AS(build_simple1(cat, {SimpleKind::CDoublePrime, 0, {0, 0}, 0}), ParameterRange);
  CHECK_NOTHROW(build_simple1(cat, {SimpleKind::CDoublePrime, 0, {0, 0}, -1}));
  CHECK_THROWS_AS(build_simple1(cat, {SimpleKind::CPrime, 0, {0, 0}, 2}), ParameterRange);
  CHECK_THROWS_AS(build_simple1(cat, {SimpleKind::BPrime, 0, {1, 0}, 0}), ParameterRange);
  CHECK_THROWS_AS(build_simple1(cat, {SimpleKind::BPrime, 3, {0, 1}, 0}), ParameterRange);
  CHECK_THROWS_AS(build_simple1(cat, {SimpleKind::B, 0, {0, 1}, 0}), ModeMismatch);
  const GammaCategory inf(GentleTriple::validate(2, 2, 1));
  CHECK_THROWS_AS(build_simple1(inf, {SimpleKind::BPrime, 0, {0, 1}, 0}), ModeMismatch);
  CHECK_NOTHROW(build_simple1(inf, {SimpleKind::B, 1, {0, 1}, 1}));
  CHECK_THROWS_AS(build_simple1(inf, {SimpleKind::B, 1, {0, 1}, 2}), ParameterRange);
}

TEST_CASE("simple0 check") {
  const GammaCategory cat(kAuslander);
  const Window w = Window::square(-4, 4);
  for (const auto& v : {X(0, 1), Z(-2, 3), Y(-1, 3)}) CHECK(check_simple0(cat, v, w));
  const CheckResult outside = check_simple0(cat, X(10, 10), w);
  CHECK(outside.passed);
  CHECK(outside.detail.find("outside") != std::string::npos);
  CHECK_FALSE(Certifier(cat, w, Perturbation::ShiftCoordinate).simple0(X(0, 1)));
}

TEST_CASE("simple1 towers") {
  const GammaCategory cat(kAuslander);
  const Window w = Window::square(-6, 6);
  const Simple1Params b{SimpleKind::BPrime, 0, {0, 1}, 0};
  CHECK(check_simple1_tower(cat, b, 4, w));
  CHECK(check_simple1_tower(cat, b, 0, w));
  CHECK_FALSE(Certifier(cat, w, Perturbation::SkipChainStep).simple1_tower(b, 4));
  for (const auto& p : {Simple1Params{SimpleKind::BDoublePrime, 0, {0, 3}, 1}, Simple1Params{SimpleKind::CPrime, 0, {0, 0}, -2},
                        Simple1Params{SimpleKind::CDoublePrime, 0, {1, 0}, -3}}) {
    CHECK(check_simple1_tower(cat, p, 3, w));
  }
}

TEST_CASE("finite1") {
  const GammaCategory cat(kAuslander);
  const Window w = Window::square(-8, 8);
  CHECK(check_finite1(cat, X(0, 3), w));
  CHECK(check_finite1(cat, Y(0, 5), w));
  CHECK_THROWS_AS(check_finite1(cat, Z(0, 0), w), WrongFamily);
  const GammaCategory other(GentleTriple::validate(2, 3, 1));
  CHECK(check_finite1(other, X(2, 1, 0), w));
  CHECK(check_finite1(other, Y(-2, 4, 1), w));
}

TEST_CASE("nonsimple1") {
  const GammaCategory cat(kAuslander);
  const Window w = Window::square(-6, 6);
  CHECK(check_nonsimple1(cat, Z(0, 0), 5, w));
  CHECK(check_nonsimple1(cat, Z(0, 0), 1, w));
  CHECK_FALSE(Certifier(cat, w, Perturbation::SubstituteSimple).nonsimple1(Z(0, 0), 2));
  CHECK_THROWS_AS(check_nonsimple1(cat, X(0, 0), 2, w), WrongFamily);
  const GammaCategory inf(GentleTriple::validate(1, 1, 0));
  CHECK_THROWS_AS(check_nonsimple1(inf, X(0, 0), 2, w), ModeMismatch);
}

TEST_CASE("c2 simple") {
  const GammaCategory cat(kAuslander);
  CHECK(check_c2_simple(cat, Z(0, 0), Window::square(-5, 5)));
  const GammaCategory other(GentleTriple::validate(2, 3, 1));
  CHECK(check_c2_simple(other, Z(1, -1, 1), Window::square(-5, 5)));
}

TEST_CASE("infinite mode") {
  const Window w = Window::square(-6, 6);
  CHECK(check_infinite_mode(GammaCategory(GentleTriple::validate(1, 1, 0)), w, 4));
  CHECK(check_infinite_mode(GammaCategory(GentleTriple::validate(2, 2, 1)), w, 4));
  CHECK_THROWS_AS(check_infinite_mode(GammaCategory(kAuslander), w, 4), ModeMismatch);
}

TEST_CASE("every check rejects a perturbation") {
  const Window w = Window::square(-6, 6);
  for (const auto& t : {kAuslander, GentleTriple::validate(2, 3, 1)}) {
    const GammaCategory cat(t);
    for (Perturbation p : {Perturbation::SkipChainStep, Perturbation::ShiftCoordinate, Perturbation::SubstituteSimple}) {
      Certifier c(cat, w, p);
      CAPTURE(static_cast<int>(p));
      CHECK_FALSE(c.simple1_tower({SimpleKind::BPrime, 0, {0, 1}, 0}, 4));
      CHECK_FALSE(c.simple1_tower({SimpleKind::CDoublePrime, 0, {0, 0}, -3}, 4));
      CHECK_FALSE(c.finite1(X(0, 1)));
      CHECK_FALSE(c.nonsimple1(Z(0, 0), 4));
      CHECK_FALSE(c.c2_simple(Z(0, 0)));
    }
  }
  const GammaCategory inf(GentleTriple::validate(2, 2, 1));
  for (Perturbation p : {Perturbation::SkipChainStep, Perturbation::ShiftCoordinate, Perturbation::SubstituteSimple})
    CHECK_FALSE(Certifier(inf, w, p).infinite_mode(4));
}

TEST_CASE("certify") {
  const Window w = Window::square(-6, 6);
  const Certificate a = certify(kAuslander, w, 4);
  CHECK(a.verdict);
  CHECK(a.kg == 2);
  const Certificate b = certify(GentleTriple::validate(1, 1, 0), w, 4);
  CHECK(b.verdict);
  CHECK(b.kg == 1);
  const Certificate c = certify(GentleTriple::validate(2, 3, 1), w, 4);
  CHECK(c.verdict);
  CHECK(c.kg == 2);
  CHECK(certificate_to_json(a).dump() == certificate_to_json(certify(kAuslander, w, 4)).dump());
  for (const auto& l : a.layers) CHECK(l.layer == (l.vertex.family == Family::Z ? 2 : 1));
  CHECK_THROWS_AS(certify(kAuslander, w, -1), ParameterRange);
}

TEST_CASE("tower evidence is invariant under the diagonal shift") {
  const GammaCategory cat(kAuslander);
  const Window w = Window::square(-6, 6);
  const Coord k = 5;
  const Window shifted = Window::square(-6 + k, 6 + k);
  for (const auto& p : {Simple1Params{SimpleKind::BPrime, 0, {0, 1}, 0}, Simple1Params{SimpleKind::BDoublePrime, 0, {0, 3}, 1},
                        Simple1Params{SimpleKind::CPrime, 0, {0, 0}, -2}, Simple1Params{SimpleKind::CDoublePrime, 0, {1, 0}, -3}}) {
    const Simple1Params q{p.kind, p.orbit, {p.corner.x + k, p.corner.y + k}, p.aux + k};
    const CheckResult here = check_simple1_tower(cat, p, 3, w);
    const CheckResult there = check_simple1_tower(cat, q, 3, shifted);
    CHECK(here.passed);
    CHECK(there.passed);
    CHECK(here.points == there.points);
  }
}

TEST_CASE("certificate verdicts are invariant under the diagonal shift") {
  for (const auto& t : {kAuslander, GentleTriple::validate(1, 3, 2), GentleTriple::validate(2, 2, 1)}) {
    const Certificate a = certify(t, Window::square(-4, 4), 4);
    const Certificate b = certify(t, Window::square(2, 10), 4);
    CHECK(a.kg == b.kg);
    CHECK(a.verdict == b.verdict);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t n = 0; n < a.checks.size(); ++n) {
      CHECK(a.checks[n].instance.lemma == b.checks[n].instance.lemma);
      CHECK(a.checks[n].pass == b.checks[n].pass);
    }
  }
}
