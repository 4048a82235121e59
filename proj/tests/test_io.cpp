#include <doctest.h>

#include <random>

#include "ddkg/dot.hpp"
#include "ddkg/json_io.hpp"
#include "ddkg/syntax.hpp"
#include "oracle.hpp"

using namespace ddkg;

TEST_CASE("region JSON") {
  const Region r = Region{}.x_in(0, {}).diff_in({}, 3);
  const Json j = region_to_json(r);
  CHECK(j.dump() == R"j({"x":[0,"inf"],"y":["-inf","inf"],"diff":["-inf",3]})j");
  CHECK(region_from_json(j) == r);
  CHECK(region_from_json(Json::parse(R"j({"y":[1,2]})j")) == Region{}.y_in(1, 2));
  CHECK_THROWS_AS(region_from_json(Json::parse(R"j({"x":[0]})j")), SchemaError);
  CHECK_THROWS_AS(region_from_json(Json::parse(R"j({"x":["inf",0]})j")), SchemaError);
  CHECK_THROWS_AS(region_from_json(Json::parse(R"j({"z":[0,1]})j")), SchemaError);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const Region q = oracle::random_region(rng, 9);
    CHECK(region_from_json(Json::parse(region_to_json(q).dump())) == q);
  }
}

TEST_CASE("functor JSON") {
  const Json j = Json::parse(R"j({"top":"X:0:(0,1)","generators":["X:0:(0,1)->X:0:(0,2)@0","zero"]})j");
  const FpFunctor f = functor_from_json(j);
  CHECK(f.top == VertexId{Family::X, 0, {0, 1}});
  REQUIRE(f.generators.size() == 2);
  CHECK(f.generators[1].is_zero());
  CHECK(functor_to_json(f).dump() == j.dump());
  CHECK_THROWS_AS(functor_from_json(Json::parse(R"j({"generators":[]})j")), SchemaError);
  CHECK_THROWS_AS(functor_from_json(Json::parse(R"j({"top":"X:0:(0,1)","generators":[1]})j")), SchemaError);
  CHECK_THROWS_AS(functor_from_json(Json::parse(R"j({"top":"Q"})j")), SyntaxError);
}

TEST_CASE("outputs re-serialize identically") {
  const auto t = GentleTriple::validate(2, 3, 1);
  const GammaCategory cat(t);
  const VertexId v{Family::Z, 1, {0, 0}};
  for (const Json& j : {model_to_json(t, build_bound_quiver(t)), fan_to_json(cat.arrow_fan(v)),
                        support_to_json(support_region(cat, FpFunctor::representable(v))),
                        certificate_to_json(certify(t, Window::square(-3, 3), 1))}) {
    const std::string text = j.dump(2);
    CHECK(Json::parse(text).dump(2) == text);
  }
  const Json model = model_to_json(t, build_bound_quiver(t));
  CHECK(model["mode"] == "finite");
  CHECK(model["relations"].size() == 2);
}

TEST_CASE("DOT export") {
  const auto t = GentleTriple::validate(1, 2, 0);
  const std::string dot = export_dot(t, Region::box(0, 2, 0, 2));
  auto count = [&](const std::string& needle) {
    std::size_t c = 0;
    for (auto p = dot.find(needle); p != std::string::npos; p = dot.find(needle, p + 1)) ++c;
    return c;
  };
  CHECK(count("label=\"X:") == 6);
  CHECK(count("label=\"Z:") == 9);
  CHECK(count("label=\"Y:") == 1);
  CHECK(count("label=\"Y:0:(0,2)\"") == 1);

  // edge count equals the number of AR-sink targets staying in the window
  const GammaCategory cat(t);
  std::size_t edges = 0;
  const Region box = Region::box(0, 2, 0, 2);
  for (const auto& v : cat.vertices_in(box)) {
    const auto [a, b] = cat.ar_sink_maps(v);
    for (const auto& f : {a, b}) edges += (!f.is_zero() && box.contains(f.target().coord)) ? 1 : 0;
  }
  CHECK(count(" -> ") == edges);
  CHECK(export_dot(t, Region::box(3, 2, 0, 2)) == "digraph ar {\n}\n");
  CHECK_THROWS_AS(export_dot(t, Region{}.x_in(0, 1)), InfiniteWindow);
}
