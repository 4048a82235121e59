#include "ddkg/json_io.hpp"

#include "ddkg/syntax.hpp"

namespace ddkg {
namespace {

Json bound_to_json(const Bound& b, const char* infinity) {
  if (b) return *b;
  return infinity;
}

Bound bound_from_json(const Json& j, const char* infinity) {
  if (j.is_number_integer()) return j.get<Coord>();
  if (j.is_string() && j.get<std::string>() == infinity) return std::nullopt;
  throw SchemaError("bound must be an integer or \"" + std::string(infinity) + "\"");
}

Json pair_to_json(const Bound& lo, const Bound& hi) {
  return Json::array({bound_to_json(lo, "-inf"), bound_to_json(hi, "inf")});
}

std::pair<Bound, Bound> pair_from_json(const Json& j, const char* key) {
  if (!j.contains(key)) return {std::nullopt, std::nullopt};
  const Json& p = j.at(key);
  if (!p.is_array() || p.size() != 2) throw SchemaError(std::string("\"") + key + "\" must be a [lo, hi] pair");
  return {bound_from_json(p[0], "-inf"), bound_from_json(p[1], "inf")};
}

std::string family_name(Family f) { return std::string(1, family_letter(f)); }

Json params_to_json(const LemmaInstance& inst) {
  Json j = Json::object();
  if (inst.vertex) j["vertex"] = format_vertex(*inst.vertex);
  if (inst.simple1) {
    j["kind"] = to_string(inst.simple1->kind);
    j["orbit"] = inst.simple1->orbit;
    j["corner"] = Json::array({inst.simple1->corner.x, inst.simple1->corner.y});
    j["aux"] = inst.simple1->aux;
  }
  if (inst.chain > 0) j["chain"] = inst.chain;
  return j;
}

}  // namespace

Json region_to_json(const Region& r) {
  Json j;
  j["x"] = pair_to_json(r.lower_x, r.upper_x);
  j["y"] = pair_to_json(r.lower_y, r.upper_y);
  j["diff"] = pair_to_json(r.lower_diff, r.upper_diff);
  return j;
}

Region region_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("region must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "x" && key != "y" && key != "diff") throw SchemaError("unknown region key \"" + key + "\"");
  }
  Region r;
  std::tie(r.lower_x, r.upper_x) = pair_from_json(j, "x");
  std::tie(r.lower_y, r.upper_y) = pair_from_json(j, "y");
  std::tie(r.lower_diff, r.upper_diff) = pair_from_json(j, "diff");
  return r;
}

Json functor_to_json(const FpFunctor& f) {
  Json j;
  j["top"] = format_vertex(f.top);
  j["generators"] = Json::array();
  for (const auto& g : f.generators) j["generators"].push_back(format_morphism(g));
  return j;
}

FpFunctor functor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("top") || !j.at("top").is_string())
    throw SchemaError("functor needs a string \"top\"");
  FpFunctor f{parse_vertex(j.at("top").get<std::string>()), {}};
  if (j.contains("generators")) {
    if (!j.at("generators").is_array()) throw SchemaError("\"generators\" must be an array");
    for (const auto& g : j.at("generators")) {
      if (!g.is_string()) throw SchemaError("generators must be morphism strings");
      f.generators.push_back(parse_morphism(g.get<std::string>()));
    }
  }
  return f;
}

Json fan_to_json(const ArrowFan& fan) {
  Json j;
  j["source"] = format_vertex(fan.source);
  j["entries"] = Json::array();
  for (const auto& e : fan.entries) {
    Json entry;
    entry["family"] = family_name(e.target_family);
    entry["orbit"] = e.target_orbit;
    entry["degree"] = e.degree;
    entry["region"] = region_to_json(e.region);
    entry["excludes_source"] = e.excludes_source;
    j["entries"].push_back(entry);
  }
  return j;
}

Json support_to_json(const Support& s) {
  Json j;
  j["finite"] = s.is_finite();
  j["channels"] = Json::array();
  for (const auto& c : s.channels) {
    if (c.regions.empty()) continue;
    Json ch;
    ch["family"] = family_name(c.family);
    ch["orbit"] = c.orbit;
    ch["degree"] = c.degree;
    ch["regions"] = Json::array();
    for (const auto& r : c.regions.regions) ch["regions"].push_back(region_to_json(r));
    j["channels"].push_back(ch);
  }
  return j;
}

Json model_to_json(const GentleTriple& t, const BoundQuiver& q) {
  Json j;
  j["r"] = t.r();
  j["n"] = t.n();
  j["m"] = t.m();
  j["mode"] = to_string(t.mode());
  j["vertices"] = q.vertices;
  j["arrows"] = Json::array();
  for (const auto& a : q.arrows) {
    j["arrows"].push_back(Json{{"name", a.name()}, {"source", a.source}, {"target", a.target}});
  }
  j["relations"] = Json::array();
  for (const auto& rel : q.relations) {
    j["relations"].push_back(Json{{"first", q.arrow(rel.first).name()}, {"then", q.arrow(rel.second).name()}});
  }
  return j;
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["triple"] = Json{{"r", c.triple.r()}, {"n", c.triple.n()}, {"m", c.triple.m()}};
  j["kg"] = c.kg;
  j["window"] = Json::array({*c.window.lower_x, *c.window.upper_x, *c.window.lower_y, *c.window.upper_y});
  j["depth"] = c.depth;
  j["checks"] = Json::array();
  for (const auto& rec : c.checks) {
    Json r;
    r["lemma"] = to_string(rec.instance.lemma);
    r["params"] = params_to_json(rec.instance);
    r["kind"] = rec.kind;
    r["pass"] = rec.pass;
    r["detail"] = rec.detail;
    r["points"] = rec.points;
    j["checks"].push_back(r);
  }
  j["layers"] = Json::array();
  for (const auto& l : c.layers) j["layers"].push_back(Json{{"vertex", format_vertex(l.vertex)}, {"layer", l.layer}});
  j["verdict"] = c.verdict ? "pass" : "fail";
  return j;
}

}  // namespace ddkg
