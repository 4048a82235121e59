#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ddkg/algebra.hpp"
#include "ddkg/certifier.hpp"
#include "ddkg/dot.hpp"
#include "ddkg/functor.hpp"
#include "ddkg/gamma.hpp"
#include "ddkg/json_io.hpp"
#include "ddkg/syntax.hpp"

namespace {

using namespace ddkg;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  long long r = 0, n = 0, m = 0;
  std::string from, to, f, g, vertex, at, functor, json, dot;
  std::vector<long long> window;
  int depth = kDefaultDepth;
};

void add_triple(CLI::App* cmd, Options& o) {
  cmd->add_option("--r", o.r, "number of relations")->required();
  cmd->add_option("--n", o.n, "arrows on the cycle")->required();
  cmd->add_option("--m", o.m, "arrows on the tail")->required();
}

Region window_of(const Options& o, Coord radius) {
  if (o.window.empty()) return Region::box(-radius, radius, -radius, radius);
  return Region::box(o.window[0], o.window[1], o.window[2], o.window[3]);
}

FpFunctor read_functor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read functor file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("functor file '" + path + "' is not JSON: " + e.what());
  }
  return functor_from_json(j);
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

int run(const std::string& name, const Options& o) {
  const GentleTriple t = GentleTriple::validate(o.r, o.n, o.m);
  const GammaCategory cat(t);

  if (name == "model") {
    print(model_to_json(t, build_bound_quiver(t)));
    return kOk;
  }
  if (name == "hom") {
    const VertexId u = parse_vertex(o.from), v = parse_vertex(o.to);
    Json j{{"from", format_vertex(u)}, {"to", format_vertex(v)}, {"basis", Json::array()}};
    for (const auto& b : cat.hom_basis(u, v)) j["basis"].push_back(format_morphism(b));
    print(j);
    return kOk;
  }
  if (name == "compose") {
    const MorphismKey f = parse_morphism(o.f), g = parse_morphism(o.g);
    print(Json{{"f", format_morphism(f)}, {"g", format_morphism(g)}, {"g.f", format_morphism(cat.compose(g, f))}});
    return kOk;
  }
  if (name == "fan") {
    print(fan_to_json(cat.arrow_fan(parse_vertex(o.vertex))));
    return kOk;
  }
  if (name == "ar") {
    const VertexId v = parse_vertex(o.vertex);
    const FpFunctor a = build_simple0(cat, v);
    print(Json{{"vertex", format_vertex(v)},
               {"sink_maps", Json::array({format_morphism(a.generators[0]), format_morphism(a.generators[1])})},
               {"simple", functor_to_json(a)}});
    return kOk;
  }
  if (name == "ar-export") {
    const std::string dot = export_dot(t, window_of(o, 4));
    if (!o.dot.empty()) {
      write_text(o.dot, dot);
    } else {
      std::cout << dot;
    }
    return kOk;
  }
  if (name == "eval") {
    const FpFunctor f = read_functor(o.functor);
    const std::string at_text = !o.at.empty() ? o.at : o.vertex;
    if (at_text.empty()) throw UsageError("eval needs --at");
    const VertexId v = parse_vertex(at_text);
    validate(cat, f.denominators());
    const DegreeMask killed = sub_mask(cat, f.denominators(), v);
    Json basis = Json::array();
    for (const auto& b : cat.hom_basis(f.top, v)) {
      if (!((killed >> b.degree()) & 1u)) basis.push_back(format_morphism(b));
    }
    print(Json{{"at", format_vertex(v)}, {"dimension", eval_fp(cat, f, v)}, {"basis", basis}});
    return kOk;
  }
  if (name == "support") {
    print(support_to_json(support_region(cat, read_functor(o.functor))));
    return kOk;
  }
  if (name == "inC0") {
    const FpFunctor f = read_functor(o.functor);
    print(Json{{"functor", functor_to_json(f)}, {"in_c0", is_in_c0(cat, f)}});
    return kOk;
  }
  if (name == "certify") {
    if (o.depth < 0) throw UsageError("--depth must be non-negative");
    const Certificate c = certify(t, Window(window_of(o, kDefaultWindowRadius)), o.depth);
    const Json j = certificate_to_json(c);
    if (!o.json.empty()) {
      write_text(o.json, j.dump(2) + "\n");
      std::size_t failed = 0;
      for (const auto& rec : c.checks) failed += rec.pass ? 0 : 1;
      std::cout << "kg=" << c.kg << " verdict=" << (c.verdict ? "pass" : "fail") << " checks=" << c.checks.size()
                << " failed=" << failed << "\n";
    } else {
      print(j);
    }
    return c.verdict ? kOk : kCheckFailed;
  }
  throw UsageError("unknown subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for perfect complexes over the derived-discrete algebras Lambda(r,n,m)"};
  app.require_subcommand(1, 1);
  Options o;

  auto* model = app.add_subcommand("model", "bound quiver and mode as JSON");
  auto* hom = app.add_subcommand("hom", "basis of Hom(from, to)");
  auto* compose = app.add_subcommand("compose", "composite g.f of two basis morphisms");
  auto* fan = app.add_subcommand("fan", "arrow fan of a vertex as region JSON");
  auto* ar = app.add_subcommand("ar", "AR-sink maps and simple functor at a vertex");
  auto* ar_export = app.add_subcommand("ar-export", "DOT digraph of the AR mesh in a window");
  auto* eval = app.add_subcommand("eval", "value of a finitely presented functor at a vertex");
  auto* support = app.add_subcommand("support", "symbolic support of a finitely presented functor");
  auto* in_c0 = app.add_subcommand("inC0", "whether a finitely presented functor has finite length");
  auto* cert = app.add_subcommand("certify", "replay the layer checks and report the Krull-Gabriel dimension");

  for (auto* cmd : {model, hom, compose, fan, ar, ar_export, eval, support, in_c0, cert}) add_triple(cmd, o);
  hom->add_option("--from", o.from, "source vertex, e.g. X:0:(0,1)")->required();
  hom->add_option("--to", o.to, "target vertex")->required();
  compose->add_option("--f", o.f, "first morphism")->required();
  compose->add_option("--g", o.g, "second morphism")->required();
  fan->add_option("--vertex", o.vertex, "source vertex")->required();
  ar->add_option("--vertex", o.vertex, "vertex")->required();
  for (auto* cmd : {eval, support, in_c0}) cmd->add_option("--functor", o.functor, "functor JSON file")->required();
  eval->add_option("--at", o.at, "vertex");
  eval->add_option("--vertex", o.vertex, "vertex (same as --at)");
  for (auto* cmd : {ar_export, cert}) {
    cmd->add_option("--window", o.window, "x range A..B and y range C..D")->expected(4);
  }
  ar_export->add_option("--dot", o.dot, "write DOT to this file instead of stdout")->expected(0, 1);
  cert->add_option("--depth", o.depth, "chain depth for the nonsimple layers");
  cert->add_option("--json", o.json, "write the certificate to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    return run(chosen->get_name(), o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
