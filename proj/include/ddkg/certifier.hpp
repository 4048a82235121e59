#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "ddkg/functor.hpp"
#include "ddkg/gamma.hpp"

namespace ddkg {

class ParameterRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WrongFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ModeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Quotients of representables that are simple modulo finite-length functors.
//   BPrime        H_X(a,b) / (f to X(a+1,b), g' to Z(a,aux))
//   BDoublePrime  H_Y(a,b) / (f to Y(a+1,b), g'' to Z(aux,a))
//   CPrime        H_Z(a,b) / (f to Z(a+1,b), h' to X(aux,a))      aux <= a + d m + 1
//   CDoublePrime  H_Z(a,b) / (f to Z(a,b+1), h'' to Y(aux,b))     aux <= b - d n + 1
//   B             H_X(a,b) / (f to X(a+1,b), e to X(aux,a))       aux <= a + d m  (r = n only)
// where d is 1 on the last orbit and 0 elsewhere.
enum class SimpleKind { BPrime, BDoublePrime, CPrime, CDoublePrime, B };

const char* to_string(SimpleKind kind);

struct Simple1Params {
  SimpleKind kind;
  int orbit;
  Point corner;  // (a, b)
  Coord aux;     // b' or a'

  friend auto operator<=>(const Simple1Params&, const Simple1Params&) = default;
};

FpFunctor build_simple0(const GammaCategory& cat, const VertexId& v);
FpFunctor build_simple1(const GammaCategory& cat, const Simple1Params& p);
VertexId simple1_top(const GammaCategory& cat, const Simple1Params& p);

// Deliberate corruptions of the replayed constructions. Every check must
// reject at least one of them; they exist only for negative controls.
enum class Perturbation {
  None,
  SkipChainStep,     // chains advance by two instead of one
  ShiftCoordinate,   // presented objects use a neighbouring parameter
  SubstituteSimple,  // presented objects are replaced by the simple A at their top
};

// Replays the exact sequences and case analyses behind each layer of the
// Krull-Gabriel filtration, pointwise on a window and symbolically where the
// statement is about finiteness of supports. Results of the nested checks
// (simple1 towers, finite1) are memoised per instance.
class Certifier {
 public:
  static constexpr int kNestedChainLength = 4;

  Certifier(const GammaCategory& cat, const Window& window, Perturbation perturbation = Perturbation::None);

  CheckResult simple0(const VertexId& v);
  // Tower sequences, case analysis of the quotient, and infinitude of its
  // support; memoised.
  CheckResult simple1_tower(const Simple1Params& p, int chain_length);
  // The tower sequences 0 -> F_{k+1} -> F_k -> A -> 0 for k = 0..chain_length.
  CheckResult simple1_sequences(const Simple1Params& p, int chain_length);
  // Every basis morphism out of the top, classified as killed, equal to the
  // whole quotient mod finite length, or of finite length.
  CheckResult simple1_cases(const Simple1Params& p);
  CheckResult finite1(const VertexId& v);
  CheckResult nonsimple1(const VertexId& v, int depth);
  CheckResult c2_simple(const VertexId& v);
  CheckResult infinite_mode(int depth);

  const Window& window() const { return window_; }

 private:
  FpFunctor presented(const FpFunctor& f) const;

  const GammaCategory& cat_;
  Window window_;
  Perturbation perturbation_;
  std::map<std::pair<Simple1Params, int>, CheckResult> tower_cache_;
  std::map<VertexId, CheckResult> finite1_cache_;
};

CheckResult check_simple0(const GammaCategory& cat, const VertexId& v, const Window& window);
CheckResult check_simple1_tower(const GammaCategory& cat, const Simple1Params& p, int chain_length,
                                const Window& window);
CheckResult check_finite1(const GammaCategory& cat, const VertexId& v, const Window& window);
CheckResult check_nonsimple1(const GammaCategory& cat, const VertexId& v, int depth, const Window& window);
CheckResult check_c2_simple(const GammaCategory& cat, const VertexId& v, const Window& window);
CheckResult check_infinite_mode(const GammaCategory& cat, const Window& window, int depth);

enum class LemmaId { Simple0, Simple1, Finite1, Nonsimple1, C2Simple, InfSimple0, InfSimple1, InfFinite1, NotC0 };

const char* to_string(LemmaId id);

struct LemmaInstance {
  LemmaId lemma;
  std::optional<VertexId> vertex;
  std::optional<Simple1Params> simple1;
  int chain = 0;
};

struct CheckRecord {
  LemmaInstance instance;
  std::string kind;  // what was checked: "pointwise", "pointwise+symbolic", "symbolic"
  bool pass = false;
  std::string detail;
  std::uint64_t points = 0;
};

// Layer of the filtration C_0 <= C_1 <= C_2 at which H_U has finite length.
struct LayerRecord {
  VertexId vertex;
  int layer;
};

struct Certificate {
  GentleTriple triple;
  int kg = 0;
  Region window;
  int depth = 0;
  std::vector<CheckRecord> checks;
  std::vector<LayerRecord> layers;
  bool verdict = false;
};

inline constexpr Coord kDefaultWindowRadius = 8;
inline constexpr int kDefaultDepth = 8;

Certificate certify(const GentleTriple& t, const Window& window, int depth);

}  // namespace ddkg
