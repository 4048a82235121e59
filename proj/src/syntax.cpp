#include "ddkg/syntax.hpp"

#include <regex>

namespace ddkg {
namespace {

const std::string kVertexPattern = R"(([XYZ]):(\d+):\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))";

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

long long to_integer(const std::string& digits, std::string_view context) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(digits, &used);
    if (used != digits.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw SyntaxError("integer out of range in '" + std::string(context) + "'");
  }
}

VertexId vertex_from(const std::smatch& m, std::size_t at, std::string_view context) {
  VertexId v;
  switch (m[at].str()[0]) {
    case 'X': v.family = Family::X; break;
    case 'Y': v.family = Family::Y; break;
    default: v.family = Family::Z; break;
  }
  const long long orbit = to_integer(m[at + 1].str(), context);
  if (orbit > 1'000'000) throw SyntaxError("orbit index too large in '" + std::string(context) + "'");
  v.orbit = static_cast<int>(orbit);
  v.coord = {to_integer(m[at + 2].str(), context), to_integer(m[at + 3].str(), context)};
  return v;
}

}  // namespace

std::string format_vertex(const VertexId& v) {
  return std::string(1, family_letter(v.family)) + ":" + std::to_string(v.orbit) + ":(" +
         std::to_string(v.coord.x) + "," + std::to_string(v.coord.y) + ")";
}

std::string format_morphism(const MorphismKey& f) {
  switch (f.kind()) {
    case MorphismKey::Kind::Zero: return "zero";
    case MorphismKey::Kind::Identity: return "id@" + format_vertex(f.source());
    case MorphismKey::Kind::Arrow:
      return format_vertex(f.source()) + "->" + format_vertex(f.target()) + "@" + std::to_string(f.degree());
  }
  return "zero";
}

VertexId parse_vertex(std::string_view text) {
  static const std::regex re("^" + kVertexPattern + "$");
  const std::string s = trim(text);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw SyntaxError("malformed vertex '" + s + "', expected e.g. X:0:(0,1)");
  return vertex_from(m, 1, s);
}

MorphismKey parse_morphism(std::string_view text) {
  static const std::regex arrow("^" + kVertexPattern + R"(\s*->\s*)" + kVertexPattern + R"(@(\d+)$)");
  static const std::regex identity("^id@" + kVertexPattern + "$");
  const std::string s = trim(text);
  if (s == "zero") return MorphismKey::zero();
  std::smatch m;
  if (std::regex_match(s, m, identity)) return MorphismKey::identity(vertex_from(m, 1, s));
  if (std::regex_match(s, m, arrow)) {
    const long long degree = to_integer(m[9].str(), s);
    if (degree > 2) throw SyntaxError("degree out of range in '" + s + "'");
    return MorphismKey::arrow(vertex_from(m, 1, s), vertex_from(m, 5, s), static_cast<int>(degree));
  }
  throw SyntaxError("malformed morphism '" + s + "', expected SRC->DST@DEG, id@V or zero");
}

}  // namespace ddkg
