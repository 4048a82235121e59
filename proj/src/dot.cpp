#include "ddkg/dot.hpp"

#include <map>
#include <sstream>

#include "ddkg/syntax.hpp"

namespace ddkg {

std::string export_dot(const GentleTriple& t, const Region& window) {
  if (!is_finite(window)) throw InfiniteWindow("ar-export needs a finite window");
  const GammaCategory cat(t);
  const auto vertices = cat.vertices_in(window);
  std::map<VertexId, std::size_t> id;
  std::ostringstream os;
  os << "digraph ar {\n";
  for (const auto& v : vertices) {
    id.emplace(v, id.size());
    os << "  n" << id[v] << " [label=\"" << format_vertex(v) << "\"];\n";
  }
  for (const auto& v : vertices) {
    const auto [right, up] = cat.ar_sink_maps(v);
    for (const auto& f : {right, up}) {
      if (f.is_zero()) continue;
      const auto it = id.find(f.target());
      if (it != id.end()) os << "  n" << id[v] << " -> n" << it->second << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace ddkg
