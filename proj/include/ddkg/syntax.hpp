#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ddkg/gamma.hpp"

namespace ddkg {

class SyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Vertices:  X:0:(0,1)
// Morphisms: X:0:(0,1)->Z:0:(0,5)@1,  id@X:0:(0,1),  zero
std::string format_vertex(const VertexId& v);
std::string format_morphism(const MorphismKey& f);
VertexId parse_vertex(std::string_view text);
MorphismKey parse_morphism(std::string_view text);

}  // namespace ddkg
