#pragma once

#include <string>

#include "ddkg/gamma.hpp"

namespace ddkg {

// DOT digraph of the valid vertices in a finite window, with the two
// degree-0 AR-sink arrows of each vertex whose target stays in the window.
std::string export_dot(const GentleTriple& t, const Region& window);

}  // namespace ddkg
