#pragma once

#include <stdexcept>

#include <json.hpp>

#include "ddkg/algebra.hpp"
#include "ddkg/certifier.hpp"
#include "ddkg/functor.hpp"
#include "ddkg/region.hpp"

namespace ddkg {

class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::ordered_json;

// {"x":[lo,hi],"y":[lo,hi],"diff":[lo,hi]}, missing bounds written "-inf"/"inf".
Json region_to_json(const Region& r);
Region region_from_json(const Json& j);

// {"top":"X:0:(0,1)","generators":["X:0:(0,1)->X:0:(0,2)@0","zero"]}
Json functor_to_json(const FpFunctor& f);
FpFunctor functor_from_json(const Json& j);

Json fan_to_json(const ArrowFan& fan);
Json support_to_json(const Support& s);
Json model_to_json(const GentleTriple& t, const BoundQuiver& q);
Json certificate_to_json(const Certificate& c);

}  // namespace ddkg
