#ifndef DELTARIG_JSON_IO_HPP
#define DELTARIG_JSON_IO_HPP

#include "deltarig/deltamatroid.hpp"
#include "deltarig/ribbon.hpp"

#include <string>

namespace deltarig {

/// {"ground": ["1","2"], "feasible": [[], ["1","2"]]}
/// Throws std::invalid_argument with position info on malformed input and on
/// families violating the exchange axiom.
DeltaMatroid dm_from_json(const std::string& text);
std::string dm_to_json(const DeltaMatroid& d);

/// {"vertices": [[1,3,2,4]], "edges": [{"darts": [1,2], "sign": 1, "label": "e1"}]}
RibbonGraph rg_from_json(const std::string& text);
std::string rg_to_json(const RibbonGraph& g);

}  // namespace deltarig

#endif
