#pragma once

// JSON encodings used by the command line tool and the test fixtures.
//
//   endpoint   {"kind":"grid","i":0} | {"kind":"gap","g":0,"t":"1/2"}
//              | {"kind":"ninf"} | {"kind":"pinf"}
//   interval   {"lo":<endpoint>,"lo_closed":true,"hi":<endpoint>,"hi_closed":false}
//   rep        {"quiver":{"shape":"linear","lo":0,"hi":3} | {"shape":"cyclic","m":3},
//               "dims":[...],"mats":{"a1":[[...]],...},"p":2}
//   orbit set  {"m":2,"orbits":[{"kind":"lray","d":0},{"kind":"rray","c":0},
//                               {"kind":"fin","a":0,"len":1}]}
//   alpha rep  {"n":1,"grid":["0"],
//               "orbits":[{"lo":"ninf","hi":1,"hi_closed":false}],
//               "families":[{"gap":0,"dir":"right","far":1,"far_closed":false}]}
//
// In alpha reps an orbit end is a grid index or "ninf"/"pinf"; a family's
// far end may also be a full endpoint object.  Every reader throws
// ParseError on bad input.

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cquiver/alpha.hpp"
#include "cquiver/equivariant.hpp"
#include "cquiver/ext.hpp"
#include "cquiver/interval.hpp"

namespace cquiver {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Endpoint& e);
Json to_json(const Interval& iv);
Json to_json(const RepSpec& r);
Json to_json(const OrbitInterval& o);
Json to_json(const OrbitSet& s);
Json to_json(const AlphaRep& r);

Endpoint endpoint_from_json(const Json& j);
Interval interval_from_json(const Json& j);
RepSpec rep_from_json(const Json& j);
OrbitSet orbit_set_from_json(const Json& j);
AlphaRep alpha_rep_from_json(const Json& j);

/// Parses text, wrapping syntax errors in ParseError.
Json parse_json(const std::string& text);
/// Reads and parses a file.
Json read_json_file(const std::string& path);

/// One line per orbit set / alpha rep, tab separated.
std::string to_tsv(const std::vector<OrbitSet>& sets);
std::string to_tsv(const std::vector<AlphaRep>& reps);

}  // namespace cquiver
