#pragma once

#include "qhall/gentle.hpp"
#include "qhall/graded.hpp"
#include "qhall/hall.hpp"

#include "json.hpp"

#include <string>

namespace qhall {

using Json = nlohmann::ordered_json;

// Object syntax: `X(k,i,j)`, `Z(k,i)`, summands joined by `+`, zero object
// `0`.  Whitespace is insignificant.  Throws std::runtime_error on malformed
// text (invalid levels and empty intervals propagate from the constructors).
Obj parseObj(const Params& p, const std::string& text);

// Word syntax: `x(k,i)` and `z(k)` separated by whitespace; the empty string
// is the empty word.
Word parseWord(const Params& p, const std::string& text);

// Scalars serialize as exact strings; machine integers and flags stay native.
Json toJson(const HallElement& e);
Json toJson(const FreeElement& e);
Json toJson(const GradedReport& r);
Json toJson(const GentleReport& r);
Json toJson(const CanonicalParams& c);

std::string toTsv(const HallElement& e);
std::string toTsv(const FreeElement& e);
std::string toTsv(const GradedReport& r);
std::string toTsv(const GentleReport& r);
std::string toTsv(const CanonicalParams& c);

}  // namespace qhall
