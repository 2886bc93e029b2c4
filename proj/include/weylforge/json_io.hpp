#ifndef WEYLFORGE_JSON_IO_HPP
#define WEYLFORGE_JSON_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "weylforge/interlace.hpp"
#include "weylforge/linalg.hpp"
#include "weylforge/realize.hpp"
#include "weylforge/verify.hpp"

//
// JSON forms:
//
//   polynomial   {"roots": [r1, r2, ...]}            (any order on input)
//   matrix       {"n": n, "rows": [[...], ...]}      (row-major)
//   realization  {"f", "g", "p", "q", "A", "B", "plus": [[...]], "minus": [[...]]}
//   bordered     {"f", "g", "M"}
//   report       {"holds", "minimal_p", "minimal_q", "violations": [{"i", "side", "slack"}]}
//   verify       {"passed", "checks": [{"name", "passed", "residual", "threshold"}]}
//
// Infinite residuals and slacks are written as null. Doubles are written in
// shortest round-trip form.
//
namespace weylforge {

using json = nlohmann::json;

json to_json_value(const RootedPoly& f);
json to_json_value(const SymMatrix& m);
json to_json_value(const Realization& r);
json to_json_value(const BorderedRealization& r);
json to_json_value(const InterlaceReport& r);
json to_json_value(const VerifyReport& r);

// All parsers throw ValidationError on a malformed document.
RootedPoly poly_from_json(const json& j);
SymMatrix matrix_from_json(const json& j);
Realization realization_from_json(const json& j);
BorderedRealization bordered_from_json(const json& j);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

} // namespace weylforge

#endif
