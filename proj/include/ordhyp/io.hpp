#pragma once

#include "ordhyp/bounds.hpp"
#include "ordhyp/families.hpp"
#include "ordhyp/geometry.hpp"
#include "ordhyp/incidence.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>

namespace ordhyp {

using Json = nlohmann::ordered_json;

// Configuration files:
//   exact  {"dim": 3, "label": "cube", "points": [["1","1","1","1"], ...]}
//   float  {"backend": "float", "dim": 2, "label": ..., "points": [["0.5", ...], ...]}
//   comb   {"backend": "comb", "dim": 2, "label": ..., "labels": [...], "blocks": [[0,1,4], ...]}
// Exact coordinates are rationals written "p/q" or "p". Float coordinates
// are decimal strings with 17 significant digits; plain JSON numbers are
// accepted on input.

Json to_json(const Configuration& c);
Json to_json(const NumericConfiguration& c);
Json to_json(const CombinatorialModel& m);
Json to_json(const Construction& c);

/// Throws Error{ParseError} on schema violations; duplicate points are
/// rejected as ParseError as well.
Construction construction_from_json(const Json& j);
Configuration configuration_from_json(const Json& j);

Construction read_construction(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);

struct ProfileJsonOptions {
    bool hyperplanes = false;
    bool per_point = false;
    bool identities = true;
};

/// {"n":8,"d":3,"ordinary":8,"tau":{"3":8,"4":12},"identities":{...}}
Json to_json(const SecantProfile& p, const ProfileJsonOptions& options = {});

Json to_json(const BoundResult& r);
Json to_json(const Table& t);

std::string format_double(double v);

} // namespace ordhyp
