#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "mckay3d/ct.hpp"
#include "mckay3d/derived.hpp"

namespace mckay3d {

using json = nlohmann::json;

// Characters serialize as their classical integer label for single-generator
// groups and as the canonical representative triple otherwise.
json char_json(const GroupData& g, int chi);

json group_json(const GroupData& g);
json ghilb_json(const Fan& fan);
json recipe_json(const Recipe& recipe);
json cubes_json(const Quiver& quiver, bool reduced);
json ct_json(const CT& ct);
json sinksource_json(const CT& ct);
json derived_json(const Derived& derived);

// Paper-style support shorthand for an effective divisor: "E_{x,4,5}" lists
// the corner letters and point names of the support; "0" when empty.
std::string reduced_label(const Fan& fan, const DivisorSum& d);

// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump_json(const json& j);

// Structural comparison; appends one "path: expected … actual …" line per
// mismatch.  Object keys present on only one side are reported.
void json_diff(const json& expected, const json& actual, const std::string& path,
               std::vector<std::string>& out);

}  // namespace mckay3d
