#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polysec/linalg.hpp"
#include "polysec/polygon.hpp"
#include "polysec/sections.hpp"
#include "polysec/slack.hpp"

namespace polysec {

using Json = nlohmann::json;

// Scalars are written as "p/q" or "p". Reading also accepts JSON integers.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// {"vertices": [["x", "y"], ...]}
Json points_to_json(std::span<const Point2> points);
Json to_json(const Polygon& p);
// Raw vertex list, unvalidated. Throws ParseError on malformed input.
std::vector<Point2> points_from_json(const Json& j);

// {"dim": d, "vertices": [[...], ...], "claimed": {"vertices": ...},
//  "certified": bool}. The certificate is never trusted on read.
Json to_json(const SectionedPolytope& s);
SectionedPolytope sectioned_from_json(const Json& j);

Json to_json(const Matrix& m);
Json to_json(const SlackFactorization& f, const std::string& extension_sha256);

// Throws ParseError on invalid JSON or an unreadable file.
Json parse_json(std::string_view text);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

std::string sha256_hex(std::string_view data);

}  // namespace polysec
