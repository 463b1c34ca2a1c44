#include "polysec/io.hpp"

#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "polysec/error.hpp"

namespace polysec {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(Errc::ParseError, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<Scalar> scalars_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "expected an array of coordinates");
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(scalar_from_json(e));
  return out;
}

}  // namespace

Json scalar_to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
  throw Error(Errc::ParseError, "coordinates must be rational strings or integers, got " + j.dump());
}

Json points_to_json(std::span<const Point2> points) {
  Json vs = Json::array();
  for (const auto& p : points) vs.push_back(Json::array({scalar_to_json(p.x), scalar_to_json(p.y)}));
  return Json{{"vertices", vs}};
}

Json to_json(const Polygon& p) { return points_to_json(p.vertices()); }

std::vector<Point2> points_from_json(const Json& j) {
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) throw Error(Errc::ParseError, "\"vertices\" must be an array");
  std::vector<Point2> out;
  for (const auto& v : vs) {
    auto c = scalars_from_json(v);
    if (c.size() != 2) throw Error(Errc::ParseError, "polygon vertices need two coordinates");
    out.push_back({c[0], c[1]});
  }
  return out;
}

Json to_json(const SectionedPolytope& s) {
  Json vs = Json::array();
  for (const auto& q : s.vertices) {
    Json row = Json::array();
    for (const auto& x : q) row.push_back(scalar_to_json(x));
    vs.push_back(row);
  }
  return Json{{"dim", s.dim}, {"vertices", vs}, {"claimed", to_json(s.claimed)}, {"certified", s.certified}};
}

SectionedPolytope sectioned_from_json(const Json& j) {
  const Json& dim_j = field(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 2) {
    throw Error(Errc::ParseError, "\"dim\" must be an integer >= 2");
  }
  const int dim = dim_j.get<int>();
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) throw Error(Errc::ParseError, "\"vertices\" must be an array");
  std::vector<PointD> verts;
  for (const auto& v : vs) {
    auto c = scalars_from_json(v);
    if (static_cast<int>(c.size()) != dim) throw Error(Errc::ParseError, "vertex has the wrong dimension");
    verts.push_back(std::move(c));
  }
  const auto claimed = points_from_json(field(j, "claimed"));
  return SectionedPolytope{dim, std::move(verts), validate(claimed)};
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const SlackFactorization& f, const std::string& extension_sha256) {
  return Json{{"r", f.inner_dim()}, {"R", to_json(f.r)}, {"C", to_json(f.c)}, {"extension_sha256", extension_sha256}};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  out << contents;
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

}  // namespace polysec
