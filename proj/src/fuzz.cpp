#include "polysec/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polysec/compose.hpp"
#include "polysec/error.hpp"
#include "polysec/heptagon.hpp"
#include "polysec/io.hpp"

namespace polysec {
namespace {

using nlohmann::json;

Point2 circle_point(const Scalar& t) {
  const Scalar den = 1 + t * t;
  return {(1 - t * t) / den, 2 * t / den};
}

bool index_identities_hold(const DetOctuple& o) {
  for (std::size_t i = 0; i < 7; ++i) {
    auto at = [i](long shift) { return static_cast<std::size_t>((static_cast<long>(i) + shift + 14) % 7); };
    if (o.c[i] != o.e[at(-2)]) return false;
    if (o.d[i] + o.c[at(-3)] != o.f[at(-2)] + o.e[at(1)]) return false;
  }
  return true;
}

json invariant_case(Rng& rng) {
  const auto pts = random_points(7, rng);
  const auto sums = invariant_sum(std::span<const Point2>(pts));
  const bool idx = index_identities_hold(det_octuple(pts));
  return {{"ok", sums.total == 0 && sums.ab_minus_gh == 0 && sums.ef_minus_cd == 0 && idx},
          {"total", to_string(sums.total)},
          {"ab_minus_gh", to_string(sums.ab_minus_gh)},
          {"ef_minus_cd", to_string(sums.ef_minus_cd)},
          {"index_identities", idx},
          {"points", points_to_json(pts)["vertices"]}};
}

json heptagon_case(Rng& rng, const ExtensionOptions& opts) {
  const Polygon p = random_convex_polygon(7, rng);
  std::string classes;
  for (int i = 0; i < 7; ++i) {
    switch (classify_line(p, i)) {
      case Crossing::NonCrossing: classes += 'N'; break;
      case Crossing::PlusCrossing: classes += '+'; break;
      case Crossing::MinusCrossing: classes += '-'; break;
    }
  }
  const auto ext = heptagon_extension(p, opts);
  const auto extreme = extreme_points(ext.vertices, ext.dim).size();
  return {{"ok", ext.certified && ext.dim == 3 && extreme <= 6},
          {"lines", classes},
          {"noncrossing", find_noncrossing(p)},
          {"extreme", extreme},
          {"certified", ext.certified},
          {"vertices", to_json(p)["vertices"]}};
}

json ngon_case(Rng& rng, const ExtensionOptions& opts) {
  const std::size_t n = 8 + static_cast<std::size_t>(rng() % 9);
  const Polygon p = random_convex_polygon(n, rng);
  const auto e3 = ngon_3d_extension(p, opts);
  const auto ej = ngon_extension(p, opts);
  const long ln = static_cast<long>(n);
  const bool ok = e3.certified && ej.certified && e3.vertices.size() + 1 <= n &&
                  ej.dim == 2 + ln / 7 && static_cast<long>(ej.vertices.size()) <= (6 * ln + 6) / 7;
  return {{"ok", ok},
          {"n", n},
          {"vertices_3d", e3.vertices.size()},
          {"dim_join", ej.dim},
          {"vertices_join", ej.vertices.size()}};
}

json hexagon_case(Rng& rng, std::size_t index, const ExtensionOptions& opts) {
  const Polygon p = index % 2 == 0 ? random_ic5_hexagon(rng) : random_convex_polygon(6, rng);
  const auto ic = hexagon_ic(p);
  json rec{{"ic", ic.value}, {"vertices", to_json(p)["vertices"]}};
  bool ok = true;
  if (ic.value == 5) {
    const auto ext = hexagon_extension5(p, opts);
    ok = ext.certified && extreme_points(ext.vertices, 3).size() == 5;
    rec["certified"] = ext.certified;
  }
  rec["ok"] = ok;
  return rec;
}

json run_case(FuzzTarget target, std::uint64_t seed, std::size_t index, const ExtensionOptions& opts) {
  Rng rng(case_seed(seed, index));
  json rec;
  try {
    switch (target) {
      case FuzzTarget::Invariant: rec = invariant_case(rng); break;
      case FuzzTarget::Heptagon: rec = heptagon_case(rng, opts); break;
      case FuzzTarget::Ngon: rec = ngon_case(rng, opts); break;
      case FuzzTarget::Hexagon: rec = hexagon_case(rng, index, opts); break;
    }
  } catch (const Error& e) {
    rec = {{"ok", false}, {"error", std::string(errc_name(e.code()))}, {"message", e.what()}};
  }
  rec["case"] = index;
  return rec;
}

FuzzReport finish(FuzzTarget target, std::size_t count, std::uint64_t seed, std::vector<json> records) {
  FuzzReport r{target, count, seed, std::move(records), 0};
  for (const auto& rec : r.records) {
    if (!rec.at("ok").get<bool>()) ++r.failures;
  }
  return r;
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + index + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Polygon random_convex_polygon(std::size_t n, Rng& rng) {
  if (n < 3) throw Error(Errc::TooFewVertices, "a polygon needs at least 3 vertices");
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  while (true) {
    std::vector<Point2> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double t = std::clamp(std::tan(angle(rng) / 2), -1024.0, 1024.0);
      Scalar q(static_cast<long>(std::lround(t * 256)), 256);
      q.canonicalize();
      pts.push_back(circle_point(q));
    }
    auto hull = strict_convex_hull(pts);
    if (hull.size() == n) return Polygon::from_clockwise(std::move(hull));
  }
}

std::vector<Point2> random_points(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  std::vector<Point2> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long nx = num(rng), dx = den(rng), ny = num(rng), dy = den(rng);
    Scalar x(nx, dx), y(ny, dy);
    x.canonicalize();
    y.canonicalize();
    out.push_back({x, y});
  }
  return out;
}

Polygon random_ic5_hexagon(Rng& rng) {
  while (true) {
    const Polygon base = random_convex_polygon(6, rng);
    const ProjLine l1 = join(base.lifted(0), base.lifted(5));
    const ProjLine l3 = join(base.lifted(2), base.lifted(3));
    const ProjPoint c = meet(l1, l3);
    if (c == base.lifted(1)) continue;
    const ProjLine through = join(c, base.lifted(1));
    const ProjLine chord = join(base.lifted(3), base.lifted(5));
    if (through == chord) continue;
    const ProjPoint m_h = meet(through, chord);
    if (!is_finite(m_h)) continue;
    const Point2 m = dehomogenize(m_h);
    const Point2 away = m - base.vertex(1);
    Scalar s(1, 2);
    for (int attempt = 0; attempt < 12; ++attempt, s /= 2) {
      std::vector<Point2> v = base.vertices();
      v[4] = m + s * away;
      try {
        Polygon p = Polygon::from_clockwise(std::move(v));
        if (hexagon_ic(p).value == 5) return p;
      } catch (const Error&) {
      }
    }
  }
}

const char* fuzz_target_name(FuzzTarget t) {
  switch (t) {
    case FuzzTarget::Invariant: return "invariant";
    case FuzzTarget::Heptagon: return "heptagon";
    case FuzzTarget::Ngon: return "ngon";
    case FuzzTarget::Hexagon: return "hexagon";
  }
  return "?";
}

FuzzTarget parse_fuzz_target(const std::string& name) {
  for (auto t : {FuzzTarget::Invariant, FuzzTarget::Heptagon, FuzzTarget::Ngon, FuzzTarget::Hexagon}) {
    if (name == fuzz_target_name(t)) return t;
  }
  throw Error(Errc::BadParameters, "unknown fuzz target \"" + name + "\"");
}

nlohmann::json FuzzReport::summary() const {
  return {{"target", fuzz_target_name(target)},
          {"count", count},
          {"seed", seed},
          {"passed", count - failures},
          {"failed", failures}};
}

FuzzReport run_fuzz(FuzzTarget target, std::size_t count, std::uint64_t seed, const ExtensionOptions& opts) {
  std::vector<json> records(count);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < count; ++i) records[i] = run_case(target, seed, i, opts);
  return finish(target, count, seed, std::move(records));
}

FuzzReport run_fuzz_serial(FuzzTarget target, std::size_t count, std::uint64_t seed, const ExtensionOptions& opts) {
  std::vector<json> records;
  records.reserve(count);
  for (std::size_t i = 0; i < count; ++i) records.push_back(run_case(target, seed, i, opts));
  return finish(target, count, seed, std::move(records));
}

}  // namespace polysec
