#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "polysec/hexagon.hpp"
#include "polysec/polygon.hpp"

namespace polysec {

using Rng = std::mt19937_64;

// Independent stream per case: splitmix64 of seed + index.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

// n distinct rational points on the unit circle from t -> ((1-t^2)/(1+t^2),
// 2t/(1+t^2)), t = tan(theta/2) rounded to a multiple of 1/256 for uniform
// theta; resampled until all n are distinct.
Polygon random_convex_polygon(std::size_t n, Rng& rng);

// Points p/q with |p| <= 50 and 1 <= q <= 12; repeats allowed.
std::vector<Point2> random_points(std::size_t n, Rng& rng);

// A random hexagon whose lines p0p5, p1p4, p2p3 are concurrent: p4 is moved
// onto the line through p1 and the meet of the other two, just beyond the
// chord p3p5.
Polygon random_ic5_hexagon(Rng& rng);

enum class FuzzTarget { Invariant, Heptagon, Ngon, Hexagon };

const char* fuzz_target_name(FuzzTarget t);
// Throws BadParameters for an unknown name.
FuzzTarget parse_fuzz_target(const std::string& name);

struct FuzzReport {
  FuzzTarget target = FuzzTarget::Invariant;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::vector<nlohmann::json> records;  // one per case, in case order
  std::size_t failures = 0;

  nlohmann::json summary() const;
};

// Case i uses Rng(case_seed(seed, i)), so the report does not depend on how
// cases are spread over threads.
FuzzReport run_fuzz(FuzzTarget target, std::size_t count, std::uint64_t seed,
                    const ExtensionOptions& opts = {});
FuzzReport run_fuzz_serial(FuzzTarget target, std::size_t count, std::uint64_t seed,
                           const ExtensionOptions& opts = {});

}  // namespace polysec
