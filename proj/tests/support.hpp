#pragma once

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "polysec/error.hpp"
#include "polysec/polygon.hpp"
#include "polysec/scalar.hpp"

namespace polysec::testing {

inline Scalar q(const char* s) { return parse_scalar(s); }

inline Point2 pt(const char* x, const char* y) { return {q(x), q(y)}; }

// Heptagon whose standardization lines l_2 and l_{-2} coincide and whose
// only non-crossing line is l_0. Listed as p0..p3 then p_{-3}, p_{-2}, p_{-1}.
inline Polygon coincident_heptagon() {
  return Polygon::from_clockwise({pt("7/5", "1/2"), pt("6/5", "1/10"), pt("1", "0"), pt("0", "0"),
                                  pt("0", "1"), pt("1", "1"), pt("6/5", "9/10")});
}

inline Scalar random_rational(std::mt19937_64& rng, long num_range = 40, long den_max = 9) {
  std::uniform_int_distribution<long> num(-num_range, num_range);
  std::uniform_int_distribution<long> den(1, den_max);
  Scalar s(num(rng), den(rng));
  s.canonicalize();
  return s;
}

template <class F>
Errc error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected polysec::Error";
  return Errc::CertificationFailure;
}

}  // namespace polysec::testing
