#include "polysec/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "polysec/error.hpp"

namespace polysec {
namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num, true) ||
      (slash != std::string_view::npos && !is_integer_literal(den, false))) {
    throw Error(Errc::ParseError, "malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) d = mpz_class(std::string(den), 10);
  if (d == 0) {
    throw Error(Errc::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  }
  Scalar value(n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace polysec
