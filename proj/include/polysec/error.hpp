#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polysec {

enum class Errc {
  // exact kernel
  DegenerateJoin,
  DegenerateMeet,
  AtInfinity,
  // polygons and planar maps
  TooFewVertices,
  DuplicateVertex,
  NotConvex,
  SingularMap,
  MapsVertexToInfinity,
  ImageNotConvex,
  LineMeetsPolygon,
  DegenerateTriple,
  // constructions
  NotHexagon,
  NotHeptagon,
  NoConcurrency,
  ComplexitySix,
  BadK,
  BadParameters,
  IncompatibleSections,
  TooFewVerticesForConstruction,
  // section engine
  EmptySection,
  DegenerateSection,
  ScaleExceeded,
  PullbackUnbounded,
  NotInPolytope,
  // slack
  FactorizationMismatch,
  // io
  ParseError,
  // internal certification failures: any of these firing is a bug or a
  // counterexample and maps to exit code 3 in the CLI.
  NormalFormConstraintViolated,
  DegenerateConstruction,
  NoneFound,
  NoExtension,
  CertificationFailure,
};

std::string_view errc_name(Errc code) noexcept;

// True for codes that signal a failed internal certificate rather than bad
// input.
bool is_certification_failure(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  explicit Error(Errc code) : Error(code, std::string(errc_name(code))) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace polysec
