#include "polysec/error.hpp"

namespace polysec {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DegenerateJoin: return "DegenerateJoin";
    case Errc::DegenerateMeet: return "DegenerateMeet";
    case Errc::AtInfinity: return "AtInfinity";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::NotConvex: return "NotConvex";
    case Errc::SingularMap: return "SingularMap";
    case Errc::MapsVertexToInfinity: return "MapsVertexToInfinity";
    case Errc::ImageNotConvex: return "ImageNotConvex";
    case Errc::LineMeetsPolygon: return "LineMeetsPolygon";
    case Errc::DegenerateTriple: return "DegenerateTriple";
    case Errc::NotHexagon: return "NotHexagon";
    case Errc::NotHeptagon: return "NotHeptagon";
    case Errc::NoConcurrency: return "NoConcurrency";
    case Errc::ComplexitySix: return "ComplexitySix";
    case Errc::BadK: return "BadK";
    case Errc::BadParameters: return "BadParameters";
    case Errc::IncompatibleSections: return "IncompatibleSections";
    case Errc::TooFewVerticesForConstruction: return "TooFewVerticesForConstruction";
    case Errc::EmptySection: return "EmptySection";
    case Errc::DegenerateSection: return "DegenerateSection";
    case Errc::ScaleExceeded: return "ScaleExceeded";
    case Errc::PullbackUnbounded: return "PullbackUnbounded";
    case Errc::NotInPolytope: return "NotInPolytope";
    case Errc::FactorizationMismatch: return "FactorizationMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::NormalFormConstraintViolated: return "NormalFormConstraintViolated";
    case Errc::DegenerateConstruction: return "DegenerateConstruction";
    case Errc::NoneFound: return "NoneFound";
    case Errc::NoExtension: return "NoExtension";
    case Errc::CertificationFailure: return "CertificationFailure";
  }
  return "Unknown";
}

bool is_certification_failure(Errc code) noexcept {
  switch (code) {
    case Errc::NormalFormConstraintViolated:
    case Errc::DegenerateConstruction:
    case Errc::NoneFound:
    case Errc::NoExtension:
    case Errc::CertificationFailure:
      return true;
    default:
      return false;
  }
}

}  // namespace polysec
