#include "clusterbn/error.hpp"

namespace clusterbn {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::EmptyConfiguration: return "EmptyConfiguration";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::MissingId: return "MissingId";
    case Errc::ForwardReference: return "ForwardReference";
    case Errc::UnknownPoint: return "UnknownPoint";
    case Errc::TooManyProximities: return "TooManyProximities";
    case Errc::InvalidSatellite: return "InvalidSatellite";
    case Errc::NormalizationError: return "NormalizationError";
    case Errc::DuplicateSatellite: return "DuplicateSatellite";
    case Errc::DanglingProximity: return "DanglingProximity";
    case Errc::MultipleOrigins: return "MultipleOrigins";
    case Errc::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case Errc::SurfaceMismatch: return "SurfaceMismatch";
    case Errc::NotHirzebruch: return "NotHirzebruch";
    case Errc::UnknownChart: return "UnknownChart";
    case Errc::InvalidDegrees: return "InvalidDegrees";
    case Errc::NonPositiveEpsilon: return "NonPositiveEpsilon";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

std::string decorate(Errc code, const std::string& message, int point, int line) {
    std::string out = errc_name(code);
    if (line > 0) out += " at line " + std::to_string(line);
    if (point > 0) out += " (point " + std::to_string(point) + ")";
    out += ": " + message;
    return out;
}

}  // namespace

Error::Error(Errc code, const std::string& message, int point, int line)
    : std::runtime_error(decorate(code, message, point, line)), code_(code), point_(point), line_(line) {}

}  // namespace clusterbn
