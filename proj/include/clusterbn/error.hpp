#pragma once

#include <stdexcept>
#include <string>

namespace clusterbn {

enum class Errc {
    EmptyConfiguration,
    DuplicateId,
    MissingId,
    ForwardReference,
    UnknownPoint,
    TooManyProximities,
    InvalidSatellite,
    NormalizationError,
    DuplicateSatellite,
    DanglingProximity,
    MultipleOrigins,
    NonPositiveCoefficient,
    SurfaceMismatch,
    NotHirzebruch,
    UnknownChart,
    InvalidDegrees,
    NonPositiveEpsilon,
    ParseError,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library. `point()` is the offending point id
/// (0 when not applicable); `line()` is the 1-based input line for parse errors.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, int point = 0, int line = 0);

    Errc code() const noexcept { return code_; }
    int point() const noexcept { return point_; }
    int line() const noexcept { return line_; }

private:
    Errc code_;
    int point_;
    int line_;
};

}  // namespace clusterbn
