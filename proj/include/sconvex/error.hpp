#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sconvex {

enum class ErrorCode {
    DegeneratePair,
    NoIntersection,
    CoincidentCircles,
    OutOfDomain,
    OutsideHemisphere,
    InvalidBody,
    NotOnBoundary,
    NoCommonHemisphere,
    DegenerateInput,
    InvalidLune,
    NotSupporting,
    WidthOutOfRegime,
    ThicknessOutOfRegime,
    NotConstantWidthPoint,
    RadiusOutOfRange,
    EvenN,
    WidthOutOfRange,
    DecompositionFailed,
    EpsOutOfRange,
    RefinementDiverged,
    ScaffoldFailed,
    ConvexityLost,
    CertificateFailed,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DegeneratePair: return "DegeneratePair";
        case ErrorCode::NoIntersection: return "NoIntersection";
        case ErrorCode::CoincidentCircles: return "CoincidentCircles";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::OutsideHemisphere: return "OutsideHemisphere";
        case ErrorCode::InvalidBody: return "InvalidBody";
        case ErrorCode::NotOnBoundary: return "NotOnBoundary";
        case ErrorCode::NoCommonHemisphere: return "NoCommonHemisphere";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::InvalidLune: return "InvalidLune";
        case ErrorCode::NotSupporting: return "NotSupporting";
        case ErrorCode::WidthOutOfRegime: return "WidthOutOfRegime";
        case ErrorCode::ThicknessOutOfRegime: return "ThicknessOutOfRegime";
        case ErrorCode::NotConstantWidthPoint: return "NotConstantWidthPoint";
        case ErrorCode::RadiusOutOfRange: return "RadiusOutOfRange";
        case ErrorCode::EvenN: return "EvenN";
        case ErrorCode::WidthOutOfRange: return "WidthOutOfRange";
        case ErrorCode::DecompositionFailed: return "DecompositionFailed";
        case ErrorCode::EpsOutOfRange: return "EpsOutOfRange";
        case ErrorCode::RefinementDiverged: return "RefinementDiverged";
        case ErrorCode::ScaffoldFailed: return "ScaffoldFailed";
        case ErrorCode::ConvexityLost: return "ConvexityLost";
        case ErrorCode::CertificateFailed: return "CertificateFailed";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Exception carrying a machine-checkable reason alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sconvex
