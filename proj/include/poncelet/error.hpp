#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poncelet {

enum class ErrorCode {
    DegeneratePencilMember,
    TangentFromBoundary,
    NoRealTangent,
    InversionOfCenter,
    ComplexLimitingPoints,
    NoPoristicPair,
    CircularOuterUnsupported,
    VertexInsideCaustic,
    ImaginaryPencilCircle,
    DegenerateTriangle,
    InsufficientSamples,
    NoConvexityRoot,
    InvalidParameters,
    UnknownTrackedPoint,
};

std::string_view to_string(ErrorCode code);

class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace poncelet
