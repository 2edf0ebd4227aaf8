#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3mirror {

/// Machine-readable classification of domain errors. The CLI reports the
/// kind name alongside the message.
enum class ErrorKind {
    DimensionMismatch,
    InvalidArgument,
    OutOfRange,
    Singular,
    NotInLattice,
    ZeroVector,
    NotIsotropic,
    WrongPairing,
    DivisibilityFailure,
    NotPrimitive,
    SplittingIndex,
    SearchTooLarge,
    NotInTube,
    NotAPeriod,
    NormalizationImpossible,
    NormalizationFailure,
    NotUnitPhase,
    NotInvolution,
    IncompatibleSplit,
    NonIntegralReflection,
    NotSymplectic,
    NotAntiSymplectic,
    SmoothFiberType,
    NonPositiveHodge,
    SelfMirrorCase,
    NoMirrorFamily,
    CensusInvariant,
    EulerMismatch,
    NotOnBase,
};

std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string const& message) : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace k3mirror
