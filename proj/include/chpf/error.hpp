#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chpf {

enum class ErrorKind {
    DegenerateParameter,
    Pole,
    GammaPole,
    InhomogeneousSum,
    DivisionByZero,
    MissingKappa,
    PrecisionUnreachable,
    OddDimension,
    OracleCap,
    SizeCap,
    ParameterDomain,
    DegenerateMoments,
    DegenerateSkewMoments,
    StructureViolation,
    FamilyReductionBug,
    TheoryChainViolation,
    Config,
};

inline std::string_view to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::DegenerateParameter: return "degenerate-parameter";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::GammaPole: return "gamma-pole";
    case ErrorKind::InhomogeneousSum: return "inhomogeneous-sum";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::MissingKappa: return "missing-kappa";
    case ErrorKind::PrecisionUnreachable: return "precision-unreachable";
    case ErrorKind::OddDimension: return "odd-dimension";
    case ErrorKind::OracleCap: return "oracle-cap";
    case ErrorKind::SizeCap: return "size-cap";
    case ErrorKind::ParameterDomain: return "parameter-domain";
    case ErrorKind::DegenerateMoments: return "degenerate-moments";
    case ErrorKind::DegenerateSkewMoments: return "degenerate-skew-moments";
    case ErrorKind::StructureViolation: return "structure-violation";
    case ErrorKind::FamilyReductionBug: return "family-reduction-bug";
    case ErrorKind::TheoryChainViolation: return "theory-chain-violation";
    case ErrorKind::Config: return "config";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the signals above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace chpf
