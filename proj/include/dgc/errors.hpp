#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dgc {

enum class ErrorCode {
    NonPositiveMass,
    NonPositiveWeight,
    UnknownEndpoint,
    DuplicateEdge,
    NotUndirected,
    UnknownNode,
    UnknownEdge,
    NotSymmetricEdgeSet,
    ClustersShareNodes,
    EmptyClusterSet,
    ReachTooLargeForEnumeration,
    NotADistribution,
    ZOnSpectrumAxis,
    NonPositiveTime,
    MalformedDocument,
    UnknownVersion,
    SizeLimitExceeded,
    // numerical failures below this line
    SingularRestriction,
    SingularCommonBlock,
    SpectralGapCollapse,
    NegativeAggregateWeight,
    SingularMatrix,
    NotSymmetrizable,
    ClusterViolation,
    InvariantViolation,
};

std::string_view error_name(ErrorCode code);

// Validation errors come from bad input, numerical ones from broken invariants.
constexpr bool is_numerical(ErrorCode code) {
    return code >= ErrorCode::SingularRestriction;
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    bool numerical() const noexcept { return is_numerical(code_); }

private:
    ErrorCode code_;
};

} // namespace dgc
