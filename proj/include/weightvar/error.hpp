#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weightvar {

enum class errc {
    invalid_rank,
    rank_limit_exceeded,
    dimension_mismatch,
    non_exact_division,
    inhomogeneous_input,
    localization_not_polynomial,
    mu_not_regular_value,
    degree_overflow,
    cache_corrupt,
    invalid_config,
    consistency_failure,
};

constexpr std::string_view errc_name(errc e) noexcept {
    switch (e) {
    case errc::invalid_rank: return "InvalidRank";
    case errc::rank_limit_exceeded: return "RankLimitExceeded";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::non_exact_division: return "NonExactDivision";
    case errc::inhomogeneous_input: return "InhomogeneousInput";
    case errc::localization_not_polynomial: return "LocalizationNotPolynomial";
    case errc::mu_not_regular_value: return "MuNotRegularValue";
    case errc::degree_overflow: return "DegreeOverflow";
    case errc::cache_corrupt: return "CacheCorrupt";
    case errc::invalid_config: return "InvalidConfig";
    case errc::consistency_failure: return "ConsistencyFailure";
    }
    return "Unknown";
}

/// Errors that signal a broken algebraic invariant rather than bad input.
constexpr bool is_consistency_failure(errc e) noexcept {
    return e == errc::non_exact_division || e == errc::localization_not_polynomial ||
           e == errc::consistency_failure;
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), message_(what) {}

    errc code() const noexcept { return code_; }
    /// The description without the error-name prefix.
    const std::string& message() const noexcept { return message_; }

private:
    errc code_;
    std::string message_;
};

} // namespace weightvar
