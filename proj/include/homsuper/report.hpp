#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace homsuper {

inline constexpr std::size_t kDefaultMaxViolations = 16;

template <typename Residual>
struct CheckViolation {
    std::vector<std::string> inputs; ///< basis/monomial/generator names
    Residual residual;               ///< exact nonzero residual
    std::string residual_text;       ///< rendered form of the residual
};

/// Outcome of an exhaustive identity check. Stored violations are capped at
/// max_stored; violations_total always carries the full count, and examined
/// the number of tuples visited.
template <typename Residual>
struct BasicCheckReport {
    std::string check;
    long long examined = 0;
    long long violations_total = 0;
    std::size_t max_stored = kDefaultMaxViolations;
    std::vector<CheckViolation<Residual>> violations;
    std::vector<std::string> notes;

    bool pass() const { return violations_total == 0; }

    void add_violation(std::vector<std::string> inputs, Residual residual, std::string text) {
        ++violations_total;
        if (violations.size() < max_stored)
            violations.push_back({std::move(inputs), std::move(residual), std::move(text)});
    }
};

} // namespace homsuper
