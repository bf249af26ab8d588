#pragma once

#include <cstdint>
#include <vector>

#include "qbound/operators.hpp"

namespace qbound {

/// A deterministic 0/1 assignment to every observable: a vertex of the
/// correlation polytope. Encoded as an integer with the left outcomes in the
/// low m bits (bit i = bits_left[i]) and the right outcomes above them.
struct DeterministicStrategy {
    std::vector<std::uint8_t> bits_left;
    std::vector<std::uint8_t> bits_right;

    static DeterministicStrategy from_encoding(int m, std::uint32_t code);
    std::uint32_t encoding() const;
};

/// Value of the inequality expression on one deterministic strategy, in exact
/// integer arithmetic. Throws DimMismatch if the strategy size differs from
/// coeffs.m.
long long evaluate_strategy(const InequalityCoeffs& coeffs, const DeterministicStrategy& s);

struct ClassicalRange {
    long long min = 0;
    long long max = 0;
    DeterministicStrategy argmax;
};

/// Exact classical bounds by exhaustive enumeration of all 2^(2m) strategies.
/// Ties in the maximum are resolved toward the smallest encoding. Throws
/// TooManySettings for m > 8.
ClassicalRange classical_range(const InequalityCoeffs& coeffs);

}  // namespace qbound
