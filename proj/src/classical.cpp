#include "qbound/classical.hpp"

#include "qbound/errors.hpp"

namespace qbound {

DeterministicStrategy DeterministicStrategy::from_encoding(int m, std::uint32_t code) {
    DeterministicStrategy s;
    s.bits_left.resize(m);
    s.bits_right.resize(m);
    for (int i = 0; i < m; ++i) {
        s.bits_left[i] = static_cast<std::uint8_t>((code >> i) & 1u);
        s.bits_right[i] = static_cast<std::uint8_t>((code >> (m + i)) & 1u);
    }
    return s;
}

std::uint32_t DeterministicStrategy::encoding() const {
    const int m = static_cast<int>(bits_left.size());
    std::uint32_t code = 0;
    for (int i = 0; i < m; ++i) {
        if (bits_left[i]) code |= 1u << i;
        if (bits_right[i]) code |= 1u << (m + i);
    }
    return code;
}

long long evaluate_strategy(const InequalityCoeffs& coeffs, const DeterministicStrategy& s) {
    const int m = coeffs.m;
    if (static_cast<int>(s.bits_left.size()) != m || static_cast<int>(s.bits_right.size()) != m) {
        throw DimMismatch("evaluate_strategy: strategy size differs from coeffs.m");
    }
    long long v = 0;
    for (int i = 0; i < m; ++i) {
        if (!s.bits_left[i]) continue;
        for (int j = 0; j < m; ++j)
            if (s.bits_right[j]) v += coeffs.joint_at(i, j);
    }
    for (int i = 0; i < m; ++i)
        if (s.bits_left[i]) v += coeffs.marg_left[i];
    for (int j = 0; j < m; ++j)
        if (s.bits_right[j]) v += coeffs.marg_right[j];
    return v;
}

ClassicalRange classical_range(const InequalityCoeffs& coeffs) {
    const int m = coeffs.m;
    if (m > 8) throw TooManySettings("classical_range: supports at most 8 settings per side");

    ClassicalRange out;
    bool first = true;
    const std::uint32_t count = 1u << (2 * m);
    for (std::uint32_t code = 0; code < count; ++code) {
        const DeterministicStrategy s = DeterministicStrategy::from_encoding(m, code);
        const long long v = evaluate_strategy(coeffs, s);
        if (first || v < out.min) out.min = v;
        if (first || v > out.max) {
            out.max = v;
            out.argmax = s;
        }
        first = false;
    }
    return out;
}

}  // namespace qbound
