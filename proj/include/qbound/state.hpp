#pragma once

#include <array>

#include "qbound/matrix.hpp"

namespace qbound {

enum class StateBasis { Computational, Bell };

/// Pure two-qubit state: four complex amplitudes over either the computational
/// basis |00>, |01>, |10>, |11> or the Bell basis |phi+>, |psi+>, |psi->, |phi->.
struct TwoQubitState {
    std::array<cplx, 4> amplitudes{};
    StateBasis basis = StateBasis::Computational;

    double norm() const;
    TwoQubitState in_basis(StateBasis target) const;
    TwoQubitState normalized() const;
};

/// <a|b>, computed in a common basis.
cplx overlap(const TwoQubitState& a, const TwoQubitState& b);

TwoQubitState phi_plus();
TwoQubitState psi_plus();
TwoQubitState psi_minus();
TwoQubitState phi_minus();

}  // namespace qbound
