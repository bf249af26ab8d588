#include "qbound/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qbound/eigen.hpp"
#include "qbound/errors.hpp"
#include "qbound/operators.hpp"

namespace qbound {

namespace {

constexpr double kGoldenRatio = 0.6180339887498949;  // (sqrt(5) - 1) / 2

/// Golden-section maximization of f on [lo, hi] down to interval width tol.
template <typename F>
double golden_max(F&& f, double lo, double hi, double tol) {
    double x1 = hi - kGoldenRatio * (hi - lo);
    double x2 = lo + kGoldenRatio * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGoldenRatio * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGoldenRatio * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

TwoQubitState column_state(const ComplexMatrix& vectors, int col, StateBasis basis) {
    TwoQubitState s;
    s.basis = basis;
    for (int k = 0; k < 4; ++k) s.amplitudes[k] = vectors(k, col);
    return s;
}

int first_large_amplitude(const TwoQubitState& s) {
    for (int k = 0; k < 4; ++k)
        if (std::abs(s.amplitudes[k]) > 1e-8) return k;
    return 4;
}

void fix_phase(TwoQubitState& s) {
    const int lead = first_large_amplitude(s);
    if (lead == 4) return;
    const cplx a = s.amplitudes[lead];
    const cplx phase = std::conj(a / std::abs(a));
    for (cplx& amp : s.amplitudes) amp *= phase;
}

}  // namespace

std::array<double, 4> o22_eigenvalues(double alpha, double beta, double gamma, double delta) {
    const double s = std::sin(alpha - beta) * std::sin(gamma - delta);
    const double sq_plus = std::sqrt(std::max(0.0, 1.0 + s));
    const double sq_minus = std::sqrt(std::max(0.0, 1.0 - s));
    std::array<double, 4> v{0.5 * (sq_plus - 1.0), 0.5 * (sq_minus - 1.0),
                            0.5 * (-sq_minus - 1.0), 0.5 * (-sq_plus - 1.0)};
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

O22Eigensystem o22_eigenvectors(double alpha, double beta, double gamma, double delta) {
    const double s = std::sin(alpha - beta) * std::sin(gamma - delta);

    // Couplings of the two invariant Bell-basis planes. den_mu couples
    // {phi+, psi-}, den_nu couples {psi+, phi-}; both planes' diagonal gaps
    // combine with these into the closed-form eigenvalues.
    const double diag_mu = std::cos(alpha - gamma) + std::cos(alpha - delta) +
                           std::cos(beta - gamma) - std::cos(beta - delta);
    const double den_mu = std::sin(alpha - gamma) + std::sin(alpha - delta) +
                          std::sin(beta - gamma) - std::sin(beta - delta);
    const double diag_nu = std::cos(alpha + gamma) + std::cos(alpha + delta) +
                           std::cos(beta + gamma) - std::cos(beta + delta);
    const double den_nu = std::sin(alpha + gamma) + std::sin(alpha + delta) +
                          std::sin(beta + gamma) - std::sin(beta + delta);

    O22Eigensystem out;
    if (std::abs(den_mu) <= 1e-8 || std::abs(den_nu) <= 1e-8) {
        // Degenerate configuration: a plane decouples and the closed form
        // divides by (nearly) zero. Diagonalize numerically instead.
        const Spectrum sp = hermitian_eigen(to_bell_basis(build_o22(alpha, beta, gamma, delta)));
        out.closed_form = false;
        for (int k = 0; k < 4; ++k) {
            out.values[k] = sp.values[k];
            out.states[k] = column_state(sp.vectors, k, StateBasis::Bell);
        }
        return out;
    }

    const double sq_minus = std::sqrt(std::max(0.0, 1.0 - s));
    const double sq_plus = std::sqrt(std::max(0.0, 1.0 + s));

    struct Pair {
        double value;
        TwoQubitState state;
    };
    std::array<Pair, 4> pairs;
    int n = 0;
    for (const double sgn : {+1.0, -1.0}) {
        // span{phi+, psi-}: eigenvector (f, 0, 1, 0) up to normalization
        const double f_mu = -(diag_mu + sgn * 2.0 * sq_minus) / den_mu;
        const double norm_mu = std::sqrt(1.0 + f_mu * f_mu);
        TwoQubitState mu{{f_mu / norm_mu, 0.0, 1.0 / norm_mu, 0.0}, StateBasis::Bell};
        pairs[n++] = {0.5 * (sgn * sq_minus - 1.0), mu};

        // span{psi+, phi-}: eigenvector (0, f, 0, 1)
        const double f_nu = (-diag_nu + sgn * 2.0 * sq_plus) / den_nu;
        const double norm_nu = std::sqrt(1.0 + f_nu * f_nu);
        TwoQubitState nu{{0.0, f_nu / norm_nu, 0.0, 1.0 / norm_nu}, StateBasis::Bell};
        pairs[n++] = {0.5 * (sgn * sq_plus - 1.0), nu};
    }

    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.value != b.value) return a.value > b.value;
        return first_large_amplitude(a.state) < first_large_amplitude(b.state);
    });
    for (int k = 0; k < 4; ++k) {
        out.values[k] = pairs[k].value;
        out.states[k] = pairs[k].state;
        fix_phase(out.states[k]);
    }
    return out;
}

double norm_bound(const ComplexMatrix& m) { return hermitian_eigen(m).values[0]; }

std::vector<SweepPoint> sweep(int m, double theta_min, double theta_max, int steps) {
    if (steps < 2) throw InvalidRange("sweep: need at least 2 grid points");
    if (!(theta_max > theta_min)) throw InvalidRange("sweep: theta_max must exceed theta_min");

    const InequalityCoeffs coeffs = imm_coeffs(m);
    std::vector<SweepPoint> out;
    out.reserve(steps);
    for (int k = 0; k < steps; ++k) {
        const double theta = theta_min + (theta_max - theta_min) * k / (steps - 1);
        const Spectrum sp = hermitian_eigen(build_omm(coeffs, symmetric_setup(m, theta)));
        SweepPoint p;
        p.theta = theta;
        for (int i = 0; i < 4; ++i) p.eigenvalues[i] = sp.values[i];
        p.max_entanglement =
            concurrence(column_state(sp.vectors, 0, StateBasis::Computational));
        out.push_back(p);
    }
    return out;
}

MaxViolation max_violation(int m, std::pair<double, double> bracket) {
    if (!(bracket.second > bracket.first)) throw InvalidRange("max_violation: empty bracket");

    const InequalityCoeffs coeffs = imm_coeffs(m);
    const auto top = [&](double theta) {
        return hermitian_eigen(build_omm(coeffs, symmetric_setup(m, theta))).values[0];
    };

    // The violation curves develop several local maxima as m grows, so golden
    // section alone cannot be trusted on a wide bracket: scan first.
    constexpr int kScanPoints = 512;
    int best = 0;
    double best_val = top(bracket.first);
    for (int k = 1; k < kScanPoints; ++k) {
        const double theta =
            bracket.first + (bracket.second - bracket.first) * k / (kScanPoints - 1);
        const double val = top(theta);
        if (val > best_val) {
            best_val = val;
            best = k;
        }
    }
    const auto grid_point = [&](int k) {
        return bracket.first + (bracket.second - bracket.first) * k / (kScanPoints - 1);
    };
    const double lo = grid_point(std::max(0, best - 1));
    const double hi = grid_point(std::min(kScanPoints - 1, best + 1));

    MaxViolation out;
    out.theta_star = golden_max(top, lo, hi, 1e-10);

    // Comparison-based search stalls near sqrt(eps) on a flat maximum;
    // parabolic vertex steps recover the location to ~1e-10.
    const double h = 1e-5;
    for (int round = 0; round < 2; ++round) {
        const double f0 = top(out.theta_star);
        const double fp = top(out.theta_star + h);
        const double fm = top(out.theta_star - h);
        const double curvature = fm - 2.0 * f0 + fp;
        if (curvature < 0.0) {
            const double step = 0.5 * h * (fm - fp) / curvature;
            out.theta_star += std::clamp(step, -2.0 * h, 2.0 * h);
        }
    }

    const Spectrum sp =
        hermitian_eigen(build_omm(coeffs, symmetric_setup(m, out.theta_star)));
    out.value = sp.values[0];
    out.state = column_state(sp.vectors, 0, StateBasis::Computational).in_basis(StateBasis::Bell);
    return out;
}

double concurrence(const TwoQubitState& s) {
    if (std::abs(s.norm() - 1.0) > 1e-10) {
        throw NotNormalized("concurrence: state is not normalized");
    }
    const TwoQubitState c = s.in_basis(StateBasis::Computational);
    const auto& x = c.amplitudes;
    return 2.0 * std::abs(x[0] * x[3] - x[1] * x[2]);
}

double staggered_family_bound(double theta) {
    return 0.5 * (std::sqrt((3.0 - std::cos(4.0 * theta)) / 2.0) - 1.0);
}

O22GlobalMax o22_global_max(int grid) {
    if (grid < 2) throw InvalidRange("o22_global_max: grid must be at least 2");

    const auto value = [](double a, double b, double g, double d) {
        const double s = std::abs(std::sin(a - b) * std::sin(g - d));
        return 0.5 * (std::sqrt(1.0 + s) - 1.0);
    };

    // Full grid^4 scan over [-pi, pi)^4. The spectrum depends on the two
    // angle differences, so tabulating |sin(a_i - a_j)| once covers the grid.
    const double pi = std::acos(-1.0);
    std::vector<double> angle(grid);
    for (int k = 0; k < grid; ++k) angle[k] = -pi + 2.0 * pi * k / grid;
    std::vector<double> sin_diff(static_cast<std::size_t>(grid) * grid);
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            sin_diff[static_cast<std::size_t>(i) * grid + j] = std::abs(std::sin(angle[i] - angle[j]));

    double best_prod = -1.0;
    int bi = 0, bj = 0, bk = 0, bl = 0;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            const double left = sin_diff[static_cast<std::size_t>(i) * grid + j];
            for (int k = 0; k < grid; ++k)
                for (int l = 0; l < grid; ++l) {
                    const double prod = left * sin_diff[static_cast<std::size_t>(k) * grid + l];
                    if (prod > best_prod) {
                        best_prod = prod;
                        bi = i; bj = j; bk = k; bl = l;
                    }
                }
        }

    O22GlobalMax out;
    out.angles = {angle[bi], angle[bj], angle[bk], angle[bl]};
    out.scan_max = 0.5 * (std::sqrt(1.0 + best_prod) - 1.0);

    // Cyclic coordinate refinement around the scan optimum.
    const double h = 2.0 * pi / grid;
    for (int round = 0; round < 4; ++round) {
        for (int c = 0; c < 4; ++c) {
            auto line = [&](double x) {
                std::array<double, 4> a = out.angles;
                a[c] = x;
                return value(a[0], a[1], a[2], a[3]);
            };
            out.angles[c] = golden_max(line, out.angles[c] - h, out.angles[c] + h, 1e-12);
        }
    }
    out.value = value(out.angles[0], out.angles[1], out.angles[2], out.angles[3]);
    return out;
}

}  // namespace qbound
