// Acceptance suite: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion. The CLI binary path is expected as argv[1]
// for the determinism checks. Exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbound/classical.hpp"
#include "qbound/cubic.hpp"
#include "qbound/eigen.hpp"
#include "qbound/operators.hpp"
#include "qbound/spectra.hpp"
#include "qbound/state.hpp"
#include "qbound/stateprep.hpp"

using namespace qbound;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%-4s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

double urand(std::mt19937& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

ComplexMatrix random_hermitian3(std::mt19937& rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(3);
    for (int i = 0; i < 3; ++i) {
        m(i, i) = g(rng);
        for (int j = i + 1; j < 3; ++j) {
            const cplx z(g(rng), g(rng));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

// ---- criteria ----

void criterion_1() {
    Timer timer;
    const double bound = 0.5 * (std::sqrt(2.0) - 1.0);
    const O22GlobalMax g = o22_global_max(64);
    bool ok = std::abs(g.value - bound) <= 1e-6 && g.value <= bound + 1e-9 &&
              g.scan_max <= g.value + 1e-12;

    std::mt19937 rng(1001);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const double theta = urand(rng, -M_PI, M_PI);
        const auto v = o22_eigenvalues(0.0, 2.0 * theta, theta, 3.0 * theta);
        worst = std::max(worst, std::abs(v[0] - staggered_family_bound(theta)));
    }
    ok = ok && worst <= 1e-10;

    const double elapsed = timer.seconds();
    ok = ok && elapsed < 10.0;
    report(1, "two-setting quantum bound (global search + family formula)", ok,
           "max=" + fmt(g.value) + " family dev=" + fmt(worst) + " time=" + fmt(elapsed) + "s");
}

void criterion_2() {
    Timer timer;
    const MaxViolation mv = max_violation(3, {0.0, M_PI});
    TwoQubitState psi_max;
    psi_max.basis = StateBasis::Bell;
    psi_max.amplitudes = {0.0, 0.5, 0.0, std::sqrt(3.0) / 2.0};
    const double ov = std::abs(overlap(psi_max, mv.state));
    const double elapsed = timer.seconds();
    const bool ok = std::abs(mv.theta_star - M_PI / 3.0) <= 1e-8 &&
                    std::abs(mv.value - 0.25) <= 1e-9 && ov >= 1.0 - 1e-8 && elapsed < 1.0;
    report(2, "three-setting maximum at theta=pi/3", ok,
           "theta*=" + fmt(mv.theta_star) + " value=" + fmt(mv.value) + " overlap=" + fmt(ov) +
               " time=" + fmt(elapsed) + "s");
}

void criterion_3() {
    std::mt19937 rng(1003);
    const InequalityCoeffs coeffs = imm_coeffs(3);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const double theta = urand(rng, 0.0, 2.0 * M_PI);
        const Spectrum sp = hermitian_eigen(build_omm(coeffs, symmetric_setup(3, theta)));
        double nearest = 1e9;
        for (double v : sp.values)
            nearest = std::min(nearest, std::abs(v + std::sin(theta) * std::sin(theta)));
        worst = std::max(worst, nearest);
    }
    report(3, "decoupled -sin^2(theta) eigenvalue branch", worst <= 1e-12,
           "worst dev=" + fmt(worst));
}

void criterion_4() {
    std::mt19937 rng(1004);
    const InequalityCoeffs coeffs = imm_coeffs(3);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const double theta = urand(rng, -M_PI, M_PI);
        const ComplexMatrix built = to_bell_basis(build_omm(coeffs, symmetric_setup(3, theta)));
        const ComplexMatrix closed = o33_explicit(theta);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                worst = std::max(worst, std::abs(built(i, j) - closed(i, j)));
    }
    report(4, "constructed operator matches the closed-form Bell matrix", worst <= 1e-12,
           "worst entry dev=" + fmt(worst));
}

void criterion_5() {
    Timer timer;
    bool ok = true;
    std::string detail;

    const ClassicalRange ch = classical_range(imm_coeffs(2));
    ok = ok && ch.min == -1 && ch.max == 0;
    detail += "CH=(" + std::to_string(ch.min) + "," + std::to_string(ch.max) + ")";

    for (int m = 2; m <= 6; ++m) {
        const ClassicalRange r = classical_range(imm_coeffs(m));
        ok = ok && r.max == 0;
        if (m == 6) detail += " m=6 vertices=" + std::to_string(1u << (2 * m));
    }
    const double elapsed = timer.seconds();
    ok = ok && elapsed < 1.0;
    report(5, "classical certification by vertex enumeration", ok,
           detail + " time=" + fmt(elapsed) + "s");
}

void criterion_6() {
    std::mt19937 rng(1006);
    double worst_o22 = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const double a = urand(rng, -M_PI, M_PI);
        const double b = urand(rng, -M_PI, M_PI);
        const double g = urand(rng, -M_PI, M_PI);
        const double d = urand(rng, -M_PI, M_PI);
        const auto closed = o22_eigenvalues(a, b, g, d);
        const Spectrum sp = hermitian_eigen(build_o22(a, b, g, d));
        for (int k = 0; k < 4; ++k)
            worst_o22 = std::max(worst_o22, std::abs(closed[k] - sp.values[k]));
    }

    double worst_cubic = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const ComplexMatrix block = random_hermitian3(rng);
        const auto roots = cardano_roots(cubic_from_block(block));
        const Spectrum sp = hermitian_eigen(block);
        for (int k = 0; k < 3; ++k)
            worst_cubic = std::max(worst_cubic, std::abs(roots[k] - sp.values[k]));
    }
    const bool ok = worst_o22 <= 1e-10 && worst_cubic <= 1e-9;
    report(6, "closed forms agree with the Jacobi eigensolver", ok,
           "o22 dev=" + fmt(worst_o22) + " cubic dev=" + fmt(worst_cubic));
}

void criterion_7() {
    std::mt19937 rng(1007);
    int fallbacks = 0;
    double worst_conc = 0.0;
    for (int t = 0; t < 500; ++t) {
        const O22Eigensystem es =
            o22_eigenvectors(urand(rng, -M_PI, M_PI), urand(rng, -M_PI, M_PI),
                             urand(rng, -M_PI, M_PI), urand(rng, -M_PI, M_PI));
        if (!es.closed_form) {
            ++fallbacks;
            continue;
        }
        for (int k = 0; k < 4; ++k)
            worst_conc = std::max(worst_conc, std::abs(concurrence(es.states[k]) - 1.0));
    }
    bool ok = worst_conc <= 1e-8;

    const Spectrum sp = hermitian_eigen(build_omm(imm_coeffs(3), symmetric_setup(3, M_PI / 2.0)));
    TwoQubitState top;
    top.basis = StateBasis::Computational;
    for (int k = 0; k < 4; ++k) top.amplitudes[k] = sp.vectors(k, 0);
    const TwoQubitState bell = top.in_basis(StateBasis::Bell);
    const double sign = bell.amplitudes[1].real() > 0 ? 1.0 : -1.0;
    const double d1 = std::abs(sign * bell.amplitudes[1].real() - 0.86);
    const double d2 = std::abs(sign * bell.amplitudes[2].real() - 0.17);
    const double d3 = std::abs(sign * bell.amplitudes[3].real() - 0.47);
    const double conc = concurrence(top);
    ok = ok && d1 <= 5e-3 && d2 <= 5e-3 && d3 <= 5e-3 && conc < 1.0 - 1e-3;

    report(7, "entanglement diagnostics of maximal eigenstates", ok,
           "conc dev=" + fmt(worst_conc) + " fallbacks=" + std::to_string(fallbacks) +
               " pi/2 amp devs=(" + fmt(d1) + "," + fmt(d2) + "," + fmt(d3) + ") conc=" +
               fmt(conc));
}

void criterion_8() {
    // local rotation of |psi+> onto the m=3 maximal eigenstate
    const ComplexMatrix u = su2(Su2Params{2.0 * M_PI / 3.0, M_PI / 2.0, M_PI / 2.0});
    const TwoQubitState rotated = apply_local(u, ComplexMatrix::identity(2), psi_plus());
    TwoQubitState psi_max;
    psi_max.basis = StateBasis::Bell;
    psi_max.amplitudes = {0.0, 0.5, 0.0, std::sqrt(3.0) / 2.0};
    const double ov = std::abs(overlap(rotated, psi_max));
    bool ok = ov >= 1.0 - 1e-10;

    // beam-splitter parameters of the theta=pi/2 maximal eigenstate. The
    // two-decimal reference (1.23, 2.46, 0.60) belongs to the exact
    // eigenstate; solving the literally-rounded display vector instead
    // amplifies its rounding past 5e-3, which is reported alongside.
    const Spectrum sp = hermitian_eigen(build_omm(imm_coeffs(3), symmetric_setup(3, M_PI / 2.0)));
    std::array<double, 4> exact{};
    double n2 = 0.0;
    for (int k = 0; k < 4; ++k) {
        exact[k] = sp.vectors(k, 0).real();
        n2 += exact[k] * exact[k];
    }
    for (double& t : exact) t /= std::sqrt(n2);
    const MultiportParams mp = multiport_solve(exact);
    const double w1 = std::abs(mp.omega[0] - 1.23);
    const double w2 = std::abs(mp.omega[1] - 2.46);
    const double w3 = std::abs(mp.omega[2] - 0.60);
    ok = ok && w1 <= 5e-3 && w2 <= 5e-3 && w3 <= 5e-3;

    std::array<double, 4> rounded{0.34, 0.73, 0.49, -0.34};
    double rn2 = 0.0;
    for (double t : rounded) rn2 += t * t;
    for (double& t : rounded) t /= std::sqrt(rn2);
    const MultiportParams mp_rounded = multiport_solve(rounded);

    std::mt19937 rng(1008);
    double worst_rt = 0.0;
    int tested = 0;
    while (tested < 1000) {
        const double a = urand(rng, -M_PI, M_PI);
        const double b = urand(rng, -M_PI, M_PI);
        const double c = urand(rng, -M_PI, M_PI);
        if (std::abs(std::sin(a)) < 1e-3 || std::abs(std::sin(b)) < 1e-3) continue;
        ++tested;
        const auto amp = multiport_forward(MultiportParams{{a, b, c}, {0.0, 0.0, 0.0}});
        std::array<double, 4> target{};
        for (int k = 0; k < 4; ++k) target[k] = amp[k].real();
        const auto again = multiport_forward(multiport_solve(target));
        for (int k = 0; k < 4; ++k) worst_rt = std::max(worst_rt, std::abs(again[k] - amp[k]));
    }
    ok = ok && worst_rt <= 1e-9;

    report(8, "state preparation (local rotation + beam-splitter cascade)", ok,
           "overlap=" + fmt(ov) + " omega devs=(" + fmt(w1) + "," + fmt(w2) + "," + fmt(w3) +
               ") roundtrip=" + fmt(worst_rt) + " [rounded-input omegas: " +
               fmt(mp_rounded.omega[0]) + "," + fmt(mp_rounded.omega[1]) + "," +
               fmt(mp_rounded.omega[2]) + "]");
}

void criterion_9() {
    double worst = 0.0;
    for (int m = 2; m <= 6; ++m) {
        const InequalityCoeffs coeffs = imm_coeffs(m);
        for (int k = 0; k < 100; ++k) {
            const double theta = 0.005 + (M_PI - 0.01) * k / 99.0;
            const ComplexMatrix bell = to_bell_basis(build_omm(coeffs, symmetric_setup(m, theta)));
            for (int j = 1; j < 4; ++j) {
                worst = std::max(worst, std::abs(bell(0, j)));
                worst = std::max(worst, std::abs(bell(j, 0)));
            }
        }
    }
    report(9, "Bell-basis block structure for symmetric setups", worst <= 1e-12,
           "worst coupling=" + fmt(worst));
}

void criterion_10() {
    // Frozen family maxima (first computed by this code base):
    const double frozen_theta[] = {M_PI / 2.0, M_PI / 3.0, 0.677355292725076,
                                   0.398688318987245, 0.196514831127487};
    const double frozen_value[] = {0.5 * (std::sqrt(2.0) - 1.0), 0.25, 0.182567945193211,
                                   0.083419870610349, 0.015161928877475};

    bool curve_ok = true;
    double worst_curve = 0.0;
    std::vector<double> maxima;
    for (int m = 2; m <= 6; ++m) {
        const auto points = sweep(m, 1e-3, M_PI - 1e-3, 499);
        double peak = points[0].eigenvalues[0];
        for (const auto& p : points) {
            peak = std::max(peak, p.eigenvalues[0]);
            if (m == 2) {
                const double expected =
                    0.5 * (std::sqrt(1.0 + std::sin(p.theta) * std::sin(p.theta)) - 1.0);
                worst_curve = std::max(worst_curve, std::abs(p.eigenvalues[0] - expected));
            }
        }
        maxima.push_back(peak);
    }
    curve_ok = worst_curve <= 1e-10;

    bool regression_ok = true;
    for (int m = 4; m <= 6; ++m) {
        const MaxViolation mv = max_violation(m, {0.0, M_PI});
        regression_ok = regression_ok && std::abs(mv.theta_star - frozen_theta[m - 2]) <= 1e-5 &&
                        std::abs(mv.value - frozen_value[m - 2]) <= 1e-8;
        // the sweep never exceeds the recorded maximum
        regression_ok = regression_ok && maxima[m - 2] <= frozen_value[m - 2] + 1e-8;
    }

    bool monotone = true;
    std::string seq;
    for (std::size_t k = 0; k < maxima.size(); ++k) {
        if (k > 0 && maxima[k] < maxima[k - 1] - 1e-12) monotone = false;
        seq += (k ? "," : "") + fmt(maxima[k]);
    }

    const bool ok = curve_ok && regression_ok && monotone;
    std::string detail = "m=2 curve dev=" + fmt(worst_curve) + " maxima=[" + seq + "]";
    if (!monotone) {
        detail +=
            " (peak heights decrease beyond m=3: the symmetric-setup violation is largest at "
            "m=3, so the non-decreasing expectation does not hold for this family)";
    }
    report(10, "family sweep regression", ok, detail);
}

// ---- CLI determinism ----

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

int run_cli(const std::string& cli, const std::string& args, const std::string& outfile) {
    const std::string cmd = shell_quote(cli) + " " + args + " > " + shell_quote(outfile) + " 2>&1";
    return std::system(cmd.c_str());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_11(const std::string& cli) {
    if (cli.empty()) {
        report(11, "CLI determinism", false, "no CLI path given on the command line");
        return;
    }
    const std::vector<std::string> commands = {
        "bound --m 3 --theta 1.0471975512",
        "sweep --m 3 --theta-min 0 --theta-max 6.2832 --steps 629 --format csv",
        "sweep --m 6 --theta-min 0.01 --theta-max 3.13 --steps 101 --max-only --format csv",
        "maximize --m 3",
        "classical --m 4",
        "prepare --m 3 --theta 1.5707963268",
        "multiport --target 0.34,0.73,0.49,-0.34 --precision 2",
        "multiport --target 0.34,0.73,0.49,-0.34 --precision 2 --format json",
    };
    bool ok = true;
    std::string detail;
    const std::string dir = "acceptance_cli_tmp";
    if (std::system(("mkdir -p " + shell_quote(dir)).c_str()) != 0) {
        report(11, "CLI determinism", false, "could not create scratch directory");
        return;
    }
    for (std::size_t k = 0; k < commands.size(); ++k) {
        const std::string f1 = dir + "/out_a_" + std::to_string(k);
        const std::string f2 = dir + "/out_b_" + std::to_string(k);
        const int r1 = run_cli(cli, commands[k], f1);
        const int r2 = run_cli(cli, commands[k], f2);
        const std::string o1 = slurp(f1);
        const std::string o2 = slurp(f2);
        if (r1 != 0 || r2 != 0 || o1.empty() || o1 != o2) {
            ok = false;
            detail += " cmd[" + std::to_string(k) + "] nondeterministic or failed;";
        }
    }

    // spot-check the reported numbers of the first command
    const std::string bound_out = slurp(dir + "/out_a_0");
    try {
        const auto j = nlohmann::json::parse(bound_out);
        const double qb = j.at("results").at(0).at("quantum_bound").get<double>();
        const long long cm = j.at("results").at(0).at("classical_max").get<long long>();
        if (std::abs(qb - 0.25) > 1e-9 || cm != 0) {
            ok = false;
            detail += " bound report mismatch (qb=" + fmt(qb) + ");";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail += std::string(" bound JSON parse failed: ") + e.what();
    }

    // sweep CSV shape: header plus 629 records
    const std::string sweep_out = slurp(dir + "/out_a_1");
    std::size_t lines = 0;
    for (char ch : sweep_out)
        if (ch == '\n') ++lines;
    if (lines != 630 ||
        sweep_out.rfind("theta,lambda1,lambda2,lambda3,lambda4,concurrence\n", 0) != 0) {
        ok = false;
        detail += " sweep CSV shape mismatch;";
    }

    report(11, "CLI determinism and report shapes", ok, detail.empty() ? "8 commands, byte-identical reruns" : detail);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11(cli);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
