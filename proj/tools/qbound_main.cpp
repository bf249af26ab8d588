// qbound: quantum vs. classical bounds of Bell-type inequalities.
//
// Subcommands build the inequality operators, report quantum bounds next to
// the exact classical ones, sweep the spectrum over the relative angle,
// maximize violations, and solve the state-preparation problems for the
// maximally violating eigenstates.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbound/classical.hpp"
#include "qbound/eigen.hpp"
#include "qbound/errors.hpp"
#include "qbound/operators.hpp"
#include "qbound/spectra.hpp"
#include "qbound/state.hpp"
#include "qbound/stateprep.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Options {
    int m = 2;
    int precision = 12;
    std::string format;  // empty = per-command default
    std::string output = "-";
    bool degrees = false;

    std::optional<double> theta;
    std::vector<double> angles;
    double theta_min = 0.0;
    double theta_max = std::numbers::pi;
    int steps = 181;
    bool max_only = false;
    std::vector<double> bracket{0.0, std::numbers::pi};
    std::vector<double> target;
};

// Locale-independent fixed-decimal formatting; the same value always renders
// to the same bytes.
std::string format_fixed(double v, int precision) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

// Fixed formatting with trailing zeros (and a dangling point) removed.
std::string format_trimmed(double v, int precision) {
    std::string s = format_fixed(v, precision);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return s;
}

// Round to the configured number of decimals so that JSON output carries the
// same fixed-precision values as the CSV output.
double json_number(double v, int precision) {
    return std::strtod(format_fixed(v, precision).c_str(), nullptr);
}

json complex_pair(qbound::cplx z, int precision) {
    return json::array({json_number(z.real(), precision), json_number(z.imag(), precision)});
}

json state_json(const qbound::TwoQubitState& s, int precision) {
    json arr = json::array();
    for (const auto& a : s.amplitudes) arr.push_back(complex_pair(a, precision));
    return arr;
}

void emit(const Options& opt, const std::string& payload) {
    if (opt.output == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw qbound::Error("cannot open output file: " + opt.output);
    out << payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

double to_radians(double v, bool degrees) {
    return degrees ? v * std::numbers::pi / 180.0 : v;
}

std::string effective_format(const Options& opt, const std::string& fallback) {
    return opt.format.empty() ? fallback : opt.format;
}

[[noreturn]] void reject_format(const std::string& command, const std::string& format) {
    throw CLI::ValidationError(command, "unsupported --format '" + format + "'");
}

// Resolve the measurement angles for an operator command: either the
// symmetric setup {0, theta, ..., (m-1) theta}, or an explicit list of m
// angles (used for both sides) or 2m angles (left side then right side).
qbound::AngleSetup resolve_setup(const Options& opt) {
    if (!opt.angles.empty()) {
        const int m = opt.m;
        std::vector<double> a;
        a.reserve(opt.angles.size());
        for (double v : opt.angles) a.push_back(to_radians(v, opt.degrees));
        if (static_cast<int>(a.size()) == m) {
            return qbound::AngleSetup{a, a};
        }
        if (static_cast<int>(a.size()) == 2 * m) {
            return qbound::AngleSetup{{a.begin(), a.begin() + m}, {a.begin() + m, a.end()}};
        }
        throw CLI::ValidationError("--angles", "expected m or 2m angles");
    }
    const double theta = to_radians(opt.theta.value_or(0.0), opt.degrees);
    return qbound::symmetric_setup(opt.m, theta);
}

json config_echo(const Options& opt, const std::string& command) {
    json cfg;
    cfg["command"] = command;
    cfg["m"] = opt.m;
    cfg["precision"] = opt.precision;
    return cfg;
}

int run_bound(const Options& opt) {
    const std::string fmt = effective_format(opt, "json");
    if (fmt != "json") reject_format("bound", fmt);

    const qbound::AngleSetup setup = resolve_setup(opt);
    const qbound::InequalityCoeffs coeffs = qbound::imm_coeffs(opt.m);
    const qbound::ComplexMatrix op = qbound::build_omm(coeffs, setup);
    const qbound::Spectrum sp = qbound::hermitian_eigen(op);
    const qbound::ClassicalRange cls = qbound::classical_range(coeffs);

    qbound::TwoQubitState top;
    top.basis = qbound::StateBasis::Computational;
    for (int k = 0; k < 4; ++k) top.amplitudes[k] = sp.vectors(k, 0);

    json cfg = config_echo(opt, "bound");
    if (opt.theta) cfg["theta"] = json_number(to_radians(*opt.theta, opt.degrees), opt.precision);
    json angles = json::array();
    for (double a : setup.left) angles.push_back(json_number(a, opt.precision));
    for (double a : setup.right) angles.push_back(json_number(a, opt.precision));
    cfg["angles"] = angles;

    json result;
    result["quantum_bound"] = json_number(sp.values[0], opt.precision);
    json eigs = json::array();
    for (double v : sp.values) eigs.push_back(json_number(v, opt.precision));
    result["eigenvalues"] = eigs;
    result["classical_max"] = cls.max;
    result["classical_min"] = cls.min;
    result["violation"] = json_number(std::max(0.0, sp.values[0] - cls.max), opt.precision);
    result["concurrence_top"] = json_number(qbound::concurrence(top), opt.precision);

    json out;
    out["config"] = cfg;
    out["results"] = json::array({result});
    emit(opt, dump(out));
    return 0;
}

int run_classical(const Options& opt) {
    const std::string fmt = effective_format(opt, "json");
    if (fmt != "json") reject_format("classical", fmt);

    const qbound::InequalityCoeffs coeffs = qbound::imm_coeffs(opt.m);
    const qbound::ClassicalRange cls = qbound::classical_range(coeffs);

    json result;
    result["vertex_count"] = 1u << (2 * opt.m);
    result["min"] = cls.min;
    result["max"] = cls.max;
    result["upper_bound"] = coeffs.upper;
    if (coeffs.lower) {
        result["lower_bound"] = *coeffs.lower;
    } else {
        result["lower_bound"] = nullptr;
    }
    json left = json::array();
    json right = json::array();
    for (auto b : cls.argmax.bits_left) left.push_back(static_cast<int>(b));
    for (auto b : cls.argmax.bits_right) right.push_back(static_cast<int>(b));
    result["argmax_left"] = left;
    result["argmax_right"] = right;

    json out;
    out["config"] = config_echo(opt, "classical");
    out["results"] = json::array({result});
    emit(opt, dump(out));
    return 0;
}

int run_sweep(const Options& opt) {
    const std::string fmt = effective_format(opt, "csv");
    if (fmt != "csv" && fmt != "json") reject_format("sweep", fmt);

    const double lo = to_radians(opt.theta_min, opt.degrees);
    const double hi = to_radians(opt.theta_max, opt.degrees);

    if (opt.max_only) {
        // One column per settings count: the top eigenvalue against theta.
        std::vector<std::vector<qbound::SweepPoint>> curves;
        for (int mm = 2; mm <= opt.m; ++mm) curves.push_back(qbound::sweep(mm, lo, hi, opt.steps));

        if (fmt == "csv") {
            std::string payload = "theta";
            for (int mm = 2; mm <= opt.m; ++mm) payload += ",max_m" + std::to_string(mm);
            payload += "\n";
            for (int k = 0; k < opt.steps; ++k) {
                payload += format_fixed(curves[0][k].theta, opt.precision);
                for (const auto& curve : curves)
                    payload += "," + format_fixed(curve[k].eigenvalues[0], opt.precision);
                payload += "\n";
            }
            emit(opt, payload);
            return 0;
        }
        json rows = json::array();
        for (int k = 0; k < opt.steps; ++k) {
            json row;
            row["theta"] = json_number(curves[0][k].theta, opt.precision);
            json maxima = json::array();
            for (const auto& curve : curves)
                maxima.push_back(json_number(curve[k].eigenvalues[0], opt.precision));
            row["max"] = maxima;
            rows.push_back(row);
        }
        json cfg = config_echo(opt, "sweep");
        cfg["theta_min"] = json_number(lo, opt.precision);
        cfg["theta_max"] = json_number(hi, opt.precision);
        cfg["steps"] = opt.steps;
        cfg["max_only"] = true;
        json out;
        out["config"] = cfg;
        out["results"] = rows;
        emit(opt, dump(out));
        return 0;
    }

    const std::vector<qbound::SweepPoint> points = qbound::sweep(opt.m, lo, hi, opt.steps);
    if (fmt == "csv") {
        std::string payload = "theta,lambda1,lambda2,lambda3,lambda4,concurrence\n";
        for (const auto& p : points) {
            payload += format_fixed(p.theta, opt.precision);
            for (double v : p.eigenvalues) payload += "," + format_fixed(v, opt.precision);
            payload += "," + format_fixed(p.max_entanglement, opt.precision);
            payload += "\n";
        }
        emit(opt, payload);
        return 0;
    }
    json rows = json::array();
    for (const auto& p : points) {
        json row;
        row["theta"] = json_number(p.theta, opt.precision);
        json eigs = json::array();
        for (double v : p.eigenvalues) eigs.push_back(json_number(v, opt.precision));
        row["eigenvalues"] = eigs;
        row["concurrence"] = json_number(p.max_entanglement, opt.precision);
        rows.push_back(row);
    }
    json cfg = config_echo(opt, "sweep");
    cfg["theta_min"] = json_number(lo, opt.precision);
    cfg["theta_max"] = json_number(hi, opt.precision);
    cfg["steps"] = opt.steps;
    json out;
    out["config"] = cfg;
    out["results"] = rows;
    emit(opt, dump(out));
    return 0;
}

int run_maximize(const Options& opt) {
    const std::string fmt = effective_format(opt, "json");
    if (fmt != "json") reject_format("maximize", fmt);
    if (opt.bracket.size() != 2) throw CLI::ValidationError("--bracket", "expected two values");

    const double lo = to_radians(opt.bracket[0], opt.degrees);
    const double hi = to_radians(opt.bracket[1], opt.degrees);
    const qbound::MaxViolation mv = qbound::max_violation(opt.m, {lo, hi});
    const qbound::ClassicalRange cls = qbound::classical_range(qbound::imm_coeffs(opt.m));

    json cfg = config_echo(opt, "maximize");
    cfg["bracket"] = json::array({json_number(lo, opt.precision), json_number(hi, opt.precision)});

    json result;
    result["theta_star"] = json_number(mv.theta_star, opt.precision);
    result["value"] = json_number(mv.value, opt.precision);
    result["classical_max"] = cls.max;
    result["violation"] = json_number(std::max(0.0, mv.value - cls.max), opt.precision);
    result["state_basis"] = "bell";
    result["amplitudes"] = state_json(mv.state, opt.precision);
    result["concurrence"] = json_number(qbound::concurrence(mv.state), opt.precision);

    json out;
    out["config"] = cfg;
    out["results"] = json::array({result});
    emit(opt, dump(out));
    return 0;
}

int run_prepare(const Options& opt) {
    const std::string fmt = effective_format(opt, "json");
    if (fmt != "json") reject_format("prepare", fmt);

    // Target the top eigenvector at the given angle, or at the violation
    // maximum when no angle was supplied.
    double theta;
    if (opt.theta) {
        theta = to_radians(*opt.theta, opt.degrees);
    } else {
        theta = qbound::max_violation(opt.m, {0.0, std::numbers::pi}).theta_star;
    }
    const qbound::Spectrum sp = qbound::hermitian_eigen(
        qbound::build_omm(qbound::imm_coeffs(opt.m), qbound::symmetric_setup(opt.m, theta)));

    qbound::TwoQubitState comp;
    comp.basis = qbound::StateBasis::Computational;
    for (int k = 0; k < 4; ++k) comp.amplitudes[k] = sp.vectors(k, 0);
    const qbound::TwoQubitState bell = comp.in_basis(qbound::StateBasis::Bell);
    const double conc = qbound::concurrence(comp);

    // Operators with x-z-plane angles are real symmetric, so the eigenvector
    // is real up to roundoff and the beam-splitter identification applies.
    std::array<double, 4> target{};
    double norm2 = 0.0;
    for (int k = 0; k < 4; ++k) {
        target[k] = comp.amplitudes[k].real();
        norm2 += target[k] * target[k];
    }
    for (double& t : target) t /= std::sqrt(norm2);
    const qbound::MultiportParams mp = qbound::multiport_solve(target);

    json cfg = config_echo(opt, "prepare");
    cfg["theta"] = json_number(theta, opt.precision);

    json result;
    result["quantum_bound"] = json_number(sp.values[0], opt.precision);
    result["state_bell"] = state_json(bell, opt.precision);
    result["state_computational"] = state_json(comp, opt.precision);
    result["concurrence"] = json_number(conc, opt.precision);
    result["maximally_entangled"] = conc > 1.0 - 1e-9;
    json mpj;
    mpj["omega"] = json::array({json_number(mp.omega[0], opt.precision),
                                json_number(mp.omega[1], opt.precision),
                                json_number(mp.omega[2], opt.precision)});
    mpj["phi"] = json::array({json_number(mp.phi[0], opt.precision),
                              json_number(mp.phi[1], opt.precision),
                              json_number(mp.phi[2], opt.precision)});
    result["multiport"] = mpj;

    json out;
    out["config"] = cfg;
    out["results"] = json::array({result});
    emit(opt, dump(out));
    return 0;
}

int run_multiport(const Options& opt) {
    const std::string fmt = effective_format(opt, "text");
    if (fmt != "text" && fmt != "json") reject_format("multiport", fmt);
    if (opt.target.size() != 4) throw CLI::ValidationError("--target", "expected four amplitudes");

    std::array<double, 4> target{};
    double norm2 = 0.0;
    for (int k = 0; k < 4; ++k) {
        target[k] = opt.target[k];
        norm2 += target[k] * target[k];
    }
    const double norm = std::sqrt(norm2);
    if (norm < 1e-12) throw qbound::Error("multiport: target has zero norm");
    for (double& t : target) t /= norm;

    const qbound::MultiportParams mp = qbound::multiport_solve(target);

    if (fmt == "text") {
        std::string line = "omega=";
        for (int k = 0; k < 3; ++k) {
            if (k) line += ",";
            line += format_fixed(mp.omega[k], opt.precision);
        }
        line += " phi=";
        for (int k = 0; k < 3; ++k) {
            if (k) line += ",";
            line += format_trimmed(mp.phi[k], opt.precision);
        }
        emit(opt, line + "\n");
        return 0;
    }

    json cfg = config_echo(opt, "multiport");
    json tj = json::array();
    for (double t : target) tj.push_back(json_number(t, opt.precision));
    cfg["target"] = tj;

    json result;
    result["omega"] = json::array({json_number(mp.omega[0], opt.precision),
                                   json_number(mp.omega[1], opt.precision),
                                   json_number(mp.omega[2], opt.precision)});
    result["phi"] = json::array({json_number(mp.phi[0], opt.precision),
                                 json_number(mp.phi[1], opt.precision),
                                 json_number(mp.phi[2], opt.precision)});
    json fwd = json::array();
    for (const auto& a : qbound::multiport_forward(mp)) fwd.push_back(complex_pair(a, opt.precision));
    result["forward"] = fwd;

    json out;
    out["config"] = cfg;
    out["results"] = json::array({result});
    emit(opt, dump(out));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum and classical bounds of Bell-type inequalities"};
    app.require_subcommand(1);

    Options opt;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--precision", opt.precision, "Decimal places in reports")
            ->check(CLI::Range(1, 17))
            ->capture_default_str();
        sub->add_option("--format", opt.format, "Output format (csv, json or text)")
            ->check(CLI::IsMember({"csv", "json", "text"}));
        sub->add_option("--output,-o", opt.output, "Output file, '-' for stdout")
            ->capture_default_str();
        sub->add_flag("--degrees", opt.degrees, "Interpret input angles as degrees");
    };
    const auto add_m = [&](CLI::App* sub) {
        sub->add_option("--m", opt.m, "Measurement settings per side")
            ->check(CLI::Range(2, 8))
            ->capture_default_str();
    };

    CLI::App* bound = app.add_subcommand("bound", "Quantum vs. classical bound of one setup");
    add_m(bound);
    bound->add_option("--theta", opt.theta, "Relative angle of the symmetric setup (radians)");
    bound->add_option("--angles", opt.angles,
                      "Explicit angle list: m values (both sides) or 2m values (left,right)")
        ->delimiter(',');
    add_common(bound);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Spectrum over a theta grid");
    add_m(sweep_cmd);
    sweep_cmd->add_option("--theta-min", opt.theta_min, "Grid start")->capture_default_str();
    sweep_cmd->add_option("--theta-max", opt.theta_max, "Grid end")->capture_default_str();
    sweep_cmd->add_option("--steps", opt.steps, "Grid points")->capture_default_str();
    sweep_cmd->add_flag("--max-only", opt.max_only,
                        "Emit only the top eigenvalue, one column per m in 2..m");
    add_common(sweep_cmd);

    CLI::App* maximize = app.add_subcommand("maximize", "Maximize the violation over theta");
    add_m(maximize);
    maximize->add_option("--bracket", opt.bracket, "Search bracket (two values)")
        ->delimiter(',')
        ->expected(2);
    add_common(maximize);

    CLI::App* classical = app.add_subcommand("classical", "Exact classical range by enumeration");
    add_m(classical);
    add_common(classical);

    CLI::App* prepare = app.add_subcommand("prepare", "Preparation data for the top eigenstate");
    add_m(prepare);
    prepare->add_option("--theta", opt.theta, "Relative angle (default: violation maximum)");
    add_common(prepare);

    CLI::App* multiport = app.add_subcommand("multiport", "Beam-splitter cascade for a target state");
    multiport->add_option("--target", opt.target, "Four real amplitudes (normalized internally)")
        ->delimiter(',')
        ->expected(4);
    add_common(multiport);

    try {
        app.parse(argc, argv);
        if (bound->parsed()) return run_bound(opt);
        if (sweep_cmd->parsed()) return run_sweep(opt);
        if (maximize->parsed()) return run_maximize(opt);
        if (classical->parsed()) return run_classical(opt);
        if (prepare->parsed()) return run_prepare(opt);
        if (multiport->parsed()) return run_multiport(opt);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const qbound::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
