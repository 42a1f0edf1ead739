#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "freqgap/identity.hpp"
#include "freqgap/oscillation.hpp"
#include "freqgap/profile.hpp"
#include "freqgap/solutions.hpp"

namespace {

using namespace freqgap;

constexpr double PI_2 = 1.5707963267948966;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string verdict_string(const GapVerdict& v) {
    switch (v.status) {
        case GapStatus::Excluded: return "excluded:" + std::to_string(v.k);
        case GapStatus::NotExcluded: return "not-excluded";
        case GapStatus::IntegerBoundary: return "integer";
        default: return "indeterminate";
    }
}

// Signs for display: analytic zeros print '0'; margin failures print '?'.
std::string sign_cell(double value, double err, bool analytic_zero) {
    if (analytic_zero) return "0";
    if (std::fabs(value) > 1000.0 * err) return value > 0 ? "+" : "-";
    return "?";
}

struct OutStream {
    std::ofstream file;
    std::ostream* os = &std::cout;

    // exit 1 on I/O failure per the external contract
    explicit OutStream(const std::string& path) {
        if (path.empty() || path == "-") return;
        file.open(path);
        if (!file) throw std::ios_base::failure("cannot open output file: " + path);
        os = &file;
    }
};

int cmd_scan(double lmin, double lmax, double step, int dim, const std::string& out) {
    if (!(step > 0.0)) throw std::invalid_argument("--step must be > 0");
    if (!(lmax >= lmin)) throw std::invalid_argument("--lambda-max must be >= --lambda-min");
    make_query(lmin, dim); // validates range and dimension up front

    OutStream o(out);
    *o.os << "lambda,n,p_half,dp_half,sign_p,sign_dp,verdict,zeros_p,crits_p,total\n";
    for (int i = 0;; ++i) {
        const double lam = lmin + step * i;
        if (lam > lmax + step * 1e-9) break;
        const ProfileQuery q = make_query(lam, dim);
        const EndpointValues ev = endpoint_values(q);
        const GapVerdict v = gap_verdict(q);
        const OscillationReport osc = find_special_points(q);
        const bool is_int = std::floor(lam) == lam;
        const bool odd = is_int && std::fmod(lam, 2.0) == 1.0;
        const bool even = is_int && !odd;
        *o.os << num(lam) << ',' << dim << ',' << num(ev.p_half) << ',' << num(ev.dp_half) << ','
              << sign_cell(ev.p_half, ev.err_p, odd) << ','
              << sign_cell(ev.dp_half, ev.err_dp, even) << ',' << verdict_string(v) << ','
              << osc.zeros.size() << ',' << osc.crits.size() << ',' << osc.total << '\n';
    }
    o.os->flush();
    return 0;
}

int cmd_certify(double lam, int dim) {
    const ProfileQuery q = make_query(lam, dim);
    const EndpointValues ev = endpoint_values(q);
    const GapVerdict v = gap_verdict(q);
    const bool is_int = std::floor(lam) == lam;
    const bool odd = is_int && std::fmod(lam, 2.0) == 1.0;

    std::cout << "lambda:  " << num(lam) << "\n";
    std::cout << "dim:     " << dim << "\n";
    std::cout << "p(pi/2):  " << num(ev.p_half) << "  (err " << num(ev.err_p) << ")\n";
    std::cout << "p'(pi/2): " << num(ev.dp_half) << "  (err " << num(ev.err_dp) << ")\n";
    std::cout << "signs:   (" << sign_cell(ev.p_half, ev.err_p, odd) << ","
              << sign_cell(ev.dp_half, ev.err_dp, is_int && !odd) << ")  product "
              << num(v.sign_product) << "  margin " << (v.margin_ok ? "ok" : "failed") << "\n";

    switch (v.status) {
        case GapStatus::Excluded:
            std::cout << "verdict: excluded: interval (" << 2 * v.k << "," << 2 * v.k + 1 << ")\n";
            return 0;
        case GapStatus::NotExcluded: {
            std::cout << "verdict: not excluded";
            // three-halves catalog frequencies: lambda = 2k + 3/2
            const double kk = (lam - 1.5) / 2.0;
            if (kk >= 0.0 && std::floor(kk) == kk)
                std::cout << " (" << num(lam) << " = 2*" << (long long)kk
                          << "+3/2 is a known frequency)";
            std::cout << "\n";
            return 0;
        }
        case GapStatus::IntegerBoundary:
            std::cout << "verdict: integer\n";
            return 0;
        default: {
            const bool near_int = !is_int && std::fabs(lam - std::nearbyint(lam)) < 1e-8;
            std::cout << "verdict: indeterminate (" << (near_int ? "near-integer" : "margin failure")
                      << ")\n";
            return 1;
        }
    }
}

int cmd_verify(double lambda_max, const std::vector<int>& dims, int samples) {
    for (const int n : dims)
        if (n < 2) throw InvalidDimension("dimension must be >= 2, got " + std::to_string(n));

    std::printf("%-14s %3s %8s %3s %14s %14s %12s  %s\n", "family", "k", "lambda", "n", "int_u",
                "int_un", "residual", "status");
    bool all_ok = true;
    std::string first_offender;
    for (const int n : dims) {
        for (const ExplicitSolution& sol : catalog(lambda_max, n)) {
            const char* fam = sol.family == Family::EvenPoly
                                  ? "even-poly"
                                  : (sol.family == Family::OddReflected ? "odd-reflected"
                                                                        : "three-halves");
            std::string status = "ok";
            double int_u = 0.0, int_un = 0.0, residual = 0.0;
            try {
                const CheckReport chk = check_solution(sol, samples);
                const EquatorIntegrals ints = equator_integrals(sol);
                const IdentityReport rep =
                    identity_report(endpoint_values(make_query(sol.lambda, sol.dim)), ints);
                int_u = ints.int_u;
                int_un = ints.int_un;
                residual = rep.residual_rel;
                if (!chk.passed) status = "check-failed";
                if (!rep.pass) status = "identity-failed";
            } catch (const CheckFailed& e) {
                status = std::string("check-failed: ") + e.report.first_violation.check;
            } catch (const Error& e) {
                status = std::string("error: ") + e.what();
            }
            if (status != "ok" && all_ok) {
                all_ok = false;
                first_offender = std::string(fam) + " k=" + std::to_string(sol.k) +
                                 " n=" + std::to_string(n) + ": " + status;
            }
            std::printf("%-14s %3d %8.4g %3d %14.6g %14.6g %12.3e  %s\n", fam, sol.k, sol.lambda,
                        n, int_u, int_un, residual, status.c_str());
        }
    }
    if (!all_ok) {
        std::cout << "FAILED: " << first_offender << "\n";
        return 1;
    }
    std::cout << "all solutions verified\n";
    return 0;
}

int cmd_export(double lam, int dim, int points, const std::string& format,
               const std::string& out) {
    if (points < 2) throw std::invalid_argument("--points must be >= 2");
    if (format != "csv" && format != "svg")
        throw std::invalid_argument("--format must be csv or svg");
    const ProfileQuery q = make_query(lam, dim);

    std::vector<double> phi(points), p(points), dp(points);
    for (int i = 0; i < points; ++i) {
        phi[i] = PI_2 * i / (points - 1);
        const ProfilePoint pt = eval_profile(q, phi[i], Method::Series);
        p[i] = pt.p;
        dp[i] = pt.dp;
    }

    OutStream o(out);
    if (format == "csv") {
        *o.os << "phi,p,dp\n";
        for (int i = 0; i < points; ++i)
            *o.os << num(phi[i]) << ',' << num(p[i]) << ',' << num(dp[i]) << '\n';
    } else {
        double lo = 0.0, hi = 0.0;
        for (int i = 0; i < points; ++i) {
            lo = std::min({lo, p[i], dp[i]});
            hi = std::max({hi, p[i], dp[i]});
        }
        if (hi - lo < 1e-12) hi = lo + 1.0;
        const double W = 800, H = 500, mx = 60, my = 40;
        auto X = [&](double ph) { return mx + (W - 2 * mx) * ph / PI_2; };
        auto Y = [&](double v) { return H - my - (H - 2 * my) * (v - lo) / (hi - lo); };
        auto poly = [&](const std::vector<double>& v) {
            std::ostringstream s;
            for (int i = 0; i < points; ++i) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.3f,%.3f ", X(phi[i]), Y(v[i]));
                s << buf;
            }
            return s.str();
        };
        *o.os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
                 "viewBox=\"0 0 800 500\">\n"
              << "<rect x=\"60\" y=\"40\" width=\"680\" height=\"420\" fill=\"none\" "
                 "stroke=\"black\"/>\n"
              << "<text x=\"70\" y=\"30\">profile lambda=" << num(lam) << " n=" << dim
              << " (p solid, dp dashed)</text>\n"
              << "<polyline fill=\"none\" stroke=\"black\" points=\"" << poly(p) << "\"/>\n"
              << "<polyline fill=\"none\" stroke=\"black\" stroke-dasharray=\"6,4\" points=\""
              << poly(dp) << "\"/>\n"
              << "</svg>\n";
    }
    o.os->flush();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"radial profiles and frequency-gap certification for the thin obstacle problem"};
    app.require_subcommand(1);

    // scan
    auto* scan = app.add_subcommand("scan", "tabulate endpoint data and verdicts over a lambda grid");
    double s_lmin = 0, s_lmax = 0, s_step = 0;
    int s_dim = 0;
    std::string s_out;
    scan->add_option("--lambda-min", s_lmin)->required();
    scan->add_option("--lambda-max", s_lmax)->required();
    scan->add_option("--step", s_step)->required();
    scan->add_option("--dim", s_dim)->required();
    scan->add_option("--out", s_out, "output file (default stdout)");

    // certify; each argument answers to a positional or a flag spelling, and
    // giving both trips the single-value policy (usage error)
    auto* certify = app.add_subcommand("certify", "certify a single frequency");
    double c_lam = 0;
    int c_dim = 0;
    certify->add_option("lambda,--lambda", c_lam)->required();
    certify->add_option("dim,--dim", c_dim)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check the solution catalog and the equator identity");
    double v_lmax = 0;
    std::string v_dims = "2,3,4,5";
    int v_samples = 10000;
    verify->add_option("lambda-max,--lambda-max", v_lmax)->required();
    verify->add_option("--dims", v_dims, "comma-separated dimensions");
    verify->add_option("--samples", v_samples);

    // export
    auto* exp = app.add_subcommand("export", "sample the profile to csv or svg");
    double e_lam = 0;
    int e_dim = 0, e_pts = 0;
    std::string e_fmt, e_out;
    exp->add_option("lambda,--lambda", e_lam)->required();
    exp->add_option("dim,--dim", e_dim)->required();
    exp->add_option("points,--points", e_pts)->required();
    exp->add_option("format,--format", e_fmt)->required();
    exp->add_option("--out", e_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (scan->parsed()) return cmd_scan(s_lmin, s_lmax, s_step, s_dim, s_out);
        if (certify->parsed()) return cmd_certify(c_lam, c_dim);
        if (verify->parsed()) {
            std::vector<int> dims;
            std::stringstream ss(v_dims);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) dims.push_back(std::stoi(tok));
            if (dims.empty()) throw std::invalid_argument("--dims must name at least one dimension");
            return cmd_verify(v_lmax, dims, v_samples);
        }
        if (exp->parsed()) return cmd_export(e_lam, e_dim, e_pts, e_fmt, e_out);
    } catch (const InvalidFrequency& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidDimension& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
