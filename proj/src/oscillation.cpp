#include "freqgap/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace freqgap {

namespace {

constexpr double PI_2 = 1.5707963267948966;

int sgn(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Bisection on [a, b] with f(a) f(b) < 0 down to interval width tol.
double bisect(const std::function<double(double)>& f, double a, double b, double fa, double tol) {
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if (sgn(fm) == sgn(fa)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Roots of one component (p or dp) in the open interval (0, pi/2), given grid
// samples. Exact zeros at interior grid points are taken as roots directly;
// exact zeros at the endpoints are boundary values and excluded.
std::vector<double> roots_from_grid(const std::function<double(double)>& f,
                                    const std::vector<double>& phi,
                                    const std::vector<double>& val, double tol) {
    std::vector<double> roots;
    const int N = (int)phi.size() - 1;
    for (int i = 0; i < N; ++i) {
        const double fa = val[i], fb = val[i + 1];
        if (fb == 0.0) {
            if (i + 1 < N) roots.push_back(phi[i + 1]);
            continue;
        }
        if (fa == 0.0) continue; // handled as the right end of the previous cell
        if (sgn(fa) * sgn(fb) < 0) roots.push_back(bisect(f, phi[i], phi[i + 1], fa, tol));
    }
    return roots;
}

bool alternation_ok(const std::vector<double>& zeros, const std::vector<double>& crits) {
    // Merge and require strict alternation starting with a zero of p (phi = 0 is
    // a critical point, so the first interior special point must be a zero).
    size_t iz = 0, ic = 0;
    bool expect_zero = true;
    double last = 0.0;
    while (iz < zeros.size() || ic < crits.size()) {
        const bool take_zero = ic == crits.size() ||
                               (iz < zeros.size() && zeros[iz] < crits[ic]);
        const double v = take_zero ? zeros[iz] : crits[ic];
        if (take_zero != expect_zero) return false;
        if (v <= last) return false;
        last = v;
        expect_zero = !expect_zero;
        take_zero ? ++iz : ++ic;
    }
    return true;
}

} // namespace

OscillationReport find_special_points(const ProfileQuery& q) {
    const bool integer_lambda = std::floor(q.lambda) == q.lambda;
    int N = std::max(64, 16 * (int)std::ceil(q.lambda));

    auto p_at = [&](double phi) { return eval_profile(q, phi, Method::Series).p; };
    auto dp_at = [&](double phi) { return eval_profile(q, phi, Method::Series).dp; };

    std::string complaint;
    for (int attempt = 0; attempt < 4; ++attempt, N *= 2) {
        std::vector<double> phi(N + 1), vp(N + 1), vdp(N + 1), ep(N + 1);
        bool indeterminate = false;
        for (int i = 0; i <= N; ++i) {
            phi[i] = PI_2 * i / N;
            ProfilePoint pt = eval_profile(q, phi[i], Method::Series);
            // Margin rule on bracketing values; a grid point sitting on a root
            // is nudged once before the whole grid is doubled. Exact zeros are
            // analytic boundary values, not margin failures.
            auto submargin = [](double v, double e) { return v != 0.0 && std::fabs(v) <= 1000.0 * e; };
            if (i > 0 && i < N && (submargin(pt.p, pt.err) || submargin(pt.dp, pt.err))) {
                phi[i] += PI_2 / N * 1e-3;
                pt = eval_profile(q, phi[i], Method::Series);
                if (submargin(pt.p, pt.err) || submargin(pt.dp, pt.err)) indeterminate = true;
            }
            vp[i] = pt.p;
            vdp[i] = pt.dp;
            ep[i] = pt.err;
        }
        if (indeterminate) {
            complaint = "grid value failed the margin rule";
            continue;
        }

        OscillationReport rep;
        rep.zeros = roots_from_grid(p_at, phi, vp, 1e-12);
        rep.crits = roots_from_grid(dp_at, phi, vdp, 1e-12);
        rep.total = (int)(rep.zeros.size() + rep.crits.size());

        if (!alternation_ok(rep.zeros, rep.crits)) {
            complaint = "special points failed the alternation check";
            continue;
        }
        if (!integer_lambda && rep.total != (int)std::floor(q.lambda)) {
            complaint = "count " + std::to_string(rep.total) + " != floor(lambda)";
            continue;
        }
        if (integer_lambda) {
            const int lam = (int)q.lambda;
            if (rep.total != lam && rep.total != lam - 1) {
                complaint = "integer-lambda count outside {lambda-1, lambda}";
                continue;
            }
        }
        return rep;
    }
    if (complaint == "grid value failed the margin rule")
        throw IndeterminateSign("find_special_points: " + complaint + " (lambda = " +
                                std::to_string(q.lambda) + ", dim = " + std::to_string(q.dim) + ")");
    throw InternalInconsistency("find_special_points: " + complaint + " after grid doubling " +
                                "(lambda = " + std::to_string(q.lambda) + ", dim = " +
                                std::to_string(q.dim) + ")");
}

bool interlacing_check(const ProfileQuery& q_low, const ProfileQuery& q_high) {
    if (q_low.dim != q_high.dim)
        throw std::invalid_argument("interlacing_check: dimensions differ");
    if (!(q_low.lambda < q_high.lambda))
        throw std::invalid_argument("interlacing_check: requires lambda_low < lambda_high");

    const std::vector<double> lo = find_special_points(q_low).zeros;
    const std::vector<double> hi = find_special_points(q_high).zeros;
    if (lo.empty()) return true;

    // Intervals (0, z_1), (z_1, z_2), ..., (z_{m-1}, z_m) must each contain a
    // zero of the higher profile.
    double left = 0.0;
    for (const double right : lo) {
        const bool found = std::any_of(hi.begin(), hi.end(), [&](double z) {
            return left < z && z < right;
        });
        if (!found) return false;
        left = right;
    }
    return true;
}

double cap_frequency(const CapQuery& cq) {
    if (!std::isfinite(cq.theta) || cq.theta <= 0.0 || cq.theta > PI_2 + 1e-12)
        throw std::invalid_argument("cap_frequency: theta must lie in (0, pi/2]");
    if (cq.dim < 2) throw InvalidDimension("cap_frequency: dim must be >= 2");
    if (cq.branch < 1) throw std::invalid_argument("cap_frequency: branch must be >= 1");

    const bool at_equator = std::fabs(cq.theta - PI_2) < 1e-14;
    auto g = [&](double lam) {
        const ProfileQuery q = make_query(lam, cq.dim);
        if (at_equator) {
            // Closed form: roots at integer lambda are exact zeros, so a root
            // sitting on a scan point cannot smear into two sign changes.
            const EndpointValues ev = endpoint_values(q);
            return cq.kind == CapKind::Dirichlet ? ev.p_half : ev.dp_half;
        }
        ProfilePoint pt = eval_profile(q, cq.theta, Method::Series);
        if (pt.err > 1e-9 * (1.0 + std::fabs(cq.kind == CapKind::Dirichlet ? pt.p : pt.dp)))
            pt = eval_profile(q, cq.theta, Method::Ode);
        return cq.kind == CapKind::Dirichlet ? pt.p : pt.dp;
    };

    // p_0 = 1 > 0; for small lambda the profile is strictly decreasing on
    // (0, theta], so the Neumann scan also starts from a known sign.
    const double step = 0.25;
    const double cap = 50.0;
    int found = 0;
    int prev_sign = cq.kind == CapKind::Dirichlet ? 1 : -1;
    double prev_lam = 0.0;
    for (double lam = step; lam <= cap + 1e-9; lam += step) {
        const double v = g(lam);
        const int s = sgn(v);
        if (s == 0) {
            if (++found == cq.branch) return lam;
            prev_sign = 0;
            prev_lam = lam;
            continue;
        }
        if (prev_sign != 0 && s != prev_sign) {
            double a = std::max(prev_lam, 1e-8), b = lam, fa = g(a);
            if (fa == 0.0) {
                // left endpoint was an exact root already counted; shift off it
                a += 1e-6;
                fa = g(a);
            }
            const double root = bisect(g, a, b, fa, 1e-10);
            if (++found == cq.branch) return root;
        }
        prev_sign = s;
        prev_lam = lam;
    }
    throw BranchNotFound("cap_frequency: branch " + std::to_string(cq.branch) +
                         " not found for lambda <= 50");
}

GapVerdict gap_verdict(const ProfileQuery& q) {
    const double lam = q.lambda;
    const EndpointValues ev = endpoint_values(q);
    GapVerdict v;
    v.k = -1;
    v.sign_product = ev.p_half * ev.dp_half;

    const bool is_integer = std::floor(lam) == lam;
    const bool ok_p = std::fabs(ev.p_half) > 1000.0 * ev.err_p;
    const bool ok_dp = std::fabs(ev.dp_half) > 1000.0 * ev.err_dp;
    if (is_integer) {
        // One component is an exact analytic zero; the margin applies to the other.
        v.margin_ok = std::fmod(lam, 2.0) == 1.0 ? ok_dp : ok_p;
        v.status = GapStatus::IntegerBoundary;
        return v;
    }
    v.margin_ok = ok_p && ok_dp;
    if (std::fabs(lam - std::nearbyint(lam)) < 1e-8 || !v.margin_ok) {
        v.status = GapStatus::Indeterminate;
        return v;
    }

    const bool numeric_excluded = v.sign_product < 0.0;
    const long long fl = (long long)std::floor(lam);
    const bool arithmetic_excluded = fl % 2 == 0;
    if (numeric_excluded != arithmetic_excluded)
        throw InternalInconsistency(
            "gap_verdict: sign product and interval arithmetic disagree at lambda = " +
            std::to_string(lam) + ", dim = " + std::to_string(q.dim));

    // Third route: the mod-4 prediction must match the computed signs.
    const SignPair pred = endpoint_signs_predicted(lam);
    const SignPair comp{ev.p_half > 0 ? Sign::Pos : Sign::Neg,
                        ev.dp_half > 0 ? Sign::Pos : Sign::Neg};
    if (pred.sign_p != comp.sign_p || pred.sign_dp != comp.sign_dp)
        throw InternalInconsistency(
            "gap_verdict: computed endpoint signs contradict the mod-4 prediction at lambda = " +
            std::to_string(lam) + ", dim = " + std::to_string(q.dim));

    if (numeric_excluded) {
        v.status = GapStatus::Excluded;
        v.k = (int)(fl / 2);
    } else {
        v.status = GapStatus::NotExcluded;
    }
    return v;
}

} // namespace freqgap
