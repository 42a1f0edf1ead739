#include "freqgap/profile.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "freqgap/special.hpp"

namespace freqgap {

namespace {

constexpr double EPS = std::numeric_limits<double>::epsilon();
constexpr long double EPSL = 1.0842021724855044e-19L; // 80-bit long double epsilon scale
constexpr double PI_2 = 1.5707963267948966;

void check_phi(double phi) {
    if (!std::isfinite(phi) || phi < 0.0 || phi > PI_2 + 1e-12)
        throw std::invalid_argument("phi must lie in [0, pi/2], got " + std::to_string(phi));
}

// Hypergeometric route. With z = (1 - cos phi)/2 in [0, 1/2] the profile is
//   P(z) = sum c_k z^k,  c_0 = 1,
//   c_{k+1}/c_k = ((k - lambda)(k + lambda + n - 2)) / ((k + (n-1)/2)(k + 1)),
// and dp/dphi = (sin phi / 2) dP/dz. Accumulation in long double keeps the
// alternating-sum rounding far below the certification budgets; the returned
// err carries the geometric truncation tail plus an abs-sum rounding bound, so
// cancellation-dominated regimes (large lambda near z = 1/2) are flagged, not
// hidden.
ProfilePoint eval_series(const ProfileQuery& q, double phi) {
    const long double lam = q.lambda;
    const long double nn = q.dim;
    const long double half = 0.5L * (long double)phi;
    const long double sh = sinl(half);
    const long double ch = cosl(half);
    const long double z = sh * sh;

    long double S = 1.0L, absS = 1.0L; // P(z)
    long double D = 0.0L, absD = 0.0L; // dP/dz
    long double u = 0.0L;              // c_{k+1} z^k
    long double last_term = 0.0L, last_dterm = 0.0L;
    int consecutive_small = 0;
    int K = 0;
    bool terminated = false;

    for (int k = 0;; ++k) {
        const long double num = (k - lam) * (k + lam + nn - 2.0L);
        const long double den = (k + 0.5L * (nn - 1.0L)) * (k + 1.0L);
        if (k == 0)
            u = num / den;
        else
            u *= (num / den) * z;
        const long double dterm = (k + 1.0L) * u;
        const long double term = u * z;
        D += dterm;
        absD += fabsl(dterm);
        S += term;
        absS += fabsl(term);
        K = k + 1;
        last_term = term;
        last_dterm = dterm;
        if (u == 0.0L) { // integer lambda (or z = 0): exact termination
            terminated = true;
            break;
        }
        if ((long double)K > lam + 2.0L &&
            fabsl(term) < 1e-16L * (fabsl(S) + 1.0L) &&
            fabsl(dterm) < 1e-16L * (fabsl(D) + 1.0L)) {
            if (++consecutive_small >= 3) break;
        } else {
            consecutive_small = 0;
        }
        if (K >= 400)
            throw NonconvergentSeries(
                "profile series did not converge within 400 terms (lambda = " +
                std::to_string(q.lambda) + ", dim = " + std::to_string(q.dim) + ")");
    }

    // Tail: for j >= K > lambda the term ratio is bounded by
    // z * (1 + max(0, n-5)/(2K)) < 1; the derivative ratio picks up (K+1)/K.
    long double tailS = 0.0L, tailD = 0.0L;
    if (!terminated) {
        const long double rho = z * (1.0L + (nn > 5.0L ? (nn - 5.0L) / (2.0L * K) : 0.0L));
        const long double rhoD = rho * (K + 1.0L) / (long double)K;
        tailS = fabsl(last_term) * rho / (1.0L - rho);
        tailD = fabsl(last_dterm) * rhoD / (1.0L - rhoD);
    }
    const long double roundS = EPSL * (3.0L * K + 10.0L) * absS;
    const long double roundD = EPSL * (3.0L * K + 10.0L) * absD;

    ProfilePoint out;
    out.phi = phi;
    out.p = (double)S;
    out.dp = (double)(D * sh * ch); // dz/dphi = sin(phi)/2 = sin(phi/2) cos(phi/2)
    const long double err_p = tailS + roundS;
    const long double err_dp = (tailD + roundD) * fabsl(sh * ch);
    out.err = (double)(err_p > err_dp ? err_p : err_dp) +
              4.0 * EPS * (std::fabs(out.p) + std::fabs(out.dp));
    return out;
}

// Laurent coefficients of cot: cot x = 1/x + sum_{m>=1} cot_c[m] x^{2m-1}.
constexpr long double cot_c[8] = {
    0.0L,
    -1.0L / 3.0L,
    -1.0L / 45.0L,
    -2.0L / 945.0L,
    -1.0L / 4725.0L,
    -2.0L / 93555.0L,
    -1382.0L / 638512875.0L,
    -4.0L / 18243225.0L,
};

// Even-power startup about the regular singular point phi = 0: the solution is
// analytic in phi^2, a_0 = 1 and
//   a_j = -( mu a_{j-1} + 2(n-2) sum_{m=1}^{j-1} (j-m) cot_c[m] a_{j-m} )
//         / ( 2j (2j + n - 3) ).
struct Startup {
    long double a[9]; // through phi^16; a[8] only feeds the error estimate
    double phi0;

    Startup(const ProfileQuery& q) {
        const long double m = q.mu;
        const long double nn = q.dim;
        a[0] = 1.0L;
        for (int j = 1; j <= 8; ++j) {
            long double s = m * a[j - 1];
            for (int mm = 1; mm <= j - 1; ++mm)
                s += 2.0L * (nn - 2.0L) * (long double)(j - mm) * cot_c[mm] * a[j - mm];
            a[j] = -s / (2.0L * j * (2.0L * j + nn - 3.0L));
        }
        phi0 = std::min(0.1, 0.8 / std::sqrt(1.0 + q.mu));
    }

    void eval(double phi, double& p, double& dp, double& err) const {
        const long double w = (long double)phi * phi;
        long double sp = a[7];
        long double sd = 14.0L * a[7];
        for (int j = 6; j >= 1; --j) {
            sp = a[j] + sp * w;
            sd = 2.0L * j * a[j] + sd * w;
        }
        p = (double)(a[0] + sp * w);
        dp = (double)((long double)phi * sd); // phi * sum 2j a_j w^{j-1}
        long double w8 = 1.0L;
        for (int i = 0; i < 8; ++i) w8 *= w;
        const long double e8 = fabsl(a[8]) * w8;
        err = (double)(2.0L * e8 * (1.0L + (phi > 0 ? 16.0L / (long double)phi : 0.0L)));
    }
};

struct Rhs {
    double mu;
    int n;
    void operator()(double t, const double y[2], double f[2]) const {
        f[0] = y[1];
        f[1] = -(n - 2.0) * (std::cos(t) / std::sin(t)) * y[1] - mu * y[0];
    }
};

// Dormand-Prince 5(4) with elementary step control. Returns the accumulated
// local-error estimate.
double dopri5(const Rhs& rhs, double t, double tend, double y[2]) {
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                        e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                        e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
    const double atol = 1e-14, rtol = 3e-14;

    double h = std::min(1e-3, tend - t);
    double acc = 0.0;
    double k1[2], k2[2], k3[2], k4[2], k5[2], k6[2], k7[2], yt[2], y5[2];

    for (int step = 0; step < 200000 && t < tend; ++step) {
        if (t + h > tend) h = tend - t;
        rhs(t, y, k1);
        for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, yt, k2);
        for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, yt, k3);
        for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, yt, k4);
        for (int i = 0; i < 2; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, yt, k5);
        for (int i = 0; i < 2; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, yt, k6);
        for (int i = 0; i < 2; ++i)
            y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, y5, k7);

        double ratio = 0.0, emax = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                  e6 * k6[i] + e7 * k7[i]);
            const double tol = atol + rtol * std::max(std::fabs(y[i]), std::fabs(y5[i]));
            ratio = std::max(ratio, std::fabs(e) / tol);
            emax = std::max(emax, std::fabs(e));
        }
        if (ratio <= 1.0) {
            t += h;
            y[0] = y5[0];
            y[1] = y5[1];
            acc += emax;
        }
        const double grow = 0.9 * std::pow(std::max(ratio, 1e-10), -0.2);
        h *= std::min(5.0, std::max(0.2, grow));
        h = std::min(h, 0.05);
    }
    if (t < tend) throw Error("ode integration stalled before reaching the target angle");
    return acc;
}

ProfilePoint eval_ode(const ProfileQuery& q, double phi) {
    const Startup st(q);
    ProfilePoint out;
    out.phi = phi;
    if (phi <= st.phi0) {
        st.eval(phi, out.p, out.dp, out.err);
        out.err += 4.0 * EPS * (std::fabs(out.p) + std::fabs(out.dp) + 1.0);
        return out;
    }
    double y[2], err0;
    st.eval(st.phi0, y[0], y[1], err0);
    const double acc = dopri5(Rhs{q.mu, q.dim}, st.phi0, phi, y);
    out.p = y[0];
    out.dp = y[1];
    out.err = err0 + acc + 50.0 * EPS * (std::fabs(out.p) + std::fabs(out.dp) + 1.0);
    return out;
}

} // namespace

double mu(double lambda, int dim) { return lambda * (lambda + dim - 2.0); }

ProfileQuery make_query(double lambda, int dim) {
    if (!std::isfinite(lambda) || lambda <= 0.0)
        throw InvalidFrequency("lambda must be finite and > 0, got " + std::to_string(lambda));
    if (dim < 2)
        throw InvalidDimension("dim must be >= 2, got " + std::to_string(dim));
    return ProfileQuery{lambda, dim, mu(lambda, dim)};
}

ProfilePoint eval_profile(const ProfileQuery& q, double phi, Method method) {
    check_phi(phi);
    if (phi == 0.0) return ProfilePoint{0.0, 1.0, 0.0, 0.0};
    return method == Method::Series ? eval_series(q, phi) : eval_ode(q, phi);
}

EndpointValues endpoint_values(const ProfileQuery& q) {
    const double lam = q.lambda;
    const int n = q.dim;
    const double spi = std::sqrt(M_PI);

    // p_half: the only possibly-nonpositive gamma argument is X = (1-lambda)/2
    // (< 1/2 for lambda > 0); route it through reflection so an integer lambda
    // lands the sinpi factor exactly on zero.
    const double X = 0.5 * (1.0 - lam);
    const double Rp = spi * std::tgamma(0.5 * (n - 1)) * inv_gamma(0.5 * (n - 1 + lam)) *
                      std::tgamma(1.0 - X) / M_PI;
    const double p_half = Rp * sinpi(X);
    const double err_p = 20.0 * EPS * std::fabs(p_half) +
                         4.0 * EPS * std::fabs(Rp) * M_PI * std::fabs(std::cos(M_PI * X)) *
                             (1.0 + std::fabs(X));

    // dp_half with Y = 1 - lambda/2; Gamma(1-Y) = Gamma(lambda/2).
    const double Y = 1.0 - 0.5 * lam;
    const double Rdp = -(q.mu / (n - 1.0)) * spi * std::tgamma(0.5 * (n + 1)) *
                       inv_gamma(0.5 * (n + lam)) * std::tgamma(0.5 * lam) / M_PI;
    const double dp_half = Rdp * sinpi(Y);
    const double err_dp = 20.0 * EPS * std::fabs(dp_half) +
                          4.0 * EPS * std::fabs(Rdp) * M_PI * std::fabs(std::cos(M_PI * Y)) *
                              (1.0 + std::fabs(Y));

    if (!std::isfinite(p_half) || !std::isfinite(dp_half))
        throw InvalidFrequency("endpoint gamma evaluation overflowed for lambda = " +
                               std::to_string(lam));
    return EndpointValues{p_half, dp_half, err_p, err_dp};
}

SignPair endpoint_signs_predicted(double lambda) {
    if (!std::isfinite(lambda) || lambda <= 0.0)
        throw InvalidFrequency("lambda must be finite and > 0");
    if (std::floor(lambda) == lambda) {
        const long r = std::lround(std::fmod(lambda, 4.0)); // exact for integer doubles
        switch (r) {
            case 0: return {Sign::Pos, Sign::Zero};
            case 1: return {Sign::Zero, Sign::Neg};
            case 2: return {Sign::Neg, Sign::Zero};
            default: return {Sign::Zero, Sign::Pos};
        }
    }
    const double r = std::fmod(lambda, 4.0);
    if (r < 1.0) return {Sign::Pos, Sign::Neg};
    if (r < 2.0) return {Sign::Neg, Sign::Neg};
    if (r < 3.0) return {Sign::Neg, Sign::Pos};
    return {Sign::Pos, Sign::Pos};
}

Sign certified_sign(double value, double err, double margin) {
    if (value == 0.0 && err == 0.0) return Sign::Zero;
    if (std::fabs(value) > margin * err) return value > 0.0 ? Sign::Pos : Sign::Neg;
    throw IndeterminateSign("value " + std::to_string(value) + " within margin " +
                            std::to_string(margin) + " * " + std::to_string(err));
}

SignPair endpoint_signs_certified(const ProfileQuery& q, double margin) {
    const EndpointValues ev = endpoint_values(q);
    const double lam = q.lambda;
    if (std::floor(lam) == lam) {
        // The pole convention already made one component exactly zero.
        const bool odd = std::fmod(lam, 2.0) == 1.0;
        if (odd) return {Sign::Zero, certified_sign(ev.dp_half, ev.err_dp, margin)};
        return {certified_sign(ev.p_half, ev.err_p, margin), Sign::Zero};
    }
    return {certified_sign(ev.p_half, ev.err_p, margin),
            certified_sign(ev.dp_half, ev.err_dp, margin)};
}

double cross_validate(const ProfileQuery& q, int grid_size) {
    if (grid_size < 2) throw std::invalid_argument("cross_validate: grid_size must be >= 2");
    double worst = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        const double phi = PI_2 * i / (grid_size - 1);
        const ProfilePoint a = eval_profile(q, phi, Method::Series);
        const ProfilePoint b = eval_profile(q, phi, Method::Ode);
        worst = std::max({worst, std::fabs(a.p - b.p), std::fabs(a.dp - b.dp)});
    }
    const ProfilePoint s = eval_profile(q, PI_2, Method::Series);
    const EndpointValues ev = endpoint_values(q);
    worst = std::max({worst, std::fabs(s.p - ev.p_half), std::fabs(s.dp - ev.dp_half)});
    return worst;
}

} // namespace freqgap
