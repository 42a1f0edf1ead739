#include "freqgap/identity.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "freqgap/special.hpp"

namespace freqgap {

namespace {

constexpr double PI = 3.141592653589793;
constexpr double PI_2 = 1.5707963267948966;
constexpr double EPS = 2.220446049250313e-16;

struct Estimate {
    double value;
    double err;
};

// Periodic trapezoid on the unit circle with a half-resolution error estimate.
// Spectral for analytic integrands; kinked integrands go elsewhere.
Estimate circle_trapezoid(const std::function<double(double, double)>& f) {
    const int M = 65536;
    const double h = 2.0 * PI / M;
    double full = 0.0, half = 0.0, abs_sum = 0.0;
    for (int j = 0; j < M; ++j) {
        const double alpha = h * j;
        const double v = f(std::cos(alpha), std::sin(alpha));
        full += v;
        abs_sum += std::fabs(v);
        if (j % 2 == 0) half += v;
    }
    full *= h;
    half *= 2.0 * h;
    return Estimate{full, std::fabs(full - half) + EPS * abs_sum * h};
}

// One Gauss-Legendre panel at two resolutions; the difference is the estimate.
Estimate panel(const std::function<double(double)>& g, double a, double b) {
    const QuadRule& lo = gauss_legendre(20);
    const QuadRule& hi = gauss_legendre(30);
    const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
    double slo = 0.0, shi = 0.0, abs_sum = 0.0;
    for (int i = 0; i < 20; ++i) slo += lo.w[i] * g(mid + rad * lo.x[i]);
    for (int i = 0; i < 30; ++i) {
        const double v = hi.w[i] * g(mid + rad * hi.x[i]);
        shi += v;
        abs_sum += std::fabs(v);
    }
    return Estimate{rad * shi, rad * (std::fabs(shi - slo) + EPS * abs_sum)};
}

// integral over [0, pi] of g(psi) with panels geometrically graded into the
// kink at psi = pi/2 (s = cos psi = 0) from both sides.
Estimate graded_halves(const std::function<double(double)>& g) {
    const int levels = 44;
    Estimate total{0.0, 0.0};
    auto add = [&](double a, double b) {
        const Estimate e = panel(g, a, b);
        total.value += e.value;
        total.err += e.err;
    };
    double prev = 0.0;
    for (int j = 1; j <= levels; ++j) {
        const double cut = PI_2 * (1.0 - std::pow(0.5, j));
        add(prev, cut);
        prev = cut;
    }
    add(prev, PI_2); // innermost sliver ends exactly on the kink
    prev = PI_2;
    for (int j = levels; j >= 1; --j) {
        const double cut = PI_2 * (1.0 + std::pow(0.5, j));
        add(prev, cut);
        prev = cut;
    }
    add(prev, PI);
    return total;
}

void ensure_budget(const Estimate& e, const char* what) {
    if (e.err > 1e-9 * (1.0 + std::fabs(e.value)))
        throw QuadratureFailure(std::string("equator quadrature estimate ") +
                                std::to_string(e.err) + " too large for " + what);
}

} // namespace

EquatorIntegrals equator_integrals(const ExplicitSolution& sol) {
    const int n = sol.dim;

    if (n == 2) {
        // S^0 = {+e_1, -e_1}
        const std::vector<double> pe{1.0, 0.0}, me{-1.0, 0.0};
        const double int_u = eval_u(sol, pe) + eval_u(sol, me);
        const double int_un = eval_un(sol, ThinPoint{pe}) + eval_un(sol, ThinPoint{me});
        return EquatorIntegrals{int_u, int_un,
                                4.0 * EPS * (std::fabs(int_u) + std::fabs(int_un) + 1.0)};
    }

    if (n == 3 && sol.family != Family::ThreeHalves) {
        // polynomial families are analytic on the circle, so the trapezoid is
        // spectrally accurate; the 2k+3/2 family has a |x_1|^{lambda-1} kink and
        // takes the graded-panel route below (valid for every n >= 3).
        std::vector<double> x(3, 0.0);
        const Estimate iu = circle_trapezoid([&](double c, double s) {
            x[0] = c;
            x[1] = s;
            return eval_u(sol, x);
        });
        const Estimate iun = circle_trapezoid([&](double c, double s) {
            x[0] = c;
            x[1] = s;
            return eval_un(sol, ThinPoint{x});
        });
        ensure_budget(iu, "int_u");
        ensure_budget(iun, "int_un");
        return EquatorIntegrals{iu.value, iun.value, iu.err + iun.err};
    }

    // n >= 3: integral over S^{n-2} of f(x_1) equals
    //   |S^{n-3}| * int_{-1}^{1} f(s) (1-s^2)^{(n-4)/2} ds,
    // and with s = cos psi the weight becomes sin(psi)^{n-3}, analytic for every
    // integer n >= 3; only the kink of f at s = 0 needs the graded panels.
    const double measure = 2.0 * std::pow(PI, 0.5 * (n - 2)) / std::tgamma(0.5 * (n - 2));
    std::vector<double> x((size_t)n, 0.0);
    const Estimate iu = graded_halves([&](double psi) {
        x[0] = std::cos(psi);
        x[1] = std::sin(psi);
        return eval_u(sol, x) * std::pow(std::sin(psi), n - 3);
    });
    const Estimate iun = graded_halves([&](double psi) {
        x[0] = std::cos(psi);
        x[1] = std::sin(psi);
        return eval_un(sol, ThinPoint{x}) * std::pow(std::sin(psi), n - 3);
    });
    Estimate u_scaled{measure * iu.value, measure * iu.err};
    Estimate un_scaled{measure * iun.value, measure * iun.err};
    ensure_budget(u_scaled, "int_u");
    ensure_budget(un_scaled, "int_un");
    return EquatorIntegrals{u_scaled.value, un_scaled.value, u_scaled.err + un_scaled.err};
}

IdentityReport identity_report(const EndpointValues& ev, const EquatorIntegrals& ints) {
    IdentityReport rep;
    rep.lhs = -ev.dp_half * ints.int_u;
    rep.rhs = ev.p_half * ints.int_un;
    rep.residual_abs = std::fabs(rep.lhs - rep.rhs);
    const double scale = (1.0 + std::fabs(ev.p_half) + std::fabs(ev.dp_half)) *
                         (1.0 + std::fabs(ints.int_u) + std::fabs(ints.int_un));
    rep.residual_rel =
        rep.residual_abs / std::max({std::fabs(rep.lhs), std::fabs(rep.rhs), 1e-12 * scale});
    rep.pass = rep.residual_rel <= 1e-8;
    return rep;
}

IdentityReport verify_identity(const ExplicitSolution& sol) {
    const EndpointValues ev = endpoint_values(make_query(sol.lambda, sol.dim));
    return identity_report(ev, equator_integrals(sol));
}

} // namespace freqgap
