#include "freqgap/special.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace freqgap {

double sinpi(double x) {
    // Reduce around the nearest integer so integer x maps to sin(0) = 0 exactly.
    const double n = std::nearbyint(x);
    const double d = x - n;
    if (d == 0.0) return 0.0;
    const double s = std::sin(M_PI * d);
    const bool odd = std::fmod(std::fabs(n), 2.0) == 1.0;
    return odd ? -s : s;
}

double inv_gamma(double x) {
    if (x > 0.0) return 1.0 / std::tgamma(x);
    // Left half-line: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi. sinpi vanishes
    // exactly at the poles, so non-positive integers return exactly 0.
    return std::tgamma(1.0 - x) * sinpi(x) / M_PI;
}

const QuadRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");

    static std::map<int, QuadRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);

    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    QuadRule rule;
    rule.x.assign(n, 0.0);
    rule.w.assign(n, 0.0);

    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.w[i] = w;
        rule.w[n - 1 - i] = w;
    }

    return cache.emplace(n, std::move(rule)).first->second;
}

} // namespace freqgap
