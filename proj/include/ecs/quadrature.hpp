#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace rext::quad {

struct Rule {
    std::vector<double> nodes, weights;  // on [-1, 1]
};

// n-point Gauss–Legendre rule by Newton iteration on P_n.
inline Rule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
    Rule r;
    r.nodes.resize(static_cast<size_t>(n));
    r.weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = 0;
            for (int k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (x * p0 - p1) / (x * x - 1);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2 / ((1 - x * x) * dp * dp);
        r.nodes[static_cast<size_t>(i)] = -x;
        r.nodes[static_cast<size_t>(n - 1 - i)] = x;
        r.weights[static_cast<size_t>(i)] = w;
        r.weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    return r;
}

// Composite rule: `panels` equal panels on [a, b], each with `rule`.
// f returns K values per abscissa; the K integrals are returned.
template <size_t K>
std::array<double, K> composite(const Rule& rule, double a, double b, int panels,
                                const std::function<std::array<double, K>(double)>& f) {
    std::array<double, K> sum{};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        std::array<double, K> ps{};
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const auto v = f(mid + 0.5 * h * rule.nodes[i]);
            for (size_t k = 0; k < K; ++k) ps[k] += rule.weights[i] * v[k];
        }
        for (size_t k = 0; k < K; ++k) sum[k] += 0.5 * h * ps[k];
    }
    return sum;
}

struct Refined {
    std::vector<double> values;
    int panels = 0;
    double rel_change = 0;  // max relative change at the last doubling
    bool converged = false;
};

// Doubles the panel count from `panels` until every integral changes by less
// than `tol` relative to max(|I_k|, |I_0|), or `max_panels` is exceeded.
// The first integral acts as the normalization, so integrals that vanish
// (odd moments of centred packets) do not stall the refinement.
template <size_t K>
Refined refine(const Rule& rule, double a, double b, int panels, int max_panels, double tol,
               const std::function<std::array<double, K>(double)>& f) {
    std::array<double, K> prev = composite<K>(rule, a, b, panels, f);
    Refined r;
    for (int n = 2 * panels; n <= max_panels; n *= 2) {
        const std::array<double, K> cur = composite<K>(rule, a, b, n, f);
        double change = 0;
        for (size_t k = 0; k < K; ++k) {
            const double scale = std::max({std::abs(cur[k]), std::abs(cur[0]), 1e-300});
            change = std::max(change, std::abs(cur[k] - prev[k]) / scale);
        }
        r.panels = n;
        r.rel_change = change;
        r.values.assign(cur.begin(), cur.end());
        prev = cur;
        if (change < tol) {
            r.converged = true;
            return r;
        }
    }
    if (r.values.empty()) r.values.assign(prev.begin(), prev.end());
    return r;
}

}  // namespace rext::quad
