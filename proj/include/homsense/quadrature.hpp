#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "homsense/errors.hpp"

namespace homsense {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;  // estimated
    int panels = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights (Kronrod node, Gauss weight, Kronrod weight).
inline constexpr double kGk15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

template <class F>
double gk15_panel(F&& f, double a, double b, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double y0 = f(mid);
    double g7 = kGk15[0][1] * y0;
    double k15 = kGk15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGk15[i][0];
        const double yi = f(mid + dx) + f(mid - dx);
        g7 += kGk15[i][1] * yi;
        k15 += kGk15[i][2] * yi;
    }
    g7 *= half;
    k15 *= half;
    err = std::abs(k15 - g7);
    return k15;
}

// Neumaier compensated summation; order-independent to ~1 ulp.
inline double compensated_sum(std::span<const double> xs) {
    double sum = 0.0, comp = 0.0;
    for (double x : xs) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b].
///
/// `max_panel_width` bounds the initial partition so oscillatory integrands are
/// sampled at least ~8 points per period before adaptivity kicks in.
/// `breakpoints` (sorted, optional) force panel edges, e.g. at the knots of a
/// piecewise-linear envelope where the integrand has kinks.
///
/// Throws numeric_error when the panel budget is exhausted before the requested
/// absolute tolerance is met; the message carries the achieved error.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol,
                           double max_panel_width = std::numeric_limits<double>::infinity(),
                           std::span<const double> breakpoints = {},
                           std::size_t max_panels = 200000) {
    if (!(a < b)) {
        if (a == b) return {0.0, 0.0, 0};
        throw invalid_parameter("integrate: empty interval");
    }

    struct Panel {
        double a, b, value, err;
        bool operator<(const Panel& o) const { return err < o.err; }
    };

    // Initial edges: [a, b], interior breakpoints, then max-width subdivision.
    std::vector<double> edges;
    edges.push_back(a);
    for (double p : breakpoints)
        if (p > a && p < b) edges.push_back(p);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    std::priority_queue<Panel> queue;
    double total = 0.0, total_err = 0.0;
    std::size_t n_panels = 0;
    auto push_panel = [&](double lo, double hi) {
        double err = 0.0;
        const double v = detail::gk15_panel(f, lo, hi, err);
        queue.push(Panel{lo, hi, v, err});
        total += v;
        total_err += err;
        ++n_panels;
    };

    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double lo = edges[i], hi = edges[i + 1];
        const int pieces =
            std::isfinite(max_panel_width) && (hi - lo) > max_panel_width
                ? static_cast<int>(std::ceil((hi - lo) / max_panel_width))
                : 1;
        for (int p = 0; p < pieces; ++p)
            push_panel(lo + (hi - lo) * p / pieces, lo + (hi - lo) * (p + 1) / pieces);
    }

    std::vector<Panel> finished;  // panels at the bisection rounding limit
    while (total_err > abs_tol && !queue.empty()) {
        if (n_panels >= max_panels)
            throw numeric_error("integrate: panel budget exhausted; achieved abs error " +
                                std::to_string(total_err) + " > tol " + std::to_string(abs_tol));
        const Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            total_err -= worst.err;  // cannot refine further; stop counting it
            finished.push_back(worst);
            continue;
        }
        total -= worst.value;
        total_err -= worst.err;
        push_panel(worst.a, mid);
        push_panel(mid, worst.b);
    }

    // Re-sum panels in positional order so the result does not depend on the
    // refinement history encoded in the heap layout.
    std::vector<Panel> panels = std::move(finished);
    panels.reserve(panels.size() + queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    std::vector<double> vals;
    vals.reserve(panels.size());
    double err_sum = 0.0;
    for (const Panel& p : panels) {
        vals.push_back(p.value);
        err_sum += p.err;
    }
    return {detail::compensated_sum(vals), err_sum, static_cast<int>(panels.size())};
}

}  // namespace homsense
