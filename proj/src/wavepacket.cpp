#include "homsense/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "homsense/errors.hpp"

namespace homsense {

namespace {

// Exact integral of the piecewise-linear interpolant.
double pl_integral(const std::vector<double>& xs, const std::vector<double>& ys) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        acc += 0.5 * (ys[i] + ys[i + 1]) * (xs[i + 1] - xs[i]);
    return acc;
}

// Exact Int x^n * pl(x) dx for n = 1, 2 (per-segment closed form).
double pl_moment(const std::vector<double>& xs, const std::vector<double>& ys, int n) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double x0 = xs[i], x1 = xs[i + 1];
        const double y0 = ys[i], y1 = ys[i + 1];
        const double h = x1 - x0;
        if (h <= 0.0) continue;
        const double b = (y1 - y0) / h;       // slope
        const double a = y0 - b * x0;         // intercept: f = a + b x
        auto F = [&](double x) {
            if (n == 1) return a * x * x / 2.0 + b * x * x * x / 3.0;
            return a * x * x * x / 3.0 + b * x * x * x * x / 4.0;
        };
        acc += F(x1) - F(x0);
    }
    return acc;
}

double pl_eval(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (xs.empty() || x < xs.front() || x > xs.back()) return 0.0;
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.begin()) return ys.front();
    const std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
    if (i + 1 >= xs.size()) return ys.back();
    const double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
    return ys[i] + t * (ys[i + 1] - ys[i]);
}

// Exact autocorrelation of a piecewise-linear density at lag dk:
//   Int f(u + dk) f(u) du.
// Between knot intersections the integrand is quadratic; Simpson per segment
// is exact for quadratics, so the only error left is rounding.
double pl_autocorrelation(const std::vector<double>& xs, const std::vector<double>& ys,
                          double dk) {
    // Overlap of supports of f(u+dk) and f(u).
    const double lo = std::max(xs.front() - dk, xs.front());
    const double hi = std::min(xs.back() - dk, xs.back());
    if (lo >= hi) return 0.0;

    // Merged knot positions in u: {x_i} and {x_i - dk}, clipped to [lo, hi].
    std::vector<double> knots;
    knots.reserve(2 * xs.size());
    for (double x : xs) {
        if (x > lo && x < hi) knots.push_back(x);
        const double shifted = x - dk;
        if (shifted > lo && shifted < hi) knots.push_back(shifted);
    }
    knots.push_back(lo);
    knots.push_back(hi);
    std::sort(knots.begin(), knots.end());

    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double u0 = knots[i], u1 = knots[i + 1];
        if (u1 <= u0) continue;
        const double um = 0.5 * (u0 + u1);
        const double g0 = pl_eval(xs, ys, u0 + dk) * pl_eval(xs, ys, u0);
        const double gm = pl_eval(xs, ys, um + dk) * pl_eval(xs, ys, um);
        const double g1 = pl_eval(xs, ys, u1 + dk) * pl_eval(xs, ys, u1);
        acc += (u1 - u0) / 6.0 * (g0 + 4.0 * gm + g1);
    }
    return acc;
}

}  // namespace

double MomentumDistribution::density(double k) const {
    if (kind == Kind::Gaussian) {
        const double z = k / sigma_k;
        return std::exp(-0.5 * z * z) / (sigma_k * std::sqrt(2.0 * std::numbers::pi));
    }
    return pl_eval(grid, values, k);
}

double MomentumDistribution::total_mass() const {
    if (kind == Kind::Gaussian) return 1.0;
    return pl_integral(grid, values);
}

MomentumDistribution make_gaussian(double sigma_k) {
    if (!(sigma_k > 0.0) || !std::isfinite(sigma_k))
        throw invalid_parameter("make_gaussian: sigma_k must be positive and finite");
    MomentumDistribution d;
    d.kind = MomentumDistribution::Kind::Gaussian;
    d.sigma_k = sigma_k;
    return d;
}

MomentumDistribution make_tabulated(std::vector<double> grid, std::vector<double> values) {
    if (grid.size() < 3 || grid.size() != values.size())
        throw invalid_parameter("make_tabulated: need >= 3 matching (k, density) rows");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw invalid_parameter("make_tabulated: grid must be strictly increasing");
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0)
            throw invalid_parameter("make_tabulated: densities must be finite and >= 0");
    }

    const double mass = pl_integral(grid, values);
    if (!(mass > 0.0))
        throw invalid_parameter("make_tabulated: density has zero mass");
    for (double& v : values) v /= mass;

    MomentumDistribution d;
    d.kind = MomentumDistribution::Kind::Tabulated;
    d.grid = std::move(grid);
    d.values = std::move(values);
    d.mean_k = pl_moment(d.grid, d.values, 1);
    const double m2 = pl_moment(d.grid, d.values, 2);
    const double var = m2 - d.mean_k * d.mean_k;
    if (!(var > 0.0))
        throw invalid_parameter("make_tabulated: density has zero variance");
    d.sigma_k = std::sqrt(var);
    return d;
}

MomentumDistribution load_distribution_csv(std::istream& in, const std::string& name) {
    std::vector<double> ks, vs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv(line);
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ')) sv.remove_suffix(1);
        if (sv.empty() || sv.front() == '#') continue;
        const auto comma = sv.find(',');
        if (comma == std::string_view::npos)
            throw io_error(name + ":" + std::to_string(line_no) + ": expected 'k,density'");
        char* end1 = nullptr;
        char* end2 = nullptr;
        const std::string c1(sv.substr(0, comma));
        const std::string c2(sv.substr(comma + 1));
        const double k = std::strtod(c1.c_str(), &end1);
        const double v = std::strtod(c2.c_str(), &end2);
        const bool ok1 = end1 && end1 != c1.c_str() && *end1 == '\0';
        const bool ok2 = end2 && end2 != c2.c_str() && *end2 == '\0';
        if (!ok1 || !ok2) {
            if (line_no == 1 && ks.empty()) continue;  // header row
            throw io_error(name + ":" + std::to_string(line_no) + ": malformed number");
        }
        ks.push_back(k);
        vs.push_back(v);
    }
    if (ks.empty()) throw io_error(name + ": no data rows");
    return make_tabulated(std::move(ks), std::move(vs));
}

MomentumDistribution load_distribution_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error(path + ": cannot open");
    return load_distribution_csv(in, path);
}

double BeatEnvelope::operator()(double dk) const {
    if (kind == Kind::GaussianClosedForm) {
        const double s2 = sigma_k * sigma_k;
        return std::exp(-dk * dk / (4.0 * s2)) / std::sqrt(4.0 * std::numbers::pi * s2);
    }
    return pl_eval(dk_grid, values, dk);
}

double BeatEnvelope::second_moment() const {
    if (kind == Kind::GaussianClosedForm) return 2.0 * sigma_k * sigma_k;
    // Composite Simpson over the (uniform, odd-count) table: the knot values
    // are exact, so this converges as h^4 instead of the interpolant's h^2.
    const std::size_t n = dk_grid.size();
    const double h = dk_grid[1] - dk_grid[0];
    double acc = 0.0;
    for (std::size_t i = 0; i + 2 < n; i += 2) {
        const double g0 = dk_grid[i] * dk_grid[i] * values[i];
        const double g1 = dk_grid[i + 1] * dk_grid[i + 1] * values[i + 1];
        const double g2 = dk_grid[i + 2] * dk_grid[i + 2] * values[i + 2];
        acc += h / 3.0 * (g0 + 4.0 * g1 + g2);
    }
    return acc;
}

double BeatEnvelope::support_radius() const {
    if (kind == Kind::GaussianClosedForm) return 12.0 * sigma_k;
    return std::max(std::abs(dk_grid.front()), std::abs(dk_grid.back()));
}

BeatEnvelope envelope(const MomentumDistribution& dist) {
    BeatEnvelope env;
    env.sigma_k = dist.sigma_k;
    if (dist.kind == MomentumDistribution::Kind::Gaussian) {
        env.kind = BeatEnvelope::Kind::GaussianClosedForm;
        return env;
    }

    // Resolution gate: >= 16 points per sigma_k wherever the density matters.
    const double peak = *std::max_element(dist.values.begin(), dist.values.end());
    const double max_spacing = dist.sigma_k / 16.0;
    for (std::size_t i = 0; i + 1 < dist.grid.size(); ++i) {
        const bool relevant = std::max(dist.values[i], dist.values[i + 1]) > 1e-12 * peak;
        if (relevant && dist.grid[i + 1] - dist.grid[i] > max_spacing)
            throw resolution_error(
                "envelope: tabulated grid has fewer than 16 points per sigma_k");
    }

    env.kind = BeatEnvelope::Kind::NumericTable;
    // Output grid: uniform, symmetric, step <= sigma_k/256, covering both the
    // required +-8*sqrt(2)*sigma_k window and the full difference support.
    const double support = dist.grid.back() - dist.grid.front();
    const double half_width = std::max(8.0 * std::sqrt(2.0) * dist.sigma_k, support);
    const double step_target = dist.sigma_k / 256.0;
    std::size_t half_count = static_cast<std::size_t>(std::ceil(half_width / step_target));
    half_count = std::min<std::size_t>(half_count, 1u << 20);
    const double step = half_width / static_cast<double>(half_count);

    const std::size_t n = 2 * half_count + 1;  // odd count, node at dk = 0
    env.dk_grid.resize(n);
    env.values.resize(n);
    for (std::size_t i = 0; i <= half_count; ++i) {
        const double dk = step * static_cast<double>(i);
        const double c = pl_autocorrelation(dist.grid, dist.values, dk);
        env.dk_grid[half_count + i] = dk;
        env.dk_grid[half_count - i] = -dk;
        env.values[half_count + i] = c;  // symmetric by construction
        env.values[half_count - i] = c;
    }
    // Renormalize away truncation and rounding residue.
    const double mass = pl_integral(env.dk_grid, env.values);
    if (!(mass > 0.0)) throw numeric_error("envelope: autocorrelation has zero mass");
    for (double& v : env.values) v /= mass;
    return env;
}

double qfi(double sigma_k) {
    if (!(sigma_k > 0.0) || !std::isfinite(sigma_k))
        throw invalid_parameter("qfi: sigma_k must be positive and finite");
    return 2.0 * sigma_k * sigma_k;
}

}  // namespace homsense
