#include "homsense/detection.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "homsense/errors.hpp"
#include "homsense/quadrature.hpp"

namespace homsense {

namespace {

// Panel cap honoring the beat period: >= 8 panels per oscillation.
double beat_panel_width(double delta_x) {
    const double adx = std::abs(delta_x);
    if (adx < 1e-12) return std::numeric_limits<double>::infinity();
    return std::numbers::pi / (8.0 * adx);
}

}  // namespace

Outcome outcome_from_char(char c) {
    if (c == 'A' || c == 'a') return Outcome::A;
    if (c == 'B' || c == 'b') return Outcome::B;
    throw invalid_parameter(std::string("outcome must be A or B, got '") + c + "'");
}

SceneParams make_scene(double delta_x, double nu, BeatEnvelope env) {
    if (!(nu >= 0.0 && nu <= 1.0))
        throw invalid_parameter("scene: nu must lie in [0, 1]");
    if (!std::isfinite(delta_x))
        throw invalid_parameter("scene: delta_x must be finite");
    return SceneParams{delta_x, nu, std::move(env)};
}

DetectorModel make_detector(DetectorModel::Mode mode, double sigma_k, double pixel_dk) {
    DetectorModel det;
    det.mode = mode;
    det.pixel_dk = pixel_dk;
    const double half = 6.0 * std::sqrt(2.0) * sigma_k;
    det.range_lo = -half;
    det.range_hi = half;
    validate_detector(det);
    return det;
}

void validate_detector(const DetectorModel& det) {
    if (det.mode != DetectorModel::Mode::Bucket && !(det.pixel_dk > 0.0))
        throw invalid_parameter("detector: pixel_dk must be positive for resolving modes");
    if (!(det.range_lo < det.range_hi))
        throw invalid_parameter("detector: need range_lo < range_hi");
}

const char* mode_name(DetectorModel::Mode m) {
    switch (m) {
        case DetectorModel::Mode::Resolving: return "resolving";
        case DetectorModel::Mode::Bucket: return "bucket";
        case DetectorModel::Mode::SingleCamera: return "single-camera";
    }
    return "?";
}

DetectorModel::Mode mode_from_name(const std::string& name) {
    if (name == "resolving") return DetectorModel::Mode::Resolving;
    if (name == "bucket") return DetectorModel::Mode::Bucket;
    if (name == "single-camera" || name == "single_camera")
        return DetectorModel::Mode::SingleCamera;
    throw invalid_parameter("unknown detector mode '" + name + "'");
}

double joint_density(double dk, Outcome x, const SceneParams& scene) {
    const double beat = std::cos(dk * scene.delta_x);
    return 0.5 * scene.envelope(dk) * (1.0 + outcome_sign(x) * scene.nu * beat);
}

double ddx_joint_density(double dk, Outcome x, const SceneParams& scene) {
    return -0.5 * outcome_sign(x) * scene.nu * scene.envelope(dk) * dk *
           std::sin(dk * scene.delta_x);
}

double joint_density_kk(double k, double kp, Outcome x, const SceneParams& scene,
                        const MomentumDistribution& dist) {
    const double beat = std::cos((k - kp) * scene.delta_x);
    return 0.5 * dist.density(k) * dist.density(kp) *
           (1.0 + outcome_sign(x) * scene.nu * beat);
}

EnvelopeMoments envelope_moments(const BeatEnvelope& env, double delta_x) {
    if (env.kind == BeatEnvelope::Kind::GaussianClosedForm) {
        const double s2 = env.sigma_k * env.sigma_k;
        const double t = s2 * delta_x * delta_x;
        const double e = std::exp(-t);
        return {e, -std::expm1(-t), 2.0 * s2 * delta_x * e};
    }
    const double R = env.support_radius();
    const double panel = beat_panel_width(delta_x);
    const auto bp = env.breakpoints();
    const double tol = 1e-13;
    // 1 - cos computed as 2 sin^2(phase/2): no cancellation at small phases.
    const double one_minus_cos =
        integrate([&](double u) {
            const double s = std::sin(0.5 * u * delta_x);
            return env(u) * 2.0 * s * s;
        }, -R, R, tol, panel, bp).value;
    const double ksin =
        integrate([&](double u) { return env(u) * u * std::sin(u * delta_x); },
                  -R, R, tol, panel, bp).value;
    return {1.0 - one_minus_cos, one_minus_cos, ksin};
}

BucketProbs bucket_probs(const SceneParams& scene) {
    const double e = envelope_moments(scene.envelope, scene.delta_x).cos_integral;
    const double p_a = 0.5 * (1.0 - scene.nu * e);
    return {p_a, 1.0 - p_a};
}

double bin_probability(double dk_lo, double dk_hi, Outcome x, const SceneParams& scene) {
    if (!(dk_lo < dk_hi)) throw invalid_parameter("bin_probability: need dk_lo < dk_hi");
    const double R = scene.envelope.support_radius();
    const double lo = std::max(dk_lo, -R);
    const double hi = std::min(dk_hi, R);
    if (lo >= hi) return 0.0;
    return integrate([&](double u) { return joint_density(u, x, scene); }, lo, hi,
                     1e-10, beat_panel_width(scene.delta_x),
                     scene.envelope.breakpoints()).value;
}

ResolutionReport check_resolution(const DetectorModel& det, const SceneParams& scene) {
    if (!(det.pixel_dk > 0.0))
        throw invalid_parameter("check_resolution: detector has no pixel pitch");
    ResolutionReport rep;
    rep.margin_envelope = scene.sigma_k() / det.pixel_dk;
    rep.margin_beats = scene.delta_x == 0.0
                           ? std::numeric_limits<double>::infinity()
                           : (2.0 * std::numbers::pi / std::abs(scene.delta_x)) / det.pixel_dk;
    rep.pass = rep.margin_envelope >= 10.0 && rep.margin_beats >= 10.0;
    return rep;
}

}  // namespace homsense
