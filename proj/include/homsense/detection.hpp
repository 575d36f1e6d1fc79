#pragma once

#include <optional>
#include <string>

#include "homsense/wavepacket.hpp"

namespace homsense {

/// Detection outcome: A = photons on different cameras (coincidence),
/// B = photons on the same camera (bunching).
enum class Outcome : unsigned char { A, B };

inline constexpr double outcome_sign(Outcome x) { return x == Outcome::A ? -1.0 : +1.0; }
inline constexpr char outcome_char(Outcome x) { return x == Outcome::A ? 'A' : 'B'; }
Outcome outcome_from_char(char c);

/// The configuration a measurement run probes: displacement, distinguishability
/// and the beat envelope of the photon pair.
struct SceneParams {
    double delta_x = 0.0;  // true displacement; the model depends on |delta_x| only
    double nu = 1.0;       // distinguishability degree in [0, 1]
    BeatEnvelope envelope;

    double sigma_k() const { return envelope.sigma_k; }
};

SceneParams make_scene(double delta_x, double nu, BeatEnvelope env);

/// Far-field geometry (pixel pitch delta_y, propagation distance d, wavenumber
/// k0); maps camera coordinates to transverse momenta via k = y*k0/d.
struct PhysicalGeometry {
    double pixel_dy = 0.0;
    double distance_d = 0.0;
    double k0 = 0.0;
};

struct DetectorModel {
    enum class Mode { Resolving, Bucket, SingleCamera };

    Mode mode = Mode::Resolving;
    double pixel_dk = 0.0;  // momentum pitch; ignored for Bucket
    double range_lo = 0.0;  // sensing range in dk
    double range_hi = 0.0;
    bool snap_to_pixels = false;
    std::optional<PhysicalGeometry> physical;
};

/// Detector with the default sensing range [-6*sqrt(2)*s, +6*sqrt(2)*s] in dk.
DetectorModel make_detector(DetectorModel::Mode mode, double sigma_k, double pixel_dk);
void validate_detector(const DetectorModel& det);

const char* mode_name(DetectorModel::Mode m);
DetectorModel::Mode mode_from_name(const std::string& name);

/// Joint density of one sampling measurement:
///   P(dk, X) = (1/2) C(dk) (1 + sign(X) nu cos(dk dx)).
double joint_density(double dk, Outcome x, const SceneParams& scene);

/// Analytic d/d(delta_x) of joint_density: -(1/2) sign(X) nu C(dk) dk sin(dk dx).
double ddx_joint_density(double dk, Outcome x, const SceneParams& scene);

/// Per-photon resolved form (1/2)|phi(k)|^2|phi(k')|^2 (1 + sign(X) nu cos((k-k')dx)).
double joint_density_kk(double k, double kp, Outcome x, const SceneParams& scene,
                        const MomentumDistribution& dist);

struct BucketProbs {
    double p_a = 0.5;
    double p_b = 0.5;
    double operator[](Outcome x) const { return x == Outcome::A ? p_a : p_b; }
};

/// Non-resolving outcome probabilities P(X) = (1/2)(1 + sign(X) nu E[cos(dk dx)]),
/// the HOM-dip statistics. Gaussian envelopes use exp(-s^2 dx^2) in closed form.
BucketProbs bucket_probs(const SceneParams& scene);

/// Envelope-weighted moments used across the Fisher-information formulas:
///   cos_integral   = Int C(dk) cos(dk dx) d dk
///   one_minus_cos  = Int C(dk) (1 - cos(dk dx)) d dk        (cancellation-free)
///   ksin_integral  = Int C(dk) dk sin(dk dx) d dk
struct EnvelopeMoments {
    double cos_integral;
    double one_minus_cos;
    double ksin_integral;
};
EnvelopeMoments envelope_moments(const BeatEnvelope& env, double delta_x);

/// Integral of joint_density over a dk bin, adaptive quadrature, abs tol 1e-10.
double bin_probability(double dk_lo, double dk_hi, Outcome x, const SceneParams& scene);

struct ResolutionReport {
    double margin_envelope = 0.0;  // sigma_k / pixel_dk
    double margin_beats = 0.0;     // (2 pi/|dx|) / pixel_dk; inf at dx = 0
    bool pass = false;             // both margins >= 10
};

/// Checks the pixel pitch against the two features it must resolve: the
/// envelope width sigma_k and the beat period 2*pi/|dx|.
ResolutionReport check_resolution(const DetectorModel& det, const SceneParams& scene);

}  // namespace homsense
