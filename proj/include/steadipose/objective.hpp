#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "steadipose/geometry.hpp"
#include "steadipose/head_trajectory.hpp"
#include "steadipose/jet.hpp"
#include "steadipose/protrusion.hpp"

namespace steadipose {

/// Weights and shape parameters of the per-frame objective
///   w_f E_f + w_d E_d + w_o E_o + E_r + E_t + w_p E_p,
/// where the smoothness energies E_r and E_t carry their C0/C1 weights
/// internally.
struct ObjectiveWeights {
    double w_f = 1.0;
    double w_d = 50.0;
    double w_o = 2.0;
    double w_r_c0 = 200.0;
    double w_r_c1 = 500.0;
    double w_t_c0 = 200.0;
    double w_t_c1 = 500.0;
    double w_p = 100.0;
    double alpha = 0.02;           // tolerable protrusion, normalized units
    double logistic_theta = 0.05;  // distortion tolerance threshold, rad
    double logistic_k = 200.0;     // distortion logistic steepness, 1/rad
};

/// Everything fixed for one frame's solve. Poses must be valid; history
/// flags gate the smoothness terms on the first two frames of a stream.
struct FrameContext {
    CameraPose real_pose;
    LandmarkSet landmarks;
    Point2 target_head = Point2(0.5, 0.5);
    CameraPose prev_virtual;
    CameraPose prev_prev_virtual;
    bool has_prev = false;
    bool has_prev_prev = false;
    Intrinsics intr_v;
    Intrinsics intr_r;
    double crop_ratio = 0.15;
    double boundary_shrink = 0.01;
    int protrusion_samples_per_edge = 8;
};

/// Softplus sharpness used to smooth the protrusion hinge so its residual
/// stays differentiable at the contact boundary. The exact (non-smooth)
/// protrude() is still what gets reported and binary-searched.
inline constexpr double kProtrusionSoftplusBeta = 200.0;

// --- individual energy terms (unweighted unless noted) ---------------------

/// Sum over landmarks of squared distance between the projected landmark and
/// the target head center.
double term_fitting(const CameraPose& pv, const FrameContext& ctx);

/// (logistic(Omega) * Omega)^2 on the spherical angle between rv and rr.
double term_distortion(const Quat& rv, const Quat& rr, const ObjectiveWeights& w);

/// |rv - rr|^2 on hemisphere-aligned quaternion components.
double term_following(const Quat& rv, const Quat& rr);

/// w_r_c0 |rv - rv1|^2 + w_r_c1 |rv rv1^-1 - rv1 rv2^-1|^2 (weights included).
double term_rotation_smoothness(const Quat& rv, const Quat& rv_prev1, const Quat& rv_prev2,
                                const ObjectiveWeights& w);

/// w_t_c0 |t - t1|^2 + w_t_c1 |2 t1 - (t + t2)|^2 (weights included).
double term_translation_smoothness(const PrincipalOffset& t, const PrincipalOffset& t_prev1,
                                   const PrincipalOffset& t_prev2, const ObjectiveWeights& w);

/// (softplus(exceedance)/alpha)^2 — the smoothed protrusion energy. Matches
/// the residual row, so |residuals|^2 == total_energy holds exactly; near and
/// past the contact boundary it deviates from (protrude/alpha)^2 by the
/// softplus rounding.
double term_protrusion(const CameraPose& pv, const FrameContext& ctx, const ObjectiveWeights& w);

/// Weighted sum of the terms above, honoring the context's history flags and
/// skipping the fitting term when the frame has no landmarks.
double total_energy(const CameraPose& pv, const FrameContext& ctx, const ObjectiveWeights& w);

// --- residual form ----------------------------------------------------------

/// Stacked weighted residual vector; |r|^2 == total_energy.
Eigen::VectorXd residuals(const CameraPose& pv, const FrameContext& ctx,
                          const ObjectiveWeights& w);

/// Residuals plus the analytic Jacobian with respect to the 5 parameters
/// (3-vector rotation tangent with retraction q(delta)*rv, then tx, ty),
/// computed by forward-mode autodiff through the same templated evaluation
/// the double path uses.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> residuals_and_jacobian(const CameraPose& pv,
                                                                   const FrameContext& ctx,
                                                                   const ObjectiveWeights& w);

namespace detail {

/// Hemisphere-align `q` against `reference` (flip sign if the 4-dot is
/// negative) so quaternion subtraction is well defined.
inline Quat align_hemisphere(const Quat& q, const Quat& reference) {
    Quat out = q;
    if (reference.dot(q) < 0.0) {
        out.coeffs() = -out.coeffs();
    }
    return out;
}

template <typename T>
T softplus(const T& x, double beta) {
    using std::exp;
    using std::log1p;
    const T scaled = x * beta;
    if (scalar_value(scaled) > 0.0) {
        return x + log1p(exp(-scaled)) / beta;
    }
    return log1p(exp(scaled)) / beta;
}

/// sigma(Omega) * Omega with sigma(x) = 1/(1+exp(-k(x-theta))). The vector
/// norm is guarded at zero where the angle has a subdifferential corner.
template <typename T>
T distortion_residual(const QuatT<T>& q_v, const Quat& rr, double theta, double k) {
    using std::abs;
    using std::atan2;
    using std::exp;
    using std::sqrt;
    const QuatT<T> rel = q_v * QuatT<T>(T(rr.w()), T(-rr.x()), T(-rr.y()), T(-rr.z()));
    const T n2 = rel.x() * rel.x() + rel.y() * rel.y() + rel.z() * rel.z();
    if (scalar_value(n2) < 1e-24) {
        return T(0.0);
    }
    const T n = sqrt(n2);
    const T wabs = abs(rel.w());
    const T omega = 2.0 * atan2(n, wabs);
    const T logistic = 1.0 / (1.0 + exp(-k * (omega - theta)));
    return logistic * omega;
}

}  // namespace detail

}  // namespace steadipose
