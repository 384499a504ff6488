#pragma once

#include <span>
#include <vector>

#include "steadipose/geometry.hpp"

namespace steadipose {

/// One gyroscope readout: timestamp (seconds, monotonic) and angular
/// velocity in rad/s, device axes.
struct GyroSample {
    double t = 0.0;
    Vec3 omega = Vec3::Zero();
};

/// Integrated orientation samples; starts at identity at the first timestamp.
struct RotationTimeline {
    std::vector<double> times;
    std::vector<Quat> rotations;

    size_t size() const { return times.size(); }
};

/// Midpoint-rule integration with the exact axis-angle exponential per step:
/// q_{k+1} = q_k * exp(0.5*(w_k + w_{k+1}) * dt). `alignment` rotates device
/// axes into camera axes; identity unless the rig needs an extrinsic.
RotationTimeline integrate(std::span<const GyroSample> samples,
                           const Quat& alignment = Quat::Identity());

/// Slerp sampling of the timeline; exact at stored knots. Throws
/// std::out_of_range outside [first, last].
Quat rotation_at(const RotationTimeline& timeline, double t);

}  // namespace steadipose
