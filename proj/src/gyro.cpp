#include "steadipose/gyro.hpp"

#include <algorithm>
#include <cmath>

namespace steadipose {

RotationTimeline integrate(std::span<const GyroSample> samples, const Quat& alignment) {
    if (samples.empty()) {
        throw TraceError("integrate: empty gyro trace");
    }
    RotationTimeline timeline;
    timeline.times.reserve(samples.size());
    timeline.rotations.reserve(samples.size());

    auto to_camera = [&](const Vec3& w) { return Vec3(alignment * w); };

    timeline.times.push_back(samples[0].t);
    timeline.rotations.push_back(Quat::Identity());

    Quat q = Quat::Identity();
    for (size_t i = 1; i < samples.size(); ++i) {
        const double dt = samples[i].t - samples[i - 1].t;
        if (!(dt > 0.0)) {
            throw TraceError("integrate: non-monotonic gyro timestamps");
        }
        const Vec3 w_mid = 0.5 * (to_camera(samples[i - 1].omega) + to_camera(samples[i].omega));
        q = quat_compose(q, quat_exp<double>(w_mid * dt));
        timeline.times.push_back(samples[i].t);
        timeline.rotations.push_back(q);
    }
    return timeline;
}

Quat rotation_at(const RotationTimeline& timeline, double t) {
    if (timeline.times.empty()) {
        throw std::out_of_range("rotation_at: empty timeline");
    }
    if (t < timeline.times.front() || t > timeline.times.back()) {
        throw std::out_of_range("rotation_at: query time outside timeline range");
    }
    const auto it = std::lower_bound(timeline.times.begin(), timeline.times.end(), t);
    const size_t hi = static_cast<size_t>(it - timeline.times.begin());
    if (hi < timeline.times.size() && timeline.times[hi] == t) {
        return timeline.rotations[hi];
    }
    const size_t lo = hi - 1;
    const double u = (t - timeline.times[lo]) / (timeline.times[hi] - timeline.times[lo]);
    return slerp(timeline.rotations[lo], timeline.rotations[hi], u);
}

}  // namespace steadipose
