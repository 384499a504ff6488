#include "steadipose/head_trajectory.hpp"

#include <algorithm>
#include <cmath>

namespace steadipose {

namespace {
constexpr int kIterations = 50;
constexpr double kBoxMargin = 1e-6;
}  // namespace

Point2 landmark_center(const LandmarkSet& lms) {
    if (lms.empty()) {
        throw std::invalid_argument("landmark_center: empty landmark set");
    }
    Vec2 sum = Vec2::Zero();
    for (const auto& p : lms.points) {
        sum += p;
    }
    return sum / static_cast<double>(lms.points.size());
}

Point2 smooth_head_center(const Point2& prev_head, const Point2& center,
                          const TrajectoryParams& params) {
    const double half_box = params.crop_ratio_r - kBoxMargin;
    const double dev_scale = params.w2 / (params.d_ref * params.d_ref);
    const double step = 1.0 / (2.0 * (params.w1 + dev_scale));

    auto clamp_into_box = [&](const Vec2& h) {
        return Vec2(std::clamp(h.x(), center.x() - half_box, center.x() + half_box),
                    std::clamp(h.y(), center.y() - half_box, center.y() + half_box));
    };

    Vec2 h = clamp_into_box(prev_head);
    for (int i = 0; i < kIterations; ++i) {
        const Vec2 u = h - center;
        Vec2 grad = 2.0 * params.w1 * (h - prev_head);
        const double ax = std::abs(u.x());
        const double ay = std::abs(u.y());
        if (ax > ay) {
            grad.x() += dev_scale * 2.0 * u.x();
        } else if (ay > ax) {
            grad.y() += dev_scale * 2.0 * u.y();
        } else {
            // subgradient at the max-term tie: average of both axis gradients
            grad += dev_scale * u;
        }
        h = clamp_into_box(h - step * grad);
    }
    return h;
}

}  // namespace steadipose
