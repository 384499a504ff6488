#pragma once

#include <optional>
#include <vector>

#include "steadipose/geometry.hpp"

namespace steadipose {

/// 2D facial landmarks in normalized image coordinates, plus an optional
/// (yaw, pitch, roll) head-pose hint in radians.
struct LandmarkSet {
    std::vector<Point2> points;
    std::optional<Vec3> pose_hint;

    bool empty() const { return points.empty(); }
    size_t size() const { return points.size(); }
};

/// Parameters of the per-frame head-center smoothing problem:
///   argmin_H  w1*|H - H_prev|^2 + w2*(max(|H - C|_x, |H - C|_y) / d_ref)^2
///   s.t.      |H - C|_x < r  and  |H - C|_y < r
struct TrajectoryParams {
    double w1 = 5000.0;
    double w2 = 1.0;
    double d_ref = 0.03;
    double crop_ratio_r = 0.15;
};

/// Arithmetic mean of the landmark points.
Point2 landmark_center(const LandmarkSet& lms);

/// Solves the smoothing problem above by projected gradient descent (fixed
/// 50 iterations, step 1/(2*(w1 + w2/d_ref^2))). The result satisfies the
/// box constraint strictly: |H - C|_inf <= r - 1e-6.
Point2 smooth_head_center(const Point2& prev_head, const Point2& center,
                          const TrajectoryParams& params);

}  // namespace steadipose
