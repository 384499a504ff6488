#pragma once

#include <optional>
#include <span>
#include <vector>

#include "steadipose/geometry.hpp"

namespace steadipose {

/// Returned by protrude() when a boundary sample maps to infinity.
inline constexpr double kProtrusionSentinel = 1e6;

struct ProtrusionConfig {
    double crop_ratio = 0.15;      // margin removed on each side of the output frame
    double boundary_shrink = 0.01; // real-frame bounding box shrink, per side
    int samples_per_edge = 8;
    int binary_search_steps = 16;
    double tolerance = 1e-4;
};

/// Boundary samples of the output crop rectangle [crop, 1-crop]^2: the four
/// corners plus `samples_per_edge` interior points per edge.
std::vector<Point2> crop_boundary_samples(double crop_ratio, int samples_per_edge);

/// Largest signed per-axis exceedance of the inverse-mapped samples against
/// the shrunk unit square [shrink, 1-shrink]^2. Negative values mean the crop
/// is inside with margin; 0 is exact contact. Scalar-generic so the objective
/// can differentiate through it.
template <typename T>
T max_boundary_exceedance(const Mat3T<T>& pi_inverse, std::span<const Point2> samples,
                          double shrink) {
    const double lo = shrink;
    const double hi = 1.0 - shrink;
    T worst = T(-kProtrusionSentinel);
    for (const auto& p : samples) {
        const Vec3T<T> h = pi_inverse * Vec3T<T>(T(p.x()), T(p.y()), T(1.0));
        if (std::abs(scalar_value(h.z())) < kHomogeneousWEps) {
            return T(kProtrusionSentinel);
        }
        const T x = h.x() / h.z();
        const T y = h.y() / h.z();
        const T ex_lo = lo - x;
        const T ex_hi = x - hi;
        const T ey_lo = lo - y;
        const T ey_hi = y - hi;
        const T& ex = scalar_value(ex_lo) > scalar_value(ex_hi) ? ex_lo : ex_hi;
        const T& ey = scalar_value(ey_lo) > scalar_value(ey_hi) ? ey_lo : ey_hi;
        const T& e = scalar_value(ex) > scalar_value(ey) ? ex : ey;
        if (scalar_value(e) > scalar_value(worst)) {
            worst = e;
        }
    }
    return worst;
}

/// Exact protrusion of the stabilized crop against the shrunk real-frame
/// boundary: max(0, max exceedance). 0 means the crop is fully covered.
/// Returns kProtrusionSentinel when the mapping degenerates.
double protrude(const CameraPose& virtual_pose, const CameraPose& real_pose,
                const Intrinsics& intr_v, const Intrinsics& intr_r, const ProtrusionConfig& cfg);

/// Same measurement for an already-built warp homography (fallback frames).
double protrude_homography(const Homography& pi, const ProtrusionConfig& cfg);

struct BinarySearchResult {
    CameraPose pose;
    double s = 0.0;  // path parameter: 0 = virtual pose, 1 = real pose
};

/// Searches the interpolation path between the violating virtual pose (s=0)
/// and the real pose (s=1) — slerp on rotation, linear on offset — for the
/// smallest s whose protrusion is within tolerance. Empty when even the real
/// endpoint protrudes.
std::optional<BinarySearchResult> binary_search_pose(const CameraPose& virtual_pose,
                                                     const CameraPose& real_pose,
                                                     const Intrinsics& intr_v,
                                                     const Intrinsics& intr_r,
                                                     const ProtrusionConfig& cfg);

}  // namespace steadipose
