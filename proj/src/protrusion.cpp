#include "steadipose/protrusion.hpp"

#include <algorithm>
#include <cmath>

namespace steadipose {

std::vector<Point2> crop_boundary_samples(double crop_ratio, int samples_per_edge) {
    const double lo = crop_ratio;
    const double hi = 1.0 - crop_ratio;
    std::vector<Point2> pts;
    pts.reserve(4 + 4 * static_cast<size_t>(samples_per_edge));
    pts.emplace_back(lo, lo);
    pts.emplace_back(hi, lo);
    pts.emplace_back(hi, hi);
    pts.emplace_back(lo, hi);
    for (int i = 1; i <= samples_per_edge; ++i) {
        const double u = lo + (hi - lo) * i / (samples_per_edge + 1);
        pts.emplace_back(u, lo);
        pts.emplace_back(u, hi);
        pts.emplace_back(lo, u);
        pts.emplace_back(hi, u);
    }
    return pts;
}

namespace {

double protrude_from_inverse(const Mat3& pi_inverse, const ProtrusionConfig& cfg) {
    const auto samples = crop_boundary_samples(cfg.crop_ratio, cfg.samples_per_edge);
    const double g = max_boundary_exceedance<double>(pi_inverse, samples, cfg.boundary_shrink);
    return std::max(0.0, g);
}

}  // namespace

double protrude(const CameraPose& virtual_pose, const CameraPose& real_pose,
                const Intrinsics& intr_v, const Intrinsics& intr_r, const ProtrusionConfig& cfg) {
    // Pi^-1 = (K_r R_r) R_v^T K_v^-1, assembled directly so no generic
    // 3x3 inversion is involved.
    const Mat3 kr = intrinsics_matrix_t<double>(intr_r, real_pose.offset);
    const Mat3 rr = real_pose.rotation.toRotationMatrix();
    const Mat3 rv_t = virtual_pose.rotation.conjugate().toRotationMatrix();
    const Mat3 kv_inv = intrinsics_matrix_inverse_t<double>(intr_v, virtual_pose.offset);
    const Mat3 pi_inv = kr * rr * rv_t * kv_inv;
    return protrude_from_inverse(pi_inv, cfg);
}

double protrude_homography(const Homography& pi, const ProtrusionConfig& cfg) {
    return protrude_from_inverse(pi.inverse().m, cfg);
}

std::optional<BinarySearchResult> binary_search_pose(const CameraPose& virtual_pose,
                                                     const CameraPose& real_pose,
                                                     const Intrinsics& intr_v,
                                                     const Intrinsics& intr_r,
                                                     const ProtrusionConfig& cfg) {
    auto protrusion_at = [&](const CameraPose& p) {
        return protrude(p, real_pose, intr_v, intr_r, cfg);
    };
    if (protrusion_at(virtual_pose) <= cfg.tolerance) {
        return BinarySearchResult{virtual_pose, 0.0};
    }
    auto pose_at = [&](double s) {
        return CameraPose{slerp(virtual_pose.rotation, real_pose.rotation, s),
                          (1.0 - s) * virtual_pose.offset + s * real_pose.offset};
    };
    if (protrusion_at(pose_at(1.0)) > cfg.tolerance) {
        return std::nullopt;
    }
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < cfg.binary_search_steps; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (protrusion_at(pose_at(mid)) <= cfg.tolerance) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return BinarySearchResult{pose_at(hi), hi};
}

}  // namespace steadipose
