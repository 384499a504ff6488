#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <cmath>
#include <vector>

#include "steadipose/error.hpp"
#include "steadipose/jet.hpp"

namespace steadipose {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Quat = Eigen::Quaterniond;

template <typename T>
using Vec2T = Eigen::Matrix<T, 2, 1>;
template <typename T>
using Vec3T = Eigen::Matrix<T, 3, 1>;
template <typename T>
using Mat3T = Eigen::Matrix<T, 3, 3>;
template <typename T>
using QuatT = Eigen::Quaternion<T>;

/// Points, landmark coordinates and principal offsets all live in normalized
/// image units: the frame is the unit square with principal point (0.5, 0.5).
using Point2 = Vec2;
using PrincipalOffset = Vec2;

inline constexpr double kHomogeneousWEps = 1e-9;
inline constexpr double kHomographyDetEps = 1e-12;

/// Pinhole intrinsics with a single isotropic normalized focal length.
struct Intrinsics {
    double focal = 1.0;
    double cx = 0.5;
    double cy = 0.5;
};

/// Virtual or real camera pose: rotation plus 2D principal offset. The real
/// camera always carries a zero offset.
struct CameraPose {
    Quat rotation = Quat::Identity();
    PrincipalOffset offset = PrincipalOffset::Zero();
};

/// Unit-quaternion canonicalization: normalized, scalar part >= 0. Resolves
/// the double cover so quaternion subtraction is well defined. For w == 0 the
/// sign of the first nonzero vector component breaks the tie.
Quat canonical(const Quat& q);

/// Rotation about `axis` by `angle` radians. Zero axis with nonzero angle is
/// rejected; zero axis with zero angle is the identity.
Quat quat_from_axis_angle(const Vec3& axis, double angle);

/// Hamilton product, renormalized and canonicalized.
Quat quat_compose(const Quat& a, const Quat& b);

/// Spherical interpolation with hemisphere alignment; exact at u = 0 and 1.
Quat slerp(const Quat& a, const Quat& b, double u);

/// Rotation angle between two orientations, in [0, pi]. Equals
/// 2*acos(|<a,b>|) but evaluated through atan2 for accuracy near zero.
double spherical_angle(const Quat& a, const Quat& b);

/// 3x3 projective map, normalized so m(2,2) == 1 on construction.
struct Homography {
    Mat3 m = Mat3::Identity();

    Homography() = default;
    explicit Homography(const Mat3& raw);

    Homography inverse() const;
    double operator()(int r, int c) const { return m(r, c); }
};

/// K = [[f, 0, cx+tx], [0, f, cy+ty], [0, 0, 1]]. The real camera uses a zero
/// offset.
Homography intrinsics_matrix(const Intrinsics& intr, const PrincipalOffset& offset);

/// Real-to-virtual frame map: K_v R_v (K_r R_r)^-1.
Homography projection_homography(const CameraPose& virtual_pose, const CameraPose& real_pose,
                                 const Intrinsics& intr_v, const Intrinsics& intr_r);

/// Perspective transform of a 2D point. Throws PointAtInfinityError when the
/// homogeneous w component falls below 1e-9.
Point2 project_point(const Point2& p, const Homography& h);

/// Uniform (rows x cols) grid over the unit square mapped through H^-1,
/// i.e. per-vertex sampling coordinates in the source frame. Row-major.
struct WarpMesh {
    int rows = 0;
    int cols = 0;
    std::vector<Point2> vertices;

    const Point2& at(int r, int c) const { return vertices[static_cast<size_t>(r) * cols + c]; }
};

WarpMesh warp_mesh(const Homography& h, int rows, int cols);

// ---------------------------------------------------------------------------
// Scalar-generic building blocks. These are shared by the double evaluation
// path and the Jet autodiff path of the objective.

/// Exact exponential map from a rotation tangent vector to a unit quaternion,
/// with a series branch that stays smooth (and differentiable) through zero.
template <typename T>
QuatT<T> quat_exp(const Vec3T<T>& w) {
    using std::cos;
    using std::sin;
    using std::sqrt;
    const T theta2 = w.squaredNorm();
    if (scalar_value(theta2) < 1e-12) {
        const T qw = T(1.0) - theta2 / 8.0 + theta2 * theta2 / 384.0;
        const T c = T(0.5) - theta2 / 48.0 + theta2 * theta2 / 3840.0;
        return QuatT<T>(qw, c * w.x(), c * w.y(), c * w.z());
    }
    const T theta = sqrt(theta2);
    const T half = theta * 0.5;
    const T c = sin(half) / theta;
    return QuatT<T>(cos(half), c * w.x(), c * w.y(), c * w.z());
}

template <typename T>
Mat3T<T> intrinsics_matrix_t(const Intrinsics& intr, const Vec2T<T>& offset) {
    Mat3T<T> k = Mat3T<T>::Zero();
    k(0, 0) = T(intr.focal);
    k(1, 1) = T(intr.focal);
    k(0, 2) = T(intr.cx) + offset.x();
    k(1, 2) = T(intr.cy) + offset.y();
    k(2, 2) = T(1.0);
    return k;
}

/// Inverse of the K above in closed form.
template <typename T>
Mat3T<T> intrinsics_matrix_inverse_t(const Intrinsics& intr, const Vec2T<T>& offset) {
    const T inv_f = T(1.0 / intr.focal);
    Mat3T<T> k = Mat3T<T>::Zero();
    k(0, 0) = inv_f;
    k(1, 1) = inv_f;
    k(0, 2) = -(T(intr.cx) + offset.x()) * inv_f;
    k(1, 2) = -(T(intr.cy) + offset.y()) * inv_f;
    k(2, 2) = T(1.0);
    return k;
}

template <typename T>
Vec2T<T> perspective_divide(const Vec3T<T>& h) {
    if (std::abs(scalar_value(h.z())) < kHomogeneousWEps) {
        throw PointAtInfinityError("homogeneous point at infinity during perspective divide");
    }
    return Vec2T<T>(h.x() / h.z(), h.y() / h.z());
}

}  // namespace steadipose
