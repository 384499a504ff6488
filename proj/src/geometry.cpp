#include "steadipose/geometry.hpp"

#include <cmath>

namespace steadipose {

Quat canonical(const Quat& q) {
    Quat n = q.normalized();
    bool flip = n.w() < 0.0;
    if (n.w() == 0.0) {
        if (n.x() != 0.0) {
            flip = n.x() < 0.0;
        } else if (n.y() != 0.0) {
            flip = n.y() < 0.0;
        } else {
            flip = n.z() < 0.0;
        }
    }
    if (flip) {
        n.coeffs() = -n.coeffs();
    }
    return n;
}

Quat quat_from_axis_angle(const Vec3& axis, double angle) {
    const double n = axis.norm();
    if (n < 1e-15) {
        if (std::abs(angle) < 1e-15) {
            return Quat::Identity();
        }
        throw std::invalid_argument("quat_from_axis_angle: zero axis with non-zero angle");
    }
    const double half = 0.5 * angle;
    const double s = std::sin(half) / n;
    return canonical(Quat(std::cos(half), s * axis.x(), s * axis.y(), s * axis.z()));
}

Quat quat_compose(const Quat& a, const Quat& b) { return canonical(a * b); }

Quat slerp(const Quat& a, const Quat& b, double u) {
    if (u <= 0.0) return canonical(a);
    if (u >= 1.0) return canonical(b);

    double d = a.dot(b);
    Quat end = b;
    if (d < 0.0) {
        end.coeffs() = -end.coeffs();
        d = -d;
    }
    if (d > 1.0 - 1e-12) {
        // near-parallel: linear blend, renormalized
        Quat out;
        out.coeffs() = (1.0 - u) * a.coeffs() + u * end.coeffs();
        return canonical(out);
    }
    const double theta = std::acos(std::min(d, 1.0));
    const double s = std::sin(theta);
    const double wa = std::sin((1.0 - u) * theta) / s;
    const double wb = std::sin(u * theta) / s;
    Quat out;
    out.coeffs() = wa * a.coeffs() + wb * end.coeffs();
    return canonical(out);
}

double spherical_angle(const Quat& a, const Quat& b) {
    const Quat rel = a * b.conjugate();
    const double vec_norm = rel.vec().norm();
    const double w = std::abs(rel.w());
    return 2.0 * std::atan2(vec_norm, w);
}

Homography::Homography(const Mat3& raw) {
    const double pivot = raw(2, 2);
    if (std::abs(pivot) < kHomographyDetEps) {
        throw std::invalid_argument("Homography: cannot normalize, m(2,2) ~ 0");
    }
    m = raw / pivot;
    m(2, 2) = 1.0;
    if (std::abs(m.determinant()) < kHomographyDetEps) {
        throw std::invalid_argument("Homography: singular matrix");
    }
}

Homography Homography::inverse() const { return Homography(m.inverse().eval()); }

Homography intrinsics_matrix(const Intrinsics& intr, const PrincipalOffset& offset) {
    if (!(intr.focal > 0.0)) {
        throw std::invalid_argument("intrinsics_matrix: focal must be positive");
    }
    return Homography(intrinsics_matrix_t<double>(intr, offset));
}

Homography projection_homography(const CameraPose& virtual_pose, const CameraPose& real_pose,
                                 const Intrinsics& intr_v, const Intrinsics& intr_r) {
    const Mat3 kv = intrinsics_matrix_t<double>(intr_v, virtual_pose.offset);
    const Mat3 kr = intrinsics_matrix_t<double>(intr_r, real_pose.offset);
    const Mat3 rv = virtual_pose.rotation.toRotationMatrix();
    const Mat3 rr = real_pose.rotation.toRotationMatrix();
    const Mat3 pi = kv * rv * (kr * rr).inverse();
    return Homography(pi);
}

Point2 project_point(const Point2& p, const Homography& h) {
    return perspective_divide<double>(h.m * Vec3(p.x(), p.y(), 1.0));
}

WarpMesh warp_mesh(const Homography& h, int rows, int cols) {
    if (rows < 2 || cols < 2) {
        throw std::invalid_argument("warp_mesh: rows and cols must each be >= 2");
    }
    const Homography inv = h.inverse();
    WarpMesh mesh;
    mesh.rows = rows;
    mesh.cols = cols;
    mesh.vertices.reserve(static_cast<size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        const double y = static_cast<double>(r) / (rows - 1);
        for (int c = 0; c < cols; ++c) {
            const double x = static_cast<double>(c) / (cols - 1);
            mesh.vertices.push_back(project_point(Point2(x, y), inv));
        }
    }
    return mesh;
}

}  // namespace steadipose
