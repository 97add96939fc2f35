#pragma once

// Independent classifier used only by tests: reads the class off the
// eigenstructure of the linear part (unit eigenvector for axes, -1
// eigenvector for mirror normals, trace and skew part for the angle) and
// locates axes and centers by SVD least squares.

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "reflect3/reflect3.hpp"

namespace reflect3::testing {

namespace detail {

// Unit vector spanning the (numerical) null space of `m`.
inline Vector3d null_vector(const Matrix3d& m) {
    Eigen::JacobiSVD<Matrix3d> svd(m, Eigen::ComputeFullV);
    Vector3d v = svd.matrixV().col(2);
    return v * canonical_sign<double>(v);
}

inline Vector3d skew_vector(const Matrix3d& m) {
    return Vector3d(m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1)) / 2;
}

inline Point3d min_norm_solve(const Matrix3d& a, const Vector3d& b) {
    return a.completeOrthogonalDecomposition().solve(b);
}

}  // namespace detail

inline MotionClassd spectral_classify(const AffineIsometryd& m, const Toleranced& tol = {}) {
    constexpr double pi = std::numbers::pi;
    const Matrix3d& l = m.linear();
    const Vector3d& t = m.translation();
    const Matrix3d id = Matrix3d::Identity();
    const double trace = l.trace();

    if (l.determinant() > 0) {
        if ((l - id).norm() <= tol.eps_angle) {
            if (t.norm() <= tol.eps_len)
                return Identity<double>{};
            return Translation<double>{t};
        }
        const Vector3d d = detail::null_vector(l - id);
        const double angle = wrap_angle(std::atan2(d.dot(detail::skew_vector(l)), (trace - 1) / 2));
        if (std::abs(angle) <= tol.eps_angle) {
            if (t.norm() <= tol.eps_len)
                return Identity<double>{};
            return Translation<double>{t};
        }
        const Vector3d n = t.dot(d) * d;
        const Line3d axis(detail::min_norm_solve(id - l, t - n), d);
        if (n.norm() <= tol.eps_len)
            return Rotation<double>{axis, angle};
        return Screw<double>{axis, angle, n};
    }

    if ((l + id).norm() <= tol.eps_angle)
        return Inversion<double>{t / 2};
    const Vector3d d = detail::null_vector(l + id);
    const double angle = wrap_angle(std::atan2(d.dot(detail::skew_vector(l)), (trace + 1) / 2));
    if (pi - std::abs(angle) <= tol.eps_angle)
        return Inversion<double>{t / 2};
    if (std::abs(angle) <= tol.eps_angle) {
        const Planed mirror(d, d.dot(t) / 2);
        const Vector3d v = t - t.dot(d) * d;
        if (v.norm() <= tol.eps_len)
            return Reflection<double>{mirror};
        return GlideReflection<double>{mirror, v};
    }
    const Point3d center = Eigen::JacobiSVD<Matrix3d>(id - l, Eigen::ComputeFullU | Eigen::ComputeFullV).solve(t);
    return RotaryReflection<double>{Planed::through(center, d), center, angle};
}

}  // namespace reflect3::testing
