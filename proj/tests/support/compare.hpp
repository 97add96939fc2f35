#pragma once

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "reflect3/reflect3.hpp"

namespace reflect3::testing {

/// Difference of two angles modulo 2 pi.
inline double angle_gap(double a, double b) {
    return std::abs(wrap_angle(a - b));
}

inline bool same_vector(const Vector3d& a, const Vector3d& b, double tol) {
    return (a - b).norm() <= tol;
}

/// Same line as point sets: directions agree up to sign and each foot point is on the other line.
inline bool same_line_set(const Line3d& l, const Line3d& m, double tol) {
    return l.direction().cross(m.direction()).norm() <= tol && l.distance(m.point()) <= tol &&
           m.distance(l.point()) <= tol;
}

/// Rotation parameters match; at a half-turn the direction sign is immaterial.
inline bool same_rotation(const Line3d& l1, double a1, const Line3d& l2, double a2, double tol) {
    if (!same_line_set(l1, l2, tol))
        return false;
    const double s = l1.direction().dot(l2.direction()) > 0 ? 1.0 : -1.0;
    return angle_gap(a1, s * a2) <= tol;
}

inline bool same_plane_set(const Planed& p, const Planed& q, double tol) {
    return p.normal().cross(q.normal()).norm() <= tol && std::abs(p.signed_distance(q.normal() * q.offset())) <= tol;
}

/// Same variant and parameters within `tol`.
inline bool same_class(const MotionClassd& a, const MotionClassd& b, double tol) {
    if (a.index() != b.index())
        return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b);
            if constexpr (std::is_same_v<T, Identity<double>>) {
                return true;
            } else if constexpr (std::is_same_v<T, Translation<double>>) {
                return same_vector(x.v, y.v, tol);
            } else if constexpr (std::is_same_v<T, Rotation<double>>) {
                return same_rotation(x.axis, x.angle, y.axis, y.angle, tol);
            } else if constexpr (std::is_same_v<T, Screw<double>>) {
                return same_rotation(x.axis, x.angle, y.axis, y.angle, tol) && same_vector(x.slide, y.slide, tol);
            } else if constexpr (std::is_same_v<T, Reflection<double>>) {
                return same_plane_set(x.mirror, y.mirror, tol);
            } else if constexpr (std::is_same_v<T, GlideReflection<double>>) {
                return same_plane_set(x.mirror, y.mirror, tol) && same_vector(x.slide, y.slide, tol);
            } else if constexpr (std::is_same_v<T, Inversion<double>>) {
                return same_vector(x.center, y.center, tol);
            } else {
                const double s = x.mirror.normal().dot(y.mirror.normal()) > 0 ? 1.0 : -1.0;
                return same_plane_set(x.mirror, y.mirror, tol) && same_vector(x.center, y.center, tol) &&
                       angle_gap(x.angle, s * y.angle) <= tol;
            }
        },
        a);
}

inline std::string describe(const MotionClassd& c) {
    std::ostringstream os;
    os << class_name(kind(c));
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (requires { x.axis; })
                os << " axis(" << x.axis.point().transpose() << " | " << x.axis.direction().transpose() << ")";
            if constexpr (requires { x.mirror; })
                os << " mirror(" << x.mirror.normal().transpose() << " | " << x.mirror.offset() << ")";
            if constexpr (requires { x.angle; })
                os << " angle " << x.angle;
            if constexpr (requires { x.slide; })
                os << " slide(" << x.slide.transpose() << ")";
            if constexpr (requires { x.center; })
                os << " center(" << x.center.transpose() << ")";
            if constexpr (std::is_same_v<T, Translation<double>>)
                os << " v(" << x.v.transpose() << ")";
        },
        c);
    return os.str();
}

}  // namespace reflect3::testing
