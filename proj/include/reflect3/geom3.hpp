#pragma once

// Points, vectors, oriented planes and lines in 3-space, with the
// tolerance-aware predicates every higher layer uses to decide coincidence.
//
// All tolerances are absolute and calibrated for coordinates of order 1..10.

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "reflect3/error.hpp"

namespace reflect3 {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
using Point3 = Vector3<Scalar>;

template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

/// Threshold below which a component is treated as zero when choosing the
/// canonical sign of a direction.
template <typename Scalar>
constexpr Scalar kCanonicalZero = Scalar(1e-12);

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
    return m.array().isFinite().all();
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
    if (!all_finite(m))
        throw GeometryError(ErrorCode::InvalidArgument, std::string(what) + " has a non-finite component");
}

template <typename Scalar>
    requires std::is_floating_point_v<Scalar>
void require_finite(Scalar x, const char* what) {
    if (!std::isfinite(x))
        throw GeometryError(ErrorCode::InvalidArgument, std::string(what) + " is not finite");
}

/// Returns +1 if the first component of `v` whose magnitude exceeds 1e-12 is
/// positive, -1 if it is negative, and +1 for an (effectively) zero vector.
template <typename Scalar>
Scalar canonical_sign(const Vector3<Scalar>& v) {
    for (int i = 0; i < 3; ++i) {
        if (std::abs(v[i]) > kCanonicalZero<Scalar>)
            return v[i] > 0 ? Scalar(1) : Scalar(-1);
    }
    return Scalar(1);
}

template <typename Scalar>
struct Tolerance {
    Scalar eps_len = Scalar(1e-9);
    Scalar eps_angle = Scalar(1e-9);

    Tolerance() = default;
    Tolerance(Scalar len, Scalar angle) : eps_len(len), eps_angle(angle) {
        if (!(eps_len > 0) || !(eps_angle > 0) || !std::isfinite(eps_len) || !std::isfinite(eps_angle))
            throw GeometryError(ErrorCode::InvalidArgument, "tolerances must be finite and strictly positive");
    }

    /// Same tolerance with every threshold multiplied by `factor`.
    Tolerance scaled(Scalar factor) const { return Tolerance(eps_len * factor, eps_angle * factor); }
};

/// Oriented plane { x : normal . x = offset } in Hessian normal form. The
/// stored normal is unit length and canonically signed, so two constructions
/// of the same point set compare equal field by field.
template <typename Scalar>
class Plane {
public:
    using Vec = Vector3<Scalar>;

    Plane(const Vec& normal, Scalar offset) {
        require_finite(normal, "plane normal");
        require_finite(offset, "plane offset");
        const Scalar len = normal.norm();
        if (!(len > 0) || !std::isfinite(len))
            throw GeometryError(ErrorCode::InvalidArgument, "plane normal must be nonzero");
        normal_ = normal / len;
        offset_ = offset / len;
        const Scalar s = canonical_sign<Scalar>(normal_);
        normal_ *= s;
        offset_ *= s;
    }

    /// Plane through `point` with the given normal.
    static Plane through(const Vec& point, const Vec& normal) { return Plane(normal, normal.dot(point)); }

    const Vec& normal() const { return normal_; }
    Scalar offset() const { return offset_; }

    /// Signed distance of `p` from the plane, positive on the normal side.
    Scalar signed_distance(const Vec& p) const { return normal_.dot(p) - offset_; }

    /// Orthogonal projection of `p` onto the plane.
    Vec project(const Vec& p) const { return p - signed_distance(p) * normal_; }

    bool operator==(const Plane& other) const { return normal_ == other.normal_ && offset_ == other.offset_; }

private:
    Vec normal_;
    Scalar offset_;
};

/// Unoriented line stored canonically: unit direction with the canonical sign
/// and the foot point closest to the origin.
template <typename Scalar>
class Line3 {
public:
    using Vec = Vector3<Scalar>;

    Line3(const Vec& point, const Vec& direction) {
        require_finite(point, "line point");
        require_finite(direction, "line direction");
        const Scalar len = direction.norm();
        if (!(len > 0) || !std::isfinite(len))
            throw GeometryError(ErrorCode::InvalidArgument, "line direction must be nonzero");
        direction_ = direction / len;
        direction_ *= canonical_sign<Scalar>(direction_);
        point_ = point - point.dot(direction_) * direction_;
    }

    const Vec& point() const { return point_; }
    const Vec& direction() const { return direction_; }

    Scalar distance(const Vec& p) const { return (p - point_).cross(direction_).norm(); }

    Vec project(const Vec& p) const { return point_ + (p - point_).dot(direction_) * direction_; }

    bool operator==(const Line3& other) const { return point_ == other.point_ && direction_ == other.direction_; }

private:
    Vec point_;
    Vec direction_;
};

// ---------------------------------------------------------------------------
// Predicates

template <typename Scalar>
bool points_coincide(const Point3<Scalar>& a, const Point3<Scalar>& b, const Tolerance<Scalar>& tol = {}) {
    return (a - b).norm() <= tol.eps_len;
}

/// Collinear when the triangle area does not exceed eps_len times the longest edge.
template <typename Scalar>
bool collinear(const Point3<Scalar>& a, const Point3<Scalar>& b, const Point3<Scalar>& c,
               const Tolerance<Scalar>& tol = {}) {
    const Scalar max_edge = std::max({(b - a).norm(), (c - a).norm(), (c - b).norm()});
    // Use the vertex opposite the longest edge as apex for a better-conditioned cross product.
    Scalar area;
    if ((b - a).norm() == max_edge)
        area = (a - c).cross(b - c).norm() / 2;
    else if ((c - a).norm() == max_edge)
        area = (a - b).cross(c - b).norm() / 2;
    else
        area = (b - a).cross(c - a).norm() / 2;
    return area <= tol.eps_len * max_edge;
}

/// Coplanar when the tetrahedron volume does not exceed eps_len times the
/// squared longest edge.
template <typename Scalar>
bool coplanar(const Point3<Scalar>& a, const Point3<Scalar>& b, const Point3<Scalar>& c, const Point3<Scalar>& d,
              const Tolerance<Scalar>& tol = {}) {
    const Scalar max_edge = std::max({(b - a).norm(), (c - a).norm(), (d - a).norm(), (c - b).norm(),
                                      (d - b).norm(), (d - c).norm()});
    const Scalar volume = std::abs((b - a).dot((c - a).cross(d - a))) / 6;
    return volume <= tol.eps_len * max_edge * max_edge;
}

template <typename Scalar>
bool point_on_plane(const Point3<Scalar>& p, const Plane<Scalar>& plane, const Tolerance<Scalar>& tol = {}) {
    return std::abs(plane.signed_distance(p)) <= tol.eps_len;
}

/// Same point set: normals agree and offsets agree (both canonical).
template <typename Scalar>
bool same_plane(const Plane<Scalar>& p, const Plane<Scalar>& q, const Tolerance<Scalar>& tol = {}) {
    return (p.normal() - q.normal()).norm() <= tol.eps_angle && std::abs(p.offset() - q.offset()) <= tol.eps_len;
}

/// Same point set: canonical directions and foot points agree.
template <typename Scalar>
bool same_line(const Line3<Scalar>& l, const Line3<Scalar>& m, const Tolerance<Scalar>& tol = {}) {
    return (l.direction() - m.direction()).norm() <= tol.eps_angle && (l.point() - m.point()).norm() <= tol.eps_len;
}

// ---------------------------------------------------------------------------
// Three noncollinear points.

template <typename Scalar>
struct PointTriple {
    Point3<Scalar> a, b, c;

    PointTriple(const Point3<Scalar>& a_, const Point3<Scalar>& b_, const Point3<Scalar>& c_,
                const Tolerance<Scalar>& tol = {})
        : a(a_), b(b_), c(c_) {
        require_finite(a, "triple point A");
        require_finite(b, "triple point B");
        require_finite(c, "triple point C");
        if (collinear(a, b, c, tol))
            throw GeometryError(ErrorCode::CollinearPoints, "triple points are collinear");
    }
};

// ---------------------------------------------------------------------------
// Constructions

/// Mirror image of `p` in `plane`.
template <typename Scalar>
Point3<Scalar> reflect_point(const Plane<Scalar>& plane, const Point3<Scalar>& p) {
    return p - 2 * plane.signed_distance(p) * plane.normal();
}

/// The plane of points equidistant from `a` and `b`; its reflection swaps them.
template <typename Scalar>
Plane<Scalar> perpendicular_bisector_plane(const Point3<Scalar>& a, const Point3<Scalar>& b,
                                           const Tolerance<Scalar>& tol = {}) {
    const Vector3<Scalar> chord = b - a;
    if (chord.norm() <= tol.eps_len)
        throw GeometryError(ErrorCode::CoincidentPoints, "bisector of coincident points");
    return Plane<Scalar>::through((a + b) / 2, chord);
}

template <typename Scalar>
Plane<Scalar> plane_through_points(const Point3<Scalar>& a, const Point3<Scalar>& b, const Point3<Scalar>& c,
                                   const Tolerance<Scalar>& tol = {}) {
    if (collinear(a, b, c, tol))
        throw GeometryError(ErrorCode::CollinearPoints, "plane through collinear points");
    const Vector3<Scalar> normal = (b - a).cross(c - a);
    return Plane<Scalar>::through((a + b + c) / 3, normal);
}

/// Line of intersection of two non-parallel planes. Identical planes are
/// reported as ParallelPlanes too; callers that care compare the planes.
template <typename Scalar>
Line3<Scalar> intersect_planes(const Plane<Scalar>& p, const Plane<Scalar>& q, const Tolerance<Scalar>& tol = {}) {
    const Vector3<Scalar> direction = p.normal().cross(q.normal());
    const Scalar s = direction.norm();
    if (s <= tol.eps_angle)
        throw GeometryError(ErrorCode::ParallelPlanes, "planes are parallel");
    // Closest point to the origin lies in span{n_p, n_q}.
    const Scalar c = p.normal().dot(q.normal());
    const Scalar det = s * s;  // 1 - c^2
    const Scalar alpha = (p.offset() - c * q.offset()) / det;
    const Scalar beta = (q.offset() - c * p.offset()) / det;
    return Line3<Scalar>(alpha * p.normal() + beta * q.normal(), direction);
}

using Vector3d = Vector3<double>;
using Point3d = Point3<double>;
using Matrix3d = Matrix3<double>;
using Toleranced = Tolerance<double>;
using Planed = Plane<double>;
using Line3d = Line3<double>;
using PointTripled = PointTriple<double>;

}  // namespace reflect3
