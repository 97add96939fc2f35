#pragma once

// Rigid motions in two interchangeable forms: an ordered sequence of mirror
// planes and the affine form x -> L x + t. Composition is spelled `then` so the
// application order is always explicit: then(f, g) applies f first.

#include <array>
#include <cmath>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "reflect3/geom3.hpp"

namespace reflect3 {

namespace detail {

template <typename Scalar>
Scalar orthogonality_residual(const Matrix3<Scalar>& m) {
    return (m.transpose() * m - Matrix3<Scalar>::Identity()).cwiseAbs().maxCoeff();
}

// Modified Gram-Schmidt on the columns; keeps the sign of the determinant.
template <typename Scalar>
Matrix3<Scalar> orthonormalize(const Matrix3<Scalar>& m) {
    Matrix3<Scalar> q = m;
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < j; ++k)
            q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
        q.col(j).normalize();
    }
    return q;
}

}  // namespace detail

/// Affine isometry x -> linear * x + translation with an orthogonal linear part.
///
/// Linear parts whose orthogonality residual lies in (1e-10, 1e-6] are
/// re-orthonormalized on construction; anything worse is rejected.
template <typename Scalar>
class AffineIsometry {
public:
    using Vec = Vector3<Scalar>;
    using Mat = Matrix3<Scalar>;

    static constexpr Scalar kOrthogonalityTol = Scalar(1e-10);
    static constexpr Scalar kRepairLimit = Scalar(1e-6);

    AffineIsometry() : linear_(Mat::Identity()), translation_(Vec::Zero()) {}

    AffineIsometry(const Mat& linear, const Vec& translation) : linear_(linear), translation_(translation) {
        require_finite(linear_, "linear part");
        require_finite(translation_, "translation");
        const Scalar residual = detail::orthogonality_residual(linear_);
        if (residual > kRepairLimit)
            throw GeometryError(ErrorCode::NotOrthogonal, "linear part is not orthogonal");
        if (residual > kOrthogonalityTol)
            linear_ = detail::orthonormalize(linear_);
    }

    static AffineIsometry identity() { return AffineIsometry(); }

    const Mat& linear() const { return linear_; }
    const Vec& translation() const { return translation_; }

    Vec operator()(const Vec& p) const { return linear_ * p + translation_; }

private:
    Mat linear_;
    Vec translation_;
};

/// Mirror planes applied first to last.
template <typename Scalar>
struct ReflectionSequence {
    std::vector<Plane<Scalar>> planes;

    ReflectionSequence() = default;
    explicit ReflectionSequence(std::vector<Plane<Scalar>> p) : planes(std::move(p)) {}

    std::size_t size() const { return planes.size(); }
    bool empty() const { return planes.empty(); }
    const Plane<Scalar>& operator[](std::size_t i) const { return planes[i]; }
};

/// +1 for orientation preserving motions, -1 for reversing ones.
struct OrientationParity {
    int sign = 1;

    bool proper() const { return sign > 0; }
    bool operator==(const OrientationParity&) const = default;
};

template <typename Scalar>
Point3<Scalar> apply(const AffineIsometry<Scalar>& m, const Point3<Scalar>& p) {
    return m(p);
}

template <typename Scalar>
Point3<Scalar> apply(const ReflectionSequence<Scalar>& s, Point3<Scalar> p) {
    for (const auto& plane : s.planes)
        p = reflect_point(plane, p);
    return p;
}

/// Motion that applies `first`, then `second`.
template <typename Scalar>
AffineIsometry<Scalar> then(const AffineIsometry<Scalar>& first, const AffineIsometry<Scalar>& second) {
    return AffineIsometry<Scalar>(second.linear() * first.linear(),
                                  second.linear() * first.translation() + second.translation());
}

template <typename Scalar>
AffineIsometry<Scalar> inverse(const AffineIsometry<Scalar>& m) {
    const Matrix3<Scalar> lt = m.linear().transpose();
    return AffineIsometry<Scalar>(lt, -(lt * m.translation()));
}

template <typename Scalar>
AffineIsometry<Scalar> translation(const Vector3<Scalar>& v) {
    return AffineIsometry<Scalar>(Matrix3<Scalar>::Identity(), v);
}

template <typename Scalar>
AffineIsometry<Scalar> reflection(const Plane<Scalar>& plane) {
    const Vector3<Scalar>& n = plane.normal();
    return AffineIsometry<Scalar>(Matrix3<Scalar>::Identity() - 2 * n * n.transpose(), 2 * plane.offset() * n);
}

/// Central inversion x -> 2 c - x.
template <typename Scalar>
AffineIsometry<Scalar> inversion(const Point3<Scalar>& center) {
    require_finite(center, "inversion center");
    return AffineIsometry<Scalar>(-Matrix3<Scalar>::Identity(), 2 * center);
}

/// Right-handed rotation by `angle` radians about the oriented axis.
template <typename Scalar>
AffineIsometry<Scalar> rotation_about_line(const Line3<Scalar>& axis, Scalar angle) {
    require_finite(angle, "rotation angle");
    const Matrix3<Scalar> r = Eigen::AngleAxis<Scalar>(angle, axis.direction()).toRotationMatrix();
    return AffineIsometry<Scalar>(r, axis.point() - r * axis.point());
}

/// Rotation about the line through `point` along `direction` (direction taken as given, not canonicalized).
template <typename Scalar>
AffineIsometry<Scalar> rotation_about(const Point3<Scalar>& point, const Vector3<Scalar>& direction, Scalar angle) {
    require_finite(point, "rotation point");
    require_finite(direction, "rotation direction");
    require_finite(angle, "rotation angle");
    const Scalar len = direction.norm();
    if (!(len > 0))
        throw GeometryError(ErrorCode::InvalidArgument, "rotation direction must be nonzero");
    const Matrix3<Scalar> r = Eigen::AngleAxis<Scalar>(angle, direction / len).toRotationMatrix();
    return AffineIsometry<Scalar>(r, point - r * point);
}

template <typename Scalar>
AffineIsometry<Scalar> seq_to_affine(const ReflectionSequence<Scalar>& s) {
    AffineIsometry<Scalar> m;
    for (const auto& plane : s.planes)
        m = then(m, reflection(plane));
    return m;
}

template <typename Scalar>
ReflectionSequence<Scalar> concatenate(const ReflectionSequence<Scalar>& first, const ReflectionSequence<Scalar>& second) {
    ReflectionSequence<Scalar> out = first;
    out.planes.insert(out.planes.end(), second.planes.begin(), second.planes.end());
    return out;
}

template <typename Scalar>
OrientationParity orientation(const AffineIsometry<Scalar>& m) {
    return OrientationParity{m.linear().determinant() > 0 ? 1 : -1};
}

/// Affine frame (origin and unit points) whose images pin down an isometry.
template <typename Scalar>
std::array<Point3<Scalar>, 4> probe_frame() {
    return {Point3<Scalar>::Zero(), Point3<Scalar>::UnitX(), Point3<Scalar>::UnitY(), Point3<Scalar>::UnitZ()};
}

template <typename Scalar>
bool iso_equal(const AffineIsometry<Scalar>& m1, const AffineIsometry<Scalar>& m2, const Tolerance<Scalar>& tol = {}) {
    for (const auto& p : probe_frame<Scalar>()) {
        if ((m1(p) - m2(p)).norm() > tol.eps_len)
            return false;
    }
    return true;
}

/// Largest displacement between the two motions over the probe frame.
template <typename Scalar>
Scalar iso_distance(const AffineIsometry<Scalar>& m1, const AffineIsometry<Scalar>& m2) {
    Scalar worst = 0;
    for (const auto& p : probe_frame<Scalar>())
        worst = std::max(worst, (m1(p) - m2(p)).norm());
    return worst;
}

using AffineIsometryd = AffineIsometry<double>;
using ReflectionSequenced = ReflectionSequence<double>;

}  // namespace reflect3
