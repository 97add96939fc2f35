#pragma once

// Classification of rigid motions into their canonical forms.
//
// The fixed-point classifier is constructive: it picks a probe A, sets
// B = m(A), B' = m(B), builds the three-mirror sequence for
// (A, B, C) -> (B, B', C) and reads the rotation off its first two mirrors.
// The general classifier anchors at the origin, classifies the linear part
// and then recombines the translation u = n + v (n along the axis or mirror
// normal, v orthogonal to it).

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <type_traits>
#include <variant>

#include <Eigen/Dense>

#include "reflect3/construct.hpp"
#include "reflect3/geom3.hpp"
#include "reflect3/motion.hpp"

namespace reflect3 {

template <typename Scalar>
struct Identity {};

template <typename Scalar>
struct Translation {
    Vector3<Scalar> v;
};

/// Right-handed rotation by `angle` in (-pi, pi] about the canonical axis.
template <typename Scalar>
struct Rotation {
    Line3<Scalar> axis;
    Scalar angle;
};

template <typename Scalar>
struct Screw {
    Line3<Scalar> axis;
    Scalar angle;
    Vector3<Scalar> slide;
};

template <typename Scalar>
struct Reflection {
    Plane<Scalar> mirror;
};

template <typename Scalar>
struct GlideReflection {
    Plane<Scalar> mirror;
    Vector3<Scalar> slide;
};

template <typename Scalar>
struct Inversion {
    Point3<Scalar> center;
};

/// Reflection in `mirror` combined with a rotation by `angle` about the line
/// through `center` along the mirror normal. The two commute.
template <typename Scalar>
struct RotaryReflection {
    Plane<Scalar> mirror;
    Point3<Scalar> center;
    Scalar angle;
};

template <typename Scalar>
using MotionClass = std::variant<Identity<Scalar>, Translation<Scalar>, Rotation<Scalar>, Screw<Scalar>,
                                 Reflection<Scalar>, GlideReflection<Scalar>, Inversion<Scalar>,
                                 RotaryReflection<Scalar>>;

enum class ClassKind { Identity, Translation, Rotation, Screw, Reflection, GlideReflection, Inversion, RotaryReflection };

template <typename Scalar>
ClassKind kind(const MotionClass<Scalar>& c) {
    return static_cast<ClassKind>(c.index());
}

inline const char* class_name(ClassKind k) {
    switch (k) {
    case ClassKind::Identity: return "identity";
    case ClassKind::Translation: return "translation";
    case ClassKind::Rotation: return "rotation";
    case ClassKind::Screw: return "screw";
    case ClassKind::Reflection: return "reflection";
    case ClassKind::GlideReflection: return "glide_reflection";
    case ClassKind::Inversion: return "inversion";
    case ClassKind::RotaryReflection: return "rotary_reflection";
    }
    return "unknown";
}

inline bool is_proper(ClassKind k) {
    return k == ClassKind::Identity || k == ClassKind::Translation || k == ClassKind::Rotation ||
           k == ClassKind::Screw;
}

/// Maps an angle into (-pi, pi].
template <typename Scalar>
Scalar wrap_angle(Scalar angle) {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    Scalar r = std::remainder(angle, 2 * pi);
    if (r <= -pi)
        r += 2 * pi;
    return r;
}

enum class ProbeCase { InversionLike, HalfTurn, Generic };

template <typename Scalar>
struct ProbeWitness {
    Point3<Scalar> a, b, b_prime;
    ProbeCase case_tag = ProbeCase::Generic;
};

template <typename Scalar>
struct FixedPointAnalysis {
    MotionClass<Scalar> motion_class;
    std::optional<ProbeWitness<Scalar>> witness;
    // Mirrors of the two motions sending (A, B, C) to (B, B', C); empty when
    // the class was decided before a probe was needed.
    ReflectionSequence<Scalar> improper_sequence;
    ReflectionSequence<Scalar> proper_sequence;
};

// ---------------------------------------------------------------------------

/// The rotation sigma_beta o sigma_alpha (alpha applied first): about the
/// planes' common line by twice their dihedral angle.
template <typename Scalar>
MotionClass<Scalar> rotation_from_plane_pair(const Plane<Scalar>& alpha, const Plane<Scalar>& beta,
                                             const Tolerance<Scalar>& tol = {}) {
    const Vector3<Scalar> cross = alpha.normal().cross(beta.normal());
    const Scalar s = cross.norm();
    if (s <= tol.eps_angle) {
        if (std::abs(alpha.offset() - beta.offset()) <= tol.eps_len)
            return Identity<Scalar>{};
        throw GeometryError(ErrorCode::ParallelDistinctMirrors, "mirrors are parallel and distinct");
    }
    const Scalar dihedral = std::atan2(s, alpha.normal().dot(beta.normal()));
    const Line3<Scalar> axis = intersect_planes(alpha, beta, tol);
    Scalar angle = wrap_angle<Scalar>(2 * dihedral);
    if (axis.direction().dot(cross) < 0)
        angle = -angle;
    if (std::abs(angle) == std::numbers::pi_v<Scalar>)
        angle = std::numbers::pi_v<Scalar>;
    return Rotation<Scalar>{axis, angle};
}

namespace detail {

template <typename Scalar>
std::array<Vector3<Scalar>, 6> probe_offsets() {
    const Vector3<Scalar> e1 = Vector3<Scalar>::UnitX(), e2 = Vector3<Scalar>::UnitY(), e3 = Vector3<Scalar>::UnitZ();
    return {e1, e2, e3, e1 + e2, e2 + e3, e1 + e3};
}

template <typename Scalar>
Scalar probe_scale(const Point3<Scalar>& c) {
    return std::max(Scalar(1), c.norm());
}

// For small rotations the two bisector normals are nearly parallel and their
// cross product loses digits. The chords m(A_i) - A_i of the frame probes are
// orthogonal to the axis; near a half-turn the cross product of the two
// longest chords gives its direction, and for smaller turns the antisymmetric
// part of the chord matrix (sin(angle) times the axis) is better conditioned.
template <typename Scalar>
Vector3<Scalar> axis_from_chords(const AffineIsometry<Scalar>& m, const Point3<Scalar>& c, Scalar scale) {
    Matrix3<Scalar> chords;
    for (int i = 0; i < 3; ++i) {
        const Point3<Scalar> a = c + scale * Vector3<Scalar>::Unit(i);
        chords.col(i) = (m(a) - a) / scale;
    }
    Vector3<Scalar> best = chords.col(0).cross(chords.col(1));
    for (const auto& candidate : {chords.col(1).cross(chords.col(2)), chords.col(0).cross(chords.col(2))}) {
        if (candidate.norm() > best.norm())
            best = candidate;
    }
    const Vector3<Scalar> skew(chords(2, 1) - chords(1, 2), chords(0, 2) - chords(2, 0), chords(1, 0) - chords(0, 1));
    // |skew| = 2 sin(angle) and |best| is about (2 sin(angle / 2))^2.
    if (skew.norm() > best.norm())
        return skew.normalized();
    return best.normalized();
}

// Signed angle by which m turns the frame probe farthest from `axis` about it.
template <typename Scalar>
Scalar turn_about(const AffineIsometry<Scalar>& m, const Line3<Scalar>& axis, Scalar scale) {
    const Vector3<Scalar>& d = axis.direction();
    const auto off_axis = [&](const Vector3<Scalar>& v) -> Vector3<Scalar> { return v - v.dot(d) * d; };
    Vector3<Scalar> from = Vector3<Scalar>::Zero(), to = Vector3<Scalar>::Zero();
    for (int i = 0; i < 3; ++i) {
        const Point3<Scalar> a = axis.point() + scale * Vector3<Scalar>::Unit(i);
        const Vector3<Scalar> r = off_axis(a - axis.point());
        if (r.norm() > from.norm()) {
            from = r;
            to = off_axis(m(a) - axis.point());
        }
    }
    return std::atan2(d.dot(from.cross(to)), from.dot(to));
}

template <typename Scalar>
FixedPointAnalysis<Scalar> classify_with_probe(const AffineIsometry<Scalar>& m, const Point3<Scalar>& c,
                                               const Point3<Scalar>& a, const Tolerance<Scalar>& tol);

}  // namespace detail

/// Classifies a motion that fixes `c` into Identity, Rotation (axis through
/// c), Reflection (mirror through c), Inversion{c} or RotaryReflection
/// (center c), keeping the probe and the mirror sequences it was derived from.
template <typename Scalar>
FixedPointAnalysis<Scalar> analyze_fixed_point(const AffineIsometry<Scalar>& m, const std::type_identity_t<Point3<Scalar>>& c,
                                               const Tolerance<Scalar>& tol = {}) {
    require_finite(c, "fixed point");
    if ((m(c) - c).norm() > tol.eps_len)
        throw GeometryError(ErrorCode::NotAFixedPoint, "motion does not fix the given point");

    const Scalar scale = detail::probe_scale(c);
    bool identity = true;
    bool antipodal = true;
    for (int i = 0; i < 3; ++i) {
        const Point3<Scalar> a = c + scale * Vector3<Scalar>::Unit(i);
        const Point3<Scalar> image = m(a);
        identity = identity && points_coincide(image, a, tol);
        antipodal = antipodal && points_coincide(image, Point3<Scalar>(2 * c - a), tol);
    }
    if (identity)
        return {Identity<Scalar>{}, std::nullopt, {}, {}};
    if (antipodal) {
        ProbeWitness<Scalar> w{c + scale * Vector3<Scalar>::UnitX(), m(c + scale * Vector3<Scalar>::UnitX()),
                               c + scale * Vector3<Scalar>::UnitX(), ProbeCase::InversionLike};
        return {Inversion<Scalar>{c}, w, {}, {}};
    }

    for (const auto& offset : detail::probe_offsets<Scalar>()) {
        const Point3<Scalar> a = c + scale * offset;
        const Point3<Scalar> b = m(a);
        if (points_coincide(a, b, tol) || collinear(a, b, c, tol))
            continue;
        return detail::classify_with_probe(m, c, a, tol);
    }

    // Every candidate maps onto the line through c and itself. Mixed signs
    // are impossible for a linear isometry (the summed probes would catch
    // them), so the motion is within a few tolerances of the identity or of
    // the inversion in c.
    const Point3<Scalar> a = c + scale * Vector3<Scalar>::UnitX();
    const Scalar slack = 10 * tol.eps_len * scale;
    if ((m(a) - a).norm() <= slack && orientation(m).proper())
        return {Identity<Scalar>{}, std::nullopt, {}, {}};
    if ((m(a) - (2 * c - a)).norm() <= slack && !orientation(m).proper())
        return {Inversion<Scalar>{c}, std::nullopt, {}, {}};
    throw GeometryError(ErrorCode::ProbeExhausted, "no usable probe point");
}

template <typename Scalar>
MotionClass<Scalar> classify_fixed_point(const AffineIsometry<Scalar>& m, const std::type_identity_t<Point3<Scalar>>& c,
                                         const Tolerance<Scalar>& tol = {}) {
    return analyze_fixed_point(m, c, tol).motion_class;
}

/// Same as classify_fixed_point but with a caller-chosen probe point `a`
/// (which must not be fixed and must not be collinear with its image and c).
template <typename Scalar>
FixedPointAnalysis<Scalar> analyze_fixed_point_with_probe(const AffineIsometry<Scalar>& m, const std::type_identity_t<Point3<Scalar>>& c,
                                                          const std::type_identity_t<Point3<Scalar>>& a, const Tolerance<Scalar>& tol = {}) {
    if ((m(c) - c).norm() > tol.eps_len)
        throw GeometryError(ErrorCode::NotAFixedPoint, "motion does not fix the given point");
    const Point3<Scalar> b = m(a);
    if (points_coincide(a, b, tol) || collinear(a, b, c, tol))
        throw GeometryError(ErrorCode::InvalidArgument, "probe is fixed or collinear with its image and c");
    return detail::classify_with_probe(m, c, a, tol);
}

namespace detail {

template <typename Scalar>
FixedPointAnalysis<Scalar> classify_with_probe(const AffineIsometry<Scalar>& m, const Point3<Scalar>& c,
                                               const Point3<Scalar>& a, const Tolerance<Scalar>& tol) {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const Point3<Scalar> b = m(a);
    const Point3<Scalar> b2 = m(b);

    FixedPointAnalysis<Scalar> out{Identity<Scalar>{}, std::nullopt, {}, {}};
    const ProbeCase tag = points_coincide(b2, a, tol) ? ProbeCase::HalfTurn : ProbeCase::Generic;
    out.witness = ProbeWitness<Scalar>{a, b, b2, tag};

    const TriplePair<Scalar> pair{PointTriple<Scalar>(a, b, c, tol), TargetTriple<Scalar>{b, b2, c}};
    out.improper_sequence = three_reflections(pair, tol);
    out.proper_sequence = second_motion(out.improper_sequence, pair.dst, tol);
    const auto& alpha = out.improper_sequence[0];
    const auto& beta = out.improper_sequence[1];

    if (orientation(m).proper()) {
        // Short chords (tiny turns, near half-turns, probes near the axis)
        // leave the bisector mirrors poorly determined; read the axis and the
        // angle off the frame probes instead.
        const Scalar reach = Scalar(0.25) * (a - c).norm();
        if ((b - a).norm() < reach || (b2 - a).norm() < reach ||
            alpha.normal().cross(beta.normal()).norm() < Scalar(0.25)) {
            const Line3<Scalar> axis(c, axis_from_chords(m, c, probe_scale(c)));
            const Scalar angle = turn_about(m, axis, probe_scale(c));
            if (std::abs(angle) <= tol.eps_angle)
                out.motion_class = Identity<Scalar>{};
            else
                out.motion_class = Rotation<Scalar>{axis, angle};
            return out;
        }
        MotionClass<Scalar> rot = rotation_from_plane_pair(alpha, beta, tol);
        if (auto* r = std::get_if<Rotation<Scalar>>(&rot); r && std::abs(r->angle) <= tol.eps_angle)
            rot = Identity<Scalar>{};
        out.motion_class = rot;
        return out;
    }

    if (tag == ProbeCase::HalfTurn) {
        // The third mirror repeats the second, so the motion is sigma_alpha.
        out.motion_class = Reflection<Scalar>{alpha};
        return out;
    }

    // Improper without a reflecting probe: x -> 2c - m(x) is proper and fixes
    // c, and m is its composition with the inversion in c. Since the inversion
    // is a half-turn about any line through c combined with the reflection in
    // the plane through c orthogonal to it, m is a rotary reflection whose
    // angle is shifted by pi.
    const AffineIsometry<Scalar> proper = then(m, inversion(c));
    const MotionClass<Scalar> inner = analyze_fixed_point(proper, c, tol).motion_class;
    const auto* r = std::get_if<Rotation<Scalar>>(&inner);
    if (r == nullptr) {
        out.motion_class = Inversion<Scalar>{c};
        return out;
    }
    const Plane<Scalar> mirror = Plane<Scalar>::through(c, r->axis.direction());
    const Scalar angle = wrap_angle<Scalar>(r->angle + pi);
    if (std::abs(angle) <= tol.eps_angle)
        out.motion_class = Reflection<Scalar>{mirror};
    else if (pi - std::abs(angle) <= tol.eps_angle)
        out.motion_class = Inversion<Scalar>{c};
    else
        out.motion_class = RotaryReflection<Scalar>{mirror, c, angle};
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// u = n + v with n along `direction` and v orthogonal to it.
template <typename Scalar>
std::pair<Vector3<Scalar>, Vector3<Scalar>> split_translation(const Vector3<Scalar>& u,
                                                              const Vector3<Scalar>& direction) {
    const Vector3<Scalar> d = direction.normalized();
    const Vector3<Scalar> n = u.dot(d) * d;
    return {n, u - n};
}

template <typename Scalar>
std::pair<Vector3<Scalar>, Vector3<Scalar>> split_translation(const Vector3<Scalar>& u, const Line3<Scalar>& axis) {
    return split_translation(u, axis.direction());
}

template <typename Scalar>
std::pair<Vector3<Scalar>, Vector3<Scalar>> split_translation(const Vector3<Scalar>& u, const Plane<Scalar>& mirror) {
    return split_translation(u, mirror.normal());
}

namespace detail {

// Fixed point, within the plane through the origin orthogonal to `d`, of
// x -> linear x + v where v is orthogonal to d and linear rotates about d.
template <typename Scalar>
Point3<Scalar> in_plane_fixed_point(const Matrix3<Scalar>& linear, const Vector3<Scalar>& d, const Vector3<Scalar>& v) {
    const Vector3<Scalar> e1 = d.unitOrthogonal();
    const Vector3<Scalar> e2 = d.cross(e1);
    Eigen::Matrix<Scalar, 3, 2> basis;
    basis << e1, e2;
    const Eigen::Matrix<Scalar, 2, 2> system = basis.transpose() * (Matrix3<Scalar>::Identity() - linear) * basis;
    const Eigen::Matrix<Scalar, 2, 1> y = system.partialPivLu().solve(basis.transpose() * v);
    return basis * y;
}

}  // namespace detail

/// Canonical class of an arbitrary rigid motion.
template <typename Scalar>
MotionClass<Scalar> classify(const AffineIsometry<Scalar>& m, const Tolerance<Scalar>& tol = {}) {
    const Vector3<Scalar> u = m.translation();
    const AffineIsometry<Scalar> anchored(m.linear(), Vector3<Scalar>::Zero());
    const MotionClass<Scalar> fixed = classify_fixed_point(anchored, Point3<Scalar>(Point3<Scalar>::Zero()), tol);

    return std::visit(
        [&](const auto& c) -> MotionClass<Scalar> {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Identity<Scalar>>) {
                if (u.norm() <= tol.eps_len)
                    return Identity<Scalar>{};
                return Translation<Scalar>{u};
            } else if constexpr (std::is_same_v<T, Rotation<Scalar>>) {
                const Vector3<Scalar>& d = c.axis.direction();
                const auto [n, v] = split_translation(u, d);
                const Line3<Scalar> axis(detail::in_plane_fixed_point(m.linear(), d, v), d);
                if (n.norm() <= tol.eps_len)
                    return Rotation<Scalar>{axis, c.angle};
                return Screw<Scalar>{axis, c.angle, n};
            } else if constexpr (std::is_same_v<T, Reflection<Scalar>>) {
                const Vector3<Scalar>& normal = c.mirror.normal();
                const auto [n, v] = split_translation(u, normal);
                const Plane<Scalar> mirror(normal, normal.dot(u) / 2);
                if (v.norm() <= tol.eps_len)
                    return Reflection<Scalar>{mirror};
                return GlideReflection<Scalar>{mirror, v};
            } else if constexpr (std::is_same_v<T, Inversion<Scalar>>) {
                return Inversion<Scalar>{u / 2};
            } else if constexpr (std::is_same_v<T, RotaryReflection<Scalar>>) {
                const Point3<Scalar> center =
                    (m.linear() - Matrix3<Scalar>::Identity()).partialPivLu().solve(-u);
                return RotaryReflection<Scalar>{Plane<Scalar>::through(center, c.mirror.normal()), center, c.angle};
            } else {
                throw GeometryError(ErrorCode::InvalidClassParameters, "unexpected fixed-point class");
            }
        },
        fixed);
}

// ---------------------------------------------------------------------------

namespace detail {

template <typename Scalar>
constexpr Scalar kParamTol = Scalar(1e-9);

inline void require(bool ok, const char* what) {
    if (!ok)
        throw GeometryError(ErrorCode::InvalidClassParameters, what);
}

template <typename Scalar>
void require_proper_angle(Scalar angle) {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    require(std::isfinite(angle) && angle > -pi && angle <= pi, "angle outside (-pi, pi]");
    require(std::abs(angle) > kParamTol<Scalar>, "rotation angle is zero");
}

}  // namespace detail

/// An affine isometry realizing the class parameters.
template <typename Scalar>
AffineIsometry<Scalar> reconstruct(const MotionClass<Scalar>& mc) {
    using detail::kParamTol;
    using detail::require;
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    return std::visit(
        [&](const auto& c) -> AffineIsometry<Scalar> {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Identity<Scalar>>) {
                return AffineIsometry<Scalar>::identity();
            } else if constexpr (std::is_same_v<T, Translation<Scalar>>) {
                require(all_finite(c.v) && c.v.norm() > 0, "translation must be nonzero");
                return translation(c.v);
            } else if constexpr (std::is_same_v<T, Rotation<Scalar>>) {
                detail::require_proper_angle(c.angle);
                return rotation_about_line(c.axis, c.angle);
            } else if constexpr (std::is_same_v<T, Screw<Scalar>>) {
                detail::require_proper_angle(c.angle);
                require(all_finite(c.slide) && c.slide.norm() > 0, "screw slide must be nonzero");
                require(c.slide.cross(c.axis.direction()).norm() <= kParamTol<Scalar> * std::max(Scalar(1), c.slide.norm()),
                        "screw slide must be parallel to the axis");
                return then(rotation_about_line(c.axis, c.angle), translation(c.slide));
            } else if constexpr (std::is_same_v<T, Reflection<Scalar>>) {
                return reflection(c.mirror);
            } else if constexpr (std::is_same_v<T, GlideReflection<Scalar>>) {
                require(all_finite(c.slide) && c.slide.norm() > 0, "glide slide must be nonzero");
                require(std::abs(c.slide.dot(c.mirror.normal())) <= kParamTol<Scalar> * std::max(Scalar(1), c.slide.norm()),
                        "glide slide must lie in the mirror");
                return then(reflection(c.mirror), translation(c.slide));
            } else if constexpr (std::is_same_v<T, Inversion<Scalar>>) {
                return inversion(c.center);
            } else {
                require(std::isfinite(c.angle) && c.angle > -pi && c.angle < pi, "angle outside (-pi, pi)");
                require(std::abs(c.angle) > kParamTol<Scalar> && pi - std::abs(c.angle) > kParamTol<Scalar>,
                        "rotary angle must avoid 0 and pi");
                require(std::abs(c.mirror.signed_distance(c.center)) <= kParamTol<Scalar> * std::max(Scalar(1), c.center.norm()),
                        "rotary center must lie on the mirror");
                return then(reflection(c.mirror), rotation_about_line(Line3<Scalar>(c.center, c.mirror.normal()), c.angle));
            }
        },
        mc);
}

using MotionClassd = MotionClass<double>;

}  // namespace reflect3
