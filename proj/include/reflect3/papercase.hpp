#pragma once

// The worked example: f is a rotation of pi/6 about the line through
// (1, 0, 0) along (1, -1, 0) followed by the translation (1, 1, 1); g is a
// rotation of pi/4 about the line from P = (0, 0, 1) to the origin followed
// by the translation (0, 0, 1). h applies g first and then f, and k is h with
// its translation removed (so k fixes the origin).
//
// analyze() recomputes every reported quantity through the classifier and
// the geometric primitives; no expected value is stored here.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "reflect3/classify.hpp"
#include "reflect3/geom3.hpp"
#include "reflect3/motion.hpp"

namespace reflect3::papercase {

template <typename Scalar = double>
AffineIsometry<Scalar> make_f() {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const auto rot = rotation_about<Scalar>(Point3<Scalar>(1, 0, 0), Vector3<Scalar>(1, -1, 0), pi / 6);
    return then(rot, translation<Scalar>(Vector3<Scalar>(1, 1, 1)));
}

template <typename Scalar = double>
AffineIsometry<Scalar> make_g() {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const Point3<Scalar> p(0, 0, 1);
    const Point3<Scalar> o = Point3<Scalar>::Zero();
    const auto rot = rotation_about<Scalar>(o, Vector3<Scalar>(o - p), pi / 4);
    return then(rot, translation<Scalar>(Vector3<Scalar>(0, 0, 1)));
}

template <typename Scalar = double>
AffineIsometry<Scalar> make_h() {
    return then(make_g<Scalar>(), make_f<Scalar>());
}

template <typename Scalar = double>
AffineIsometry<Scalar> make_k() {
    const auto h = make_h<Scalar>();
    return AffineIsometry<Scalar>(h.linear(), Vector3<Scalar>::Zero());
}

/// Probe used for k in the worked example.
template <typename Scalar = double>
Point3<Scalar> example_probe() {
    return Point3<Scalar>(1, 2, -2);
}

template <typename Scalar>
struct ExampleReport {
    Point3<Scalar> a;
    Point3<Scalar> b;
    Point3<Scalar> b_prime;
    Line3<Scalar> axis_k;
    Vector3<Scalar> n_direction;
    Scalar theta;
    Scalar theta_from_trace;  // cross-check from the trace of the linear part
    Scalar mirror_dihedral;   // angle between the two mirrors (theta / 2)
    Vector3<Scalar> m;
    Vector3<Scalar> residual;
    Scalar residual_dot_n;
    Point3<Scalar> p;
    Line3<Scalar> screw_axis_h;
    Scalar screw_angle_h;
    Vector3<Scalar> bisector_normal_ab;
    Vector3<Scalar> bisector_normal_bb;
};

namespace detail {

template <typename Scalar>
Vector3<Scalar> unit_third_component(const Vector3<Scalar>& v) {
    return v / v.z();
}

}  // namespace detail

template <typename Scalar = double>
ExampleReport<Scalar> analyze(const Tolerance<Scalar>& tol = {}) {
    const auto h = make_h<Scalar>();
    const auto k = make_k<Scalar>();
    const Point3<Scalar> c = Point3<Scalar>::Zero();
    const Point3<Scalar> a = example_probe<Scalar>();

    const FixedPointAnalysis<Scalar> fp = analyze_fixed_point_with_probe(k, c, a, tol);
    const auto& rot = std::get<Rotation<Scalar>>(fp.motion_class);
    const auto& w = *fp.witness;

    ExampleReport<Scalar> r{
        w.a, w.b, w.b_prime,
        intersect_planes(perpendicular_bisector_plane(w.a, w.b, tol), perpendicular_bisector_plane(w.b, w.b_prime, tol), tol),
        Vector3<Scalar>::Zero(), 0, 0, 0,
        Vector3<Scalar>::Zero(), Vector3<Scalar>::Zero(), 0,
        h(c),
        Line3<Scalar>(c, Vector3<Scalar>::UnitZ()), 0,
        Vector3<Scalar>::Zero(), Vector3<Scalar>::Zero()};

    r.n_direction = r.axis_k.direction();
    r.theta = std::abs(rot.angle);
    r.theta_from_trace = std::acos(std::clamp((k.linear().trace() - 1) / 2, Scalar(-1), Scalar(1)));
    const auto& mirrors = fp.improper_sequence;
    r.mirror_dihedral = std::acos(std::clamp(mirrors[0].normal().dot(mirrors[1].normal()), Scalar(-1), Scalar(1)));

    const auto [along, across] = split_translation(r.p, r.n_direction);
    r.m = along;
    r.residual = across;
    r.residual_dot_n = r.residual.dot(r.n_direction);

    const MotionClass<Scalar> hc = classify(h, tol);
    const auto& screw = std::get<Screw<Scalar>>(hc);
    r.screw_axis_h = screw.axis;
    r.screw_angle_h = screw.angle;

    r.bisector_normal_ab = detail::unit_third_component<Scalar>(w.b - w.a);
    r.bisector_normal_bb = detail::unit_third_component<Scalar>(w.b_prime - w.b);
    return r;
}

/// [x0, m(x0), m(m(x0)), ...] with count + 1 entries.
template <typename Scalar>
std::vector<Point3<Scalar>> iterate(const AffineIsometry<Scalar>& m, const Point3<Scalar>& x0, std::size_t count) {
    std::vector<Point3<Scalar>> out;
    out.reserve(count + 1);
    out.push_back(x0);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(m(out.back()));
    return out;
}

}  // namespace reflect3::papercase
