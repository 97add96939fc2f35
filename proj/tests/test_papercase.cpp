#include <doctest.h>

#include <cmath>
#include <numbers>

#include "reflect3/papercase.hpp"
#include "support/random_geometry.hpp"

using namespace reflect3;
using namespace reflect3::papercase;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0), kSqrt3 = std::sqrt(3.0), kSqrt6 = std::sqrt(6.0);

double direction_gap(const Vector3d& a, const Vector3d& b) {
    const double g = std::atan2(a.cross(b).norm(), a.dot(b));
    return std::min(g, kPi - g);
}

}  // namespace

TEST_CASE("f is a pure rotation of pi/6 about a horizontal line") {
    const auto f = make_f();
    const auto c = classify(f);
    REQUIRE(std::holds_alternative<Rotation<double>>(c));
    const auto& r = std::get<Rotation<double>>(c);
    CHECK(std::abs(std::abs(r.angle) - kPi / 6) <= 1e-9);
    CHECK(direction_gap(r.axis.direction(), Vector3d(1, -1, 0)) <= 1e-9);
    CHECK(std::abs(f.linear().trace() - (1 + kSqrt3)) <= 1e-12);
    // Points of the fixed line solve f(x) = x.
    for (double s : {-2.0, 0.0, 3.5}) {
        const Point3d x = r.axis.point() + s * r.axis.direction();
        CHECK((f(x) - x).norm() <= 1e-12);
    }
    CHECK((r.axis.point() - Point3d(-0.31947921688234243, -0.31947921688234227, 3.138958433764684)).norm() <= 1e-9);
}

TEST_CASE("g is a screw along the z-axis") {
    const auto g = make_g();
    const auto c = classify(g);
    REQUIRE(std::holds_alternative<Screw<double>>(c));
    const auto& s = std::get<Screw<double>>(c);
    CHECK(same_line(s.axis, Line3d(Point3d::Zero(), Vector3d::UnitZ())));
    CHECK((s.slide - Vector3d(0, 0, 1)).norm() <= 1e-12);
    CHECK(std::abs(std::abs(s.angle) - kPi / 4) <= 1e-12);

    const auto orbit = iterate(g, Point3d(1, 0, 0), 8);
    REQUIRE(orbit.size() == 9);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        CHECK(orbit[i].z() == double(i));
        CHECK(std::abs(orbit[i].head<2>().norm() - 1) <= 1e-12);
    }
}

TEST_CASE("k sends A to B and B to B'") {
    const auto k = make_k();
    const Point3d b(kSqrt6 / 2 + kSqrt2, kSqrt6 / 2, 1 - kSqrt3);
    const Point3d b2((7 - kSqrt2 + 2 * kSqrt3 + kSqrt6) / 4, (-1 - kSqrt2 - 2 * kSqrt3 + kSqrt6) / 4,
                     (-6 + 2 * kSqrt3 + kSqrt6) / 4);
    CHECK((k(example_probe()) - b).norm() <= 1e-9);
    CHECK((k(b) - b2).norm() <= 1e-9);
    CHECK((k(Point3d::Zero())).norm() == 0);
    CHECK((make_h()(Point3d::Zero()) - Point3d(0.7134339075145069, 0.7134339075145069, 1.5124720131911649)).norm() <=
          1e-12);
}

TEST_CASE("analyze reproduces the printed quantities") {
    const auto r = analyze();
    const Vector3d n(-1 - kSqrt2, 1, 2 + kSqrt3);
    CHECK(direction_gap(r.n_direction, n) <= 1e-9);
    CHECK(std::abs(std::cos(r.theta) - (-4 + 2 * kSqrt2 + 2 * kSqrt3 + kSqrt6) / 8) <= 1e-12);
    CHECK(std::abs(r.theta - 0.936324) <= 5e-6);
    CHECK(std::abs(r.theta - r.theta_from_trace) <= 1e-12);
    CHECK(std::abs(2 * r.mirror_dihedral - r.theta) <= 1e-12);
    CHECK((r.m - Vector3d(-0.539178, 0.223335, 0.833496)).cwiseAbs().maxCoeff() <= 5e-6);
    CHECK((r.residual - Vector3d(1.25261, 0.490099, 0.678976)).cwiseAbs().maxCoeff() <= 5e-6);
    CHECK(std::abs(r.residual_dot_n) <= 1e-9 * r.residual.norm());
    CHECK(r.m.cross(r.n_direction).norm() <= 1e-9);
    CHECK((r.bisector_normal_ab - Vector3d(1.29261, -0.611424, 1)).cwiseAbs().maxCoeff() <= 5e-6);
    CHECK((r.bisector_normal_bb - Vector3d(0.332024, -2.93047, 1)).cwiseAbs().maxCoeff() <= 5e-6);
    CHECK(r.axis_k.point().norm() <= 1e-12);
}

TEST_CASE("screw axis of h agrees with the report") {
    const auto r = analyze();
    const auto h = make_h();
    const auto s = std::get<Screw<double>>(classify(h));
    CHECK(direction_gap(s.axis.direction(), r.n_direction) <= 1e-9);
    CHECK(std::abs(std::abs(s.angle) - r.theta) <= 1e-9);
    CHECK((s.slide - r.m).norm() <= 1e-9);
    for (double t : {-5.0, 0.0, 1.0, 7.0}) {
        const Point3d x = r.screw_axis_h.point() + t * r.screw_axis_h.direction();
        CHECK((h(x) - x - r.m).norm() <= 1e-8);
    }
}

TEST_CASE("iterate") {
    const Point3d x0(0.3, -1, 2);
    CHECK(iterate(AffineIsometryd{}, x0, 0).size() == 1);
    for (const auto& p : iterate(AffineIsometryd{}, x0, 5))
        CHECK(p == x0);

    const auto f = make_f();
    const auto axis = std::get<Rotation<double>>(classify(f)).axis;
    const auto orbit = iterate(f, Point3d(2, 2, 0), 12);
    REQUIRE(orbit.size() == 13);
    double lo = 1e300, hi = 0;
    for (const auto& p : orbit) {
        lo = std::min(lo, axis.distance(p));
        hi = std::max(hi, axis.distance(p));
    }
    CHECK(hi - lo <= 1e-9);
    CHECK(lo > 0.1);
}
