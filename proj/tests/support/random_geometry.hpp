#pragma once

// Seeded generators for property tests.

#include <cstdint>
#include <numbers>
#include <random>

#include "reflect3/reflect3.hpp"

namespace reflect3::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vector3d random_unit(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vector3d v;
    do {
        v = Vector3d(n(rng), n(rng), n(rng));
    } while (v.norm() < 1e-3);
    return v.normalized();
}

inline Point3d random_point(Rng& rng, double scale = 5.0) {
    return Point3d(uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale));
}

inline Planed random_plane(Rng& rng, double scale = 5.0) {
    return Planed::through(random_point(rng, scale), random_unit(rng));
}

inline Planed random_plane_through(Rng& rng, const Point3d& p) {
    return Planed::through(p, random_unit(rng));
}

inline ReflectionSequenced random_sequence(Rng& rng, int length) {
    ReflectionSequenced s;
    for (int i = 0; i < length; ++i)
        s.planes.push_back(random_plane(rng));
    return s;
}

/// Random reflection sequence of length 0-4 followed by a random translation.
inline AffineIsometryd random_motion(Rng& rng) {
    const int length = std::uniform_int_distribution<int>(0, 4)(rng);
    return then(seq_to_affine(random_sequence(rng, length)), translation<double>(random_point(rng, 3.0)));
}

inline AffineIsometryd random_motion_with_parity(Rng& rng, bool proper) {
    const int length = proper ? 2 * std::uniform_int_distribution<int>(0, 2)(rng)
                              : 2 * std::uniform_int_distribution<int>(0, 1)(rng) + 1;
    return then(seq_to_affine(random_sequence(rng, length)), translation<double>(random_point(rng, 3.0)));
}

/// Angle uniform in (-pi, pi) kept at least `margin` away from 0 and +-pi.
inline double random_angle(Rng& rng, double margin = 0.05) {
    constexpr double pi = std::numbers::pi;
    const double mag = uniform(rng, margin, pi - margin);
    return std::bernoulli_distribution(0.5)(rng) ? mag : -mag;
}

/// Noncollinear triple with all edges of reasonable length.
inline PointTripled random_triple(Rng& rng) {
    for (;;) {
        const Point3d a = random_point(rng), b = random_point(rng), c = random_point(rng);
        const double area = (b - a).cross(c - a).norm() / 2;
        if (area > 0.5 && (b - a).norm() > 0.5 && (c - a).norm() > 0.5 && (c - b).norm() > 0.5)
            return PointTripled(a, b, c);
    }
}

inline TargetTripled image_of(const AffineIsometryd& m, const PointTripled& t) {
    return {m(t.a), m(t.b), m(t.c)};
}

}  // namespace reflect3::testing
