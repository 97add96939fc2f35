#pragma once

// Congruent triple pairs that force each branch of the three-mirror construction.

#include "support/random_geometry.hpp"

namespace reflect3::testing {

enum class TripleCase { Generic, FixedA, FixedAB, Identical, COnTargetLine };

inline const char* case_name(TripleCase c) {
    switch (c) {
    case TripleCase::Generic: return "generic";
    case TripleCase::FixedA: return "A=A'";
    case TripleCase::FixedAB: return "A=A' and B*=B'";
    case TripleCase::Identical: return "identical";
    case TripleCase::COnTargetLine: return "C on line(A'B')";
    }
    return "?";
}

/// Random composition of `length` mirrors that all contain `p`.
inline AffineIsometryd motion_fixing(Rng& rng, const Point3d& p, int length) {
    ReflectionSequenced s;
    for (int i = 0; i < length; ++i)
        s.planes.push_back(random_plane_through(rng, p));
    return seq_to_affine(s);
}

/// Random composition of `length` mirrors that all contain the line through p and q.
inline AffineIsometryd motion_fixing_line(Rng& rng, const Point3d& p, const Point3d& q, int length) {
    const Vector3d d = (q - p).normalized();
    ReflectionSequenced s;
    for (int i = 0; i < length; ++i) {
        Vector3d n = random_unit(rng);
        n = n - n.dot(d) * d;
        s.planes.push_back(Planed::through(p, n));
    }
    return seq_to_affine(s);
}

inline TriplePaird make_case(Rng& rng, TripleCase kind) {
    const int length = std::uniform_int_distribution<int>(1, 4)(rng);
    switch (kind) {
    case TripleCase::Generic: {
        const PointTripled src = random_triple(rng);
        return {src, image_of(random_motion_with_parity(rng, std::bernoulli_distribution(0.5)(rng)), src)};
    }
    case TripleCase::FixedA: {
        const PointTripled src = random_triple(rng);
        return {src, image_of(motion_fixing(rng, src.a, length), src)};
    }
    case TripleCase::FixedAB: {
        const PointTripled src = random_triple(rng);
        return {src, image_of(motion_fixing_line(rng, src.a, src.b, std::min(length, 3)), src)};
    }
    case TripleCase::Identical: {
        const PointTripled src = random_triple(rng);
        return {src, as_target(src)};
    }
    case TripleCase::COnTargetLine: {
        for (;;) {
            const Point3d a = random_point(rng), b = random_point(rng);
            const Planed mirror = random_plane(rng);
            const Point3d a2 = reflect_point(mirror, a), b2 = reflect_point(mirror, b);
            if ((a - a2).norm() < 0.5 || (a - b).norm() < 0.5)
                continue;
            const Point3d c = a2 + uniform(rng, -2, 2) * (b2 - a2);
            if ((b - a).cross(c - a).norm() < 0.5)
                continue;
            const PointTripled src(a, b, c);
            const AffineIsometryd m =
                then(reflection(mirror), motion_fixing_line(rng, a2, b2, std::uniform_int_distribution<int>(0, 2)(rng)));
            return {src, image_of(m, src)};
        }
    }
    }
    return make_case(rng, TripleCase::Generic);
}

inline double mapping_error(const ReflectionSequenced& s, const TriplePaird& pair) {
    return std::max({(apply(s, pair.src.a) - pair.dst.a).norm(), (apply(s, pair.src.b) - pair.dst.b).norm(),
                     (apply(s, pair.src.c) - pair.dst.c).norm()});
}

}  // namespace reflect3::testing
