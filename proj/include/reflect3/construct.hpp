#pragma once

// Builds the three-mirror sequence carrying a noncollinear triple (A, B, C) to
// a congruent triple (A', B', C'), and the opposite-parity fourth-mirror
// variant. Coincidence branches keep all three mirrors: later stages (the
// fixed-point classifier) rely on the exact plane list.

#include <cmath>

#include "reflect3/geom3.hpp"
#include "reflect3/motion.hpp"

namespace reflect3 {

/// Three points with no noncollinearity requirement (targets of a congruence).
template <typename Scalar>
struct TargetTriple {
    Point3<Scalar> a, b, c;
};

template <typename Scalar>
struct TriplePair {
    PointTriple<Scalar> src;
    TargetTriple<Scalar> dst;
};

enum class MirrorBranch {
    Bisector,          // bis of the moving point and its target
    SourcePlane,       // pl(ABC)
    TargetPlaneWithC,  // pl(A'B'C), second mirror only
    TargetPlane,       // pl(A'B'C'), third mirror only
};

template <typename Scalar>
struct ConstructionTrace {
    ReflectionSequence<Scalar> sequence;
    MirrorBranch alpha = MirrorBranch::Bisector;
    MirrorBranch beta = MirrorBranch::Bisector;
    MirrorBranch gamma = MirrorBranch::Bisector;
    Point3<Scalar> b_star;  // image of B after the first mirror
    Point3<Scalar> c_star;  // image of C after the first two mirrors
};

template <typename Scalar>
bool congruent_triples(const PointTriple<Scalar>& src, const TargetTriple<Scalar>& dst,
                       const Tolerance<Scalar>& tol = {}) {
    const auto close = [&](Scalar x, Scalar y) { return std::abs(x - y) <= tol.eps_len; };
    return close((src.b - src.a).norm(), (dst.b - dst.a).norm()) &&
           close((src.c - src.a).norm(), (dst.c - dst.a).norm()) &&
           close((src.c - src.b).norm(), (dst.c - dst.b).norm());
}

template <typename Scalar>
ConstructionTrace<Scalar> three_reflections_traced(const TriplePair<Scalar>& pair, const Tolerance<Scalar>& tol = {}) {
    const auto& [a, b, c] = pair.src;
    const auto& [a2, b2, c2] = pair.dst;
    if (collinear(a, b, c, tol))
        throw GeometryError(ErrorCode::DegenerateSource, "source triple is collinear");
    if (!congruent_triples(pair.src, pair.dst, tol))
        throw GeometryError(ErrorCode::NotCongruent, "triples are not congruent");

    ConstructionTrace<Scalar> trace;
    std::vector<Plane<Scalar>> planes;
    planes.reserve(3);

    if (!points_coincide(a, a2, tol)) {
        planes.push_back(perpendicular_bisector_plane(a, a2, tol));
        trace.alpha = MirrorBranch::Bisector;
    } else {
        planes.push_back(plane_through_points(a, b, c, tol));
        trace.alpha = MirrorBranch::SourcePlane;
    }

    trace.b_star = reflect_point(planes[0], b);
    if (!points_coincide(trace.b_star, b2, tol)) {
        planes.push_back(perpendicular_bisector_plane(trace.b_star, b2, tol));
        trace.beta = MirrorBranch::Bisector;
    } else if (!collinear(a2, b2, c, tol)) {
        planes.push_back(plane_through_points(a2, b2, c, tol));
        trace.beta = MirrorBranch::TargetPlaneWithC;
    } else {
        planes.push_back(plane_through_points(a, b, c, tol));
        trace.beta = MirrorBranch::SourcePlane;
    }

    trace.c_star = reflect_point(planes[1], reflect_point(planes[0], c));
    if (!points_coincide(trace.c_star, c2, tol)) {
        planes.push_back(perpendicular_bisector_plane(trace.c_star, c2, tol));
        trace.gamma = MirrorBranch::Bisector;
    } else {
        planes.push_back(plane_through_points(a2, b2, c2, tol));
        trace.gamma = MirrorBranch::TargetPlane;
    }

    trace.sequence = ReflectionSequence<Scalar>(std::move(planes));
    return trace;
}

/// Exactly three mirrors whose composition sends A, B, C to A', B', C'.
template <typename Scalar>
ReflectionSequence<Scalar> three_reflections(const TriplePair<Scalar>& pair, const Tolerance<Scalar>& tol = {}) {
    return three_reflections_traced(pair, tol).sequence;
}

/// The other motion with the same action on the triple: `seq` followed by the
/// reflection in pl(A'B'C').
template <typename Scalar>
ReflectionSequence<Scalar> second_motion(const ReflectionSequence<Scalar>& seq, const TargetTriple<Scalar>& dst,
                                         const Tolerance<Scalar>& tol = {}) {
    ReflectionSequence<Scalar> out = seq;
    out.planes.push_back(plane_through_points(dst.a, dst.b, dst.c, tol));
    return out;
}

template <typename Scalar>
TargetTriple<Scalar> as_target(const PointTriple<Scalar>& t) {
    return {t.a, t.b, t.c};
}

using TargetTripled = TargetTriple<double>;
using TriplePaird = TriplePair<double>;

}  // namespace reflect3
