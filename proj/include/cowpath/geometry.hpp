#pragma once

#include <optional>

#include "cowpath/polyline.hpp"
#include "cowpath/vec.hpp"

namespace cowpath {

/// Hyperplane {x : <x, normal> = offset} with offset >= 1, the target the
/// searcher must reach. The dual of a unit-sphere point q is the hyperplane
/// (q, 1): reaching it is the same as viewing q.
struct Hyperplane {
    Hyperplane(Direction normal_, double offset_);

    Direction normal;
    double offset;
};

/// Visibility predicate: p views the sphere point q iff <p, q> >= 1.
/// Boundary equality counts as visible.
bool sees(const Vec& p, const Direction& q);

/// Smallest arc length s at which the path attains <P(s), normal> = offset,
/// or nullopt if the path never reaches the hyperplane.
std::optional<double> first_hit(const Polyline& path, const Hyperplane& h);

/// The hyperplane orthogonal to q at distance 1: hitting it equals viewing q.
Hyperplane dual_hyperplane(const Direction& q);

/// Orthogonal projection x - <x,u>u, kept in the ambient d coordinates.
Vec project(const Vec& x, const Direction& u);

/// Vertex-wise projection of the whole path. Projection is 1-Lipschitz, so
/// the result is never longer than the input, and it still starts at the
/// origin.
Polyline project_path(const Polyline& path, const Direction& u);

} // namespace cowpath
