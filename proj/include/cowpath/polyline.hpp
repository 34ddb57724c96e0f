#pragma once

#include <cstddef>
#include <vector>

#include "cowpath/vec.hpp"

namespace cowpath {

/// A polygonal path in R^d, starting at the origin, with exact cumulative
/// arc lengths. Cumulative lengths are always recomputed from the vertices,
/// never accepted from external input. Consecutive duplicate vertices
/// (zero-length segments) are allowed; arc-length queries skip them.
class Polyline {
public:
    explicit Polyline(std::vector<Vec> vertices);

    std::size_t dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<double>& cum_length() const { return cum_; }
    double length() const { return cum_.back(); }

    /// Point at arc length s, linear interpolation inside segments.
    /// Throws std::domain_error if s is outside [0, length()] by more
    /// than 1e-9 * max(1, length()).
    Vec point_at(double s) const;

    double max_vertex_norm() const;

private:
    std::size_t dim_ = 0;
    std::vector<Vec> vertices_;
    std::vector<double> cum_;
};

} // namespace cowpath
