#include "cowpath/polyline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace cowpath {

Polyline::Polyline(std::vector<Vec> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("Polyline: needs at least one vertex");
    dim_ = vertices_[0].dim();
    for (const Vec& v : vertices_) {
        if (v.dim() != dim_) throw std::invalid_argument("Polyline: mixed vertex dimensions");
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        if (vertices_[0][i] != 0.0) {
            throw std::invalid_argument("Polyline: path must start at the origin");
        }
    }
    cum_.resize(vertices_.size());
    cum_[0] = 0.0;
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        cum_[i] = cum_[i - 1] + distance(vertices_[i - 1], vertices_[i]);
    }
}

Vec Polyline::point_at(double s) const {
    const double total = length();
    const double slack = 1e-9 * std::max(1.0, total);
    if (s < -slack || s > total + slack) {
        throw std::domain_error("point_at: arc length " + std::to_string(s) +
                                " outside [0, " + std::to_string(total) + "]");
    }
    s = std::clamp(s, 0.0, total);
    // First segment whose end covers s; zero-length segments are skipped by
    // picking the last cum entry <= s as the segment start.
    auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
    if (it == cum_.end()) return vertices_.back();
    std::size_t hi = static_cast<std::size_t>(it - cum_.begin());
    std::size_t lo = hi - 1;
    double seg = cum_[hi] - cum_[lo];
    if (seg <= 0.0) return vertices_[lo];
    double t = (s - cum_[lo]) / seg;
    return vertices_[lo] + (vertices_[hi] - vertices_[lo]) * t;
}

double Polyline::max_vertex_norm() const {
    double best = 0.0;
    for (const Vec& v : vertices_) best = std::max(best, v.norm());
    return best;
}

} // namespace cowpath
