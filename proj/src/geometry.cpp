#include "cowpath/geometry.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace cowpath {

Hyperplane::Hyperplane(Direction normal_, double offset_)
    : normal(std::move(normal_)), offset(offset_) {
    if (!(offset >= 1.0)) throw std::invalid_argument("Hyperplane: offset must be >= 1");
}

bool sees(const Vec& p, const Direction& q) { return dot(p, q.vec()) >= 1.0; }

std::optional<double> first_hit(const Polyline& path, const Hyperplane& h) {
    if (path.dim() != h.normal.dim()) {
        throw std::invalid_argument("first_hit: dimension mismatch");
    }
    const auto& verts = path.vertices();
    const auto& cum = path.cum_length();
    const Vec& n = h.normal.vec();
    double ga = dot(verts[0], n);
    if (ga >= h.offset) return 0.0;
    for (std::size_t i = 1; i < verts.size(); ++i) {
        double gb = dot(verts[i], n);
        if (gb >= h.offset) {
            // Linear crossing inside the segment.
            double t = (h.offset - ga) / (gb - ga);
            return cum[i - 1] + t * (cum[i] - cum[i - 1]);
        }
        ga = gb;
    }
    return std::nullopt;
}

Hyperplane dual_hyperplane(const Direction& q) { return Hyperplane(q, 1.0); }

Vec project(const Vec& x, const Direction& u) {
    if (x.dim() != u.dim()) throw std::invalid_argument("project: dimension mismatch");
    return x - u.vec() * dot(x, u.vec());
}

Polyline project_path(const Polyline& path, const Direction& u) {
    std::vector<Vec> out;
    out.reserve(path.vertices().size());
    for (const Vec& v : path.vertices()) out.push_back(project(v, u));
    return Polyline(std::move(out));
}

} // namespace cowpath
