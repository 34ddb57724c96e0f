#include "cowpath/vec.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace cowpath {

namespace {

void require_finite(const std::vector<double>& c) {
    for (double x : c) {
        if (!std::isfinite(x)) throw std::invalid_argument("Vec: coordinate not finite");
    }
}

void require_same_dim(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()));
    }
}

} // namespace

Vec::Vec(std::initializer_list<double> coords) : c_(coords) {
    if (c_.empty()) throw std::invalid_argument("Vec: dimension must be >= 1");
    require_finite(c_);
}

Vec::Vec(std::vector<double> coords) : c_(std::move(coords)) {
    if (c_.empty()) throw std::invalid_argument("Vec: dimension must be >= 1");
    require_finite(c_);
}

Vec Vec::axis(std::size_t dim, std::size_t i, double value) {
    if (i >= dim) throw std::invalid_argument("Vec::axis: index out of range");
    Vec v(dim);
    v[i] = value;
    return v;
}

Vec Vec::operator+(const Vec& r) const {
    require_same_dim(*this, r);
    Vec out(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += r.c_[i];
    return out;
}

Vec Vec::operator-(const Vec& r) const {
    require_same_dim(*this, r);
    Vec out(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] -= r.c_[i];
    return out;
}

Vec Vec::operator*(double s) const {
    Vec out(*this);
    for (double& x : out.c_) x *= s;
    return out;
}

Vec& Vec::operator+=(const Vec& r) {
    require_same_dim(*this, r);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += r.c_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& r) {
    require_same_dim(*this, r);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= r.c_[i];
    return *this;
}

Vec& Vec::operator*=(double s) {
    for (double& x : c_) x *= s;
    return *this;
}

double Vec::dot(const Vec& r) const {
    require_same_dim(*this, r);
    double acc = 0.0;
    for (std::size_t i = 0; i < c_.size(); ++i) acc += c_[i] * r.c_[i];
    return acc;
}

double Vec::norm() const { return std::sqrt(norm_squared()); }

double dot(const Vec& a, const Vec& b) { return a.dot(b); }

double distance(const Vec& a, const Vec& b) { return (a - b).norm(); }

Direction::Direction(const Vec& v) {
    double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("Direction: cannot normalize a zero vector");
    }
    u_ = v * (1.0 / n);
}

Direction Direction::axis(std::size_t dim, std::size_t i, double sign) {
    Direction d;
    d.u_ = Vec::axis(dim, i, sign >= 0.0 ? 1.0 : -1.0);
    return d;
}

Direction Direction::from_unit(Vec u) {
    if (std::abs(u.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("Direction::from_unit: vector is not unit length");
    }
    Direction d;
    d.u_ = std::move(u);
    return d;
}

} // namespace cowpath
