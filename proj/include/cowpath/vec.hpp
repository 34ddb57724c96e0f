#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cowpath {

/// Dense d-dimensional Euclidean vector (d >= 1, fixed at construction).
/// All coordinates must be finite; mixed-dimension arithmetic throws.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : c_(dim, 0.0) {}
    Vec(std::initializer_list<double> coords);
    explicit Vec(std::vector<double> coords);

    static Vec zero(std::size_t dim) { return Vec(dim); }
    static Vec axis(std::size_t dim, std::size_t i, double value = 1.0);

    std::size_t dim() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    double& operator[](std::size_t i) { return c_[i]; }
    const std::vector<double>& coords() const { return c_; }
    std::span<const double> span() const { return c_; }

    Vec operator+(const Vec& r) const;
    Vec operator-(const Vec& r) const;
    Vec operator*(double s) const;
    Vec& operator+=(const Vec& r);
    Vec& operator-=(const Vec& r);
    Vec& operator*=(double s);

    double dot(const Vec& r) const;
    double norm_squared() const { return dot(*this); }
    double norm() const;

    bool operator==(const Vec& r) const { return c_ == r.c_; }

private:
    std::vector<double> c_;
};

inline Vec operator*(double s, const Vec& v) { return v * s; }

double dot(const Vec& a, const Vec& b);
double distance(const Vec& a, const Vec& b);

/// Unit vector on S^{d-1}. Normalization happens at construction; the
/// stored coordinates satisfy | |u| - 1 | <= 1e-12.
class Direction {
public:
    explicit Direction(const Vec& v);

    static Direction axis(std::size_t dim, std::size_t i, double sign = 1.0);

    /// Adopts `u` as-is. `u` must already be unit length to 1e-12.
    static Direction from_unit(Vec u);

    std::size_t dim() const { return u_.dim(); }
    const Vec& vec() const { return u_; }
    double operator[](std::size_t i) const { return u_[i]; }

private:
    Direction() = default;
    Vec u_;
};

} // namespace cowpath
