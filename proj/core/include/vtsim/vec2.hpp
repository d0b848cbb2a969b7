#pragma once

#include <cmath>

namespace vtsim {

/// Planar vector. Carries positions (m), velocities (m/s) or accelerations
/// (m/s^2) depending on context.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(Vec2 r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return {v.x * s, v.y * s}; }

    Vec2& operator+=(Vec2 r) { x += r.x; y += r.y; return *this; }
    Vec2& operator-=(Vec2 r) { x -= r.x; y -= r.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    constexpr bool operator==(const Vec2&) const = default;

    constexpr double dot(Vec2 r) const { return x * r.x + y * r.y; }

    /// 2D scalar cross product; positive when r lies counterclockwise of *this.
    constexpr double cross(Vec2 r) const { return x * r.y - y * r.x; }

    constexpr double norm2() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }

    /// Counterclockwise quarter-turn.
    constexpr Vec2 perp_ccw() const { return {-y, x}; }

    Vec2 rotated(double angle) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }

    /// Unit vector; {0,0} when the norm is at or below eps.
    Vec2 normalized(double eps = 1e-12) const {
        const double n = norm();
        if (n <= eps) return {0.0, 0.0};
        return {x / n, y / n};
    }

    bool is_finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

}  // namespace vtsim
