// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <span>

namespace vaamoo {

/// Cartesian point or displacement in meters.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend constexpr bool operator==(Vec3 a, Vec3 b) = default;

    [[nodiscard]] double norm() const { return std::sqrt(x * x + y * y + z * z); }
    [[nodiscard]] double horizontal_norm() const { return std::hypot(x, y); }
};

inline double distance(Vec3 a, Vec3 b) { return (a - b).norm(); }
inline double horizontal_distance(Vec3 a, Vec3 b) { return (a - b).horizontal_norm(); }

/// Axis-aligned square in the horizontal plane.
struct Square {
    double center_x = 0.0;
    double center_y = 0.0;
    double side = 100.0;

    [[nodiscard]] double min_x() const { return center_x - 0.5 * side; }
    [[nodiscard]] double max_x() const { return center_x + 0.5 * side; }
    [[nodiscard]] double min_y() const { return center_y - 0.5 * side; }
    [[nodiscard]] double max_y() const { return center_y + 0.5 * side; }

    [[nodiscard]] bool contains(double x, double y) const {
        return x >= min_x() && x <= max_x() && y >= min_y() && y <= max_y();
    }

    friend bool operator==(const Square&, const Square&) = default;
};

/// Closed altitude interval [low, high] in meters.
struct AltitudeBand {
    double low = 100.0;
    double high = 120.0;

    [[nodiscard]] bool contains(double z) const { return z >= low && z <= high; }
    [[nodiscard]] double mid() const { return 0.5 * (low + high); }

    friend bool operator==(const AltitudeBand&, const AltitudeBand&) = default;
};

inline Vec3 centroid(std::span<const Vec3> points) {
    Vec3 sum;
    for (const auto& p : points) sum = sum + p;
    return points.empty() ? sum : (1.0 / static_cast<double>(points.size())) * sum;
}

}  // namespace vaamoo
