// SPDX-License-Identifier: Apache-2.0
//
// Array factors of ground (sensor) and aerial (UAV) virtual antenna arrays,
// their directivity gain and mainlobe-normalized response toward an
// eavesdropper.

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "vaamoo/geometry.hpp"

namespace vaamoo {

/// Elevation theta in [0, pi] from +z, azimuth phi in [-pi, pi] from +x.
struct Direction {
    double theta = 0.0;
    double phi = 0.0;
};

struct ArrayElement {
    Vec3 position;
    double weight = 1.0;  // excitation current weight in [0, 1]
};

struct ArraySpec {
    std::vector<ArrayElement> elements;
    double wavelength = 1.0;
    Direction steer;
};

/// Selection mask over ArraySpec::elements; an empty span selects every element.
using ElementMask = std::span<const std::uint8_t>;

/// Uniform midpoint grid over the sphere, n_theta x n_phi cells.
class AngularGrid {
public:
    /// Throws std::invalid_argument unless `step_deg` divides 180 evenly.
    static AngularGrid from_step_deg(double step_deg);
    AngularGrid(std::size_t n_theta, std::size_t n_phi);

    [[nodiscard]] std::size_t n_theta() const { return n_theta_; }
    [[nodiscard]] std::size_t n_phi() const { return n_phi_; }
    [[nodiscard]] double d_theta() const { return d_theta_; }
    [[nodiscard]] double d_phi() const { return d_phi_; }
    [[nodiscard]] double theta(std::size_t i) const;
    [[nodiscard]] double phi(std::size_t j) const;

    // Precomputed trig tables.
    [[nodiscard]] std::span<const double> sin_theta() const { return sin_theta_; }
    [[nodiscard]] std::span<const double> cos_theta() const { return cos_theta_; }
    [[nodiscard]] std::span<const double> sin_phi() const { return sin_phi_; }
    [[nodiscard]] std::span<const double> cos_phi() const { return cos_phi_; }

private:
    std::size_t n_theta_;
    std::size_t n_phi_;
    double d_theta_;
    double d_phi_;
    std::vector<double> sin_theta_, cos_theta_, sin_phi_, cos_phi_;
};

/// Direction of `target` seen from `origin`. Throws DegenerateDirectionError
/// for coincident points.
Direction direction_between(Vec3 origin, Vec3 target);

/// Excitation phase that aligns an element toward `steer`.
double steering_phase(Vec3 element_pos, Direction steer, double wavelength);

std::complex<double> array_factor(const ArraySpec& spec, ElementMask selected, Direction eval);

/// 4*pi*|AF(steer)|^2 w^2 eta over the sphere integral of |AF|^2 w^2 with
/// constant w. Throws ZeroPatternError when no selected element radiates.
double directivity_gain(const ArraySpec& spec, ElementMask selected, double efficiency, const AngularGrid& grid);

/// Midpoint-rule value of the integral of |AF|^2 sin(theta) over the sphere.
double pattern_integral(const ArraySpec& spec, ElementMask selected, const AngularGrid& grid);

/// |AF(eavesdrop_dir)| / |AF(steer)|. Throws ZeroPatternError for a zero mainlobe.
double sll_ratio(const ArraySpec& spec, ElementMask selected, Direction eavesdrop_dir);

/// Centroid of the selected element positions.
Vec3 selected_centroid(const ArraySpec& spec, ElementMask selected);

/// Writes `theta_deg,phi_deg,af_magnitude` rows over `grid`.
void write_pattern_csv(std::ostream& out, const ArraySpec& spec, ElementMask selected, const AngularGrid& grid);

}  // namespace vaamoo
