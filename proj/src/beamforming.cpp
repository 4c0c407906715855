// SPDX-License-Identifier: Apache-2.0

#include "vaamoo/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "vaamoo/errors.hpp"

namespace vaamoo {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_selected(ElementMask mask, std::size_t i) { return mask.empty() || mask[i] != 0; }

void check_mask(const ArraySpec& spec, ElementMask mask) {
    if (!mask.empty() && mask.size() != spec.elements.size())
        throw std::invalid_argument("selection mask length " + std::to_string(mask.size()) +
                                    " does not match " + std::to_string(spec.elements.size()) + " elements");
}

Vec3 unit_vector(Direction d) {
    const double st = std::sin(d.theta);
    return {st * std::cos(d.phi), st * std::sin(d.phi), std::cos(d.theta)};
}

double selected_weight_sum(const ArraySpec& spec, ElementMask mask) {
    double sum = 0.0;
    for (std::size_t i = 0; i < spec.elements.size(); ++i)
        if (is_selected(mask, i)) sum += spec.elements[i].weight;
    return sum;
}

}  // namespace

AngularGrid AngularGrid::from_step_deg(double step_deg) {
    if (!(step_deg > 0.0)) throw std::invalid_argument("quadrature step must be positive");
    const double cells = 180.0 / step_deg;
    const double rounded = std::round(cells);
    if (std::abs(cells - rounded) > 1e-9 || rounded < 1.0)
        throw std::invalid_argument("quadrature step " + std::to_string(step_deg) + " deg does not divide 180");
    const auto n = static_cast<std::size_t>(rounded);
    return AngularGrid(n, 2 * n);
}

AngularGrid::AngularGrid(std::size_t n_theta, std::size_t n_phi)
    : n_theta_(n_theta), n_phi_(n_phi), d_theta_(kPi / static_cast<double>(n_theta)),
      d_phi_(2.0 * kPi / static_cast<double>(n_phi)) {
    if (n_theta == 0 || n_phi == 0 || n_phi % 2 != 0)
        throw std::invalid_argument("angular grid needs n_theta >= 1 and an even n_phi");
    for (std::size_t i = 0; i < n_theta_; ++i) {
        sin_theta_.push_back(std::sin(theta(i)));
        cos_theta_.push_back(std::cos(theta(i)));
    }
    for (std::size_t j = 0; j < n_phi_; ++j) {
        sin_phi_.push_back(std::sin(phi(j)));
        cos_phi_.push_back(std::cos(phi(j)));
    }
}

double AngularGrid::theta(std::size_t i) const { return (static_cast<double>(i) + 0.5) * d_theta_; }
double AngularGrid::phi(std::size_t j) const { return -kPi + (static_cast<double>(j) + 0.5) * d_phi_; }

Direction direction_between(Vec3 origin, Vec3 target) {
    const Vec3 d = target - origin;
    const double r = d.norm();
    if (!(r > 0.0)) throw DegenerateDirectionError("direction between coincident points");
    const double c = std::clamp(d.z / r, -1.0, 1.0);
    return {std::acos(c), std::atan2(d.y, d.x)};
}

double steering_phase(Vec3 element_pos, Direction steer, double wavelength) {
    if (!(wavelength > 0.0)) throw DomainError("wavelength must be positive");
    const Vec3 u = unit_vector(steer);
    return -(2.0 * kPi / wavelength) * (element_pos.x * u.x + element_pos.y * u.y + element_pos.z * u.z);
}

std::complex<double> array_factor(const ArraySpec& spec, ElementMask selected, Direction eval) {
    check_mask(spec, selected);
    const double k = 2.0 * kPi / spec.wavelength;
    const Vec3 u = unit_vector(eval);
    std::complex<double> af{0.0, 0.0};
    for (std::size_t i = 0; i < spec.elements.size(); ++i) {
        if (!is_selected(selected, i)) continue;
        const auto& e = spec.elements[i];
        const double phase = k * (e.position.x * u.x + e.position.y * u.y + e.position.z * u.z) +
                             steering_phase(e.position, spec.steer, spec.wavelength);
        af += e.weight * std::polar(1.0, phase);
    }
    return af;
}

double pattern_integral(const ArraySpec& spec, ElementMask selected, const AngularGrid& grid) {
    check_mask(spec, selected);
    const double k = 2.0 * kPi / spec.wavelength;

    // Structure-of-arrays copy of the radiating elements: k*x, k*y, k*z and
    // the complex excitation I*exp(j*delta).
    std::vector<double> kx, ky, kz, ar, ai;
    for (std::size_t i = 0; i < spec.elements.size(); ++i) {
        const auto& e = spec.elements[i];
        if (!is_selected(selected, i) || e.weight == 0.0) continue;
        const double delta = steering_phase(e.position, spec.steer, spec.wavelength);
        kx.push_back(k * e.position.x);
        ky.push_back(k * e.position.y);
        kz.push_back(k * e.position.z);
        ar.push_back(e.weight * std::cos(delta));
        ai.push_back(e.weight * std::sin(delta));
    }
    const std::size_t n = kx.size();
    if (n == 0) return 0.0;

    // The grid is symmetric under theta -> pi - theta (flips u_z) and
    // phi -> phi + pi (flips u_x, u_y), so one horizontal phasor exp(j*P)
    // per element serves four grid points.
    const std::size_t nt = grid.n_theta();
    const std::size_t half_phi = grid.n_phi() / 2;
    const auto sin_t = grid.sin_theta();
    const auto cos_t = grid.cos_theta();
    const auto sin_p = grid.sin_phi();
    const auto cos_p = grid.cos_phi();

    std::vector<double> br(n), bi(n), cr(n), ci(n);
    double total = 0.0;
    for (std::size_t it = 0; it < (nt + 1) / 2; ++it) {
        const std::size_t mirror = nt - 1 - it;
        const bool paired = mirror != it;
        const double st = sin_t[it];
        const double ct = cos_t[it];
        for (std::size_t e = 0; e < n; ++e) {
            const double zc = std::cos(kz[e] * ct);
            const double zs = std::sin(kz[e] * ct);
            // b = a * exp(+j z), c = a * exp(-j z)
            br[e] = ar[e] * zc - ai[e] * zs;
            bi[e] = ar[e] * zs + ai[e] * zc;
            cr[e] = ar[e] * zc + ai[e] * zs;
            ci[e] = ai[e] * zc - ar[e] * zs;
        }
        double row = 0.0;
        double mirror_row = 0.0;
        for (std::size_t jp = 0; jp < half_phi; ++jp) {
            const double ux = st * cos_p[jp];
            const double uy = st * sin_p[jp];
            double b_rc = 0.0, b_is = 0.0, b_rs = 0.0, b_ic = 0.0;
            double c_rc = 0.0, c_is = 0.0, c_rs = 0.0, c_ic = 0.0;
            for (std::size_t e = 0; e < n; ++e) {
                const double p = kx[e] * ux + ky[e] * uy;
                const double pc = std::cos(p);
                const double ps = std::sin(p);
                b_rc += br[e] * pc;
                b_is += bi[e] * ps;
                b_rs += br[e] * ps;
                b_ic += bi[e] * pc;
                c_rc += cr[e] * pc;
                c_is += ci[e] * ps;
                c_rs += cr[e] * ps;
                c_ic += ci[e] * pc;
            }
            // b*exp(jP) and b*exp(-jP) (the phi + pi point), likewise for c.
            const double s1r = b_rc - b_is, s1i = b_rs + b_ic;
            const double s2r = b_rc + b_is, s2i = b_ic - b_rs;
            row += s1r * s1r + s1i * s1i + s2r * s2r + s2i * s2i;
            if (paired) {
                const double s3r = c_rc - c_is, s3i = c_rs + c_ic;
                const double s4r = c_rc + c_is, s4i = c_ic - c_rs;
                mirror_row += s3r * s3r + s3i * s3i + s4r * s4r + s4i * s4i;
            }
        }
        total += st * row + (paired ? sin_t[mirror] * mirror_row : 0.0);
    }
    return total * grid.d_theta() * grid.d_phi();
}

double directivity_gain(const ArraySpec& spec, ElementMask selected, double efficiency, const AngularGrid& grid) {
    check_mask(spec, selected);
    if (!(selected_weight_sum(spec, selected) > 0.0))
        throw ZeroPatternError("directivity of an array with no radiating element");
    const double peak = std::norm(array_factor(spec, selected, spec.steer));
    const double integral = pattern_integral(spec, selected, grid);
    // The element pattern magnitude w is constant and cancels.
    return 4.0 * kPi * peak * efficiency / integral;
}

double sll_ratio(const ArraySpec& spec, ElementMask selected, Direction eavesdrop_dir) {
    check_mask(spec, selected);
    const double mainlobe = std::abs(array_factor(spec, selected, spec.steer));
    if (!(mainlobe > 0.0) || !(selected_weight_sum(spec, selected) > 0.0))
        throw ZeroPatternError("side-lobe ratio of an array with a zero mainlobe");
    return std::abs(array_factor(spec, selected, eavesdrop_dir)) / mainlobe;
}

Vec3 selected_centroid(const ArraySpec& spec, ElementMask selected) {
    check_mask(spec, selected);
    std::vector<Vec3> pts;
    for (std::size_t i = 0; i < spec.elements.size(); ++i)
        if (is_selected(selected, i)) pts.push_back(spec.elements[i].position);
    return centroid(pts);
}

void write_pattern_csv(std::ostream& out, const ArraySpec& spec, ElementMask selected, const AngularGrid& grid) {
    out << "theta_deg,phi_deg,af_magnitude\n";
    const double to_deg = 180.0 / kPi;
    const auto old_precision = out.precision(17);
    for (std::size_t i = 0; i < grid.n_theta(); ++i) {
        for (std::size_t j = 0; j < grid.n_phi(); ++j) {
            const Direction d{grid.theta(i), grid.phi(j)};
            out << d.theta * to_deg << ',' << d.phi * to_deg << ',' << std::abs(array_factor(spec, selected, d))
                << '\n';
        }
    }
    out.precision(old_precision);
}

}  // namespace vaamoo
