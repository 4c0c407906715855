// SPDX-License-Identifier: Apache-2.0
//
// Simulated world: IoT clusters, the UAV swarm's initial deployment, base
// stations, the eavesdropper, and the physical constants of the channel and
// propulsion models.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vaamoo/geometry.hpp"

namespace vaamoo {

inline constexpr double kSpeedOfLight = 299792458.0;

struct Sensor {
    Vec3 position;  // z = 0
    std::size_t cluster_id = 0;

    friend bool operator==(const Sensor&, const Sensor&) = default;
};

struct IotCluster {
    std::size_t id = 0;
    Square region;
    std::vector<Sensor> sensors;
    double data_volume_bits = 1e8;

    friend bool operator==(const IotCluster&, const IotCluster&) = default;
};

struct UavInitialState {
    std::size_t id = 0;
    Vec3 position;

    friend bool operator==(const UavInitialState&, const UavInitialState&) = default;
};

struct ChannelParams {
    double carrier_freq_hz = 0.9e9;
    double bandwidth_hz = 2e6;
    double noise_psd_dbm_hz = -157.0;
    double pathloss_exp = 2.0;
    /// Path-loss constant K0 (linear, >= 1 for a physical reference loss).
    double pathloss_const = 0.0;
    double mu_los = 1.0;
    /// Linear excess attenuation of NLoS links (20 dB by default).
    double mu_nlos = 100.0;
    double p_los_ter = 0.0;
    double h1 = 22.5;
    double h2 = 100.0;
    double element_pattern_w = 1.0;
    double array_efficiency = 1.0;
    /// Transmit power of one element at unit excitation weight.
    double p_max_w = 0.1;

    [[nodiscard]] double wavelength() const { return kSpeedOfLight / carrier_freq_hz; }
    /// Noise power sigma^2 over the full bandwidth in watts.
    [[nodiscard]] double noise_power_w() const;

    /// Defaults with K0 set to the free-space loss at 1 m for the carrier.
    static ChannelParams defaults();

    friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
};

struct EnergyParams {
    double p_blade_w = 79.86;
    double p_induced_w = 88.63;
    double v_tip = 120.0;
    double v0_hover = 4.03;
    double d0_drag = 0.6;
    double rotor_solidity = 0.05;
    double air_density = 1.225;
    double rotor_area = 0.503;
    double uav_mass_kg = 2.0;
    double gravity = 9.8;
    double v_max = 30.0;

    [[nodiscard]] double hover_power_w() const { return p_blade_w + p_induced_w; }

    friend bool operator==(const EnergyParams&, const EnergyParams&) = default;
};

struct Scenario {
    std::vector<IotCluster> clusters;
    std::vector<UavInitialState> uavs;
    std::vector<Vec3> base_stations;
    Vec3 eavesdropper;
    ChannelParams channel = ChannelParams::defaults();
    EnergyParams energy;
    std::size_t n_select = 10;
    double d_min = 0.5;
    Square uav_region;
    AltitudeBand altitude_band;

    [[nodiscard]] std::size_t n_iot() const { return clusters.size(); }
    [[nodiscard]] std::size_t n_uav() const { return uavs.size(); }
    [[nodiscard]] std::size_t n_bs() const { return base_stations.size(); }
    [[nodiscard]] std::vector<Vec3> uav_positions() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Generator inputs. Clusters sit on a ring of `cluster_ring_radius` around
/// the swarm area, base stations on a ring of `bs_ring_radius`.
struct ScenarioConfig {
    std::size_t n_iot = 2;
    std::size_t n_sensors = 50;
    std::size_t n_select = 10;
    std::size_t n_uav = 16;
    std::size_t n_bs = 8;
    double cluster_side = 100.0;
    double cluster_ring_radius = 500.0;
    Square uav_region{0.0, 0.0, 100.0};
    AltitudeBand altitude_band{100.0, 120.0};
    double bs_ring_radius = 2000.0;
    double eavesdropper_radius = 1000.0;
    double data_volume_bits = 1e8;
    double d_min = 0.5;
    ChannelParams channel = ChannelParams::defaults();
    EnergyParams energy;
};

enum class Preset { Desk, SmallLos, SmallPlos, LargeLos, LargePlos };

ScenarioConfig preset_config(Preset preset);
/// Parses "desk", "small-los", ...; throws std::invalid_argument listing the
/// valid names otherwise.
Preset parse_preset(const std::string& name);
std::vector<std::string> preset_names();

/// Pure function of (config, seed). Throws InfeasibleGeometryError when a UAV
/// cannot be placed d_min away from the others within 10,000 draws.
Scenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed);

struct ScenarioViolation {
    std::string field;
    std::string constraint;
};

std::vector<ScenarioViolation> validate_scenario(const Scenario& s);

std::string scenario_to_json(const Scenario& s);
/// Throws SchemaError naming the field path on malformed input.
Scenario scenario_from_json(const std::string& text);
void save_scenario(const Scenario& s, const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace vaamoo
