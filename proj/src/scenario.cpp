// SPDX-License-Identifier: Apache-2.0

#include "vaamoo/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "vaamoo/errors.hpp"
#include "vaamoo/rng.hpp"

namespace vaamoo {

using nlohmann::json;

double ChannelParams::noise_power_w() const {
    // dBm/Hz -> W/Hz, times bandwidth.
    return std::pow(10.0, noise_psd_dbm_hz / 10.0) * 1e-3 * bandwidth_hz;
}

ChannelParams ChannelParams::defaults() {
    ChannelParams p;
    const double r = 4.0 * std::numbers::pi * p.carrier_freq_hz / kSpeedOfLight;
    p.pathloss_const = r * r;
    return p;
}

std::vector<Vec3> Scenario::uav_positions() const {
    std::vector<Vec3> out;
    out.reserve(uavs.size());
    for (const auto& u : uavs) out.push_back(u.position);
    return out;
}

ScenarioConfig preset_config(Preset preset) {
    ScenarioConfig c;
    switch (preset) {
        case Preset::Desk:
            c.n_iot = 2, c.n_sensors = 20, c.n_select = 5, c.n_uav = 8, c.n_bs = 4;
            break;
        case Preset::SmallLos:
            c.n_iot = 2, c.n_sensors = 50, c.n_select = 10, c.n_uav = 16, c.n_bs = 8;
            break;
        case Preset::SmallPlos:
            c.n_iot = 2, c.n_sensors = 50, c.n_select = 10, c.n_uav = 16, c.n_bs = 8;
            c.altitude_band = {70.0, 90.0};
            break;
        case Preset::LargeLos:
            c.n_iot = 4, c.n_sensors = 50, c.n_select = 10, c.n_uav = 32, c.n_bs = 8;
            break;
        case Preset::LargePlos:
            c.n_iot = 4, c.n_sensors = 50, c.n_select = 10, c.n_uav = 32, c.n_bs = 8;
            c.altitude_band = {70.0, 90.0};
            break;
    }
    return c;
}

std::vector<std::string> preset_names() {
    return {"desk", "small-los", "small-plos", "large-los", "large-plos"};
}

Preset parse_preset(const std::string& name) {
    if (name == "desk") return Preset::Desk;
    if (name == "small-los") return Preset::SmallLos;
    if (name == "small-plos") return Preset::SmallPlos;
    if (name == "large-los") return Preset::LargeLos;
    if (name == "large-plos") return Preset::LargePlos;
    std::string list;
    for (const auto& n : preset_names()) list += (list.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown preset '" + name + "' (valid: " + list + ")");
}

Scenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed) {
    if (config.n_iot < 1 || config.n_sensors < 1 || config.n_uav < 1 || config.n_bs < 1 ||
        config.n_select < 1)
        throw std::invalid_argument("scenario counts must be >= 1");
    if (!(config.cluster_side > 0.0) || !(config.uav_region.side > 0.0) ||
        !(config.altitude_band.high >= config.altitude_band.low))
        throw std::invalid_argument("scenario regions must be non-degenerate");

    Rng rng(derive_seed(seed, {0x5ce7a110ULL}));
    Scenario s;
    s.channel = config.channel;
    s.energy = config.energy;
    s.n_select = config.n_select;
    s.d_min = config.d_min;
    s.uav_region = config.uav_region;
    s.altitude_band = config.altitude_band;

    const double two_pi = 2.0 * std::numbers::pi;
    const double cx = config.uav_region.center_x;
    const double cy = config.uav_region.center_y;

    const double cluster_rotation = rng.uniform(0.0, two_pi);
    for (std::size_t h = 0; h < config.n_iot; ++h) {
        const double angle = cluster_rotation + two_pi * static_cast<double>(h) / static_cast<double>(config.n_iot);
        IotCluster cl;
        cl.id = h;
        cl.region = {cx + config.cluster_ring_radius * std::cos(angle),
                     cy + config.cluster_ring_radius * std::sin(angle), config.cluster_side};
        cl.data_volume_bits = config.data_volume_bits;
        for (std::size_t i = 0; i < config.n_sensors; ++i) {
            const double x = rng.uniform(cl.region.min_x(), cl.region.max_x());
            const double y = rng.uniform(cl.region.min_y(), cl.region.max_y());
            cl.sensors.push_back({{x, y, 0.0}, h});
        }
        s.clusters.push_back(std::move(cl));
    }

    constexpr std::size_t kMaxAttempts = 10000;
    for (std::size_t j = 0; j < config.n_uav; ++j) {
        bool placed = false;
        for (std::size_t attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
            const Vec3 p{rng.uniform(config.uav_region.min_x(), config.uav_region.max_x()),
                         rng.uniform(config.uav_region.min_y(), config.uav_region.max_y()),
                         rng.uniform(config.altitude_band.low, config.altitude_band.high)};
            placed = true;
            for (const auto& other : s.uavs) {
                if (distance(p, other.position) < config.d_min) {
                    placed = false;
                    break;
                }
            }
            if (placed) s.uavs.push_back({j, p});
        }
        if (!placed)
            throw InfeasibleGeometryError("cannot place UAV " + std::to_string(j) + " at least d_min = " +
                                          std::to_string(config.d_min) + " m from the others");
    }

    const double bs_rotation = rng.uniform(0.0, two_pi);
    for (std::size_t k = 0; k < config.n_bs; ++k) {
        const double angle = bs_rotation + two_pi * static_cast<double>(k) / static_cast<double>(config.n_bs);
        s.base_stations.push_back(
            {cx + config.bs_ring_radius * std::cos(angle), cy + config.bs_ring_radius * std::sin(angle), 0.0});
    }

    const double e_angle = rng.uniform(0.0, two_pi);
    s.eavesdropper = {cx + config.eavesdropper_radius * std::cos(e_angle),
                      cy + config.eavesdropper_radius * std::sin(e_angle), 0.0};
    return s;
}

std::vector<ScenarioViolation> validate_scenario(const Scenario& s) {
    std::vector<ScenarioViolation> out;
    auto add = [&](std::string field, std::string constraint) {
        out.push_back({std::move(field), std::move(constraint)});
    };

    if (s.clusters.empty()) add("clusters", "at least one IoT cluster");
    for (std::size_t h = 0; h < s.clusters.size(); ++h) {
        const auto& cl = s.clusters[h];
        const std::string base = "clusters[" + std::to_string(h) + "]";
        if (cl.sensors.empty()) add(base + ".sensors", "N_SN >= 1");
        if (!(cl.data_volume_bits >= 0.0)) add(base + ".data_volume_bits", "data_volume >= 0");
        if (!(cl.region.side > 0.0)) add(base + ".region.side", "side > 0");
        if (s.n_select > cl.sensors.size()) add("n_select", "n_select <= N_SN of " + base);
        for (std::size_t i = 0; i < cl.sensors.size(); ++i) {
            const auto& p = cl.sensors[i].position;
            const std::string f = base + ".sensors[" + std::to_string(i) + "]";
            if (p.z != 0.0) add(f, "sensor z = 0");
            if (!cl.region.contains(p.x, p.y)) add(f, "sensor inside its cluster region");
        }
    }
    if (s.n_select < 1) add("n_select", "n_select >= 1");
    if (!(s.d_min > 0.0)) add("d_min", "d_min > 0");
    if (s.uavs.empty()) add("uavs", "at least one UAV");
    if (s.base_stations.empty()) add("base_stations", "at least one base station");

    for (std::size_t j = 0; j < s.uavs.size(); ++j) {
        const auto& p = s.uavs[j].position;
        const std::string f = "uavs[" + std::to_string(j) + "]";
        if (!s.altitude_band.contains(p.z)) add(f, "altitude within [h_min, h_max]");
        if (!s.uav_region.contains(p.x, p.y)) add(f, "inside uav_region");
        for (std::size_t m = j + 1; m < s.uavs.size(); ++m) {
            if (distance(p, s.uavs[m].position) < s.d_min)
                add("d_min", "pairwise separation between uavs[" + std::to_string(j) + "] and uavs[" +
                                 std::to_string(m) + "]");
        }
    }
    for (std::size_t k = 0; k < s.base_stations.size(); ++k)
        if (s.base_stations[k].z != 0.0) add("base_stations[" + std::to_string(k) + "]", "z = 0");
    if (s.eavesdropper.z != 0.0) add("eavesdropper", "z = 0");

    const auto& c = s.channel;
    if (!(c.array_efficiency >= 0.0 && c.array_efficiency <= 1.0)) add("channel.array_efficiency", "0 <= eta <= 1");
    if (!(c.p_los_ter >= 0.0 && c.p_los_ter <= 1.0)) add("channel.p_los_ter", "0 <= p <= 1");
    if (!(c.h1 < c.h2)) add("channel.h1", "H1 < H2");
    if (!(c.p_max_w > 0.0)) add("channel.p_max_w", "power > 0");
    if (!(c.bandwidth_hz > 0.0)) add("channel.bandwidth_hz", "bandwidth > 0");
    if (!(c.carrier_freq_hz > 0.0)) add("channel.carrier_freq_hz", "frequency > 0");
    if (!(c.pathloss_const > 0.0)) add("channel.pathloss_const", "K0 > 0");
    if (!(c.pathloss_exp > 0.0)) add("channel.pathloss_exp", "alpha > 0");
    if (!(c.mu_los > 0.0) || !(c.mu_nlos > 0.0)) add("channel.mu", "attenuation factors > 0");
    if (!(c.element_pattern_w > 0.0)) add("channel.element_pattern_w", "w > 0");

    const auto& e = s.energy;
    const std::pair<const char*, double> energy_fields[] = {
        {"p_blade_w", e.p_blade_w},       {"p_induced_w", e.p_induced_w}, {"v_tip", e.v_tip},
        {"v0_hover", e.v0_hover},         {"d0_drag", e.d0_drag},         {"rotor_solidity", e.rotor_solidity},
        {"air_density", e.air_density},   {"rotor_area", e.rotor_area},   {"uav_mass_kg", e.uav_mass_kg},
        {"gravity", e.gravity},           {"v_max", e.v_max}};
    for (const auto& [name, value] : energy_fields)
        if (!(value > 0.0)) add(std::string("energy.") + name, "strictly positive");
    return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json xy(const Vec3& p) { return json::array({p.x, p.y}); }
json xyz(const Vec3& p) { return json::array({p.x, p.y, p.z}); }
json square_json(const Square& r) { return {{"center", json::array({r.center_x, r.center_y})}, {"side", r.side}}; }

json channel_json(const ChannelParams& c) {
    return {{"carrier_freq_hz", c.carrier_freq_hz},   {"bandwidth_hz", c.bandwidth_hz},
            {"noise_psd_dbm_hz", c.noise_psd_dbm_hz}, {"pathloss_exp", c.pathloss_exp},
            {"pathloss_const", c.pathloss_const},     {"mu_los", c.mu_los},
            {"mu_nlos", c.mu_nlos},                   {"p_los_ter", c.p_los_ter},
            {"h1", c.h1},                             {"h2", c.h2},
            {"element_pattern_w", c.element_pattern_w}, {"array_efficiency", c.array_efficiency},
            {"p_max_w", c.p_max_w}};
}

json energy_json(const EnergyParams& e) {
    return {{"p_blade_w", e.p_blade_w},     {"p_induced_w", e.p_induced_w},
            {"v_tip", e.v_tip},             {"v0_hover", e.v0_hover},
            {"d0_drag", e.d0_drag},         {"rotor_solidity", e.rotor_solidity},
            {"air_density", e.air_density}, {"rotor_area", e.rotor_area},
            {"uav_mass_kg", e.uav_mass_kg}, {"gravity", e.gravity},
            {"v_max", e.v_max}};
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(path.empty() ? key : path + "." + key, "missing required key");
    return *it;
}

double number(const json& v, const std::string& path) {
    if (!v.is_number()) throw SchemaError(path, "expected a number");
    return v.get<double>();
}

std::size_t count(const json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw SchemaError(path, "expected a non-negative integer");
    return v.get<std::size_t>();
}

Vec3 point(const json& v, const std::string& path, std::size_t dims) {
    if (!v.is_array() || v.size() != dims)
        throw SchemaError(path, "expected an array of " + std::to_string(dims) + " numbers");
    Vec3 p{number(v[0], path + "[0]"), number(v[1], path + "[1]"), 0.0};
    if (dims == 3) p.z = number(v[2], path + "[2]");
    return p;
}

const json& array(const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected an array");
    return v;
}

Square square_from(const json& v, const std::string& path) {
    const Vec3 c = point(require(v, "center", path), path + ".center", 2);
    return {c.x, c.y, number(require(v, "side", path), path + ".side")};
}

// Optional numeric field; `positive` rejects values <= 0.
void read_field(const json& obj, const std::string& path, const char* key, double& target, bool positive) {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    const std::string p = path + "." + key;
    target = number(*it, p);
    if (positive && !(target > 0.0)) throw SchemaError(p, "must be > 0");
}

ChannelParams channel_from(const json& v) {
    const std::string path = "channel";
    if (!v.is_object()) throw SchemaError(path, "expected an object");
    ChannelParams c = ChannelParams::defaults();
    read_field(v, path, "carrier_freq_hz", c.carrier_freq_hz, true);
    read_field(v, path, "bandwidth_hz", c.bandwidth_hz, true);
    read_field(v, path, "noise_psd_dbm_hz", c.noise_psd_dbm_hz, false);
    read_field(v, path, "pathloss_exp", c.pathloss_exp, true);
    read_field(v, path, "pathloss_const", c.pathloss_const, true);
    read_field(v, path, "mu_los", c.mu_los, true);
    read_field(v, path, "mu_nlos", c.mu_nlos, true);
    read_field(v, path, "p_los_ter", c.p_los_ter, false);
    read_field(v, path, "h1", c.h1, false);
    read_field(v, path, "h2", c.h2, false);
    read_field(v, path, "element_pattern_w", c.element_pattern_w, true);
    read_field(v, path, "array_efficiency", c.array_efficiency, false);
    read_field(v, path, "p_max_w", c.p_max_w, true);
    if (c.array_efficiency < 0.0 || c.array_efficiency > 1.0)
        throw SchemaError(path + ".array_efficiency", "must lie in [0, 1]");
    if (c.p_los_ter < 0.0 || c.p_los_ter > 1.0) throw SchemaError(path + ".p_los_ter", "must lie in [0, 1]");
    return c;
}

EnergyParams energy_from(const json& v) {
    const std::string path = "energy";
    if (!v.is_object()) throw SchemaError(path, "expected an object");
    EnergyParams e;
    read_field(v, path, "p_blade_w", e.p_blade_w, true);
    read_field(v, path, "p_induced_w", e.p_induced_w, true);
    read_field(v, path, "v_tip", e.v_tip, true);
    read_field(v, path, "v0_hover", e.v0_hover, true);
    read_field(v, path, "d0_drag", e.d0_drag, true);
    read_field(v, path, "rotor_solidity", e.rotor_solidity, true);
    read_field(v, path, "air_density", e.air_density, true);
    read_field(v, path, "rotor_area", e.rotor_area, true);
    read_field(v, path, "uav_mass_kg", e.uav_mass_kg, true);
    read_field(v, path, "gravity", e.gravity, true);
    read_field(v, path, "v_max", e.v_max, true);
    return e;
}

}  // namespace

std::string scenario_to_json(const Scenario& s) {
    json doc;
    json clusters = json::array();
    for (const auto& cl : s.clusters) {
        json sensors = json::array();
        for (const auto& sn : cl.sensors) sensors.push_back(xy(sn.position));
        clusters.push_back({{"region", square_json(cl.region)},
                            {"sensors", std::move(sensors)},
                            {"data_volume_bits", cl.data_volume_bits}});
    }
    doc["clusters"] = std::move(clusters);
    json uavs = json::array();
    for (const auto& u : s.uavs) uavs.push_back(xyz(u.position));
    doc["uavs"] = std::move(uavs);
    json bss = json::array();
    for (const auto& b : s.base_stations) bss.push_back(xy(b));
    doc["base_stations"] = std::move(bss);
    doc["eavesdropper"] = xy(s.eavesdropper);
    doc["channel"] = channel_json(s.channel);
    doc["energy"] = energy_json(s.energy);
    doc["n_select"] = s.n_select;
    doc["d_min"] = s.d_min;
    doc["uav_region"] = square_json(s.uav_region);
    doc["altitude_band"] = json::array({s.altitude_band.low, s.altitude_band.high});
    return doc.dump(2);
}

Scenario scenario_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("<document>", std::string("parse error: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("<document>", "expected a JSON object");

    Scenario s;
    const auto& clusters = array(require(doc, "clusters", ""), "clusters");
    for (std::size_t h = 0; h < clusters.size(); ++h) {
        const std::string base = "clusters[" + std::to_string(h) + "]";
        IotCluster cl;
        cl.id = h;
        cl.region = square_from(require(clusters[h], "region", base), base + ".region");
        const auto& sensors = array(require(clusters[h], "sensors", base), base + ".sensors");
        for (std::size_t i = 0; i < sensors.size(); ++i)
            cl.sensors.push_back({point(sensors[i], base + ".sensors[" + std::to_string(i) + "]", 2), h});
        cl.data_volume_bits = number(require(clusters[h], "data_volume_bits", base), base + ".data_volume_bits");
        if (cl.data_volume_bits < 0.0) throw SchemaError(base + ".data_volume_bits", "must be >= 0");
        s.clusters.push_back(std::move(cl));
    }
    const auto& uavs = array(require(doc, "uavs", ""), "uavs");
    for (std::size_t j = 0; j < uavs.size(); ++j)
        s.uavs.push_back({j, point(uavs[j], "uavs[" + std::to_string(j) + "]", 3)});
    const auto& bss = array(require(doc, "base_stations", ""), "base_stations");
    for (std::size_t k = 0; k < bss.size(); ++k)
        s.base_stations.push_back(point(bss[k], "base_stations[" + std::to_string(k) + "]", 2));
    s.eavesdropper = point(require(doc, "eavesdropper", ""), "eavesdropper", 2);
    s.channel = channel_from(require(doc, "channel", ""));
    s.energy = energy_from(require(doc, "energy", ""));
    s.n_select = count(require(doc, "n_select", ""), "n_select");
    s.d_min = number(require(doc, "d_min", ""), "d_min");
    if (!(s.d_min > 0.0)) throw SchemaError("d_min", "must be > 0");
    if (auto it = doc.find("uav_region"); it != doc.end()) s.uav_region = square_from(*it, "uav_region");
    if (auto it = doc.find("altitude_band"); it != doc.end()) {
        const Vec3 band = point(*it, "altitude_band", 2);
        s.altitude_band = {band.x, band.y};
    }
    return s;
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << scenario_to_json(s) << '\n';
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return scenario_from_json(buf.str());
}

}  // namespace vaamoo
