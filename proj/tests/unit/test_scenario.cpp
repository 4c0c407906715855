// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <json.hpp>

#include "vaamoo/errors.hpp"
#include "vaamoo/scenario.hpp"

using namespace vaamoo;

TEST_CASE("presets") {
    const auto small = preset_config(parse_preset("small-los"));
    CHECK(small.n_iot == 2);
    CHECK(small.n_uav == 16);
    CHECK(small.n_bs == 8);
    CHECK(small.altitude_band.low == 100.0);
    CHECK(small.altitude_band.high == 120.0);
    const auto plos = preset_config(parse_preset("small-plos"));
    CHECK(plos.altitude_band.low == 70.0);
    CHECK(plos.altitude_band.high == 90.0);
    const auto large = preset_config(parse_preset("large-plos"));
    CHECK(large.n_iot == 4);
    CHECK(large.n_uav == 32);
    const auto desk = preset_config(parse_preset("desk"));
    CHECK(desk.n_sensors == 20);
    CHECK(desk.n_select == 5);
    CHECK(desk.n_uav == 8);
    CHECK(desk.n_bs == 4);
}

TEST_CASE("unknown preset lists the valid names") {
    try {
        parse_preset("medium");
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        for (const auto& name : preset_names()) CHECK(msg.find(name) != std::string::npos);
    }
}

TEST_CASE("generated scenarios are valid and reproducible") {
    for (auto preset : {Preset::Desk, Preset::SmallLos, Preset::LargePlos}) {
        const auto cfg = preset_config(preset);
        const auto a = generate_scenario(cfg, 42);
        const auto b = generate_scenario(cfg, 42);
        CHECK(a == b);
        CHECK(validate_scenario(a).empty());
        CHECK(a.n_iot() == cfg.n_iot);
        CHECK(a.n_uav() == cfg.n_uav);
        CHECK(a.n_bs() == cfg.n_bs);
        for (const auto& c : a.clusters) CHECK(c.sensors.size() == cfg.n_sensors);
    }
    CHECK_FALSE(generate_scenario(preset_config(Preset::Desk), 1) == generate_scenario(preset_config(Preset::Desk), 2));
}

TEST_CASE("scenario JSON round trip") {
    const auto s = generate_scenario(preset_config(Preset::Desk), 9);
    const auto text = scenario_to_json(s);
    CHECK(scenario_from_json(text) == s);
    CHECK(scenario_to_json(scenario_from_json(text)) == text);
}

TEST_CASE("schema errors name the field") {
    const auto s = generate_scenario(preset_config(Preset::Desk), 9);
    auto doc = nlohmann::json::parse(scenario_to_json(s));
    doc["uavs"][2] = {1.0, 2.0};
    try {
        scenario_from_json(doc.dump());
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.path() == "uavs[2]");
    }
    doc = nlohmann::json::parse(scenario_to_json(s));
    doc.erase("d_min");
    CHECK_THROWS_AS(scenario_from_json(doc.dump()), SchemaError);
    CHECK_THROWS_AS(scenario_from_json("{not json"), SchemaError);
}

TEST_CASE("validation reports violations") {
    auto s = generate_scenario(preset_config(Preset::Desk), 3);
    s.uavs[1].position = s.uavs[0].position + Vec3{0.3, 0.0, 0.0};
    s.uavs[2].position.z = 500.0;
    s.n_select = 100;
    const auto v = validate_scenario(s);
    auto has = [&](const std::string& f) {
        for (const auto& x : v)
            if (x.field == f) return true;
        return false;
    };
    CHECK(has("d_min"));
    CHECK(has("uavs[2]"));
    CHECK(has("n_select"));
}

TEST_CASE("crowded swarm cannot be placed") {
    auto cfg = preset_config(Preset::Desk);
    cfg.uav_region.side = 1.0;
    cfg.altitude_band = {100.0, 100.5};
    cfg.n_uav = 40;
    CHECK_THROWS_AS(generate_scenario(cfg, 1), InfeasibleGeometryError);
}
