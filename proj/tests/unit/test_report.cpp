// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "vaamoo/errors.hpp"
#include "vaamoo/report.hpp"

using namespace vaamoo;

namespace {

RunResult small_run() {
    ScenarioConfig cfg;
    cfg.n_iot = 2;
    cfg.n_sensors = 5;
    cfg.n_select = 2;
    cfg.n_uav = 3;
    cfg.n_bs = 2;
    const auto s = generate_scenario(cfg, 21);
    OptimizerParams p;
    p.pop_size = 6;
    p.max_iters = 3;
    p.rng_seed = 17;
    p.mop.quadrature_step_deg = 6.0;
    return run_emssa(s, p);
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (char c : text) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
    CHECK(format_number(kInfinity) == "inf");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(2.0) == "2");
    for (double v : {1.0 / 3.0, 123456.789e-5, 6.02214076e23})
        CHECK(std::stod(format_number(v)) == v);
}

TEST_CASE("archive CSV and summaries agree") {
    const auto r = small_run();
    std::ostringstream csv;
    write_archive_csv(csv, r);
    std::size_t rows = 0;
    for (const auto& snap : r.history) rows += snap.archive.size();
    CHECK(count_lines(csv.str()) == rows + 1);
    CHECK(csv.str().rfind("iter,f1_s,f2_raw,f2_db,f3_j,solution_id\n", 0) == 0);

    std::istringstream in(csv.str());
    const auto from_csv = summarize_archive_csv(in);
    const auto direct = summarize(r);
    CHECK(from_csv.best_f1 == direct.best_f1);
    CHECK(from_csv.best_f2 == direct.best_f2);
    CHECK(from_csv.best_f3 == direct.best_f3);
    CHECK(from_csv.archive_size == direct.archive_size);
    CHECK(direct.seed == 17);
    CHECK(direct.algorithm == "emssa");

    std::ostringstream sum;
    write_summary_header(sum);
    write_summary_row(sum, direct);
    CHECK(count_lines(sum.str()) == 2);
}

TEST_CASE("front export reads the final archive") {
    const auto r = small_run();
    const auto front = read_front(run_result_to_json(r));
    CHECK(front.algorithm == "emssa");
    CHECK(front.seed == 17);
    REQUIRE(front.points.size() == r.archive.size());
    for (std::size_t i = 0; i < front.points.size(); ++i) CHECK(front.points[i] == r.archive[i].objectives);
    std::ostringstream out;
    write_front_header(out);
    write_front_rows(out, front);
    CHECK(count_lines(out.str()) == front.points.size() + 1);
    CHECK_THROWS_AS(read_front("{\"algorithm\": 3}"), SchemaError);
    CHECK_THROWS_AS(read_front("not json"), SchemaError);

    const auto sols = nlohmann::json::parse(solutions_json(r));
    CHECK(sols.size() == r.archive.size());
    for (const auto& e : r.archive) CHECK(solution_from_json(sols.at(std::to_string(e.id))) == e.solution);
}

TEST_CASE("comparison CSV") {
    const std::vector<ComparisonRow> rows{{"cb", 50.0, 1e5}, {"flybetween", 200.0, 3e5}, {"multihop", 1000.0, 1e6}};
    std::ostringstream out;
    write_comparison_csv(out, rows);
    CHECK(out.str() ==
          "strategy,f1_s,f3_j,time_saving_pct_vs_cb\n"
          "cb,50,1e+05,0\n"
          "flybetween,200,3e+05,75\n"
          "multihop,1000,1e+06,95\n");
    const auto text = comparison_summary(rows);
    CHECK(text.find("cb saves 75% of the mission time of flybetween") != std::string::npos);
}
