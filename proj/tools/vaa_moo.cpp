// SPDX-License-Identifier: Apache-2.0
//
// vaa_moo: scenario generation, optimizer runs, strategy comparison and
// Pareto-front export.
//
// Exit codes: 0 success, 2 configuration error, 3 infeasible scenario.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "vaamoo/baselines.hpp"
#include "vaamoo/emssa.hpp"
#include "vaamoo/errors.hpp"
#include "vaamoo/report.hpp"
#include "vaamoo/scenario.hpp"

namespace fs = std::filesystem;
using namespace vaamoo;

namespace {

constexpr int kConfigError = 2;
constexpr int kInfeasible = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InfeasibleScenario : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScenarioSource {
    std::string path;
    std::string preset = "desk";
    std::uint64_t scenario_seed = 7;
    std::optional<double> data_mbits;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--scenario", path, "Scenario JSON file (overrides --preset)");
        cmd->add_option("--preset", preset, "Generator preset: " + join(preset_names()))->capture_default_str();
        cmd->add_option("--scenario-seed", scenario_seed, "Generator seed for --preset")->capture_default_str();
        cmd->add_option("--data-mbits", data_mbits, "Override every cluster's data volume (Mbit)");
    }

    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (const auto& s : v) out += (out.empty() ? "" : "|") + s;
        return out;
    }

    [[nodiscard]] Scenario load() const {
        Scenario s;
        try {
            if (!path.empty()) {
                s = load_scenario(path);
            } else {
                auto cfg = preset_config(parse_preset(preset));
                if (data_mbits) cfg.data_volume_bits = *data_mbits * 1e6;
                s = generate_scenario(cfg, scenario_seed);
            }
        } catch (const InfeasibleGeometryError& e) {
            throw InfeasibleScenario(e.what());
        } catch (const SchemaError& e) {
            throw ConfigError(e.what());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        } catch (const std::runtime_error& e) {
            throw ConfigError(e.what());
        }
        if (data_mbits) {
            if (*data_mbits < 0.0) throw ConfigError("--data-mbits must be >= 0");
            for (auto& c : s.clusters) c.data_volume_bits = *data_mbits * 1e6;
        }
        const auto violations = validate_scenario(s);
        if (!violations.empty()) {
            std::string msg = "infeasible scenario:";
            for (const auto& v : violations) msg += "\n  " + v.field + ": " + v.constraint;
            throw InfeasibleScenario(msg);
        }
        return s;
    }
};

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    static const std::regex range(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
    static const std::regex single(R"(^\s*(\d+)\s*$)");
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::smatch m;
        if (std::regex_match(part, m, range)) {
            const auto a = std::stoull(m[1]), b = std::stoull(m[2]);
            if (a > b) throw ConfigError("empty seed range '" + part + "'");
            for (auto k = a; k <= b; ++k) seeds.push_back(k);
        } else if (std::regex_match(part, m, single)) {
            seeds.push_back(std::stoull(m[1]));
        } else {
            throw ConfigError("bad seed list '" + text + "' (use N, a..b or comma-separated)");
        }
    }
    if (seeds.empty()) throw ConfigError("no seeds given");
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return seeds;
}

std::size_t thread_cap() {
    std::size_t cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("VAA_MOO_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v < 1) throw std::invalid_argument("");
            cap = static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw ConfigError(std::string("VAA_MOO_THREADS must be a positive integer, got '") + env + "'");
        }
    }
    return cap;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << content;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string run_stem(const std::string& algo, std::uint64_t seed) { return algo + "_seed" + std::to_string(seed); }

// The random linear-array plan packaged as a one-entry run so it flows
// through the same outputs as the optimizers.
RunResult random_laa_run(const Scenario& s, const OptimizerParams& p) {
    Rng rng(derive_seed(p.rng_seed, {0x1aaULL}));
    auto x = random_laa_solution(s, rng, p.mop.perf_time);
    const auto obj = Evaluator(s, p.mop).evaluate(x);
    RunResult r;
    r.algorithm = "random-laa";
    r.params = p;
    r.evaluations = 1;
    r.archive.push_back({std::move(x), obj, {}, 0});
    r.history.push_back({0, {{0, obj}}});
    return r;
}

// ---- optimize ---------------------------------------------------------------

struct OptimizeArgs {
    ScenarioSource source;
    std::string algo = "emssa";
    std::string seeds = "1";
    std::size_t pop = 30;
    std::size_t iters = 100;
    std::size_t archive_cap = 100;
    double quadrature_deg = 3.0;
    std::string out = "results";
};

// Rebuilds summary.csv from every archive CSV in the directory, and
// paired.csv for seeds shared by more than one algorithm.
void rebuild_summaries(const fs::path& dir) {
    static const std::regex name(R"(^(.+)_seed(\d+)_archive\.csv$)");
    std::map<std::pair<std::string, std::uint64_t>, RunSummary> rows;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string file = entry.path().filename().string();
        std::smatch m;
        if (!std::regex_match(file, m, name)) continue;
        std::ifstream in(entry.path());
        auto sum = summarize_archive_csv(in);
        sum.algorithm = m[1];
        sum.seed = std::stoull(m[2]);
        const fs::path run = dir / (run_stem(sum.algorithm, sum.seed) + ".json");
        if (fs::exists(run)) sum.evaluations = nlohmann::json::parse(read_file(run)).at("evaluations").get<std::size_t>();
        rows[{sum.algorithm, sum.seed}] = sum;
    }
    std::ostringstream summary;
    write_summary_header(summary);
    std::map<std::uint64_t, std::map<std::string, const RunSummary*>> by_seed;
    std::vector<std::string> algos;
    for (const auto& [key, sum] : rows) {
        write_summary_row(summary, sum);
        by_seed[key.second][key.first] = &sum;
        if (std::find(algos.begin(), algos.end(), key.first) == algos.end()) algos.push_back(key.first);
    }
    write_file(dir / "summary.csv", summary.str());

    std::sort(algos.begin(), algos.end());
    if (algos.size() < 2) {
        fs::remove(dir / "paired.csv");
        return;
    }
    std::ostringstream paired;
    paired << "seed";
    for (const auto& a : algos) paired << ',' << a << "_best_f1_s," << a << "_best_f2_raw," << a << "_best_f3_j";
    paired << '\n';
    for (const auto& [seed, per_algo] : by_seed) {
        if (per_algo.size() != algos.size()) continue;
        paired << seed;
        for (const auto& a : algos) {
            const auto* s = per_algo.at(a);
            paired << ',' << format_number(s->best_f1) << ',' << format_number(s->best_f2) << ','
                   << format_number(s->best_f3);
        }
        paired << '\n';
    }
    write_file(dir / "paired.csv", paired.str());
}

int cmd_optimize(const OptimizeArgs& a) {
    const Scenario s = a.source.load();
    const auto seeds = parse_seeds(a.seeds);
    using RunFn = RunResult (*)(const Scenario&, const OptimizerParams&);
    static const std::map<std::string, RunFn> algos{
        {"emssa", &run_emssa}, {"mssa", &run_mssa}, {"mopso", &run_mopso}, {"random-laa", &random_laa_run}};
    const auto it = algos.find(a.algo);
    if (it == algos.end()) throw ConfigError("unknown --algo '" + a.algo + "' (valid: emssa|mssa|mopso|random-laa)");

    OptimizerParams base;
    base.pop_size = a.pop;
    base.max_iters = a.iters;
    base.archive_capacity = a.archive_cap;
    base.mop.quadrature_step_deg = a.quadrature_deg;
    try {
        validate_params(base);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    const fs::path dir = a.out;
    fs::create_directories(dir);

    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(seeds.size());
    auto worker = [&] {
        for (std::size_t i = next++; i < seeds.size(); i = next++) {
            try {
                auto p = base;
                p.rng_seed = seeds[i];
                const auto r = it->second(s, p);
                const std::string stem = run_stem(a.algo, seeds[i]);
                write_file(dir / (stem + ".json"), run_result_to_json(r));
                std::ostringstream csv;
                write_archive_csv(csv, r);
                write_file(dir / (stem + "_archive.csv"), csv.str());
                write_file(dir / (stem + "_solutions.json"), solutions_json(r));
                std::ostringstream line;
                line << a.algo << " seed " << seeds[i] << ": best f1 " << format_number(r.best(0)) << " s, best f3 "
                     << format_number(r.best(2)) << " J, archive " << r.archive.size() << ", " << r.wall_clock_s
                     << " s\n";
                std::cout << line.str() << std::flush;
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const std::size_t n_threads = std::min(thread_cap(), seeds.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < seeds.size(); ++i)
        if (!errors[i].empty()) throw std::runtime_error("seed " + std::to_string(seeds[i]) + ": " + errors[i]);

    rebuild_summaries(dir);
    std::cout << "wrote " << (dir / "summary.csv").string() << '\n';
    return 0;
}

// ---- gen-scenario -----------------------------------------------------------

int cmd_gen_scenario(const ScenarioSource& src, const std::string& out) {
    const Scenario s = src.load();
    save_scenario(s, out);
    std::cout << "wrote " << out << " (" << s.n_iot() << " clusters, " << s.n_uav() << " UAVs, " << s.n_bs()
              << " base stations)\n";
    return 0;
}

// ---- compare-strategies -----------------------------------------------------

struct CompareArgs {
    ScenarioSource source;
    std::string strategy = "all";
    std::string results = "results";
    std::string algo = "emssa";
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_compare(const CompareArgs& a) {
    const Scenario s = a.source.load();
    if (a.strategy != "all" && a.strategy != "cb" && a.strategy != "multihop" && a.strategy != "flybetween")
        throw ConfigError("unknown --strategy '" + a.strategy + "' (valid: all|cb|multihop|flybetween)");
    auto want = [&](const std::string& name) { return a.strategy == "all" || a.strategy == name; };

    std::vector<ComparisonRow> rows;
    if (want("multihop")) {
        const auto r = strategy_multihop(s);
        rows.push_back({"multihop", r.mission_time, r.energy});
    }
    if (want("flybetween")) {
        const auto r = strategy_flybetween(s);
        rows.push_back({"flybetween", r.mission_time, r.energy});
    }
    if (want("cb")) {
        const fs::path run = fs::path(a.results) / (run_stem(a.algo, a.seed) + ".json");
        if (!fs::exists(run))
            throw ConfigError("no CB result at " + run.string() + "; run `vaa_moo optimize --algo " + a.algo +
                              " --seed " + std::to_string(a.seed) + " --out " + a.results +
                              "` with the same scenario first");
        const auto doc = nlohmann::json::parse(read_file(run));
        double f1 = kInfinity, f3 = kInfinity;
        for (const auto& e : doc.at("archive")) {
            const auto& o = e.at("objectives");
            const double e1 = o.at("f1_s").get<double>();
            if (e1 < f1) f1 = e1, f3 = o.at("f3_j").get<double>();
        }
        rows.push_back({"cb", f1, f3});
    }

    std::ostringstream csv;
    write_comparison_csv(csv, rows);
    const std::string summary = comparison_summary(rows);
    if (!a.out.empty()) {
        fs::create_directories(a.out);
        write_file(fs::path(a.out) / "comparison.csv", csv.str());
        write_file(fs::path(a.out) / "comparison.txt", summary);
    } else {
        std::cout << csv.str();
    }
    std::cout << summary;
    return 0;
}

// ---- export-front -----------------------------------------------------------

int cmd_export_front(const std::vector<std::string>& inputs, const std::string& out) {
    static const std::regex run_name(R"(^.+_seed\d+\.json$)");
    std::vector<fs::path> files;
    for (const auto& in : inputs) {
        if (fs::is_directory(in)) {
            for (const auto& e : fs::directory_iterator(in))
                if (std::regex_match(e.path().filename().string(), run_name)) files.push_back(e.path());
        } else if (fs::exists(in)) {
            files.emplace_back(in);
        } else {
            throw ConfigError("no such input " + in);
        }
    }
    std::sort(files.begin(), files.end());
    std::ostringstream csv;
    write_front_header(csv);
    for (const auto& f : files) {
        try {
            write_front_rows(csv, read_front(read_file(f)));
        } catch (const SchemaError& e) {
            throw ConfigError(f.string() + ": " + e.what());
        }
    }
    if (out.empty()) {
        std::cout << csv.str();
    } else {
        if (fs::path(out).has_parent_path()) fs::create_directories(fs::path(out).parent_path());
        write_file(out, csv.str());
        std::cout << "wrote " << out << " from " << files.size() << " run(s)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Joint ground/aerial virtual antenna array optimizer for UAV data harvesting and dissemination"};
    app.require_subcommand(1);

    ScenarioSource gen_src;
    std::string gen_out = "scenario.json";
    auto* gen = app.add_subcommand("gen-scenario", "Write a generated scenario as JSON");
    gen_src.add_flags(gen);
    gen->add_option("--seed", gen_src.scenario_seed, "Generator seed")->capture_default_str();
    gen->add_option("--out", gen_out, "Output file")->capture_default_str();

    OptimizeArgs opt;
    auto* optimize = app.add_subcommand("optimize", "Run an optimizer over one or more seeds");
    opt.source.add_flags(optimize);
    optimize->add_option("--algo", opt.algo, "emssa|mssa|mopso|random-laa")->capture_default_str();
    optimize->add_option("--seed", opt.seeds, "Seeds: N, a..b, or a comma-separated list")->capture_default_str();
    optimize->add_option("--pop", opt.pop, "Population size")->capture_default_str();
    optimize->add_option("--iters", opt.iters, "Iterations")->capture_default_str();
    optimize->add_option("--archive-cap", opt.archive_cap, "Archive capacity")->capture_default_str();
    optimize->add_option("--quadrature-deg", opt.quadrature_deg, "Directivity quadrature step (deg)")
        ->capture_default_str();
    optimize->add_option("--out", opt.out, "Output directory")->capture_default_str();

    CompareArgs cmp;
    auto* compare = app.add_subcommand("compare-strategies", "Compare CB against multihop and fly-between");
    cmp.source.add_flags(compare);
    compare->add_option("--strategy", cmp.strategy, "all|cb|multihop|flybetween")->capture_default_str();
    compare->add_option("--results", cmp.results, "Directory holding the optimize output")->capture_default_str();
    compare->add_option("--algo", cmp.algo, "Algorithm whose run supplies the CB row")->capture_default_str();
    compare->add_option("--seed", cmp.seed, "Seed of that run")->capture_default_str();
    compare->add_option("--out", cmp.out, "Directory for comparison.csv and comparison.txt (default: stdout)");

    std::vector<std::string> front_inputs;
    std::string front_out;
    auto* front = app.add_subcommand("export-front", "Merge final archives into one long-format CSV");
    front->add_option("inputs", front_inputs, "Run JSON files or directories");
    front->add_option("--out", front_out, "Output CSV (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }

    try {
        if (*gen) return cmd_gen_scenario(gen_src, gen_out);
        if (*optimize) return cmd_optimize(opt);
        if (*compare) return cmd_compare(cmp);
        if (*front) return cmd_export_front(front_inputs, front_out);
    } catch (const InfeasibleScenario& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInfeasible;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
