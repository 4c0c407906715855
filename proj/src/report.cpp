// SPDX-License-Identifier: Apache-2.0

#include "vaamoo/report.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "vaamoo/errors.hpp"

namespace vaamoo {

using nlohmann::json;

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

double parse_number(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) throw std::runtime_error("bad number '" + s + "'");
    return v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
}

}  // namespace

void write_archive_csv(std::ostream& out, const RunResult& r) {
    out << "iter,f1_s,f2_raw,f2_db,f3_j,solution_id\n";
    for (const auto& snap : r.history)
        for (const auto& row : snap.archive)
            out << snap.iter << ',' << format_number(row.objectives.f1) << ',' << format_number(row.objectives.f2)
                << ',' << format_number(row.objectives.f2_db()) << ',' << format_number(row.objectives.f3) << ','
                << row.solution_id << '\n';
}

std::string solutions_json(const RunResult& r) {
    json doc = json::object();
    for (const auto& e : r.archive) doc[std::to_string(e.id)] = solution_to_json(e.solution);
    return doc.dump(1);
}

RunSummary summarize(const RunResult& r) {
    return {r.algorithm, r.params.rng_seed, r.best(0), r.best(1), r.best(2), r.archive.size(), r.evaluations};
}

RunSummary summarize_archive_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty archive CSV");
    RunSummary s;
    s.best_f1 = s.best_f2 = s.best_f3 = std::numeric_limits<double>::infinity();
    long last_iter = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto c = split_csv(line);
        if (c.size() != 6) throw std::runtime_error("archive CSV row needs 6 cells");
        const long iter = std::stol(c[0]);
        if (iter != last_iter) {
            last_iter = iter;
            s.best_f1 = s.best_f2 = s.best_f3 = std::numeric_limits<double>::infinity();
            s.archive_size = 0;
        }
        s.best_f1 = std::min(s.best_f1, parse_number(c[1]));
        s.best_f2 = std::min(s.best_f2, parse_number(c[2]));
        s.best_f3 = std::min(s.best_f3, parse_number(c[4]));
        ++s.archive_size;
    }
    return s;
}

void write_summary_header(std::ostream& out) {
    out << "algo,seed,best_f1_s,best_f2_raw,best_f2_db,best_f3_j,archive_size,evaluations\n";
}

void write_summary_row(std::ostream& out, const RunSummary& s) {
    out << s.algorithm << ',' << s.seed << ',' << format_number(s.best_f1) << ',' << format_number(s.best_f2) << ','
        << format_number(20.0 * std::log10(s.best_f2)) << ',' << format_number(s.best_f3) << ',' << s.archive_size
        << ',' << s.evaluations << '\n';
}

StoredFront read_front(const std::string& run_json) {
    json doc;
    try {
        doc = json::parse(run_json);
    } catch (const json::exception& e) {
        throw SchemaError("$", e.what());
    }
    StoredFront f;
    try {
        f.algorithm = doc.at("algorithm").get<std::string>();
        f.seed = doc.at("params").at("rng_seed").get<std::uint64_t>();
        for (const auto& e : doc.at("archive")) {
            const auto& o = e.at("objectives");
            f.points.push_back({o.at("f1_s").get<double>(), o.at("f2_raw").get<double>(), o.at("f3_j").get<double>()});
        }
    } catch (const json::exception& e) {
        throw SchemaError("run result", e.what());
    }
    return f;
}

void write_front_header(std::ostream& out) { out << "algo,seed,f1,f2_db,f3\n"; }

void write_front_rows(std::ostream& out, const StoredFront& front) {
    for (const auto& p : front.points)
        out << front.algorithm << ',' << front.seed << ',' << format_number(p.f1) << ',' << format_number(p.f2_db())
            << ',' << format_number(p.f3) << '\n';
}

namespace {

const ComparisonRow* find_cb(const std::vector<ComparisonRow>& rows) {
    for (const auto& r : rows)
        if (r.strategy == "cb") return &r;
    return nullptr;
}

double saving_pct(double t, double t_cb) {
    if (!(t > 0.0) || std::isinf(t)) return std::isinf(t) && std::isfinite(t_cb) ? 100.0 : 0.0;
    return 100.0 * (t - t_cb) / t;
}

}  // namespace

void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
    const ComparisonRow* cb = find_cb(rows);
    out << "strategy,f1_s,f3_j,time_saving_pct_vs_cb\n";
    for (const auto& r : rows)
        out << r.strategy << ',' << format_number(r.f1_s) << ',' << format_number(r.f3_j) << ','
            << (cb ? format_number(saving_pct(r.f1_s, cb->f1_s)) : std::string("")) << '\n';
}

std::string comparison_summary(const std::vector<ComparisonRow>& rows) {
    std::ostringstream out;
    const ComparisonRow* cb = find_cb(rows);
    for (const auto& r : rows) out << r.strategy << ": " << format_number(r.f1_s) << " s, " << format_number(r.f3_j) << " J\n";
    if (cb)
        for (const auto& r : rows)
            if (&r != cb)
                out << "cb saves " << format_number(saving_pct(r.f1_s, cb->f1_s)) << "% of the mission time of "
                    << r.strategy << '\n';
    return out.str();
}

}  // namespace vaamoo
