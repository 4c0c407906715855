// SPDX-License-Identifier: Apache-2.0
//
// CSV/JSON emission for optimizer runs and strategy comparisons.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vaamoo/baselines.hpp"
#include "vaamoo/emssa.hpp"
#include "vaamoo/mop.hpp"

namespace vaamoo {

/// Shortest round-trip decimal text of a double; "inf" for infinity.
std::string format_number(double v);

/// Rows `iter,f1_s,f2_raw,f2_db,f3_j,solution_id` for every snapshot.
void write_archive_csv(std::ostream& out, const RunResult& r);

/// {"<solution_id>": solution} for the final archive.
std::string solutions_json(const RunResult& r);

struct RunSummary {
    std::string algorithm;
    std::uint64_t seed = 0;
    double best_f1 = 0.0;
    double best_f2 = 0.0;
    double best_f3 = 0.0;
    std::size_t archive_size = 0;
    std::size_t evaluations = 0;
};

RunSummary summarize(const RunResult& r);
/// Per-objective minima of the last snapshot in an archive CSV.
RunSummary summarize_archive_csv(std::istream& in);

void write_summary_header(std::ostream& out);
void write_summary_row(std::ostream& out, const RunSummary& s);

/// Final archive of a serialized run.
struct StoredFront {
    std::string algorithm;
    std::uint64_t seed = 0;
    std::vector<ObjectiveVector> points;
};
StoredFront read_front(const std::string& run_json);

/// `algo,seed,f1,f2_db,f3` rows.
void write_front_header(std::ostream& out);
void write_front_rows(std::ostream& out, const StoredFront& front);

struct ComparisonRow {
    std::string strategy;
    double f1_s = 0.0;
    double f3_j = 0.0;
};

/// `strategy,f1_s,f3_j,time_saving_pct_vs_cb` rows; the saving column is
/// 100 (t - t_cb) / t of each row relative to the cb row.
void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);
/// Human-readable lines with the CB time savings against each baseline.
std::string comparison_summary(const std::vector<ComparisonRow>& rows);

}  // namespace vaamoo
