#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ncwave/config.hpp"

namespace ncwave {

/// One CSV row. Fields not produced by an experiment stay empty.
struct ReportRecord {
    std::string group;
    std::string experiment;
    double a = 0, b = 0;
    double norm_sq = 0, time_moment = 0, freq_moment = 0;
    double lhs = 0, rhs_without_constant = 0, min_constant = 0;
    bool divergence_flag = false;
    std::string truncation;   ///< e.g. "lambda_max=4;n_lambda=64;N=64"
    std::string grid_shape;   ///< e.g. "96x96x96"
    double rel_error = -1.0;  ///< negative = not applicable
    std::string fingerprint;
    std::string tool_version;

    bool has_moments = false;
};

struct ExperimentResult {
    std::vector<ReportRecord> records;
    int exit_code = 0;       ///< 0 ok, 3 degeneracy, 4 inequality violation
    std::string message;     ///< human-readable status/failure detail

    // optimize-window only: recovered parameters and the full evaluation trace
    std::vector<double> best_params;
    std::vector<OptimizeTracePoint> trace;
};

/// Run one experiment (or a sweep) and return its records. Does not touch the
/// filesystem; exceptions from bad configs propagate (the CLI maps them to
/// exit code 2).
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Cross-product sweep driver used by ExperimentKind::Sweep; rows appear in
/// lexicographic parameter order.
ExperimentResult run_sweep(const ExperimentConfig& cfg);

/// Deterministic report serialization. The timestamp header line is the only
/// content that differs between identical runs.
void write_csv(std::ostream& out, const std::vector<ReportRecord>& records,
               const std::string& timestamp);
void write_json_summary(std::ostream& out, const ExperimentConfig& cfg,
                        const ExperimentResult& result, const std::string& timestamp);

/// Write report.csv + report.json under out_dir (created if missing).
void write_reports(const std::string& out_dir, const ExperimentConfig& cfg,
                   const ExperimentResult& result);

/// Current ISO-8601 UTC timestamp.
std::string timestamp_utc();

/// Worker cap: NCWAVE_THREADS when set (>=1), else hardware concurrency.
std::size_t worker_count();

} // namespace ncwave
