#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncwave/group.hpp"
#include "ncwave/signal.hpp"
#include "ncwave/uncertainty.hpp"

namespace ncwave {

enum class ExperimentKind {
    Plancherel,
    Isometry,
    Uncertainty,
    GaborUncertainty,
    Hoelder,
    OptimizeWindow,
    Sweep,
};

std::string experiment_name(ExperimentKind k);

/// Parsed, validated experiment description. Built from a JSON document with
/// a versioned "schema" field; unknown keys are rejected so typos fail fast.
struct ExperimentConfig {
    ExperimentKind experiment;
    std::uint64_t seed = 0;

    std::shared_ptr<const GroupSpec> group;
    DualOptions dual;
    Motion2Path motion2_path = Motion2Path::Direct;

    std::vector<AxisFactor> signal_factors; ///< empty when signal_file is set
    std::string signal_file;                ///< NCWV1 path ("ingest" mode)
    std::optional<std::vector<AxisFactor>> window_factors;
    BaseGrid base;

    MomentSpec moments;
    std::vector<double> hoelder_b = {1.5, 2.0, 3.0};

    std::optional<OptimizeOptions> optimize;

    // sweep: cross product over moment orders and/or dyadic refinement levels
    std::vector<double> sweep_a, sweep_b;
    std::size_t sweep_levels = 0;
    ExperimentKind sweep_inner = ExperimentKind::Uncertainty;

    std::string canonical_json; ///< sorted-key, whitespace-free dump
    std::string fingerprint;    ///< fnv1a64 of canonical_json, hex
};

/// Parse + validate. Throws ConfigError with a line/field message on any
/// schema violation (wrong version, missing axes, empty sweep ranges, ...).
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config_file(const std::string& path);

/// Dyadic refinement: level 0 returns the config unchanged; each level doubles
/// grid resolutions (and the non-abelian basis sizes) while keeping boxes.
ExperimentConfig refine_config(const ExperimentConfig& base, std::size_t level);

} // namespace ncwave
