#include "ncwave/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ncwave/errors.hpp"
#include "ncwave/io.hpp"
#include "ncwave/version.hpp"

namespace ncwave {

namespace {

std::string grid_shape(const GroupSpec& g) {
    std::string s;
    for (const auto& ax : g.axes()) {
        if (!s.empty()) s += "x";
        s += std::to_string(ax.grid.size());
    }
    return s;
}

SampledSignal build_signal(const ExperimentConfig& cfg) {
    if (cfg.signal_file.empty()) return make_signal(cfg.group, cfg.signal_factors);
    SampledSignal loaded = read_signal_file(cfg.signal_file);
    const GroupSpec& a = *loaded.group;
    const GroupSpec& b = *cfg.group;
    bool ok = a.kind() == b.kind() && a.axes().size() == b.axes().size() &&
              a.finite_order() == b.finite_order();
    for (std::size_t i = 0; ok && i < a.axes().size(); ++i) {
        const Grid1D& ga = a.axis(i).grid;
        const Grid1D& gb = b.axis(i).grid;
        ok = ga.size() == gb.size() && std::abs(ga.lo() - gb.lo()) <= 1e-9 &&
             std::abs(ga.hi() - gb.hi()) <= 1e-9;
    }
    if (!ok)
        throw ConfigError("signal_file grid does not match the configured group");
    // rebind to the configured group so identity checks downstream hold
    return SampledSignal(cfg.group, std::move(loaded.values));
}

BaseGrid effective_base(const ExperimentConfig& cfg) {
    BaseGrid base = cfg.base;
    if (base.strides.empty()) base.strides.assign(cfg.group->axes().size(), 1);
    return base;
}

Window build_window(const ExperimentConfig& cfg) {
    if (!cfg.window_factors)
        throw ConfigError("this experiment needs a 'window' section");
    return Window{make_signal(cfg.group, *cfg.window_factors)};
}

ReportRecord base_record(const ExperimentConfig& cfg, ExperimentKind kind) {
    ReportRecord rec;
    rec.group = kind_name(cfg.group->kind());
    rec.experiment = experiment_name(kind);
    rec.grid_shape = grid_shape(*cfg.group);
    rec.fingerprint = cfg.fingerprint;
    rec.tool_version = kVersion;
    return rec;
}

ReportRecord from_report(const ExperimentConfig& cfg, ExperimentKind kind,
                         const UncertaintyReport& rep) {
    ReportRecord rec = base_record(cfg, kind);
    rec.a = rep.a;
    rec.b = rep.b;
    rec.norm_sq = rep.norm_sq;
    rec.time_moment = rep.time_moment;
    rec.freq_moment = rep.freq_moment;
    rec.lhs = rep.lhs;
    rec.rhs_without_constant = rep.rhs_without_constant;
    rec.min_constant = rep.min_constant;
    rec.divergence_flag = rep.divergence_flag;
    rec.truncation = rep.truncation;
    rec.has_moments = true;
    return rec;
}

ExperimentResult run_single(const ExperimentConfig& cfg, ExperimentKind kind) {
    ExperimentResult result;
    SampledSignal f = build_signal(cfg);
    switch (kind) {
        case ExperimentKind::Plancherel: {
            FourierData fd = group_fourier(f, cfg.dual, cfg.motion2_path);
            PlancherelResult pr = plancherel_check(f, fd);
            ReportRecord rec = base_record(cfg, kind);
            rec.norm_sq = pr.lhs;
            rec.lhs = pr.lhs;
            rec.rhs_without_constant = pr.rhs;
            rec.rel_error = pr.rel_error;
            rec.truncation = dual_truncation_summary(fd.dual);
            result.records.push_back(std::move(rec));
            break;
        }
        case ExperimentKind::Isometry: {
            GaborField field =
                gabor_transform(f, build_window(cfg), effective_base(cfg), cfg.dual,
                                cfg.motion2_path);
            IsometryResult iso = gabor_isometry_check(field);
            ReportRecord rec = base_record(cfg, kind);
            rec.norm_sq = field.signal_l2_sq;
            rec.lhs = iso.lhs;
            rec.rhs_without_constant = iso.rhs;
            rec.rel_error = iso.rel_error;
            rec.truncation = dual_truncation_summary(field.dual);
            result.records.push_back(std::move(rec));
            break;
        }
        case ExperimentKind::Uncertainty: {
            FourierData fd = group_fourier(f, cfg.dual, cfg.motion2_path);
            UncertaintyReport rep = heisenberg_report(f, fd, cfg.moments);
            result.records.push_back(from_report(cfg, kind, rep));
            break;
        }
        case ExperimentKind::GaborUncertainty: {
            GaborField field =
                gabor_transform(f, build_window(cfg), effective_base(cfg), cfg.dual,
                                cfg.motion2_path);
            UncertaintyReport rep = gabor_heisenberg_report(f, field, cfg.moments);
            result.records.push_back(from_report(cfg, kind, rep));
            break;
        }
        case ExperimentKind::Hoelder: {
            FourierData fd = group_fourier(f, cfg.dual, cfg.motion2_path);
            for (double b : cfg.hoelder_b) {
                HoelderResult hr = hoelder_interpolation_check(fd, b);
                ReportRecord rec = base_record(cfg, kind);
                rec.b = b;
                rec.norm_sq = l2_norm_sq(f);
                rec.lhs = hr.lhs;
                rec.rhs_without_constant = hr.rhs;
                rec.min_constant = hr.rhs > 0 ? hr.lhs / hr.rhs : 0.0;
                rec.truncation = dual_truncation_summary(fd.dual);
                rec.has_moments = true;
                if (!hr.holds) {
                    result.records.push_back(std::move(rec));
                    throw InequalityViolation("hoelder interpolation bound violated");
                }
                result.records.push_back(std::move(rec));
            }
            break;
        }
        case ExperimentKind::OptimizeWindow: {
            if (!cfg.optimize) throw ConfigError("optimize-window needs an 'optimize' section");
            OptimizeOptions opts = *cfg.optimize;
            if (opts.base.strides.empty())
                opts.base.strides.assign(cfg.group->axes().size(), 1);
            OptimizeResult opt = optimize_window(f, opts);
            ReportRecord rec = base_record(cfg, kind);
            rec.a = opts.moments.a;
            rec.b = opts.moments.b;
            rec.norm_sq = l2_norm_sq(f);
            rec.min_constant = opt.best_objective;
            rec.divergence_flag = opt.divergence_flag;
            char buf[96];
            std::string params;
            for (double p : opt.best_params) {
                std::snprintf(buf, sizeof buf, "%.12g", p);
                params += params.empty() ? buf : (std::string(";") + buf);
            }
            rec.truncation = "best_params=" + params;
            rec.has_moments = true;
            result.records.push_back(std::move(rec));
            result.best_params = opt.best_params;
            result.trace = opt.trace;
            break;
        }
        case ExperimentKind::Sweep:
            throw ConfigError("sweep cannot be run as a single experiment");
    }
    return result;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    try {
        if (cfg.experiment == ExperimentKind::Sweep) return run_sweep(cfg);
        ExperimentResult res = run_single(cfg, cfg.experiment);
        res.message = "ok";
        return res;
    } catch (const DegenerateSignalError& e) {
        ExperimentResult res;
        res.exit_code = 3;
        res.message = e.what();
        return res;
    } catch (const InequalityViolation& e) {
        ExperimentResult res;
        res.exit_code = 4;
        res.message = e.what();
        return res;
    }
}

ExperimentResult run_sweep(const ExperimentConfig& cfg) {
    if (cfg.experiment != ExperimentKind::Sweep)
        throw ConfigError("run_sweep: not a sweep config");
    std::vector<double> as = cfg.sweep_a.empty() ? std::vector<double>{cfg.moments.a}
                                                 : cfg.sweep_a;
    std::vector<double> bs = cfg.sweep_b.empty() ? std::vector<double>{cfg.moments.b}
                                                 : cfg.sweep_b;
    std::size_t levels = cfg.sweep_levels == 0 ? 1 : cfg.sweep_levels;

    ExperimentResult result;
    result.message = "ok";
    for (std::size_t level = 0; level < levels; ++level) {
        ExperimentConfig stage = refine_config(cfg, level);
        for (double a : as)
            for (double b : bs) {
                stage.moments.a = a;
                stage.moments.b = b;
                if (stage.optimize) {
                    stage.optimize->moments.a = a;
                    stage.optimize->moments.b = b;
                }
                try {
                    ExperimentResult one = run_single(stage, cfg.sweep_inner);
                    for (auto& rec : one.records) result.records.push_back(std::move(rec));
                } catch (const DegenerateSignalError& e) {
                    result.exit_code = 3;
                    result.message = e.what();
                    return result;
                } catch (const InequalityViolation& e) {
                    result.exit_code = 4;
                    result.message = e.what();
                    return result;
                }
            }
    }
    return result;
}

void write_csv(std::ostream& out, const std::vector<ReportRecord>& records,
               const std::string& timestamp) {
    out << "# generated " << timestamp << "\n";
    out << "# ncwave " << kVersion << "\n";
    out << "group,experiment,a,b,norm_sq,time_moment,freq_moment,lhs,"
           "rhs_without_constant,min_constant,divergence_flag,truncation,grid_shape,"
           "rel_error,fingerprint,tool_version\n";
    for (const auto& r : records) {
        out << csv_escape(r.group) << ',' << csv_escape(r.experiment) << ',';
        if (r.has_moments)
            out << num(r.a) << ',' << num(r.b) << ',';
        else
            out << ",,";
        out << num(r.norm_sq) << ',';
        if (r.has_moments)
            out << num(r.time_moment) << ',' << num(r.freq_moment) << ',';
        else
            out << ",,";
        out << num(r.lhs) << ',' << num(r.rhs_without_constant) << ',' << num(r.min_constant)
            << ',' << (r.divergence_flag ? 1 : 0) << ',' << csv_escape(r.truncation) << ','
            << csv_escape(r.grid_shape) << ',';
        if (r.rel_error >= 0.0) out << num(r.rel_error);
        out << ',' << csv_escape(r.fingerprint) << ',' << csv_escape(r.tool_version) << "\n";
    }
}

void write_json_summary(std::ostream& out, const ExperimentConfig& cfg,
                        const ExperimentResult& result, const std::string& timestamp) {
    nlohmann::json j;
    j["timestamp"] = timestamp;
    j["tool_version"] = kVersion;
    j["experiment"] = experiment_name(cfg.experiment);
    j["group"] = kind_name(cfg.group->kind());
    j["fingerprint"] = cfg.fingerprint;
    j["config"] = nlohmann::json::parse(cfg.canonical_json);
    j["exit_code"] = result.exit_code;
    j["message"] = result.message;
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : result.records) {
        nlohmann::json e;
        e["group"] = r.group;
        e["experiment"] = r.experiment;
        if (r.has_moments) {
            e["a"] = r.a;
            e["b"] = r.b;
            e["time_moment"] = r.time_moment;
            e["freq_moment"] = r.freq_moment;
        }
        e["norm_sq"] = r.norm_sq;
        e["lhs"] = r.lhs;
        e["rhs_without_constant"] = r.rhs_without_constant;
        e["min_constant"] = r.min_constant;
        e["divergence_flag"] = r.divergence_flag;
        e["truncation"] = r.truncation;
        e["grid_shape"] = r.grid_shape;
        if (r.rel_error >= 0.0) e["rel_error"] = r.rel_error;
        recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);
    if (!result.best_params.empty()) {
        nlohmann::json opt;
        opt["best_params"] = result.best_params;
        nlohmann::json trace = nlohmann::json::array();
        for (const auto& tp : result.trace) {
            nlohmann::json e;
            e["params"] = tp.params;
            e["objective"] = tp.objective;
            trace.push_back(std::move(e));
        }
        opt["trace"] = std::move(trace);
        j["optimize"] = std::move(opt);
    }
    out << j.dump(2) << "\n";
}

void write_reports(const std::string& out_dir, const ExperimentConfig& cfg,
                   const ExperimentResult& result) {
    std::filesystem::create_directories(out_dir);
    std::string ts = timestamp_utc();
    {
        std::ofstream csv(out_dir + "/report.csv");
        if (!csv) throw Error("write_reports: cannot open " + out_dir + "/report.csv");
        write_csv(csv, result.records, ts);
    }
    {
        std::ofstream js(out_dir + "/report.json");
        if (!js) throw Error("write_reports: cannot open " + out_dir + "/report.json");
        write_json_summary(js, cfg, result, ts);
    }
}

std::string timestamp_utc() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::size_t worker_count() {
    if (const char* env = std::getenv("NCWAVE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return std::size_t(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

} // namespace ncwave
