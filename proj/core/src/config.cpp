#include "ncwave/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ncwave/errors.hpp"
#include "ncwave/io.hpp"
#include "ncwave/special.hpp"

namespace ncwave {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ConfigError("config: " + msg); }

void check_keys(const json& obj, const char* ctx, std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                ok = true;
                break;
            }
        if (!ok) fail(std::string("unknown key '") + it.key() + "' in " + ctx);
    }
}

double need_num(const json& obj, const char* key, const char* ctx) {
    if (!obj.contains(key)) fail(std::string(ctx) + " needs '" + key + "'");
    if (!obj[key].is_number()) fail(std::string(ctx) + "." + key + " must be a number");
    return obj[key].get<double>();
}

double opt_num(const json& obj, const char* key, double dflt, const char* ctx) {
    if (!obj.contains(key)) return dflt;
    if (!obj[key].is_number()) fail(std::string(ctx) + "." + key + " must be a number");
    return obj[key].get<double>();
}

std::size_t need_size(const json& obj, const char* key, const char* ctx) {
    double v = need_num(obj, key, ctx);
    if (v < 0 || v != std::floor(v)) fail(std::string(ctx) + "." + key + " must be a whole number");
    return std::size_t(v);
}

std::string need_str(const json& obj, const char* key, const char* ctx) {
    if (!obj.contains(key)) fail(std::string(ctx) + " needs '" + key + "'");
    if (!obj[key].is_string()) fail(std::string(ctx) + "." + key + " must be a string");
    return obj[key].get<std::string>();
}

std::vector<double> num_array(const json& arr, const char* ctx) {
    if (!arr.is_array()) fail(std::string(ctx) + " must be an array of numbers");
    std::vector<double> out;
    for (const auto& v : arr) {
        if (!v.is_number()) fail(std::string(ctx) + " must hold only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

ExperimentKind parse_experiment(const std::string& name) {
    if (name == "plancherel") return ExperimentKind::Plancherel;
    if (name == "isometry") return ExperimentKind::Isometry;
    if (name == "uncertainty") return ExperimentKind::Uncertainty;
    if (name == "gabor-uncertainty") return ExperimentKind::GaborUncertainty;
    if (name == "hoelder") return ExperimentKind::Hoelder;
    if (name == "optimize-window") return ExperimentKind::OptimizeWindow;
    if (name == "sweep") return ExperimentKind::Sweep;
    fail("unknown experiment '" + name + "'");
}

Grid1D parse_axis(const json& j, const char* ctx) {
    if (!j.is_object()) fail(std::string(ctx) + ": axis must be an object");
    check_keys(j, ctx, {"lo", "hi", "n"});
    double lo = need_num(j, "lo", ctx);
    double hi = need_num(j, "hi", ctx);
    std::size_t n = need_size(j, "n", ctx);
    if (!(lo < hi)) fail(std::string(ctx) + ": lo < hi required");
    if (n < 2) fail(std::string(ctx) + ": n >= 2 required");
    return Grid1D::periodic(lo, hi, n);
}

std::shared_ptr<const GroupSpec> parse_group(const json& j) {
    if (!j.is_object()) fail("'group' must be an object");
    check_keys(j, "group", {"kind", "axes", "n_theta", "m"});
    std::string kind = need_str(j, "kind", "group");
    std::vector<Grid1D> axes;
    if (j.contains("axes")) {
        if (!j["axes"].is_array()) fail("group.axes must be an array");
        for (const auto& a : j["axes"]) axes.push_back(parse_axis(a, "group.axes"));
    }
    if (kind == "euclidean") {
        if (axes.empty() || axes.size() > 3) fail("euclidean needs 1..3 axes");
        return make_euclidean(std::move(axes));
    }
    if (kind == "heisenberg1") {
        if (axes.size() != 3) fail("heisenberg1 needs exactly 3 axes (x, y, t)");
        return make_heisenberg1(axes[0], axes[1], axes[2]);
    }
    if (kind == "motion2") {
        if (axes.size() != 2) fail("motion2 needs exactly 2 translation axes");
        if (!j.contains("n_theta")) fail("motion2 needs n_theta");
        return make_motion2(need_size(j, "n_theta", "group"), axes[0], axes[1]);
    }
    if (kind == "product_rfinite") {
        if (axes.size() != 1) fail("product_rfinite needs exactly 1 real axis");
        if (!j.contains("m")) fail("product_rfinite needs m");
        return make_product_rfinite(axes[0], need_size(j, "m", "group"));
    }
    fail("unknown group kind '" + kind + "'");
}

DualOptions parse_dual(const json& j) {
    DualOptions d;
    if (!j.is_object()) fail("'dual' must be an object");
    check_keys(j, "dual",
               {"lambda_max", "n_lambda", "hermite_order", "u_max", "n_u", "r_max", "n_r",
                "mode_cutoff"});
    d.lambda_max = opt_num(j, "lambda_max", d.lambda_max, "dual");
    if (j.contains("n_lambda")) d.n_lambda = need_size(j, "n_lambda", "dual");
    if (j.contains("hermite_order")) d.hermite_order = need_size(j, "hermite_order", "dual");
    d.u_max = opt_num(j, "u_max", d.u_max, "dual");
    if (j.contains("n_u")) d.n_u = need_size(j, "n_u", "dual");
    d.r_max = opt_num(j, "r_max", d.r_max, "dual");
    if (j.contains("n_r")) d.n_r = need_size(j, "n_r", "dual");
    if (j.contains("mode_cutoff")) d.mode_cutoff = int(need_size(j, "mode_cutoff", "dual"));
    return d;
}

AxisFactor parse_factor(const json& j) {
    if (!j.is_object()) fail("factor must be an object");
    std::string type = need_str(j, "type", "factor");
    if (type == "gaussian") {
        check_keys(j, "gaussian factor", {"type", "width", "center"});
        return GaussianFactor{opt_num(j, "width", 1.0, "factor"),
                              opt_num(j, "center", 0.0, "factor")};
    }
    if (type == "box") {
        check_keys(j, "box factor", {"type", "lo", "hi"});
        return BoxFactor{need_num(j, "lo", "factor"), need_num(j, "hi", "factor")};
    }
    if (type == "sine_gaussian") {
        check_keys(j, "sine_gaussian factor", {"type", "freq", "width", "center", "phase"});
        return SineGaussianFactor{need_num(j, "freq", "factor"),
                                  opt_num(j, "width", 1.0, "factor"),
                                  opt_num(j, "center", 0.0, "factor"),
                                  opt_num(j, "phase", 0.0, "factor")};
    }
    if (type == "hermite_mix") {
        check_keys(j, "hermite_mix factor", {"type", "width", "weights"});
        if (!j.contains("weights")) fail("hermite_mix factor needs weights");
        return HermiteMixFactor{opt_num(j, "width", 1.0, "factor"),
                                num_array(j["weights"], "factor.weights")};
    }
    if (type == "const") {
        check_keys(j, "const factor", {"type"});
        return ConstFactor{};
    }
    if (type == "trig") {
        check_keys(j, "trig factor", {"type", "c0", "cos", "sin"});
        TrigFactor f;
        f.c0 = opt_num(j, "c0", 1.0, "factor");
        if (j.contains("cos")) f.cos_coeff = num_array(j["cos"], "factor.cos");
        if (j.contains("sin")) f.sin_coeff = num_array(j["sin"], "factor.sin");
        return f;
    }
    if (type == "delta") {
        check_keys(j, "delta factor", {"type", "at"});
        return DeltaFactor{need_size(j, "at", "factor")};
    }
    if (type == "weights") {
        check_keys(j, "weights factor", {"type", "re", "im"});
        if (!j.contains("re")) fail("weights factor needs re");
        auto re = num_array(j["re"], "factor.re");
        std::vector<double> im(re.size(), 0.0);
        if (j.contains("im")) {
            im = num_array(j["im"], "factor.im");
            if (im.size() != re.size()) fail("weights factor: re/im size mismatch");
        }
        WeightsFactor f;
        for (std::size_t i = 0; i < re.size(); ++i) f.weights.push_back(cplx(re[i], im[i]));
        return f;
    }
    fail("unknown factor type '" + type + "'");
}

std::vector<AxisFactor> parse_factors(const json& arr, std::size_t want, const char* ctx) {
    if (!arr.is_array()) fail(std::string(ctx) + ".factors must be an array");
    std::vector<AxisFactor> out;
    for (const auto& f : arr) out.push_back(parse_factor(f));
    if (out.size() != want)
        fail(std::string(ctx) + ": need exactly one factor per group axis (" +
             std::to_string(want) + ")");
    return out;
}

WindowFamily parse_family(const std::string& name) {
    if (name == "gaussian_width") return WindowFamily::GaussianWidth;
    if (name == "gaussian_width_center") return WindowFamily::GaussianWidthCenter;
    if (name == "gaussian_hermite_mix") return WindowFamily::GaussianHermiteMix;
    fail("unknown window family '" + name + "'");
}

} // namespace

std::string experiment_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::Plancherel: return "plancherel";
        case ExperimentKind::Isometry: return "isometry";
        case ExperimentKind::Uncertainty: return "uncertainty";
        case ExperimentKind::GaborUncertainty: return "gabor-uncertainty";
        case ExperimentKind::Hoelder: return "hoelder";
        case ExperimentKind::OptimizeWindow: return "optimize-window";
        case ExperimentKind::Sweep: return "sweep";
    }
    return "?";
}

ExperimentConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("top level must be an object");
    check_keys(j, "top level",
               {"schema", "experiment", "seed", "group", "dual", "motion2_path", "signal",
                "signal_file", "window", "base", "moments", "hoelder_b", "optimize", "sweep"});
    if (!j.contains("schema") || !j["schema"].is_number_integer() ||
        j["schema"].get<int>() != 1)
        fail("schema must be 1");

    ExperimentConfig cfg;
    cfg.experiment = parse_experiment(need_str(j, "experiment", "top level"));
    if (j.contains("seed")) cfg.seed = std::uint64_t(need_size(j, "seed", "top level"));
    if (!j.contains("group")) fail("'group' is required");
    cfg.group = parse_group(j["group"]);
    if (j.contains("dual")) cfg.dual = parse_dual(j["dual"]);
    if (j.contains("motion2_path")) {
        std::string p = need_str(j, "motion2_path", "top level");
        if (p == "direct")
            cfg.motion2_path = Motion2Path::Direct;
        else if (p == "bessel")
            cfg.motion2_path = Motion2Path::Bessel;
        else
            fail("motion2_path must be 'direct' or 'bessel'");
    }

    bool has_signal = j.contains("signal"), has_file = j.contains("signal_file");
    if (has_signal == has_file) fail("exactly one of 'signal' / 'signal_file' is required");
    if (has_signal) {
        const json& s = j["signal"];
        if (!s.is_object()) fail("'signal' must be an object");
        check_keys(s, "signal", {"factors"});
        if (!s.contains("factors")) fail("signal needs factors");
        cfg.signal_factors = parse_factors(s["factors"], cfg.group->axes().size(), "signal");
    } else {
        cfg.signal_file = need_str(j, "signal_file", "top level");
        if (cfg.signal_file.empty()) fail("signal_file must not be empty");
    }

    if (j.contains("window")) {
        const json& w = j["window"];
        if (!w.is_object()) fail("'window' must be an object");
        check_keys(w, "window", {"factors"});
        if (!w.contains("factors")) fail("window needs factors");
        cfg.window_factors = parse_factors(w["factors"], cfg.group->axes().size(), "window");
    }
    if (j.contains("base")) {
        const json& b = j["base"];
        if (!b.is_object()) fail("'base' must be an object");
        check_keys(b, "base", {"strides"});
        if (!b.contains("strides") || !b["strides"].is_array())
            fail("base.strides must be an array");
        for (const auto& s : b["strides"]) {
            if (!s.is_number_integer() || s.get<long long>() < 1)
                fail("base.strides must hold positive integers");
            cfg.base.strides.push_back(std::size_t(s.get<long long>()));
        }
        if (cfg.base.strides.size() != cfg.group->axes().size())
            fail("base.strides needs one entry per group axis");
    }
    if (j.contains("moments")) {
        const json& m = j["moments"];
        if (!m.is_object()) fail("'moments' must be an object");
        check_keys(m, "moments", {"a", "b"});
        cfg.moments.a = opt_num(m, "a", 1.0, "moments");
        cfg.moments.b = opt_num(m, "b", 1.0, "moments");
        if (!(cfg.moments.a >= 1.0) || !(cfg.moments.b >= 1.0))
            fail("moment orders a, b >= 1 required");
    }
    if (j.contains("hoelder_b")) {
        cfg.hoelder_b = num_array(j["hoelder_b"], "hoelder_b");
        if (cfg.hoelder_b.empty()) fail("hoelder_b must not be empty");
        for (double b : cfg.hoelder_b)
            if (!(b >= 1.0)) fail("hoelder_b entries must be >= 1");
    }

    if (cfg.experiment == ExperimentKind::OptimizeWindow) {
        if (!j.contains("optimize")) fail("optimize-window needs an 'optimize' section");
        const json& o = j["optimize"];
        if (!o.is_object()) fail("'optimize' must be an object");
        check_keys(o, "optimize", {"family", "lower", "upper", "budget"});
        OptimizeOptions opt;
        opt.family = parse_family(need_str(o, "family", "optimize"));
        if (!o.contains("lower") || !o.contains("upper"))
            fail("optimize needs lower and upper bounds");
        opt.lower = num_array(o["lower"], "optimize.lower");
        opt.upper = num_array(o["upper"], "optimize.upper");
        if (o.contains("budget")) opt.budget = need_size(o, "budget", "optimize");
        opt.seed = cfg.seed;
        opt.moments = cfg.moments;
        opt.base = cfg.base;
        cfg.optimize = opt;
    } else if (j.contains("optimize")) {
        fail("'optimize' is only valid for the optimize-window experiment");
    }

    if (cfg.experiment == ExperimentKind::Sweep) {
        if (!j.contains("sweep")) fail("sweep needs a 'sweep' section");
        const json& s = j["sweep"];
        if (!s.is_object()) fail("'sweep' must be an object");
        check_keys(s, "sweep", {"inner", "a", "b", "levels"});
        cfg.sweep_inner = parse_experiment(need_str(s, "inner", "sweep"));
        if (cfg.sweep_inner == ExperimentKind::Sweep) fail("sweep cannot nest sweeps");
        if (s.contains("a")) cfg.sweep_a = num_array(s["a"], "sweep.a");
        if (s.contains("b")) cfg.sweep_b = num_array(s["b"], "sweep.b");
        for (double v : cfg.sweep_a)
            if (!(v >= 1.0)) fail("sweep.a entries must be >= 1");
        for (double v : cfg.sweep_b)
            if (!(v >= 1.0)) fail("sweep.b entries must be >= 1");
        if (s.contains("levels")) cfg.sweep_levels = need_size(s, "levels", "sweep");
        if (cfg.sweep_a.empty() && cfg.sweep_b.empty() && cfg.sweep_levels == 0)
            fail("sweep needs at least one of a / b / levels");
    } else if (j.contains("sweep")) {
        fail("'sweep' is only valid for the sweep experiment");
    }

    cfg.canonical_json = j.dump();
    cfg.fingerprint = fingerprint_hex(cfg.canonical_json);
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

ExperimentConfig refine_config(const ExperimentConfig& base, std::size_t level) {
    if (level == 0) return base;
    if (!base.signal_file.empty())
        throw ConfigError("refine_config: cannot refine a sampled signal file");
    std::size_t f = std::size_t(1) << level;
    ExperimentConfig cfg = base;
    const GroupSpec& g = *base.group;
    auto real_axis = [&](std::size_t a) {
        const Grid1D& ax = g.axis(a).grid;
        return Grid1D::periodic(ax.lo(), ax.hi(), ax.size() * f);
    };
    switch (g.kind()) {
        case GroupKind::Euclidean: {
            std::vector<Grid1D> axes;
            for (std::size_t a = 0; a < g.axes().size(); ++a) axes.push_back(real_axis(a));
            cfg.group = make_euclidean(std::move(axes));
            break;
        }
        case GroupKind::Heisenberg1:
            cfg.group = make_heisenberg1(real_axis(0), real_axis(1), real_axis(2));
            break;
        case GroupKind::Motion2:
            cfg.group = make_motion2(g.axis(0).grid.size() * f, real_axis(1), real_axis(2));
            break;
        case GroupKind::ProductRFinite:
            cfg.group = make_product_rfinite(real_axis(0), g.finite_order());
            break;
    }
    cfg.dual.n_lambda *= f;
    cfg.dual.hermite_order = std::min(cfg.dual.hermite_order * f, kHermiteMaxOrder);
    cfg.dual.n_u *= f;
    cfg.dual.n_r *= f;
    cfg.dual.mode_cutoff *= int(f);
    for (auto& s : cfg.base.strides) s *= f; // fixed physical base lattice
    return cfg;
}

} // namespace ncwave
