#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slideocam/slideocam.hpp"

namespace {

using namespace slideocam;

struct CommonOptions {
    std::string config_path;
    std::string out_path;           // empty = stdout
    std::optional<int> cams;
    std::optional<int> samples;
};

void add_common(CLI::App& cmd, CommonOptions& opt, bool with_samples) {
    cmd.add_option("--config", opt.config_path, "design configuration file (JSON)")
        ->required();
    cmd.add_option("--out", opt.out_path, "output file (default: stdout)");
    cmd.add_option("--cams", opt.cams, "override the number of conjugate cams (2 or 3)");
    if (with_samples)
        cmd.add_option("--samples", opt.samples, "number of profile samples");
}

DesignConfig load_with_overrides(const CommonOptions& opt) {
    DesignConfig config = load_config(opt.config_path);
    if (opt.cams) {
        config.params.cams = *opt.cams;
        validate_params(config.params);
    }
    if (opt.samples) {
        if (*opt.samples < 2)
            throw ConfigError("--samples must be at least 2");
        config.samples = *opt.samples;
    }
    return config;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(text, out_path);
}

CurveKind parse_curve(const std::string& name) {
    return name == "pitch" ? CurveKind::pitch : CurveKind::cam;
}

/// Machining the cam curve requires a feasible design; refuse with the
/// violated constraints spelled out.  The pitch curve has no such gate.
void require_feasible(const DesignParams& prm) {
    const ConstraintReport report = check_constraints(prm);
    if (report.feasible)
        return;
    std::string msg = "design is infeasible:";
    const bool violated[5] = {
        report.g[0] > 0.0, report.g[1] >= 0.0, report.g[2] >= 0.0,
        report.g[3] > 0.0, report.g[4] >= 0.0,
    };
    for (int i = 0; i < 5; ++i)
        if (violated[i]) {
            msg += " g" + std::to_string(i + 1) + " (";
            msg += constraint_names()[static_cast<std::size_t>(i)];
            msg += ")";
        }
    throw InfeasibleDesignError(msg);
}

int run(CLI::App& app,
        CLI::App* profile_cmd, CLI::App* check_cmd, CLI::App* analyze_cmd,
        CLI::App* sweep_cmd, CLI::App* optimize_cmd, CLI::App* plot_cmd,
        const CommonOptions& opt,
        const std::string& curve_name, const std::string& series_name,
        const std::vector<double>& eta_list,
        double eta_min, double eta_max) {
    if (app.got_subcommand(profile_cmd)) {
        const DesignConfig config = load_with_overrides(opt);
        const CurveKind kind = parse_curve(curve_name);
        if (kind == CurveKind::cam)
            require_feasible(config.params);
        const CamProfile profile = sample_profile(config.params, config.samples, kind);
        emit(profile_csv_text(profile), opt.out_path);
        return 0;
    }
    if (app.got_subcommand(check_cmd)) {
        const DesignConfig config = load_with_overrides(opt);
        const ConstraintReport report = check_constraints(config.params);
        emit(report_json_text(config.params, report), opt.out_path);
        return report.feasible ? 0 : 3;
    }
    if (app.got_subcommand(analyze_cmd)) {
        const DesignConfig config = load_with_overrides(opt);
        require_feasible(config.params);
        const KinetostaticReport report = analyze(config.params);
        emit(report_json_text(config.params, report), opt.out_path);
        return 0;
    }
    if (app.got_subcommand(sweep_cmd)) {
        const DesignConfig config = load_with_overrides(opt);
        const SweepTable table = sweep(config.params, eta_list);
        emit(report_json_text(config.params, table), opt.out_path);
        return 0;
    }
    if (app.got_subcommand(optimize_cmd)) {
        const DesignConfig config = load_with_overrides(opt);
        const Optimum optimum = minimize_z(config.params, eta_min, eta_max);
        emit(report_json_text(config.params, optimum), opt.out_path);
        return 0;
    }
    if (app.got_subcommand(plot_cmd)) {
        const DesignConfig config = load_with_overrides(opt);
        std::string text;
        if (series_name == "pressure") {
            text = pressure_svg_text(config.params, config.samples);
        } else {
            const CurveKind kind = parse_curve(curve_name);
            if (kind == CurveKind::cam)
                require_feasible(config.params);
            text = profile_svg_text(sample_profile(config.params, config.samples, kind));
        }
        emit(text, opt.out_path);
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cam-roller prismatic transmission: profile synthesis, "
                 "feasibility checks, kinetostatic evaluation and design optimisation"};
    app.set_version_flag("--version", std::string(project_name) + " " + project_version);
    app.require_subcommand(1);

    CommonOptions opt;
    std::string curve_name = "cam";
    std::string series_name = "profile";
    std::vector<double> eta_list;
    double eta_min = 1.0 / std::numbers::pi;
    double eta_max = 0.8;

    CLI::App* profile_cmd = app.add_subcommand(
        "profile", "Sample the cam or pitch curve and write it as CSV");
    add_common(*profile_cmd, opt, true);
    profile_cmd->add_option("--curve", curve_name, "which curve to sample: cam or pitch")
        ->check(CLI::IsMember({"cam", "pitch"}));

    CLI::App* check_cmd = app.add_subcommand(
        "check", "Evaluate the design constraints and report feasibility");
    add_common(*check_cmd, opt, false);

    CLI::App* analyze_cmd = app.add_subcommand(
        "analyze", "Run the kinetostatic evaluation of a feasible design");
    add_common(*analyze_cmd, opt, false);

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Evaluate one design per eccentricity ratio");
    add_common(*sweep_cmd, opt, false);
    sweep_cmd->add_option("--eta-list", eta_list, "comma-separated eccentricity ratios")
        ->required()
        ->delimiter(',');

    CLI::App* optimize_cmd = app.add_subcommand(
        "optimize", "Minimise the design objective over an eccentricity interval");
    add_common(*optimize_cmd, opt, false);
    optimize_cmd->add_option("--eta-min", eta_min, "lower eccentricity bound");
    optimize_cmd->add_option("--eta-max", eta_max, "upper eccentricity bound");

    CLI::App* plot_cmd = app.add_subcommand(
        "plot", "Render the profile or the pressure-angle history as SVG");
    add_common(*plot_cmd, opt, true);
    plot_cmd->add_option("--series", series_name, "what to draw: profile or pressure")
        ->check(CLI::IsMember({"profile", "pressure"}));
    plot_cmd->add_option("--curve", curve_name, "which curve to draw: cam or pitch")
        ->check(CLI::IsMember({"cam", "pitch"}));

    CLI11_PARSE(app, argc, argv);

    try {
        return run(app, profile_cmd, check_cmd, analyze_cmd, sweep_cmd, optimize_cmd,
                   plot_cmd, opt, curve_name, series_name, eta_list, eta_min, eta_max);
    } catch (const ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return 2;
    } catch (const InfeasibleDesignError& err) {
        std::cerr << "infeasible design: " << err.what() << "\n";
        return 3;
    } catch (const IoError& err) {
        std::cerr << "io error: " << err.what() << "\n";
        return 4;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
