#include "slideocam/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "slideocam/errors.hpp"
#include "slideocam/version.hpp"

namespace slideocam {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;
constexpr double rad_to_deg = 180.0 / pi;

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

ojson params_json(const DesignParams& prm) {
    ojson j;
    j["p_mm"] = prm.p;
    j["eta"] = prm.eta;
    j["a4_mm"] = prm.a4;
    j["a5_mm"] = prm.a5 ? ojson(*prm.a5) : ojson(nullptr);
    j["b_mm"] = prm.b;
    j["L_mm"] = prm.L;
    j["tau_Nm"] = prm.tau / 1000.0;
    j["E_MPa"] = prm.E;
    j["cams"] = prm.cams;
    return j;
}

ojson envelope(const char* kind, const DesignParams& prm) {
    ojson j;
    j["tool"] = ojson{{"name", project_name}, {"version", project_version}};
    j["kind"] = kind;
    j["params"] = params_json(prm);
    return j;
}

std::string constraint_label(int index_1based) {
    return "g" + std::to_string(index_1based);
}

} // namespace

std::string profile_csv_text(const CamProfile& profile) {
    std::string out = "psi_rad,u_mm,v_mm\n";
    for (const ProfileSample& s : profile.samples) {
        out += format_number(s.psi);
        out += ',';
        out += format_number(s.u);
        out += ',';
        out += format_number(s.v);
        out += '\n';
    }
    return out;
}

std::string report_json_text(const DesignParams& prm, const KinetostaticReport& report) {
    ojson j = envelope("kinetostatics", prm);
    ojson& r = j["report"];
    r["delta_ext_rad"] = report.delta_ext;
    r["psi_interval_rad"] = ojson{report.psi_interval.lo, report.psi_interval.hi};
    r["mu_min_abs_deg"] = report.mu_min_abs_deg;
    r["mu_max_abs_deg"] = report.mu_max_abs_deg;
    r["service_factor_pct"] = report.service_factor_pct;
    r["F0_N"] = report.F0_N;
    r["fx_max_N"] = report.fx_max_N;
    r["v_L_max_um"] = report.v_L_max_um;
    r["z"] = report.z;
    return j.dump(2) + "\n";
}

std::string report_json_text(const DesignParams& prm, const ConstraintReport& report) {
    ojson j = envelope("constraints", prm);
    ojson& r = j["report"];
    ojson g;
    for (int i = 0; i < 5; ++i)
        g[constraint_label(i + 1)] = report.g[static_cast<std::size_t>(i)];
    r["g"] = g;
    r["a4_upper_bound_mm"] = report.a4_upper_bound;
    r["convex"] = report.convex;
    r["undercut_free"] = report.undercut_free;
    r["feasible"] = report.feasible;
    ojson active = ojson::array();
    for (const int i : report.active)
        active.push_back(constraint_label(i));
    r["active"] = active;
    return j.dump(2) + "\n";
}

std::string report_json_text(const DesignParams& prm, const SweepTable& table) {
    const bool with_z = table.cams != 3;
    ojson j = envelope("sweep", prm);
    ojson& r = j["report"];
    r["cams"] = table.cams;
    ojson columns = ojson::array({"eta", "a4_mm", "a5_mm"});
    if (with_z)
        columns.push_back("z");
    for (const char* name : {"v_L_max_um", "mu_min_abs_deg", "mu_max_abs_deg",
                             "service_factor_pct", "feasible"})
        columns.push_back(name);
    r["columns"] = columns;
    ojson rows = ojson::array();
    for (const SweepRow& row : table.rows) {
        ojson cells = ojson::array({row.eta, row.a4, row.a5});
        if (with_z)
            cells.push_back(row.z);
        cells.push_back(row.v_L_max_um);
        cells.push_back(row.mu_min_abs_deg);
        cells.push_back(row.mu_max_abs_deg);
        cells.push_back(row.service_factor_pct);
        cells.push_back(row.feasible);
        rows.push_back(cells);
    }
    r["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string report_json_text(const DesignParams& prm, const Optimum& optimum) {
    ojson j = envelope("optimum", prm);
    ojson& r = j["report"];
    r["eta"] = optimum.eta;
    r["a4_mm"] = optimum.a4;
    r["a5_mm"] = optimum.a5;
    r["z"] = optimum.z;
    ojson active = ojson::array();
    for (const int i : optimum.active)
        active.push_back(constraint_label(i));
    r["active"] = active;
    r["active_tol"] = Optimum::active_tol;
    return j.dump(2) + "\n";
}

std::string profile_svg_text(const CamProfile& profile) {
    if (profile.samples.empty())
        throw std::invalid_argument("cannot render an empty profile");

    double min_u = profile.samples.front().u, max_u = min_u;
    double min_v = profile.samples.front().v, max_v = min_v;
    for (const ProfileSample& s : profile.samples) {
        min_u = std::min(min_u, s.u);
        max_u = std::max(max_u, s.u);
        min_v = std::min(min_v, s.v);
        max_v = std::max(max_v, s.v);
    }
    const double span = std::max(max_u - min_u, max_v - min_v);
    const double margin = 0.05 * (span > 0.0 ? span : 1.0);

    // SVG y grows downward; profile points are emitted with v negated.
    const double x0 = min_u - margin;
    const double y0 = -max_v - margin;
    const double width = (max_u - min_u) + 2.0 * margin;
    const double height = (max_v - min_v) + 2.0 * margin;

    std::string svg;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.6g %.6g %.6g %.6g\" "
                  "width=\"640\" height=\"%.6g\">\n",
                  x0, y0, width, height, 640.0 * height / width);
    svg += buf;
    svg += "  <title>";
    svg += (profile.kind == CurveKind::cam) ? "cam profile" : "pitch curve";
    svg += "</title>\n";

    const double hair = span / 400.0;
    std::snprintf(buf, sizeof buf,
                  "  <g stroke=\"#999\" stroke-width=\"%.6g\">\n"
                  "    <line x1=\"%.6g\" y1=\"0\" x2=\"%.6g\" y2=\"0\"/>\n"
                  "    <line x1=\"0\" y1=\"%.6g\" x2=\"0\" y2=\"%.6g\"/>\n"
                  "  </g>\n",
                  hair, x0, x0 + width, y0, y0 + height);
    svg += buf;

    svg += "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"";
    std::snprintf(buf, sizeof buf, "%.6g", 2.0 * hair);
    svg += buf;
    svg += "\" points=\"";
    for (const ProfileSample& s : profile.samples) {
        std::snprintf(buf, sizeof buf, "%.6g,%.6g ", s.u, -s.v);
        svg += buf;
    }
    svg += "\"/>\n</svg>\n";
    return svg;
}

std::string pressure_svg_text(const DesignParams& prm, int samples_per_branch) {
    if (samples_per_branch < 2)
        throw std::invalid_argument("pressure plot needs at least 2 samples per branch");
    validate_params(prm);

    const Interval w = driving_interval(prm);
    // The driving windows of the cam set tile one shaft revolution
    // contiguously: branch k covers [w.lo, w.hi] shifted by k*2*pi/cams.
    const double theta0 = w.lo;
    const double theta1 = w.lo + two_pi;

    constexpr double plot_w = 640.0, plot_h = 360.0, mx = 48.0, my = 24.0;
    const auto px = [&](double theta) {
        return mx + (theta - theta0) / (theta1 - theta0) * plot_w;
    };
    const auto py = [&](double mu_deg) {
        return my + (90.0 - mu_deg) / 180.0 * plot_h;
    };

    std::string svg;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.6g\" height=\"%.6g\" "
                  "viewBox=\"0 0 %.6g %.6g\">\n",
                  plot_w + 2 * mx, plot_h + 2 * my, plot_w + 2 * mx, plot_h + 2 * my);
    svg += buf;
    svg += "  <title>pressure angle over one shaft revolution</title>\n";

    std::snprintf(buf, sizeof buf,
                  "  <rect x=\"%.6g\" y=\"%.6g\" width=\"%.6g\" height=\"%.6g\" "
                  "fill=\"none\" stroke=\"#444\"/>\n",
                  mx, my, plot_w, plot_h);
    svg += buf;

    // Service band and zero line.
    for (const double level : {30.0, -30.0}) {
        std::snprintf(buf, sizeof buf,
                      "  <line x1=\"%.6g\" y1=\"%.6g\" x2=\"%.6g\" y2=\"%.6g\" "
                      "stroke=\"#b44\" stroke-dasharray=\"5 4\"/>\n",
                      px(theta0), py(level), px(theta1), py(level));
        svg += buf;
    }
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.6g\" y1=\"%.6g\" x2=\"%.6g\" y2=\"%.6g\" stroke=\"#bbb\"/>\n",
                  px(theta0), py(0.0), px(theta1), py(0.0));
    svg += buf;

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c"};
    for (int k = 0; k < prm.cams; ++k) {
        const double phase = two_pi * k / prm.cams;
        svg += "  <polyline fill=\"none\" stroke=\"";
        svg += palette[k % 3];
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (int i = 0; i < samples_per_branch; ++i) {
            const double frac = static_cast<double>(i) / (samples_per_branch - 1);
            const double psi = std::lerp(w.lo, w.hi, frac);
            const double mu_deg = pressure_angle(psi, prm.eta) * rad_to_deg;
            std::snprintf(buf, sizeof buf, "%.6g,%.6g ", px(psi + phase), py(mu_deg));
            svg += buf;
        }
        svg += "\"/>\n";
    }

    std::snprintf(buf, sizeof buf,
                  "  <text x=\"%.6g\" y=\"%.6g\" font-size=\"12\">psi [rad]</text>\n"
                  "  <text x=\"%.6g\" y=\"%.6g\" font-size=\"12\">mu [deg]</text>\n"
                  "  <text x=\"%.6g\" y=\"%.6g\" font-size=\"10\" fill=\"#b44\">+30</text>\n"
                  "  <text x=\"%.6g\" y=\"%.6g\" font-size=\"10\" fill=\"#b44\">-30</text>\n",
                  mx + plot_w / 2 - 24, my + plot_h + 18.0,
                  4.0, my + 12.0,
                  mx + 4.0, py(30.0) - 3.0,
                  mx + 4.0, py(-30.0) - 3.0);
    svg += buf;
    svg += "</svg>\n";
    return svg;
}

void write_text_file(const std::string& content, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out)
        throw IoError("error while writing '" + path + "'");
}

} // namespace slideocam
