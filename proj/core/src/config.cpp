#include "slideocam/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "slideocam/errors.hpp"
#include "slideocam/optimizer.hpp"

namespace slideocam {

namespace {

using nlohmann::json;

double number_field(const json& doc, const std::string& key, const std::string& origin) {
    const json& value = doc.at(key);
    if (!value.is_number())
        throw ConfigError(origin + ": key '" + key + "' must be a number");
    return value.get<double>();
}

int integer_field(const json& doc, const std::string& key, const std::string& origin) {
    const json& value = doc.at(key);
    if (!value.is_number_integer())
        throw ConfigError(origin + ": key '" + key + "' must be an integer");
    return value.get<int>();
}

} // namespace

DesignConfig parse_config(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ConfigError(origin + ": not valid JSON: " + err.what());
    }
    if (!doc.is_object())
        throw ConfigError(origin + ": top-level value must be an object");

    static const std::set<std::string> known{
        "p_mm", "eta", "a4_mm", "a5_mm", "b_mm", "L_mm", "tau_Nm", "E_MPa", "cams", "samples",
    };
    for (const auto& item : doc.items())
        if (!known.contains(item.key()))
            throw ConfigError(origin + ": unknown key '" + item.key() + "'");
    if (!doc.contains("eta"))
        throw ConfigError(origin + ": missing required key 'eta'");

    DesignConfig config;
    DesignParams& prm = config.params;
    if (doc.contains("p_mm")) prm.p = number_field(doc, "p_mm", origin);
    prm.eta = number_field(doc, "eta", origin);
    if (doc.contains("b_mm")) prm.b = number_field(doc, "b_mm", origin);
    if (doc.contains("L_mm")) prm.L = number_field(doc, "L_mm", origin);
    if (doc.contains("tau_Nm")) prm.tau = number_field(doc, "tau_Nm", origin) * 1000.0;
    if (doc.contains("E_MPa")) prm.E = number_field(doc, "E_MPa", origin);
    if (doc.contains("cams")) prm.cams = integer_field(doc, "cams", origin);
    if (doc.contains("samples")) {
        config.samples = integer_field(doc, "samples", origin);
        if (config.samples < 2)
            throw ConfigError(origin + ": 'samples' must be at least 2");
    }
    if (doc.contains("a5_mm")) prm.a5 = number_field(doc, "a5_mm", origin);

    // Validate everything that does not depend on the roller before
    // deriving the default roller size (which needs a valid eta).
    prm.a4 = 1.0;  // placeholder, replaced below
    validate_params(prm);

    prm.a4 = doc.contains("a4_mm") ? number_field(doc, "a4_mm", origin)
                                   : sweep_roller_radius(prm, prm.eta);
    validate_params(prm);

    // Parameter-local interference checks; the eta-dependent constraints
    // are evaluated by the operations that need them.
    if (!(prm.a4 / prm.p - 0.5 < 0.0))
        throw InfeasibleDesignError(origin + ": roller radius " + std::to_string(prm.a4)
                                    + " mm violates the roller-interference constraint (g2: a4/p < 1/2)");
    if (prm.a5 && !(*prm.a5 / prm.p - 0.25 < 0.0))
        throw InfeasibleDesignError(origin + ": pin radius " + std::to_string(*prm.a5)
                                    + " mm violates the pin-interference constraint (g5: a5/p < 1/4)");
    return config;
}

DesignConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw IoError("error while reading config file '" + path + "'");
    return parse_config(buffer.str(), path);
}

} // namespace slideocam
