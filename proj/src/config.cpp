// config.cpp — parsing, validation and rendering of run configurations

#include "omech/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace omech::cli {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

struct KeySpec {
    std::function<void(RunConfig&, double)> set;
    std::function<double(const RunConfig&)> get;
    bool require_positive;
    const char* unit;
};

const std::map<std::string, KeySpec>& key_table() {
    static const std::map<std::string, KeySpec> table = {
        {"mass_kg",
         {[](RunConfig& c, double v) { c.mass_kg = v; },
          [](const RunConfig& c) { return c.mass_kg; }, true, "kg"}},
        {"mechanical_frequency_hz",
         {[](RunConfig& c, double v) { c.mechanical_frequency_hz = v; },
          [](const RunConfig& c) { return c.mechanical_frequency_hz; }, true, "Hz"}},
        {"cavity_length_m",
         {[](RunConfig& c, double v) { c.cavity_length_m = v; },
          [](const RunConfig& c) { return c.cavity_length_m; }, true, "m"}},
        {"input_power_w",
         {[](RunConfig& c, double v) { c.input_power_w = v; },
          [](const RunConfig& c) { return c.input_power_w; }, false, "W"}},
        {"wavelength_m",
         {[](RunConfig& c, double v) { c.wavelength_m = v; },
          [](const RunConfig& c) { return c.wavelength_m; }, true, "m"}},
        {"optical_decay_hz",
         {[](RunConfig& c, double v) { c.optical_decay_hz = v; },
          [](const RunConfig& c) { return c.optical_decay_hz; }, true, "Hz"}},
        {"quality_factor",
         {[](RunConfig& c, double v) { c.quality_factor = v; },
          [](const RunConfig& c) { return c.quality_factor; }, true, ""}},
        {"bath_temperature_k",
         {[](RunConfig& c, double v) { c.bath_temperature_k = v; },
          [](const RunConfig& c) { return c.bath_temperature_k; }, true, "K"}},
        {"detuning_hz",
         {[](RunConfig& c, double v) { c.detuning_hz = v; },
          [](const RunConfig& c) { return c.detuning_hz; }, false, "Hz"}},
        {"omega_window",
         {[](RunConfig& c, double v) { c.omega_window = v; },
          [](const RunConfig& c) { return c.omega_window; }, true, "omega_m"}},
        {"rel_tolerance",
         {[](RunConfig& c, double v) { c.rel_tolerance = v; },
          [](const RunConfig& c) { return c.rel_tolerance; }, true, ""}},
        {"max_panels",
         {[](RunConfig& c, double v) { c.max_panels = static_cast<int>(v); },
          [](const RunConfig& c) { return static_cast<double>(c.max_panels); }, true, ""}},
    };
    return table;
}

} // namespace

om::SiteParams RunConfig::site() const {
    om::SiteParams s;
    s.mass = mass_kg;
    s.omega_m = kTwoPi * mechanical_frequency_hz;
    s.cavity_length = cavity_length_m;
    s.pump_power = input_power_w;
    s.wavelength = wavelength_m;
    s.kappa = kTwoPi * optical_decay_hz;
    s.quality_factor = quality_factor;
    s.bath_temperature = bath_temperature_k;
    s.detuning = kTwoPi * (detuning_hz > 0.0 ? detuning_hz : mechanical_frequency_hz);
    return s;
}

om::SpectralConfig RunConfig::spectral() const {
    om::SpectralConfig cfg;
    cfg.omega_window = omega_window;
    cfg.rel_tolerance = rel_tolerance;
    cfg.max_panels = max_panels;
    return cfg;
}

RunConfig parse_config(const std::string& text, const std::string& source) {
    RunConfig config;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << source << ":" << line_no << ": expected 'key = value'";
            throw ConfigError(os.str());
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        const auto it = key_table().find(key);
        if (it == key_table().end()) {
            std::ostringstream os;
            os << source << ":" << line_no << ": unknown key '" << key << "'";
            throw ConfigError(os.str());
        }
        char* end = nullptr;
        const double parsed = std::strtod(value.c_str(), &end);
        if (value.empty() || end == value.c_str() || *end != '\0' || !std::isfinite(parsed)) {
            std::ostringstream os;
            os << source << ":" << line_no << ": non-numeric value for key '" << key << "'";
            throw ConfigError(os.str());
        }
        if ((it->second.require_positive && !(parsed > 0.0)) || parsed < 0.0) {
            std::ostringstream os;
            os << source << ":" << line_no << ": out-of-range value for key '" << key
               << "' (must be " << (it->second.require_positive ? "positive" : "nonnegative")
               << ")";
            throw ConfigError(os.str());
        }
        it->second.set(config, parsed);
    }
    try {
        config.site().validate();
        config.spectral().validate(config.site());
    } catch (const PhysicsError& e) {
        throw ConfigError(source + ": " + e.what());
    }
    return config;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path);
}

std::string render_config(const RunConfig& config) {
    std::ostringstream out;
    out << "# run configuration (SI units per key suffix)\n";
    char buf[64];
    for (const auto& [key, spec] : key_table()) {
        std::snprintf(buf, sizeof(buf), "%.17g", spec.get(config));
        out << key << " = " << buf << "\n";
    }
    return out.str();
}

} // namespace omech::cli
