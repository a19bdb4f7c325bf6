// config.hpp — line-oriented key = value run configuration

#pragma once

#include <string>

#include "omech/dynamics.hpp"
#include "omech/site.hpp"

namespace omech::cli {

/// Run configuration: site parameters (frequencies in ordinary Hz, converted
/// to rad/s internally), bath temperature, detuning and the spectral config.
/// Unknown keys are rejected.
struct RunConfig {
    double mass_kg = 1.45e-10;
    double mechanical_frequency_hz = 947e3;
    double cavity_length_m = 25e-3;
    double input_power_w = 20e-3;
    double wavelength_m = 1064e-9;
    double optical_decay_hz = 215e3;
    double quality_factor = 7000.0;
    double bath_temperature_k = 1e-6;
    double detuning_hz = 0.0;  // 0 means "equal to mechanical_frequency_hz"
    double omega_window = 8.0;
    double rel_tolerance = 1e-8;
    int max_panels = 20000;

    om::SiteParams site() const;
    om::SpectralConfig spectral() const;
};

/// Parses a configuration document. Omitted keys keep their defaults; errors
/// name the offending key and line. `source` labels the document in messages.
RunConfig parse_config(const std::string& text, const std::string& source = "config");

/// Reads and parses a configuration file (IoError if unreadable).
RunConfig load_config_file(const std::string& path);

/// Renders a config as a parseable document; parse_config(render_config(c))
/// reproduces c exactly.
std::string render_config(const RunConfig& config);

} // namespace omech::cli
