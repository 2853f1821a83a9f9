#ifndef LCJDT_CONFIG_HPP
#define LCJDT_CONFIG_HPP

// Flat key=value run configuration shared by the CLI subcommands. Values from
// a config file are applied first, command-line overrides second; assembly
// into the typed parameter objects happens once, with diagnostics naming the
// offending key.

#include <map>
#include <string>
#include <vector>

#include "lcjdt/spectral.hpp"
#include "lcjdt/types.hpp"

namespace lcjdt {

struct RunConfig {
    double alpha = 0.5;
    double beta = -0.5;
    double mat_a = 1.0, mat_b = 1.0, mat_c = 1.0, mat_d = 2.0;
    SpatialGridSpec spatial;
    SpectralGridSpec spectral;
    std::string probe = "gauss";
    std::string probe2 = "shifted-gauss";
    std::vector<double> lambdas;        // empty = derived default
    std::vector<double> xs;             // kernel command abscissae
    std::vector<double> times = {0.0, 0.5, 1.0};
    int tau_per_unit = 200;
    double gamma = 1.0;
    double m = 1.0;
    double n = 1.0;
    double scale = 1.0;
    std::string source = "none";        // none | gauss-cos
    std::string out_dir = ".";

    JacobiParams make_params() const;       // throws with the offending key named
    CanonicalMatrix make_matrix() const;
};

// key=value lines, '#' or ';' comments, blank lines ignored.
std::map<std::string, std::string> read_config_file(const std::string& path);

// Apply one key=value setting. Unknown keys and malformed values throw
// std::invalid_argument naming the key.
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

std::vector<double> parse_number_list(const std::string& text);

}  // namespace lcjdt

#endif
