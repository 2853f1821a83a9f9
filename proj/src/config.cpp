#include "lcjdt/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lcjdt {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': cannot parse number '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    const int i = static_cast<int>(v);
    if (i != v) throw std::invalid_argument("config key '" + key + "': expected an integer");
    return i;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw std::invalid_argument("config key '" + key + "': expected a boolean");
}

}  // namespace

JacobiParams RunConfig::make_params() const {
    try {
        return JacobiParams(alpha, beta);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("config keys 'alpha'/'beta': ") + e.what());
    }
}

CanonicalMatrix RunConfig::make_matrix() const {
    try {
        return CanonicalMatrix(mat_a, mat_b, mat_c, mat_d);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("config keys 'a'/'b'/'c'/'d': ") + e.what());
    }
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::map<std::string, std::string> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config file " + path + ", line " +
                                        std::to_string(lineno) + ": expected key=value");
        entries[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return entries;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parse_double("list", item));
    }
    return out;
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "alpha") cfg.alpha = parse_double(key, value);
    else if (key == "beta") cfg.beta = parse_double(key, value);
    else if (key == "a") cfg.mat_a = parse_double(key, value);
    else if (key == "b") cfg.mat_b = parse_double(key, value);
    else if (key == "c") cfg.mat_c = parse_double(key, value);
    else if (key == "d") cfg.mat_d = parse_double(key, value);
    else if (key == "half_width") cfg.spatial.half_width = parse_double(key, value);
    else if (key == "points_per_unit") cfg.spatial.points_per_unit = parse_int(key, value);
    else if (key == "panel_order") cfg.spatial.panel_order = parse_int(key, value);
    else if (key == "mu_max") cfg.spectral.mu_max = parse_double(key, value);
    else if (key == "mu_points") cfg.spectral.mu_points = parse_int(key, value);
    else if (key == "both_signs") cfg.spectral.both_signs = parse_bool(key, value);
    else if (key == "probe") cfg.probe = value;
    else if (key == "probe2") cfg.probe2 = value;
    else if (key == "lambdas") cfg.lambdas = parse_number_list(value);
    else if (key == "xs") cfg.xs = parse_number_list(value);
    else if (key == "times") cfg.times = parse_number_list(value);
    else if (key == "tau_per_unit") cfg.tau_per_unit = parse_int(key, value);
    else if (key == "gamma") cfg.gamma = parse_double(key, value);
    else if (key == "m") cfg.m = parse_double(key, value);
    else if (key == "n") cfg.n = parse_double(key, value);
    else if (key == "scale") cfg.scale = parse_double(key, value);
    else if (key == "source") cfg.source = value;
    else if (key == "out_dir") cfg.out_dir = value;
    else throw std::invalid_argument("unknown config key '" + key + "'");
}

}  // namespace lcjdt
