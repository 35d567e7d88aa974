#include "nsplab/config.hpp"

#include "nsplab/io.hpp"
#include "nsplab/thermo.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nsplab::config {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: key '" + key +
                                    "': cannot parse value '" + value + "'");
    }
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    if (trim(value).empty()) return out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_double(key, trim(item)));
    return out;
}

void set_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "v_minus") cfg.v_minus = parse_double(key, value);
    else if (key == "u_minus") cfg.u_minus = parse_double(key, value);
    else if (key == "v_plus") cfg.v_plus = parse_double(key, value);
    else if (key == "u_plus") cfg.u_plus = parse_double(key, value);
    else if (key == "L_dom") cfg.L_dom = parse_double(key, value);
    else if (key == "dxi") cfg.dxi = parse_double(key, value);
    else if (key == "t_final") cfg.t_final = parse_double(key, value);
    else if (key == "report_interval") cfg.report_interval = parse_double(key, value);
    else if (key == "A_v") cfg.A_v = parse_double(key, value);
    else if (key == "A_u") cfg.A_u = parse_double(key, value);
    else if (key == "xi0_v") cfg.xi0_v = parse_double(key, value);
    else if (key == "xi0_u") cfg.xi0_u = parse_double(key, value);
    else if (key == "w_v") cfg.w_v = parse_double(key, value);
    else if (key == "w_u") cfg.w_u = parse_double(key, value);
    else if (key == "c0") cfg.c0 = parse_double(key, value);
    else if (key == "cfl_h") cfg.cfl_h = parse_double(key, value);
    else if (key == "cfl_p") cfg.cfl_p = parse_double(key, value);
    else if (key == "snapshots") cfg.snapshots = parse_list(key, value);
    else if (key == "seed") cfg.seed = static_cast<unsigned>(parse_double(key, value));
    else if (key == "output_dir") cfg.output_dir = value;
    else if (key == "verify_profile") cfg.verify_profile = value;
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

} // namespace

RunConfig parse_text(const std::string& text) {
    RunConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        ": expected key = value");
        set_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

RunConfig parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

void apply_overrides(RunConfig& cfg,
                     const std::map<std::string, std::string>& overrides) {
    for (const auto& [key, value] : overrides) set_key(cfg, key, value);
}

void validate(const RunConfig& cfg) {
    auto require = [](bool ok, const std::string& msg) {
        if (!ok) throw std::invalid_argument("config: " + msg);
    };
    require(cfg.v_minus > 0.0, "v_minus must be positive");
    require(cfg.v_plus > 0.0, "v_plus must be positive");
    require(cfg.L_dom > 0.0, "L_dom must be positive");
    require(cfg.dxi > 0.0 && cfg.dxi < cfg.L_dom, "dxi must be in (0, L_dom)");
    require(cfg.t_final >= 0.0, "t_final must be nonnegative");
    require(cfg.report_interval > 0.0, "report_interval must be positive");
    require(cfg.w_v > 0.0 && cfg.w_u > 0.0, "bump widths must be positive");
    require(cfg.c0 > 0.0, "c0 must be positive");
    require(cfg.cfl_h > 0.0 && cfg.cfl_p > 0.0, "CFL factors must be positive");
    const auto membership = thermo::gamma_membership(
        cfg.v_minus, cfg.u_minus, cfg.v_plus, cfg.u_plus, 1.0);
    require(membership.member,
            "end states outside the admissible wedge: " + membership.reason);
}

std::string echo(const RunConfig& cfg) {
    std::ostringstream out;
    auto put = [&](const char* key, double value) {
        out << key << " = " << io::format_g17(value) << "\n";
    };
    put("v_minus", cfg.v_minus); put("u_minus", cfg.u_minus);
    put("v_plus", cfg.v_plus); put("u_plus", cfg.u_plus);
    put("L_dom", cfg.L_dom); put("dxi", cfg.dxi);
    put("t_final", cfg.t_final); put("report_interval", cfg.report_interval);
    put("A_v", cfg.A_v); put("A_u", cfg.A_u);
    put("xi0_v", cfg.xi0_v); put("xi0_u", cfg.xi0_u);
    put("w_v", cfg.w_v); put("w_u", cfg.w_u);
    put("c0", cfg.c0);
    put("cfl_h", cfg.cfl_h); put("cfl_p", cfg.cfl_p);
    out << "snapshots = ";
    for (std::size_t i = 0; i < cfg.snapshots.size(); ++i)
        out << (i ? "," : "") << io::format_g17(cfg.snapshots[i]);
    out << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "output_dir = " << cfg.output_dir << "\n";
    out << "verify_profile = " << cfg.verify_profile << "\n";
    return out.str();
}

} // namespace nsplab::config
