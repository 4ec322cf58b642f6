#include "dualris/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "dualris/errors.hpp"

namespace dualris {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\f\v");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\f\v");
    return s.substr(b, e - b + 1);
}

int parse_int(std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ConfigError("malformed integer '" + std::string(s) + "'");
    return v;
}

using Setter = void (*)(NetworkConfig&, std::string_view);

#define DUALRIS_REAL(name, field) \
    {name, [](NetworkConfig& c, std::string_view v) { c.field = parse_double(v); }}
#define DUALRIS_INT(name, field) \
    {name, [](NetworkConfig& c, std::string_view v) { c.field = parse_int(v); }}

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table = {
        DUALRIS_REAL("P_dBm", P_dBm),
        {"M", [](NetworkConfig& c, std::string_view v) { c.M1 = c.M2 = parse_int(v); }},
        DUALRIS_INT("M1", M1),
        DUALRIS_INT("M2", M2),
        DUALRIS_REAL("m1", fading.m1),
        DUALRIS_REAL("m2", fading.m2),
        DUALRIS_REAL("noise_r_dBm", noise_r_dBm),
        DUALRIS_REAL("noise_e_dBm", noise_e_dBm),
        DUALRIS_REAL("p_r1", p_r1),
        DUALRIS_REAL("p_r2", p_r2),
        DUALRIS_REAL("d_vt_r1", geometry.d_vt_r1),
        DUALRIS_REAL("d_r2_vr1", geometry.d_r2_vr1),
        DUALRIS_REAL("d_r2_vr2", geometry.d_r2_vr2),
        DUALRIS_REAL("d_r2_ve", geometry.d_r2_ve),
        DUALRIS_REAL("d_r1_r2", geometry.d_r1_r2),
        DUALRIS_REAL("kappa", geometry.kappa),
        DUALRIS_REAL("R_s", R_s),
        DUALRIS_REAL("alpha", alpha),
        DUALRIS_REAL("P_R1_dBm", P_R1_dBm),
        DUALRIS_REAL("P_R2_dBm", P_R2_dBm),
        DUALRIS_REAL("P_t1_dBm", P_t1_dBm),
        DUALRIS_REAL("P_t2_dBm", P_t2_dBm),
        DUALRIS_INT("quadrature_order", quadrature_order),
        {"los_composition",
         [](NetworkConfig& c, std::string_view v) { c.los_composition = parse_los_composition(v); }},
        {"link_distances", [](NetworkConfig& c, std::string_view v) { c.link_distances = parse_link_distances(v); }},
        {"convention", [](NetworkConfig& c, std::string_view v) { c.convention = parse_convention(v); }},
    };
    return table;
}

#undef DUALRIS_REAL
#undef DUALRIS_INT

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ConfigError("malformed number '" + std::string(s) + "'");
    return v;
}

LosComposition parse_los_composition(std::string_view s) {
    if (s == "product") return LosComposition::product;
    if (s == "r2_side_only") return LosComposition::r2_side_only;
    throw ConfigError("los_composition must be product or r2_side_only", "los_composition");
}

LinkDistances parse_link_distances(std::string_view s) {
    if (s == "shared") return LinkDistances::shared;
    if (s == "per_receiver") return LinkDistances::per_receiver;
    throw ConfigError("link_distances must be shared or per_receiver", "link_distances");
}

DenominatorConvention parse_convention(std::string_view s) {
    if (s == "paper") return DenominatorConvention::paper;
    if (s == "gaussian") return DenominatorConvention::gaussian;
    throw ConfigError("convention must be paper or gaussian", "convention");
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& [name, fn] : setters()) k.push_back(name);
        return k;
    }();
    return keys;
}

NetworkConfig parse_config(std::string_view text, const ParseOptions& opt) {
    NetworkConfig cfg;
    std::map<std::string, int, std::less<>> line_of;
    int line_no = 0;
    int m_value = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto where = "line " + std::to_string(line_no) + ": ";
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end()) throw ConfigError(where + "unknown key '" + std::string(key) + "'", std::string(key));
        if (line_of.contains(key)) throw ConfigError(where + "duplicate key '" + std::string(key) + "'", std::string(key));
        if (value.empty()) throw ConfigError(where + "missing value for '" + std::string(key) + "'", std::string(key));
        try {
            if (key == "M") m_value = parse_int(value);
            else it->second(cfg, value);
        } catch (const ConfigError& e) {
            throw ConfigError(where + e.what() + " for '" + std::string(key) + "'", std::string(key));
        }
        line_of.emplace(std::string(key), line_no);
    }

    // An explicit M1 or M2 wins over M whatever the line order.
    if (line_of.contains("M")) {
        if (!line_of.contains("M1")) cfg.M1 = m_value;
        if (!line_of.contains("M2")) cfg.M2 = m_value;
    }
    const bool has_p1 = line_of.contains("p_r1");
    const bool has_p2 = line_of.contains("p_r2");
    if (has_p1 && !has_p2) cfg.p_r2 = 1.0 - cfg.p_r1;
    if (has_p2 && !has_p1) cfg.p_r1 = 1.0 - cfg.p_r2;

    if (opt.require_power_and_size) {
        if (!line_of.contains("P_dBm")) throw ConfigError("config: missing required key 'P_dBm'", "P_dBm");
        const bool size = line_of.contains("M") || (line_of.contains("M1") && line_of.contains("M2"));
        if (!size) throw ConfigError("config: missing required key 'M' (or both M1 and M2)", "M");
    }

    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        std::string key = e.key();
        if (key == "M1" || key == "M2") {
            if (!line_of.contains(key)) key = "M";
        }
        if (key == "p_r1" && !line_of.contains("p_r1")) key = "p_r2";
        if (key == "p_r2" && !line_of.contains("p_r2")) key = "p_r1";
        const auto it = line_of.find(key);
        const std::string where = it != line_of.end() ? "line " + std::to_string(it->second) + ": " : "config: ";
        throw ConfigError(where + e.what(), key);
    }
    return cfg;
}

NetworkConfig load_config(const std::string& path, const ParseOptions& opt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), opt);
}

std::string format_config(const NetworkConfig& c) {
    std::ostringstream o;
    const auto kv = [&](const char* k, const std::string& v) { o << k << " = " << v << '\n'; };
    const auto num = [&](const char* k, double v) { kv(k, format_double(v)); };
    num("P_dBm", c.P_dBm);
    kv("M1", std::to_string(c.M1));
    kv("M2", std::to_string(c.M2));
    num("m1", c.fading.m1);
    num("m2", c.fading.m2);
    num("noise_r_dBm", c.noise_r_dBm);
    num("noise_e_dBm", c.noise_e_dBm);
    num("p_r1", c.p_r1);
    num("p_r2", c.p_r2);
    num("d_vt_r1", c.geometry.d_vt_r1);
    num("d_r2_vr1", c.geometry.d_r2_vr1);
    num("d_r2_vr2", c.geometry.d_r2_vr2);
    num("d_r2_ve", c.geometry.d_r2_ve);
    num("d_r1_r2", c.geometry.d_r1_r2);
    num("kappa", c.geometry.kappa);
    num("R_s", c.R_s);
    num("alpha", c.alpha);
    num("P_R1_dBm", c.P_R1_dBm);
    num("P_R2_dBm", c.P_R2_dBm);
    num("P_t1_dBm", c.P_t1_dBm);
    num("P_t2_dBm", c.P_t2_dBm);
    kv("quadrature_order", std::to_string(c.quadrature_order));
    kv("los_composition", std::string(to_string(c.los_composition)));
    kv("link_distances", std::string(to_string(c.link_distances)));
    kv("convention", std::string(to_string(c.convention)));
    return o.str();
}

}  // namespace dualris
