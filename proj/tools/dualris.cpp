// dualris: secrecy metrics of the cooperative dual-RIS NOMA wiretap link.
//
//   dualris eval --config x.cfg [--oracles integral,mc]
//   dualris sweep --config x.cfg --var P_dBm --grid 0:60:2 --metrics asc_r1,sop_r1 --out s.csv
//   dualris validate --trials 1000000 --seed 42
//   dualris preset fig2 --out fig2.csv
//
// Exit codes: 0 success, 1 configuration error, 2 numeric or validation failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dualris/config.hpp"
#include "dualris/errors.hpp"
#include "dualris/integral_oracle.hpp"
#include "dualris/monte_carlo.hpp"
#include "dualris/secrecy.hpp"
#include "dualris/sweep.hpp"
#include "dualris/validation.hpp"

using namespace dualris;

namespace {

struct Flags {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<int> order;
    std::string mode;
    std::string convention;
    unsigned workers{0};
    std::string oracles;
    // sweep
    std::string spec;
    std::string var;
    std::string grid;
    std::string metrics;
    // preset
    std::string preset;
};

std::string trim(std::string v) {
    v.erase(0, v.find_first_not_of(" \t\r"));
    v.erase(v.find_last_not_of(" \t\r") + 1);
    return v;
}

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (item = trim(item); !item.empty()) out.push_back(item);
    return out;
}

std::vector<double> parse_grid(const std::string& s) {
    if (s.find(':') != std::string::npos) {
        std::vector<double> p;
        for (const auto& item : split_list(s, ':')) p.push_back(parse_double(item));
        if (p.size() != 3) throw ConfigError("grid range must be start:stop:step", "grid");
        return linear_grid(p[0], p[1], p[2]);
    }
    std::vector<double> g;
    for (const auto& v : split_list(s)) g.push_back(parse_double(v));
    return g;
}

std::vector<OracleKind> parse_oracles(const std::string& s) {
    std::vector<OracleKind> o;
    for (const auto& v : split_list(s)) o.push_back(parse_oracle(v));
    return o;
}

NetworkConfig load(const Flags& f, bool strict) {
    NetworkConfig cfg;
    if (!f.config.empty()) {
        cfg = load_config(f.config, {strict});
    } else if (strict) {
        throw ConfigError("--config is required");
    }
    if (f.order) cfg.quadrature_order = *f.order;
    if (!f.convention.empty()) cfg.convention = parse_convention(f.convention);
    cfg.validate();
    return cfg;
}

McSettings mc_from(const Flags& f, McSettings s = {}) {
    if (f.trials) s.trials = *f.trials;
    if (f.seed) s.seed = *f.seed;
    if (!f.mode.empty()) s.mode = parse_mc_mode(f.mode);
    if (f.workers) s.workers = f.workers;
    return s;
}

// Writes to --out when given, otherwise to standard output.
void emit(const Flags& f, const std::string& text) {
    if (f.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(f.out, std::ios::binary);
    if (!out || !(out << text)) throw std::ios_base::failure("cannot write '" + f.out + "'");
}

std::string report_text(const SecrecyReport& r, const NetworkConfig& cfg) {
    std::ostringstream o;
    o << "method = " << to_string(r.method) << '\n';
    o << "quadrature_order = " << r.quadrature_order << '\n';
    o << "convention = " << to_string(cfg.convention) << '\n';
    o << "asc_r1 = " << format_double(r.asc_r1) << '\n';
    o << "asc_r2 = " << format_double(r.asc_r2) << '\n';
    o << "asc_total = " << format_double(r.asc_total) << '\n';
    o << "sop_r1 = " << format_double(r.sop_r1) << '\n';
    o << "sop_r2 = " << format_double(r.sop_r2) << '\n';
    o << "see = " << format_double(r.see) << '\n';
    return o.str();
}

int cmd_eval(const Flags& f) {
    const NetworkConfig cfg = load(f, true);
    std::string text = report_text(evaluate_closed_form(cfg), cfg);
    for (OracleKind o : parse_oracles(f.oracles)) {
        text += '\n';
        if (o == OracleKind::integral) {
            text += report_text(evaluate_integral_oracle(cfg), cfg);
        } else {
            const McSettings s = mc_from(f);
            const McResult r = mc_secrecy(cfg, s);
            text += report_text(r.report, cfg);
            text += "mc_mode = " + std::string(to_string(s.mode)) + '\n';
            text += "trials = " + std::to_string(s.trials) + '\n';
            text += "asc_r1_se = " + format_double(r.asc_r1.std_error) + '\n';
            text += "asc_r2_se = " + format_double(r.asc_r2.std_error) + '\n';
            text += "asc_total_se = " + format_double(r.asc_total.std_error) + '\n';
            text += "sop_r1_se = " + format_double(r.sop_r1.std_error) + '\n';
            text += "sop_r2_se = " + format_double(r.sop_r2.std_error) + '\n';
        }
    }
    emit(f, text);
    return 0;
}

// Sweep spec file: the same key = value grammar with keys variable, grid,
// metrics, oracles, trials, seed, mode, chunk_size, tol.
SweepSpec load_sweep_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open sweep spec '" + path + "'");
    SweepSpec s;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(n) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "variable") s.variable = parse_sweep_variable(value);
            else if (key == "grid") s.grid = parse_grid(value);
            else if (key == "metrics") {
                for (const auto& m : split_list(value)) s.metrics.push_back(parse_metric(m));
            } else if (key == "oracles") s.oracles = parse_oracles(value);
            else if (key == "trials") s.mc.trials = static_cast<std::uint64_t>(std::stoull(value));
            else if (key == "seed") s.mc.seed = static_cast<std::uint64_t>(std::stoull(value));
            else if (key == "mode") s.mc.mode = parse_mc_mode(value);
            else if (key == "chunk_size") s.mc.chunk_size = static_cast<std::uint64_t>(std::stoull(value));
            else if (key == "tol") s.integral.tol = parse_double(value);
            else throw ConfigError("unknown key '" + key + "'", key);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(n) + ": " + e.what(), e.key());
        } catch (const std::logic_error&) {
            throw ConfigError("line " + std::to_string(n) + ": malformed value for '" + key + "'", key);
        }
    }
    return s;
}

int cmd_sweep(const Flags& f) {
    const NetworkConfig cfg = load(f, false);
    SweepSpec s = f.spec.empty() ? SweepSpec{} : load_sweep_spec(f.spec);
    if (!f.var.empty()) s.variable = parse_sweep_variable(f.var);
    if (!f.grid.empty()) s.grid = parse_grid(f.grid);
    if (!f.metrics.empty()) {
        s.metrics.clear();
        for (const auto& m : split_list(f.metrics)) s.metrics.push_back(parse_metric(m));
    }
    if (!f.oracles.empty()) s.oracles = parse_oracles(f.oracles);
    s.mc = mc_from(f, s.mc);
    s.workers = f.workers;
    const Dataset d = run_sweep(cfg, s);
    std::ostringstream o;
    write_csv(d, o);
    emit(f, o.str());
    return 0;
}

int cmd_validate(const Flags& f) {
    ValidationOptions opt;
    if (f.trials) opt.trials = *f.trials;
    if (f.seed) opt.seed = *f.seed;
    if (f.order) opt.order = *f.order;
    opt.workers = f.workers;
    const auto results = run_validation(opt);
    const std::string text = format_report(opt, results);
    std::cout << text;
    if (!f.out.empty()) emit(f, text);
    return all_passed(results) ? 0 : 2;
}

int cmd_preset(const Flags& f) {
    const NetworkConfig cfg = load(f, false);
    const Dataset d = run_preset(f.preset, cfg, parse_oracles(f.oracles), mc_from(f));
    std::ostringstream o;
    write_csv(d, o);
    emit(f, o.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy metrics for a cooperative dual-RIS NOMA wiretap link"};
    app.require_subcommand(1);
    Flags f;

    auto* eval = app.add_subcommand("eval", "Evaluate one scenario and print a secrecy report");
    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter and write CSV");
    auto* validate = app.add_subcommand("validate", "Run the closed-form vs oracle comparison suite");
    auto* preset = app.add_subcommand("preset", "Write a figure dataset (fig2..fig6)");

    for (CLI::App* sub : {eval, sweep, validate, preset}) {
        if (sub != validate) {
            sub->add_option("--config", f.config, "Scenario file (key = value)");
            sub->add_option("--convention", f.convention, "Gaussian CDF scale: paper or gaussian");
        }
        sub->add_option("--out", f.out, "Write output to this file instead of standard output");
        sub->add_option("--seed", f.seed, "Monte Carlo seed");
        sub->add_option("--trials", f.trials, "Monte Carlo trials");
        sub->add_option("--order", f.order, "Quadrature order");
        sub->add_option("--mode", f.mode, "Monte Carlo mode: clt_faithful, physical_f_sum or paper_eve");
        sub->add_option("--workers", f.workers, "Worker threads (0: all cores)");
        if (sub != validate) sub->add_option("--oracles", f.oracles, "Comma list of oracles: integral, mc");
    }
    sweep->add_option("--spec", f.spec, "Sweep spec file (key = value)");
    sweep->add_option("--var", f.var, "Swept variable: P_dBm, M, m1, m2, p_r1, R_s");
    sweep->add_option("--grid", f.grid, "start:stop:step or a comma list");
    sweep->add_option("--metrics", f.metrics, "Comma list: asc_r1, asc_r2, asc_total, asc_asymptotic, sop_r1, sop_r2, see");
    preset->add_option("name", f.preset, "fig2, fig3, fig4, fig5 or fig6")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*eval) return cmd_eval(f);
        if (*sweep) return cmd_sweep(f);
        if (*validate) return cmd_validate(f);
        if (*preset) return cmd_preset(f);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 1;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << " (best estimate " << e.best_estimate() << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
