#include "dualris/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <thread>

#include "dualris/config.hpp"
#include "dualris/errors.hpp"
#include "dualris/secrecy.hpp"

namespace dualris {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <class E, std::size_t N>
E parse_enum(std::string_view s, const std::pair<std::string_view, E> (&table)[N], const char* what) {
    for (const auto& [name, value] : table)
        if (name == s) return value;
    throw ConfigError(std::string("unknown ") + what + " '" + std::string(s) + "'", what);
}

constexpr std::pair<std::string_view, SweepVariable> kVariables[] = {
    {"P_dBm", SweepVariable::P_dBm}, {"M", SweepVariable::M},     {"m1", SweepVariable::m1},
    {"m2", SweepVariable::m2},       {"p_r1", SweepVariable::p_r1}, {"R_s", SweepVariable::R_s}};

constexpr std::pair<std::string_view, Metric> kMetrics[] = {
    {"asc_r1", Metric::asc_r1}, {"asc_r2", Metric::asc_r2}, {"asc_total", Metric::asc_total},
    {"asc_asymptotic", Metric::asc_asymptotic}, {"sop_r1", Metric::sop_r1}, {"sop_r2", Metric::sop_r2},
    {"see", Metric::see}};

constexpr std::pair<std::string_view, OracleKind> kOracles[] = {{"integral", OracleKind::integral},
                                                               {"mc", OracleKind::mc}};

template <class E, std::size_t N>
std::string_view name_of(E v, const std::pair<std::string_view, E> (&table)[N]) {
    for (const auto& [name, value] : table)
        if (value == v) return name;
    return "unknown";
}

}  // namespace

std::string_view to_string(SweepVariable v) { return name_of(v, kVariables); }
std::string_view to_string(Metric m) { return name_of(m, kMetrics); }
std::string_view to_string(OracleKind o) { return name_of(o, kOracles); }
SweepVariable parse_sweep_variable(std::string_view s) { return parse_enum(s, kVariables, "variable"); }
Metric parse_metric(std::string_view s) { return parse_enum(s, kMetrics, "metric"); }
OracleKind parse_oracle(std::string_view s) { return parse_enum(s, kOracles, "oracle"); }

std::size_t Dataset::column(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw std::out_of_range("no column '" + std::string(name) + "'");
}

std::vector<double> linear_grid(double start, double stop, double step) {
    if (!(step > 0.0) || stop < start) throw ConfigError("grid needs step > 0 and stop >= start", "grid");
    std::vector<double> g;
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= n; ++i) g.push_back(start + static_cast<double>(i) * step);
    return g;
}

NetworkConfig apply_variable(const NetworkConfig& cfg, SweepVariable v, double value) {
    NetworkConfig c = cfg;
    switch (v) {
        case SweepVariable::P_dBm: c.P_dBm = value; break;
        case SweepVariable::M:
            if (value != std::round(value) || value < 1.0 || value > 1e6)
                throw ConfigError("M grid values must be positive integers", "M");
            c.M1 = c.M2 = static_cast<int>(value);
            break;
        case SweepVariable::m1: c.fading.m1 = value; break;
        case SweepVariable::m2: c.fading.m2 = value; break;
        case SweepVariable::p_r1:
            c.p_r1 = value;
            c.p_r2 = 1.0 - value;
            break;
        case SweepVariable::R_s: c.R_s = value; break;
    }
    return c;
}

void SweepSpec::validate() const {
    if (grid.empty()) throw ConfigError("sweep grid is empty", "grid");
    const bool up = grid.size() < 2 || grid[1] > grid[0];
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (up ? !(grid[i] > grid[i - 1]) : !(grid[i] < grid[i - 1]))
            throw ConfigError("sweep grid must be strictly ordered", "grid");
    if (metrics.empty()) throw ConfigError("sweep needs at least one metric", "metrics");
    if (variable == SweepVariable::p_r1)
        for (double v : grid)
            if (!(v > 0.0) || 1.0 - v < v) throw ConfigError("p_r1 grid values must keep p_r2 = 1 - p_r1 >= p_r1", "grid");
    if (std::find(oracles.begin(), oracles.end(), OracleKind::mc) != oracles.end()) mc.validate();
}

namespace {

bool wants(const SweepSpec& s, OracleKind o) { return std::find(s.oracles.begin(), s.oracles.end(), o) != s.oracles.end(); }

std::vector<std::string> sweep_columns(const SweepSpec& spec) {
    std::vector<std::string> cols{std::string(to_string(spec.variable))};
    for (Metric m : spec.metrics) {
        const std::string name(to_string(m));
        if (m == Metric::asc_asymptotic) {
            cols.push_back("asc_r1_asymptotic");
            cols.push_back("asc_r2_asymptotic");
            continue;
        }
        cols.push_back(name);
        if (wants(spec, OracleKind::integral)) cols.push_back(name + "_integral");
        if (wants(spec, OracleKind::mc)) cols.push_back(name + "_mc");
    }
    if (wants(spec, OracleKind::mc))
        for (Metric m : spec.metrics)
            if (m != Metric::asc_asymptotic) cols.push_back(std::string(to_string(m)) + "_mc_se");
    return cols;
}

double pick(const SecrecyReport& r, Metric m) {
    switch (m) {
        case Metric::asc_r1: return r.asc_r1;
        case Metric::asc_r2: return r.asc_r2;
        case Metric::asc_total: return r.asc_total;
        case Metric::sop_r1: return r.sop_r1;
        case Metric::sop_r2: return r.sop_r2;
        case Metric::see: return r.see;
        case Metric::asc_asymptotic: break;
    }
    return kNaN;
}

double pick_se(const McResult& r, Metric m, const NetworkConfig& cfg) {
    switch (m) {
        case Metric::asc_r1: return r.asc_r1.std_error;
        case Metric::asc_r2: return r.asc_r2.std_error;
        case Metric::asc_total: return r.asc_total.std_error;
        case Metric::sop_r1: return r.sop_r1.std_error;
        case Metric::sop_r2: return r.sop_r2.std_error;
        case Metric::see: return see_from_asc(r.asc_total.std_error, cfg);
        case Metric::asc_asymptotic: break;
    }
    return kNaN;
}

struct Row {
    std::vector<double> values;
    std::string note;
};

Row compute_row(const NetworkConfig& base, const SweepSpec& spec, double x, const McSettings& mc) {
    const NetworkConfig cfg = apply_variable(base, spec.variable, x);
    cfg.validate();
    Row row;
    row.values.push_back(x);

    const SecrecyReport closed = evaluate_closed_form(cfg);
    const bool need_asym = std::find(spec.metrics.begin(), spec.metrics.end(), Metric::asc_asymptotic) != spec.metrics.end();
    const SecrecyReport asym = need_asym ? evaluate_asymptotic(cfg) : SecrecyReport{};

    SecrecyReport integral{kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, Method::integral_oracle, 0};
    if (wants(spec, OracleKind::integral)) {
        try {
            integral = evaluate_integral_oracle(cfg, spec.integral);
        } catch (const NumericError& e) {
            row.note = std::string("integral oracle: ") + e.what();
        }
    }
    McResult mcr{};
    if (wants(spec, OracleKind::mc)) mcr = mc_secrecy(cfg, mc);

    for (Metric m : spec.metrics) {
        if (m == Metric::asc_asymptotic) {
            row.values.push_back(asym.asc_r1);
            row.values.push_back(asym.asc_r2);
            continue;
        }
        row.values.push_back(pick(closed, m));
        if (wants(spec, OracleKind::integral)) row.values.push_back(pick(integral, m));
        if (wants(spec, OracleKind::mc)) row.values.push_back(pick(mcr.report, m));
    }
    if (wants(spec, OracleKind::mc))
        for (Metric m : spec.metrics)
            if (m != Metric::asc_asymptotic) row.values.push_back(pick_se(mcr, m, cfg));
    return row;
}

}  // namespace

Dataset run_sweep(const NetworkConfig& cfg, const SweepSpec& spec) {
    spec.validate();
    const std::size_t n = spec.grid.size();
    unsigned workers = spec.workers ? spec.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    McSettings mc = spec.mc;
    if (workers > 1) mc.workers = 1;

    std::vector<Row> rows(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                rows[i] = compute_row(cfg, spec, spec.grid[i], mc);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    Dataset d;
    d.columns = sweep_columns(spec);
    for (Row& r : rows) {
        d.rows.push_back(std::move(r.values));
        d.notes.push_back(std::move(r.note));
    }
    if (!spec.output_path.empty()) write_csv_file(d, spec.output_path);
    return d;
}

namespace {

void write_field(std::ostream& out, std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
        out << s;
        return;
    }
    out << '"';
    for (char c : s) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

std::vector<std::string> split_record(std::istream& in, bool& ok) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool any = false;
    char c;
    ok = false;
    while (in.get(c)) {
        any = true;
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\r') {
            continue;
        } else if (c == '\n') {
            ok = true;
            break;
        } else {
            field += c;
        }
    }
    if (any) {
        fields.push_back(std::move(field));
        ok = true;
    }
    return fields;
}

}  // namespace

void write_csv(const Dataset& d, std::ostream& out) {
    const bool has_series = !d.series.empty();
    if (has_series) out << "series,";
    for (std::size_t i = 0; i < d.columns.size(); ++i) {
        write_field(out, d.columns[i]);
        out << ',';
    }
    out << "note\r\n";
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
        if (has_series) {
            write_field(out, d.series[r]);
            out << ',';
        }
        for (double v : d.rows[r]) out << format_double(v) << ',';
        write_field(out, r < d.notes.size() ? d.notes[r] : std::string());
        out << "\r\n";
    }
}

void write_csv_file(const Dataset& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    write_csv(d, out);
    out.flush();
    if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
}

Dataset read_csv(std::istream& in) {
    Dataset d;
    bool ok = false;
    std::vector<std::string> header = split_record(in, ok);
    if (!ok || header.empty() || header.back() != "note") throw ConfigError("CSV header must end with 'note'");
    header.pop_back();
    const bool has_series = !header.empty() && header.front() == "series";
    if (has_series) header.erase(header.begin());
    d.columns = header;
    for (;;) {
        std::vector<std::string> f = split_record(in, ok);
        if (!ok) break;
        if (f.size() == 1 && f[0].empty()) continue;
        const std::size_t expect = d.columns.size() + 1 + (has_series ? 1 : 0);
        if (f.size() != expect) throw ConfigError("CSV row has " + std::to_string(f.size()) + " fields, expected " +
                                                  std::to_string(expect));
        std::size_t k = 0;
        if (has_series) d.series.push_back(f[k++]);
        std::vector<double> row;
        for (std::size_t c = 0; c < d.columns.size(); ++c) row.push_back(parse_double(f[k++]));
        d.rows.push_back(std::move(row));
        d.notes.push_back(f[k]);
    }
    return d;
}

namespace {

struct PresetSeries {
    std::string label;
    NetworkConfig cfg;
    SweepSpec spec;
};

SweepSpec make_spec(SweepVariable v, std::vector<double> grid, std::vector<Metric> metrics,
                    const std::vector<OracleKind>& oracles, const McSettings& mc) {
    SweepSpec s;
    s.variable = v;
    s.grid = std::move(grid);
    s.metrics = std::move(metrics);
    s.oracles = oracles;
    s.mc = mc;
    return s;
}

std::vector<PresetSeries> preset_series(std::string_view name, const NetworkConfig& base,
                                        const std::vector<OracleKind>& oracles, const McSettings& mc) {
    const auto power_grid = linear_grid(0.0, 60.0, 2.0);
    const auto size_grid = linear_grid(10.0, 200.0, 10.0);
    auto with = [&](auto edit) {
        NetworkConfig c = base;
        edit(c);
        return c;
    };
    auto set_m = [](int m) { return [m](NetworkConfig& c) { c.M1 = c.M2 = m; }; };
    std::vector<PresetSeries> out;
    if (name == "fig2") {
        out.push_back({"", with(set_m(50)),
                       make_spec(SweepVariable::P_dBm, power_grid,
                                 {Metric::asc_r1, Metric::asc_r2, Metric::asc_total, Metric::asc_asymptotic}, oracles, mc)});
    } else if (name == "fig3") {
        out.push_back({"", with([](NetworkConfig& c) { c.P_dBm = 20.0; }),
                       make_spec(SweepVariable::M, size_grid, {Metric::asc_r1, Metric::asc_r2, Metric::asc_total},
                                 oracles, mc)});
    } else if (name == "fig4") {
        for (int m : {25, 50, 80})
            out.push_back({"M=" + std::to_string(m), with(set_m(m)),
                           make_spec(SweepVariable::P_dBm, power_grid, {Metric::sop_r1, Metric::sop_r2}, oracles, mc)});
    } else if (name == "fig5") {
        const std::pair<double, double> shapes[] = {{2.0, 3.0}, {4.0, 10.0}};
        for (auto [m1, m2] : shapes)
            out.push_back({"m1=" + format_double(m1) + " m2=" + format_double(m2), with([&](NetworkConfig& c) {
                               c.M1 = c.M2 = 80;
                               c.fading = {m1, m2};
                           }),
                           make_spec(SweepVariable::P_dBm, power_grid, {Metric::sop_r1, Metric::sop_r2}, oracles, mc)});
    } else if (name == "fig6") {
        out.push_back({"see_vs_M P_dBm=20", with([](NetworkConfig& c) { c.P_dBm = 20.0; }),
                       make_spec(SweepVariable::M, size_grid, {Metric::see}, oracles, mc)});
        out.push_back({"see_vs_P_dBm M=50", with(set_m(50)),
                       make_spec(SweepVariable::P_dBm, power_grid, {Metric::see}, oracles, mc)});
    } else {
        throw ConfigError("unknown preset '" + std::string(name) + "'", "preset");
    }
    return out;
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig2", "fig3", "fig4", "fig5", "fig6"};
    return names;
}

Dataset run_preset(std::string_view name, const NetworkConfig& base, const std::vector<OracleKind>& oracles,
                   const McSettings& mc) {
    const auto series = preset_series(name, base, oracles, mc);
    Dataset out;
    bool same_variable = true;
    for (const auto& s : series) same_variable = same_variable && s.spec.variable == series.front().spec.variable;
    for (const auto& s : series) {
        Dataset d = run_sweep(s.cfg, s.spec);
        if (out.columns.empty()) {
            out.columns = d.columns;
            if (!same_variable) out.columns.front() = "x";
        }
        for (std::size_t r = 0; r < d.rows.size(); ++r) {
            out.rows.push_back(std::move(d.rows[r]));
            out.notes.push_back(std::move(d.notes[r]));
            if (series.size() > 1) out.series.push_back(s.label);
        }
    }
    return out;
}

}  // namespace dualris
