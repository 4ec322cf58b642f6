#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dualris/channel.hpp"
#include "dualris/integral_oracle.hpp"
#include "dualris/monte_carlo.hpp"

namespace dualris {

enum class SweepVariable { P_dBm, M, m1, m2, p_r1, R_s };
enum class Metric { asc_r1, asc_r2, asc_total, asc_asymptotic, sop_r1, sop_r2, see };
enum class OracleKind { integral, mc };

std::string_view to_string(SweepVariable v);
std::string_view to_string(Metric m);
std::string_view to_string(OracleKind o);
SweepVariable parse_sweep_variable(std::string_view s);
Metric parse_metric(std::string_view s);
OracleKind parse_oracle(std::string_view s);

struct SweepSpec {
    SweepVariable variable{SweepVariable::P_dBm};
    std::vector<double> grid;
    std::vector<Metric> metrics;
    std::vector<OracleKind> oracles;
    McSettings mc{};
    IntegralOptions integral{};
    std::string output_path;
    unsigned workers{0};  // grid points evaluated at once; 0: hardware concurrency

    void validate() const;
};

// Numeric table plus an optional text label per row (series) and a free-text
// note column used to annotate rows whose oracle failed.
struct Dataset {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> series;  // empty, or one label per row
    std::vector<std::string> notes;   // one per row

    std::size_t column(std::string_view name) const;
};

// Copy of cfg with the sweep variable set. For p_r1 the complement goes to p_r2;
// for M both M1 and M2 are set.
NetworkConfig apply_variable(const NetworkConfig& cfg, SweepVariable v, double value);

Dataset run_sweep(const NetworkConfig& cfg, const SweepSpec& spec);

// RFC 4180 CSV: header row, `series` first when present, `note` last.
// Numbers use the shortest text that round-trips exactly.
void write_csv(const Dataset& d, std::ostream& out);
void write_csv_file(const Dataset& d, const std::string& path);
Dataset read_csv(std::istream& in);

// Figure datasets with axis-matched, chosen grids.
const std::vector<std::string>& preset_names();
Dataset run_preset(std::string_view name, const NetworkConfig& base, const std::vector<OracleKind>& oracles = {},
                   const McSettings& mc = {});

// Range helper: start, start+step, ... up to stop (inclusive within 1e-9 step).
std::vector<double> linear_grid(double start, double stop, double step);

}  // namespace dualris
