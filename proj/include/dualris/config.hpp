#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dualris/channel.hpp"

namespace dualris {

// Flat `key = value` grammar, one pair per line, `#` starts a comment, keys are
// case-sensitive. Unset keys keep the NetworkConfig defaults. `M` sets both M1
// and M2; an explicit M1 or M2 wins. Giving only one of p_r1/p_r2 sets the
// other to its complement.
struct ParseOptions {
    bool require_power_and_size{true};  // P_dBm and M (or M1 and M2) must appear
};

NetworkConfig parse_config(std::string_view text, const ParseOptions& opt = {});
NetworkConfig load_config(const std::string& path, const ParseOptions& opt = {});

// Every key with its current value, in the grammar parse_config accepts.
std::string format_config(const NetworkConfig& cfg);

const std::vector<std::string>& config_keys();

LosComposition parse_los_composition(std::string_view s);
LinkDistances parse_link_distances(std::string_view s);
DenominatorConvention parse_convention(std::string_view s);

// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double v);
double parse_double(std::string_view s);

}  // namespace dualris
