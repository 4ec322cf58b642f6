#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dualris/channel.hpp"
#include "dualris/secrecy.hpp"

namespace dualris {

// clt_faithful: U from the Gaussian model of the configured convention
// (clamped at 0), eavesdropper SNR exponential. physical_f_sum: U is the exact
// sum of M1 M2 F-distributed gains with ideal phases; the eavesdropper sees the
// same gains with uniform random phases. paper_eve: physical U with the
// exponential eavesdropper.
enum class McMode { clt_faithful, physical_f_sum, paper_eve };
std::string_view to_string(McMode m);
McMode parse_mc_mode(std::string_view s);

struct McSettings {
    std::uint64_t trials{100000};
    std::uint64_t seed{42};
    McMode mode{McMode::clt_faithful};
    std::uint64_t chunk_size{0};  // 0: min(4096, trials)
    unsigned workers{0};  // 0: hardware concurrency
    bool record_snr_r1{false};

    void validate() const;
};

struct McEstimate {
    double value;
    double std_error;
    std::uint64_t trials_used;
};

struct McResult {
    SecrecyReport report;
    McEstimate asc_r1;
    McEstimate asc_r2;
    McEstimate asc_total;
    McEstimate sop_r1;
    McEstimate sop_r2;
    double max_snr_r2;      // largest receiver-2 SINR seen
    double max_sic_gap;     // max |gamma_sic - gamma_r2| / gamma_r2
    double min_sic_margin;  // min (gamma_sic - gamma_r2) / gamma_r2
    std::vector<double> snr_r1_samples;  // filled when record_snr_r1 is set, in trial order
};

McResult mc_secrecy(const NetworkConfig& cfg, const McSettings& settings);

}  // namespace dualris
