#pragma once

#include <string_view>

namespace dualris {

// Path loss in dB (negative) at distance d metres: -37.5 - 22 log10(d).
double pathloss_db(double distance_m);
double db_to_linear(double db);
double dbm_to_watts(double dbm);

// Fisher-Snedecor F shaping per RIS element: m1 multipath, m2 shadowing.
// The mean needs m2 > 1 and the variance m2 > 2.
struct FadingParams {
    double m1{2.0};
    double m2{3.0};

    double element_mean() const;
    double element_variance() const;
    void validate() const;
};

struct Geometry {
    double d_vt_r1{5.0};    // transmitter to RIS1
    double d_r2_vr1{5.0};   // RIS2 to receiver 1
    double d_r2_vr2{15.0};  // RIS2 to receiver 2
    double d_r2_ve{5.0};    // RIS2 to eavesdropper
    double d_r1_r2{100.0};  // RIS1 to RIS2
    double kappa{2.1};      // inter-RIS path-loss exponent, > 2

    void validate() const;
};

enum class LosComposition { product, r2_side_only };

// shared: every receiver uses the LoS gain of the receiver-1 geometry, so the
// two legitimate links differ only by their power fractions. per_receiver:
// receiver 2 and the eavesdropper use their own RIS2 distances.
enum class LinkDistances { shared, per_receiver };

// paper: the Gaussian CDF scale is the variance of U (as printed).
// gaussian: the scale is the standard deviation (the true CLT law).
enum class DenominatorConvention { paper, gaussian };

struct NetworkConfig {
    double P_dBm{20.0};
    int M1{50};
    int M2{50};
    FadingParams fading{};
    double noise_r_dBm{-70.0};
    double noise_e_dBm{-20.0};
    double p_r1{0.3};
    double p_r2{0.7};
    Geometry geometry{};
    double R_s{0.1};  // secrecy rate threshold, bit/s/Hz
    double alpha{1.2};  // amplifier drain efficiency
    double P_R1_dBm{10.0};
    double P_R2_dBm{10.0};
    double P_t1_dBm{10.0};
    double P_t2_dBm{10.0};
    int quadrature_order{4};
    LosComposition los_composition{LosComposition::product};
    LinkDistances link_distances{LinkDistances::shared};
    DenominatorConvention convention{DenominatorConvention::paper};

    int elements() const { return M1 * M2; }
    void validate() const;
};

struct MeanSnr {
    double gamma_bar;    // P / noise at the legitimate receivers
    double gamma_bar_e;  // P / noise at the eavesdropper
};

// Large-scale gain D d_R1R2^{-kappa} of each cascaded link (linear).
struct LinkGains {
    double r1;
    double r2;
    double e;
};

// CLT moments of U = sum of the n = M1 M2 element gains, and the derived
// per-link coefficients A = p D d^{-kappa}.
struct CltMoments {
    double mu_U;
    double var_U;
    double mu_U2;
    double A1;         // receiver 1, power p_r1
    double A2;         // receiver 2, power p_r2
    double A1_at_r2;   // p_r1 interference seen at receiver 2
    double lambda_e;   // rate of the exponential eavesdropper SNR

    double sigma_U() const;
    // Scale inside the Gaussian CDF: var_U (paper) or sigma_U (gaussian).
    double scale(DenominatorConvention c) const;
};

MeanSnr mean_snr(const NetworkConfig& cfg);
LinkGains link_gains(const NetworkConfig& cfg);
CltMoments clt_moments(const NetworkConfig& cfg);

std::string_view to_string(LosComposition v);
std::string_view to_string(LinkDistances v);
std::string_view to_string(DenominatorConvention v);

}  // namespace dualris
