#include "dualris/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <thread>

#include "dualris/distributions.hpp"
#include "dualris/errors.hpp"

namespace dualris {

std::string_view to_string(McMode m) {
    switch (m) {
        case McMode::clt_faithful: return "clt_faithful";
        case McMode::physical_f_sum: return "physical_f_sum";
        case McMode::paper_eve: return "paper_eve";
    }
    return "unknown";
}

McMode parse_mc_mode(std::string_view s) {
    if (s == "clt_faithful") return McMode::clt_faithful;
    if (s == "physical_f_sum") return McMode::physical_f_sum;
    if (s == "paper_eve") return McMode::paper_eve;
    throw ConfigError("unknown Monte Carlo mode '" + std::string(s) + "'", "mode");
}

void McSettings::validate() const {
    if (trials < 1) throw ConfigError("trials must be at least 1", "trials");
    if (chunk_size > trials) throw ConfigError("chunk_size must not exceed trials", "chunk_size");
}

namespace {

constexpr std::uint64_t kDefaultChunk = 4096;

// Welford running mean and variance; merge is Chan's pairwise update.
struct Moments {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }

    void merge(const Moments& o) {
        if (o.n == 0) return;
        if (n == 0) {
            *this = o;
            return;
        }
        const double na = static_cast<double>(n);
        const double nb = static_cast<double>(o.n);
        const double d = o.mean - mean;
        const double nt = na + nb;
        mean += d * nb / nt;
        m2 += o.m2 + d * d * na * nb / nt;
        n += o.n;
    }

    McEstimate estimate() const {
        const double var = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
        return {mean, std::sqrt(var / static_cast<double>(n)), n};
    }
};

struct ChunkResult {
    Moments c1;
    Moments c2;
    Moments ct;
    std::uint64_t outage1 = 0;
    std::uint64_t outage2 = 0;
    double max_r2 = 0.0;
    double max_gap = 0.0;
    double min_margin = std::numeric_limits<double>::infinity();
};

McEstimate proportion(std::uint64_t hits, std::uint64_t n) {
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n};
}

class TrialRunner {
public:
    TrialRunner(const NetworkConfig& cfg, const McSettings& st, const CltMoments& m)
        : st_(st), m_(m), snr_(cfg, m), convention_(cfg.convention), r_th_(std::exp2(cfg.R_s)) {
        const MeanSnr ms = mean_snr(cfg);
        eve_gain_ = ms.gamma_bar_e * cfg.p_r1 * link_gains(cfg).e;
        if (st.mode != McMode::clt_faithful) sampler_.emplace(cfg.fading, cfg.elements());
    }

    void run(std::uint64_t begin, std::uint64_t end, ChunkResult& out, double* samples) {
        const double r_bar = r_th_ - 1.0;
        for (std::uint64_t t = begin; t < end; ++t) {
            Rng rng = Rng::for_stream(st_.seed, t);
            double u;
            double ge;
            switch (st_.mode) {
                case McMode::clt_faithful:
                    u = std::max(0.0, sample_u(m_, convention_, rng));
                    ge = sample_gamma_e(m_, rng);
                    break;
                case McMode::physical_f_sum: {
                    double phased = 0.0;
                    u = sampler_->draw(rng, &phased);
                    ge = eve_gain_ * phased;
                    break;
                }
                case McMode::paper_eve:
                default:
                    u = sampler_->draw(rng);
                    ge = sample_gamma_e(m_, rng);
                    break;
            }
            const double g1 = snr_.r1(u);
            const double g2 = snr_.r2(u);
            const double gsic = snr_.sic(u);
            const double le = std::log1p(ge);
            const double cs1 = std::max(0.0, (std::log1p(g1) - le) / std::numbers::ln2);
            const double cs2 = std::max(0.0, (std::log1p(g2) - le) / std::numbers::ln2);
            out.c1.add(cs1);
            out.c2.add(cs2);
            out.ct.add(cs1 + cs2);
            if (g1 <= r_th_ * ge + r_bar) ++out.outage1;
            if (g2 <= r_th_ * ge + r_bar) ++out.outage2;
            out.max_r2 = std::max(out.max_r2, g2);
            if (g2 > 0.0) {
                const double rel = (gsic - g2) / g2;
                out.max_gap = std::max(out.max_gap, std::fabs(rel));
                out.min_margin = std::min(out.min_margin, rel);
            }
            if (samples) samples[t] = g1;
        }
    }

private:
    const McSettings& st_;
    const CltMoments& m_;
    SnrMap snr_;
    DenominatorConvention convention_;
    double r_th_;
    double eve_gain_ = 0.0;
    std::optional<FSumSampler> sampler_;
};

}  // namespace

McResult mc_secrecy(const NetworkConfig& cfg, const McSettings& settings) {
    cfg.validate();
    settings.validate();
    const CltMoments m = clt_moments(cfg);
    const std::uint64_t chunk = settings.chunk_size ? settings.chunk_size : std::min(kDefaultChunk, settings.trials);
    const std::uint64_t n_chunks = (settings.trials + chunk - 1) / chunk;
    unsigned workers = settings.workers ? settings.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_chunks));

    McResult res{};
    if (settings.record_snr_r1) res.snr_r1_samples.assign(settings.trials, 0.0);
    double* samples = settings.record_snr_r1 ? res.snr_r1_samples.data() : nullptr;

    std::vector<ChunkResult> chunks(n_chunks);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        TrialRunner runner(cfg, settings, m);
        for (std::uint64_t c = next++; c < n_chunks; c = next++) {
            const std::uint64_t begin = c * chunk;
            const std::uint64_t end = std::min(settings.trials, begin + chunk);
            runner.run(begin, end, chunks[c], samples);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    ChunkResult total;
    for (const ChunkResult& c : chunks) {
        total.c1.merge(c.c1);
        total.c2.merge(c.c2);
        total.ct.merge(c.ct);
        total.outage1 += c.outage1;
        total.outage2 += c.outage2;
        total.max_r2 = std::max(total.max_r2, c.max_r2);
        total.max_gap = std::max(total.max_gap, c.max_gap);
        total.min_margin = std::min(total.min_margin, c.min_margin);
    }

    res.asc_r1 = total.c1.estimate();
    res.asc_r2 = total.c2.estimate();
    res.asc_total = total.ct.estimate();
    res.sop_r1 = proportion(total.outage1, settings.trials);
    res.sop_r2 = proportion(total.outage2, settings.trials);
    res.max_snr_r2 = total.max_r2;
    res.max_sic_gap = total.max_gap;
    res.min_sic_margin = total.min_margin;
    res.report.method = Method::mc_oracle;
    res.report.quadrature_order = 0;
    res.report.asc_r1 = res.asc_r1.value;
    res.report.asc_r2 = res.asc_r2.value;
    res.report.asc_total = res.asc_total.value;
    res.report.sop_r1 = res.sop_r1.value;
    res.report.sop_r2 = res.sop_r2.value;
    res.report.see = see_from_asc(res.asc_total.value, cfg);
    return res;
}

}  // namespace dualris
