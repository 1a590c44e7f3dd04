// Acceptance suite: one pass/fail line per criterion.
//
// Criterion 5 needs the standard 512x512 grayscale Lena image; it is skipped
// with a notice when the file is absent (set PAAC_DATA_DIR or place it at
// data/lena.pgm).
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "paac/coder_fast.hpp"
#include "paac/coder_reference.hpp"
#include "paac/histogram.hpp"
#include "paac/image.hpp"
#include "paac/lossless_codec.hpp"
#include "paac/lossy.hpp"
#include "paac/model.hpp"
#include "paac/rng.hpp"
#include "paac/sampler.hpp"

using namespace paac;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok,
            const std::string& detail) {
    std::printf("[%d] %-34s %s%s%s\n", id, name.c_str(),
                ok ? "PASS" : "FAIL", detail.empty() ? "" : " ", detail.c_str());
    if (!ok) ++failures;
}

void report_skip(int id, const std::string& name, const std::string& why) {
    std::printf("[%d] %-34s SKIP %s\n", id, name.c_str(), why.c_str());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string payload_bit_string(const CodedBlob& blob) {
    std::string bits;
    for (std::uint64_t i = 0; i < blob.payload_bits; ++i)
        bits += ((blob.payload[i / 8] >> (7 - i % 8)) & 1) ? '1' : '0';
    return bits;
}

SymbolChain random_chain(Rng& rng, std::uint32_t m, std::size_t n) {
    SymbolChain chain;
    chain.alphabet_size = m;
    for (std::size_t i = 0; i < n; ++i) {
        auto s = static_cast<Symbol>(rng.uniform01() * m);
        chain.symbols.push_back(s >= m ? m - 1 : s);
    }
    return chain;
}

// ---------------------------------------------------------------
// 1. Known-payload bit-exactness
// ---------------------------------------------------------------
void criterion_known_payloads() {
    bool ok = true;
    std::string detail;

    double best = 1e9;
    for (int rep = 0; rep < 3; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        const CodedBlob abaa = encode_reference(SymbolChain({0, 1, 0, 0}, 2), 1);
        const CodedBlob abab = encode_reference(SymbolChain({0, 1, 0, 1}, 2), 1);
        best = std::min(best, seconds_since(t0));
        ok = ok && payload_bit_string(abaa) == "01001" &&
             payload_bit_string(abab) == "0110";
    }
    ok = ok && best < 1e-3;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "(abaa=01001, abab=0110, %.3f ms)",
                  best * 1e3);
    report(1, "Known-payload bit-exactness", ok, buf);
}

// ---------------------------------------------------------------
// 2. Round-trip property suite, 1000 chains
// ---------------------------------------------------------------
void criterion_round_trip() {
    Rng rng(20240601);
    bool ok = true;
    std::int64_t worst_gap = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < 1000 && ok; ++i) {
        const std::uint32_t m = 2 + static_cast<std::uint32_t>(rng.next_u64() % 15);
        const std::uint32_t k = static_cast<std::uint32_t>(rng.next_u64() % 4);
        const std::size_t n = 1 + rng.next_u64() % 200;
        const SymbolChain chain = random_chain(rng, m, n);

        const CodedBlob ref = encode_reference(chain, k);
        const CodedBlob fast = encode_fast(chain, k);
        ok = ok && decode_reference(ref).symbols == chain.symbols;
        ok = ok && decode_fast(fast).symbols == chain.symbols;
        const auto gap = static_cast<std::int64_t>(fast.payload_bits) -
                         static_cast<std::int64_t>(ref.payload_bits);
        if (std::llabs(gap) > std::llabs(worst_gap)) worst_gap = gap;
        ok = ok && std::llabs(gap) <= 2;
    }
    const double secs = seconds_since(t0);
    ok = ok && secs < 60.0;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "(1000 chains, worst gap %+lld bits, %.1f s)",
                  static_cast<long long>(worst_gap), secs);
    report(2, "Round-trip property suite", ok, buf);
}

// ---------------------------------------------------------------
// 3. Order recovery at desk scale: BIC finds the planted order, raw ML
//    overparametrizes, coded length tracks BIC
// ---------------------------------------------------------------
void criterion_order_recovery() {
    int bic_hits = 0, ml_hits = 0;
    double worst_gap = 0.0;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const ThetaParam theta = random_theta(2, 5, 0.5, seed);
        const SymbolChain chain = sample_mmc(theta, 25000, seed + 1000);
        const OrderSelectionReport rep = select_order(
            chain, 10, PenaltyMode::Full,
            [](const SymbolChain& c, std::uint32_t k) {
                return codelength(c, k);
            });
        std::uint32_t ml_argmin = 0;
        for (const OrderRow& row : rep.rows)
            if (row.ml_bits < rep.rows[ml_argmin].ml_bits) ml_argmin = row.k;
        if (rep.chosen_order == 5) ++bic_hits;
        if (ml_argmin > 5) ++ml_hits;
        for (const OrderRow& row : rep.rows)
            if (row.k <= 7)
                worst_gap = std::max(
                    worst_gap, std::fabs(*row.paac_bits - row.bic_bits) / 25000.0);
    }
    const bool ok = bic_hits >= 18 && ml_hits >= 15 && worst_gap <= 0.05;
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "(argmin-BIC=5: %d/20, argmin-ML>5: %d/20, "
                  "max|L-BIC|/n=%.3f, %.1f s)",
                  bic_hits, ml_hits, worst_gap, seconds_since(t0));
    report(3, "Order recovery vs raw ML", ok, buf);
}

// ---------------------------------------------------------------
// 4. Lossless endpoints, exact
// ---------------------------------------------------------------
void criterion_lossless_endpoints() {
    Rng rng(77);
    bool ok = true;

    std::vector<GrayImage> corpus;
    GrayImage noise;
    noise.rows = noise.cols = 32;
    noise.pixels.resize(1024);
    for (auto& p : noise.pixels)
        p = static_cast<std::uint8_t>(rng.next_u64() & 0xFF);
    corpus.push_back(noise);

    GrayImage gradient;
    gradient.rows = 16;
    gradient.cols = 48;
    gradient.pixels.resize(768);
    for (std::uint32_t r = 0; r < 16; ++r)
        for (std::uint32_t c = 0; c < 48; ++c)
            gradient.at(r, c) = static_cast<std::uint8_t>(4 * r + 3 * c);
    corpus.push_back(gradient);

    GrayImage flat;
    flat.rows = flat.cols = 8;
    flat.pixels.assign(64, 42);
    corpus.push_back(flat);

    for (const GrayImage& img : corpus) {
        const SymbolChain x = linearize(img, Scan::Zigzag);
        const double n = static_cast<double>(x.size());
        for (std::uint32_t k : {0u, 1u, 2u})
            ok = ok && crit_lossless(x, k, regular_partition(1)) == 8.0 * n;
        ok = ok && residual_bits(x, regular_partition(256)) == 0;

        for (std::uint32_t m : {1u, 7u, 256u}) {
            const std::vector<std::uint8_t> container =
                encode_lossless_image(img, 1, regular_partition(m));
            ok = ok && decode_lossless_image(container).image == img;
        }
    }
    report(4, "Lossless endpoints (exact)", ok, "");
}

// ---------------------------------------------------------------
// 5. Lena tolerance bands
// ---------------------------------------------------------------
bool in_band(double v, double center, double tol) {
    return v >= center - tol && v <= center + tol;
}

void criterion_lena() {
    const char* env = std::getenv("PAAC_DATA_DIR");
    const std::string path =
        (env ? std::string(env) : std::string("data")) + "/lena.pgm";

    GrayImage lena;
    try {
        lena = read_pgm_file(path);
    } catch (const std::exception&) {
        report_skip(5, "Lena tolerance bands",
                    "(image not present: " + path + ")");
        return;
    }
    if (lena.rows != 512 || lena.cols != 512) {
        report(5, "Lena tolerance bands", false,
               "(image is not 512x512)");
        return;
    }

    const SymbolChain x = linearize(lena, Scan::Zigzag);
    const double n = static_cast<double>(x.size());
    bool ok = true;
    std::string detail;
    char buf[160];

    const LosslessSweep sweep = lossless_sweep(x, {0, 1}, 1, 256);
    const LosslessSweepBest& best0 = sweep.per_order_best[0];
    const LosslessSweepBest& best1 = sweep.per_order_best[1];
    const double rate0 = best0.crit_bits / n;
    const double rate1 = best1.crit_bits / n;
    ok = ok && best1.m >= 35 && best1.m <= 70 && in_band(rate1, 5.4, 0.4);
    ok = ok && best0.m >= 150 && best0.m <= 256 && in_band(rate0, 7.0, 0.4);
    std::snprintf(buf, sizeof(buf), "(k1: m=%u %.2fbpp, k0: m=%u %.2fbpp",
                  best1.m, rate1, best0.m, rate0);
    detail += buf;

    const std::vector<LossySweepRow> rd3 =
        rate_distortion_sweep(lena, {0, 1}, 3, 3);
    const std::vector<LossySweepRow> rd13 =
        rate_distortion_sweep(lena, {0, 1}, 13, 13);
    const double psnr3 = rd3[0].psnr_db, psnr13 = rd13[0].psnr_db;
    const double r3k1 = rd3[1].rate_bpp;
    const double r13k0 = rd13[0].rate_bpp, r13k1 = rd13[1].rate_bpp;
    ok = ok && in_band(psnr3, 22.11, 0.5) && in_band(r3k1, 0.43, 0.15);
    ok = ok && in_band(psnr13, 33.15, 0.5) && in_band(r13k1, 1.39, 0.3) &&
         in_band(r13k0, 3.18, 0.3);
    std::snprintf(buf, sizeof(buf),
                  "; m3: %.2fdB %.2fbpp, m13: %.2fdB k1=%.2f k0=%.2fbpp)",
                  psnr3, r3k1, psnr13, r13k1, r13k0);
    detail += buf;

    report(5, "Lena tolerance bands", ok, detail);
}

// ---------------------------------------------------------------
// 6. Histogram DP oracle equivalence
// ---------------------------------------------------------------
void criterion_histogram_oracle() {
    Rng rng(555);
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    for (int trial = 0; trial < 200 && ok; ++trial) {
        const std::uint32_t R = 1 + static_cast<std::uint32_t>(rng.next_u64() % 12);
        const std::size_t n = 1 + rng.next_u64() % 100;
        const double a = -1.0 - rng.uniform01();
        const double b = 1.0 + rng.uniform01();
        std::vector<double> sample(n);
        for (double& v : sample) v = a + (b - a) * rng.uniform01();

        const HistogramGrid grid(sample, a, b, R);
        const HistogramPartition dp = dp_select(grid);
        const oracle::BruteForceResult brute =
            oracle::brute_force_histogram(grid);
        ok = ok && dp.criterion == brute.criterion && dp.cuts == brute.cuts;
    }
    const double secs = seconds_since(t0);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "(200 grids, exact match, %.1f s)", secs);
    report(6, "Histogram DP oracle equivalence", ok && secs < 60.0, buf);
}

// ---------------------------------------------------------------
// 7. Histogram complexity and Laplace shape
// ---------------------------------------------------------------
void criterion_histogram_complexity() {
    const std::vector<double> sample =
        sample_laplace(1.0, 2000, 7, -5.0, 5.0);
    const HistogramGrid grid(sample, -5.0, 5.0, 200);

    const auto t0 = std::chrono::steady_clock::now();
    const HistogramPartition part = dp_select(grid);
    const double secs = seconds_since(t0);

    bool ok = part.cost_evaluations <= 200ull * 201 / 2 && secs < 1.0;

    double min_near_mode = 1e300, max_tail = 0.0;
    for (std::uint32_t j = 0; j < part.interval_count(); ++j) {
        const double lo = grid.cut_position(part.cuts[j]);
        const double hi = grid.cut_position(part.cuts[j + 1]);
        if (lo <= 1.0 && hi >= -1.0)
            min_near_mode = std::min(min_near_mode, part.lengths[j]);
        if (hi <= -2.5 || lo >= 2.5)
            max_tail = std::max(max_tail, part.lengths[j]);
    }
    ok = ok && min_near_mode < max_tail;

    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "(%llu cost evals <= %d, %.3f s, mode cell %.2f < tail "
                  "cell %.2f)",
                  static_cast<unsigned long long>(part.cost_evaluations),
                  200 * 201 / 2, secs, min_near_mode, max_tail);
    report(7, "Histogram complexity + shape", ok, buf);
}

// ---------------------------------------------------------------
// 8. Adaptive-coder analytic check
// ---------------------------------------------------------------
void criterion_constant_chain() {
    bool ok = true;
    for (std::uint64_t n = 1; n <= 100; ++n) {
        SymbolChain chain;
        chain.alphabet_size = 2;
        chain.symbols.assign(n, 0);
        const CodedBlob blob = encode_reference(chain, 0);
        const auto expected = static_cast<std::uint64_t>(
            std::ceil(std::log2(static_cast<double>(n + 1))));
        ok = ok && blob.payload_bits == expected;
        ok = ok && decode_reference(blob).symbols == chain.symbols;
    }
    report(8, "Constant-chain analytic length", ok,
           "(L = ceil(log2(n+1)), n = 1..100)");
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_known_payloads();
    criterion_round_trip();
    criterion_order_recovery();
    criterion_lossless_endpoints();
    criterion_lena();
    criterion_histogram_oracle();
    criterion_histogram_complexity();
    criterion_constant_chain();
    std::printf("%s (%d failure%s)\n", failures == 0 ? "OK" : "FAILED",
                failures, failures == 1 ? "" : "s");
    return failures == 0 ? 0 : 1;
}
