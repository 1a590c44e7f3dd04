#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "paac/chain_io.hpp"
#include "paac/coder_fast.hpp"
#include "paac/coder_reference.hpp"
#include "paac/csv.hpp"
#include "paac/histogram.hpp"
#include "paac/image.hpp"
#include "paac/lossless_codec.hpp"
#include "paac/lossy.hpp"
#include "paac/model.hpp"
#include "paac/sampler.hpp"

namespace {

using namespace paac;

// Chain blobs pick the exact-rational coder for short inputs and the
// renormalizing coder beyond that; both sides derive the choice from the
// header, so encode and decode agree without a side channel.
constexpr std::uint64_t kReferenceAutoLimit = 512;

bool use_reference(const std::string& coder, std::uint64_t n) {
    if (coder == "ref") return true;
    if (coder == "fast") return false;
    return n <= kReferenceAutoLimit;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in),
            std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& b) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(b.data()),
              static_cast<std::streamsize>(b.size()));
    if (!out) throw IoError("failed writing " + path);
}

PenaltyMode penalty_from(const std::string& name) {
    if (name == "full") return PenaltyMode::Full;
    if (name == "effective") return PenaltyMode::Effective;
    throw InvalidArgument("unknown penalty mode: " + name);
}

std::pair<std::uint32_t, std::uint32_t> parse_m_range(const std::string& s) {
    const auto sep = s.find("..");
    if (sep == std::string::npos)
        throw InvalidArgument("m range must look like A..B");
    return {static_cast<std::uint32_t>(std::stoul(s.substr(0, sep))),
            static_cast<std::uint32_t>(std::stoul(s.substr(sep + 2)))};
}

std::pair<double, double> parse_real_range(const std::string& s) {
    const auto sep = s.find(',');
    if (sep == std::string::npos)
        throw InvalidArgument("range must look like a,b");
    return {std::stod(s.substr(0, sep)), std::stod(s.substr(sep + 1))};
}

int cmd_encode(const std::string& input, const std::string& output,
               bool chain_mode, std::uint32_t k, std::uint32_t m,
               const std::string& scan_str, const std::string& coder,
               const std::string& penalty) {
    if (chain_mode) {
        const SymbolChain chain = read_chain_file(input, m);
        const CodedBlob blob = use_reference(coder, chain.size())
                                   ? encode_reference(chain, k)
                                   : encode_fast(chain, k);
        write_file(output, blob.serialize());
        std::cout << "encoded chain: n=" << chain.size()
                  << " m=" << chain.alphabet_size << " k=" << k
                  << " payload_bits=" << blob.payload_bits << "\n";
        return 0;
    }

    const GrayImage image = read_pgm_file(input);
    const Scan scan = scan_from_name(scan_str);
    const SymbolChain x = linearize(image, scan);

    std::uint32_t chosen_m = m;
    if (chosen_m == 0) { // pick the partition by the two-part criterion
        const LosslessSweep sweep =
            lossless_sweep(x, {k}, 1, 256, penalty_from(penalty));
        chosen_m = sweep.per_order_best[0].m;
    }
    const Partition p = regular_partition(chosen_m);
    const std::vector<std::uint8_t> container =
        encode_lossless_image(image, k, p, scan);
    write_file(output, container);

    const double n = static_cast<double>(image.size());
    std::cout << "encoded image: " << image.cols << "x" << image.rows
              << " k=" << k << " m=" << chosen_m << " scan=" << scan_str
              << " container_bytes=" << container.size() << " ("
              << 8.0 * container.size() / n << " bpp)\n";
    return 0;
}

int cmd_decode(const std::string& input, const std::string& output,
               const std::string& coder) {
    const std::vector<std::uint8_t> bytes = read_file(input);
    if (bytes.size() >= 4 && bytes[0] == 'P' && bytes[1] == 'I' &&
        bytes[2] == 'M' && bytes[3] == '1') {
        const LosslessDecodeResult result = decode_lossless_image(bytes);
        write_pgm_file(result.image, output);
        std::cout << "decoded image: " << result.image.cols << "x"
                  << result.image.rows << " k=" << result.order
                  << " m=" << result.m << "\n";
        return 0;
    }
    const CodedBlob blob = CodedBlob::parse(bytes);
    const SymbolChain chain = use_reference(coder, blob.chain_length)
                                  ? decode_reference(blob)
                                  : decode_fast(blob);
    write_chain_file(chain, output);
    std::cout << "decoded chain: n=" << chain.size()
              << " m=" << chain.alphabet_size << " k=" << blob.order << "\n";
    return 0;
}

int cmd_gen_mmc(std::uint32_t m, std::uint32_t k, std::uint64_t n,
                std::uint64_t seed, double concentration,
                const std::string& output) {
    const ThetaParam theta = random_theta(m, k, concentration, seed);
    const SymbolChain chain = sample_mmc(theta, n, seed + 1);
    write_chain_file(chain, output);
    std::cout << "generated chain: n=" << n << " m=" << m << " k=" << k
              << " seed=" << seed << "\n";
    return 0;
}

int cmd_order_select(const std::string& input, std::uint32_t m,
                     std::uint32_t gen_order, std::uint64_t n,
                     std::uint64_t seed, double concentration,
                     std::uint32_t k_max, const std::string& penalty,
                     bool skip_paac, const std::string& csv_path) {
    SymbolChain chain;
    if (!input.empty()) {
        chain = read_chain_file(input, m);
    } else {
        if (n == 0)
            throw InvalidArgument("generator needs --n (chain length)");
        const ThetaParam theta =
            random_theta(m ? m : 2, gen_order, concentration, seed);
        chain = sample_mmc(theta, n, seed + 1);
    }

    const CodelengthFn paac_bits =
        skip_paac ? CodelengthFn{}
                  : [](const SymbolChain& c, std::uint32_t k) {
                        return codelength(c, k);
                    };
    const OrderSelectionReport report =
        select_order(chain, k_max, penalty_from(penalty), paac_bits);

    CsvWriter csv({"k", "ml_bits", "bic_bits", "paac_bits", "alpha",
                   "chosen", "ml_rate", "bic_rate", "paac_rate"});
    const double len = static_cast<double>(chain.size());
    for (const OrderRow& row : report.rows) {
        csv.field(row.k)
            .field(row.ml_bits)
            .field(row.bic_bits)
            .field(row.paac_bits ? *row.paac_bits
                                 : std::numeric_limits<double>::quiet_NaN())
            .field(row.alpha)
            .field(static_cast<int>(row.chosen))
            .field(row.ml_bits / len)
            .field(row.bic_bits / len)
            .field(row.paac_bits
                       ? *row.paac_bits / len
                       : std::numeric_limits<double>::quiet_NaN());
        csv.end_row();
    }
    if (!csv_path.empty()) csv.write_file(csv_path);
    std::cout << "chosen order: " << report.chosen_order << "\n";
    for (const OrderRow& row : report.rows)
        if (row.alpha_warning)
            std::cout << "note: alpha < 20 at k=" << row.k
                      << " (alpha=" << row.alpha << ")\n";
    return 0;
}

int cmd_lossless_sweep(const std::string& input,
                       std::vector<std::uint32_t> orders,
                       const std::string& m_range,
                       const std::string& scan_str,
                       const std::string& penalty,
                       const std::string& csv_path) {
    if (orders.empty()) orders = {0, 1, 2};
    const GrayImage image = read_pgm_file(input);
    const SymbolChain x = linearize(image, scan_from_name(scan_str));
    const auto [m_lo, m_hi] = parse_m_range(m_range);
    const LosslessSweep sweep =
        lossless_sweep(x, orders, m_lo, m_hi, penalty_from(penalty));

    CsvWriter csv({"k", "m", "crit_bits", "rate_bpp", "alpha_ok"});
    for (const LosslessSweepRow& row : sweep.rows) {
        csv.field(row.k)
            .field(row.m)
            .field(row.crit_bits)
            .field(row.rate_bpp)
            .field(static_cast<int>(row.alpha_ok));
        csv.end_row();
    }
    if (!csv_path.empty()) csv.write_file(csv_path);

    const double n = static_cast<double>(image.size());
    for (const LosslessSweepBest& best : sweep.per_order_best)
        std::cout << "k=" << best.k << ": best m=" << best.m << " at "
                  << best.crit_bits / n << " bpp\n";
    return 0;
}

int cmd_lossy_sweep(const std::string& input,
                    std::vector<std::uint32_t> orders,
                    const std::string& m_range, const std::string& scan_str,
                    const std::string& penalty,
                    const std::string& csv_path) {
    if (orders.empty()) orders = {0, 1};
    const GrayImage image = read_pgm_file(input);
    const auto [m_lo, m_hi] = parse_m_range(m_range);
    const std::vector<LossySweepRow> rows =
        rate_distortion_sweep(image, orders, m_lo, m_hi,
                              scan_from_name(scan_str),
                              penalty_from(penalty));

    CsvWriter csv({"m", "k", "bic_bits", "rate_bpp", "psnr_db"});
    for (const LossySweepRow& row : rows) {
        csv.field(row.m)
            .field(row.k)
            .field(row.bic_bits)
            .field(row.rate_bpp)
            .field(row.psnr_db);
        csv.end_row();
    }
    if (!csv_path.empty()) csv.write_file(csv_path);
    std::cout << "lossy sweep: " << rows.size() << " grid cells\n";
    return 0;
}

int cmd_histogram(const std::string& input, double gen_scale, std::uint64_t n,
                  std::uint64_t seed, std::uint32_t grid_cells,
                  const std::string& range, const std::string& csv_path) {
    const auto [a, b] = parse_real_range(range);

    std::vector<double> sample;
    if (!input.empty()) {
        std::ifstream in(input);
        if (!in) throw IoError("cannot open " + input);
        double v;
        while (in >> v) sample.push_back(v);
        if (!in.eof()) throw IoError("malformed sample file " + input);
    } else {
        if (n == 0)
            throw InvalidArgument("generator needs --n (sample size)");
        sample = sample_laplace(gen_scale, n, seed, a, b);
    }

    const HistogramGrid grid(sample, a, b, grid_cells);
    const HistogramPartition part = dp_select(grid);

    CsvWriter csv({"cut_lo", "cut_hi", "n_j", "L_j", "density", "criterion"});
    for (std::uint32_t j = 0; j < part.interval_count(); ++j) {
        csv.field(grid.cut_position(part.cuts[j]))
            .field(grid.cut_position(part.cuts[j + 1]))
            .field(part.counts[j])
            .field(part.lengths[j])
            .field(part.density(j, grid.sample_size()))
            .field(part.criterion);
        csv.end_row();
    }
    if (!csv_path.empty()) csv.write_file(csv_path);
    std::cout << "histogram: " << part.interval_count() << " intervals, "
              << "criterion=" << part.criterion << " bits\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-predictive adaptive arithmetic coding toolkit"};
    app.require_subcommand(1);

    // shared option storage
    std::string input, output, csv_path;
    std::string scan_str = "zigzag", coder = "auto", penalty = "full";
    std::string m_range = "1..256", range = "-5,5";
    std::uint32_t k = 1, k_max = 10, m = 0, gen_order = 0, grid_cells = 200;
    std::uint64_t n = 0, seed = 1;
    double concentration = 0.5, gen_scale = 1.0;
    bool chain_mode = false, skip_paac = false;
    std::vector<std::uint32_t> orders;

    auto* enc = app.add_subcommand("encode", "image or chain -> container");
    enc->add_option("--input,-i", input)->required();
    enc->add_option("--output,-o", output)->required();
    enc->add_flag("--chain", chain_mode, "treat input as a symbol chain file");
    enc->add_option("--order,-k", k, "coding order (default 1)");
    enc->add_option("--m", m, "alphabet / partition size (0 = auto)");
    enc->add_option("--scan", scan_str)->check(CLI::IsMember({"zigzag", "raster"}));
    enc->add_option("--coder", coder)->check(CLI::IsMember({"auto", "ref", "fast"}));
    enc->add_option("--penalty", penalty)->check(CLI::IsMember({"full", "effective"}));

    auto* dec = app.add_subcommand("decode", "container -> image or chain");
    dec->add_option("--input,-i", input)->required();
    dec->add_option("--output,-o", output)->required();
    dec->add_option("--coder", coder)->check(CLI::IsMember({"auto", "ref", "fast"}));

    auto* gen = app.add_subcommand("gen-mmc", "sample a random Markov chain");
    gen->add_option("--m", m)->required();
    gen->add_option("--order,-k", k, "chain order");
    gen->add_option("--n", n)->required();
    gen->add_option("--seed", seed);
    gen->add_option("--concentration", concentration, "Dirichlet concentration");
    gen->add_option("--output,-o", output)->required();

    auto* sel = app.add_subcommand("order-select", "ML/BIC/codelength per order");
    sel->add_option("--input,-i", input, "chain file (omit to generate)");
    sel->add_option("--m", m, "alphabet size (0 = infer; generator default 2)");
    sel->add_option("--gen-order", gen_order, "true order when generating");
    sel->add_option("--n", n, "generated chain length");
    sel->add_option("--seed", seed);
    sel->add_option("--concentration", concentration);
    sel->add_option("--kmax", k_max);
    sel->add_option("--penalty", penalty)->check(CLI::IsMember({"full", "effective"}));
    sel->add_flag("--skip-paac", skip_paac, "skip actual codelengths");
    sel->add_option("--csv", csv_path);

    auto* lls = app.add_subcommand("lossless-sweep", "two-part criterion grid");
    lls->add_option("--input,-i", input)->required();
    lls->add_option("--order,-k", orders, "orders to evaluate (default 0 1 2)");
    lls->add_option("--m-range", m_range, "partition sizes A..B");
    lls->add_option("--scan", scan_str)->check(CLI::IsMember({"zigzag", "raster"}));
    lls->add_option("--penalty", penalty)->check(CLI::IsMember({"full", "effective"}));
    lls->add_option("--csv", csv_path);

    auto* lsy = app.add_subcommand("lossy-sweep", "rate-distortion grid");
    lsy->add_option("--input,-i", input)->required();
    lsy->add_option("--order,-k", orders, "orders to evaluate (default 0 1)");
    lsy->add_option("--m-range", m_range, "quantizer sizes A..B");
    lsy->add_option("--scan", scan_str)->check(CLI::IsMember({"zigzag", "raster"}));
    lsy->add_option("--penalty", penalty)->check(CLI::IsMember({"full", "effective"}));
    lsy->add_option("--csv", csv_path);

    auto* his = app.add_subcommand("histogram", "MDL histogram selection");
    his->add_option("--input,-i", input, "sample file, one real per line");
    his->add_option("--gen-laplace", gen_scale, "generate Laplace sample with this scale");
    his->add_option("--n", n, "generated sample size");
    his->add_option("--seed", seed);
    his->add_option("--grid", grid_cells, "elementary cells R");
    his->add_option("--range", range, "interval a,b");
    his->add_option("--csv", csv_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (enc->parsed())
            return cmd_encode(input, output, chain_mode, k, m, scan_str,
                              coder, penalty);
        if (dec->parsed()) return cmd_decode(input, output, coder);
        if (gen->parsed())
            return cmd_gen_mmc(m, k, n, seed, concentration, output);
        if (sel->parsed())
            return cmd_order_select(input, m, gen_order, n, seed,
                                    concentration, k_max, penalty, skip_paac,
                                    csv_path);
        if (lls->parsed())
            return cmd_lossless_sweep(input, orders, m_range, scan_str,
                                      penalty, csv_path);
        if (lsy->parsed())
            return cmd_lossy_sweep(input, orders, m_range, scan_str, penalty,
                                   csv_path);
        if (his->parsed())
            return cmd_histogram(input, gen_scale, n, seed, grid_cells,
                                 range, csv_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
