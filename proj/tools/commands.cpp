#include "commands.hpp"

#include <openssl/evp.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qopamp/config_io.hpp"
#include "qopamp/invariants.hpp"
#include "qopamp/noise_analysis.hpp"

namespace qopamp::cli {

namespace {

struct Loaded {
    std::string bytes;
    RunConfig config;
};

// Reads and parses the config; prints a located message and returns nullopt
// on any failure.
std::optional<Loaded> load(const std::string& path, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot open config file " << path << "\n";
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    Loaded loaded{buf.str(), {}};
    try {
        loaded.config = parse_config(loaded.bytes);
    } catch (const ConfigError& e) {
        err << "error: " << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
    return loaded;
}

std::string sha256_hex(const std::string& bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr);
    std::string hex;
    char pair[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(pair, sizeof pair, "%02x", digest[i]);
        hex += pair;
    }
    return hex;
}

std::string sig6(double v) {
    if (v == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string format_complex(complex c) {
    if (c.imag() == 0.0) return sig6(c.real());
    if (c.real() == 0.0) return sig6(c.imag()) + "i";
    std::string im = sig6(c.imag());
    if (im.front() != '-') im.insert(im.begin(), '+');
    return sig6(c.real()) + im + "i";
}

std::string fixed6(double v) {
    char buf[64];
    // keep "-0.000000" out of reports
    std::snprintf(buf, sizeof buf, "%.6f", std::abs(v) < 5e-7 ? 0.0 : v);
    return buf;
}

}  // namespace

int run_verify(const std::string& config_path, std::ostream& out, std::ostream& err) {
    const auto loaded = load(config_path, err);
    if (!loaded) return kUsageError;
    const RunConfig& cfg = loaded->config;

    const InvariantSummary s = check_invariants(cfg.params, verification_grid(), kVerifyDraws, kVerifySeed);
    const bool ok = s.within(cfg.tolerance);

    char line[160];
    out << "seed = " << kVerifySeed << ", random draws = " << kVerifyDraws << ", evaluations = " << s.evaluations
        << "\n";
    std::snprintf(line, sizeof line, "max bogoliubov residual      = %.6e (scaled by row norms)\n", s.max_bogoliubov);
    out << line;
    std::snprintf(line, sizeof line, "max bogoliubov residual, abs = %.6e (not gated)\n", s.max_bogoliubov_absolute);
    out << line;
    std::snprintf(line, sizeof line, "max formula-vs-solver dev    = %.6e\n", s.max_solver_deviation);
    out << line;
    std::snprintf(line, sizeof line, "max sigma formula-vs-modes   = %.6e\n", s.max_sigma_deviation);
    out << line;
    std::snprintf(line, sizeof line, "tolerance                    = %.6e\n", cfg.tolerance);
    out << line;
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kSuccess : kVerificationFailed;
}

int run_scatter(const std::string& config_path, std::optional<double> omega, std::ostream& out, std::ostream& err) {
    if (omega && !(*omega > 0.0 && std::isfinite(*omega))) {
        err << "error: --omega must be positive\n";
        return kUsageError;
    }
    const auto loaded = load(config_path, err);
    if (!loaded) return kUsageError;
    const RunConfig& cfg = loaded->config;
    const double w = omega.value_or(cfg.sweep.omega_min);

    const ScatteringRelation rel = scattering_transcribed(cfg.params, w);
    out << "omega = " << sig6(w) << " rad/s\n";
    out << "columns: l r f a b+\n";
    const std::pair<const char*, const FieldExpr*> rows[] = {
        {"l", &rel.out_l}, {"r", &rel.out_r}, {"f", &rel.out_f}};
    for (const auto& [name, row] : rows) {
        out << name << "_out: [";
        for (PortId p : kAllPorts) {
            const complex c = p == PortId::noise_b ? row->v(p) : row->u(p);
            out << format_complex(c) << (p == PortId::noise_b ? "" : ", ");
        }
        out << "]\n";
    }
    out << "row norms:";
    for (const auto& [name, row] : rows) {
        out << " " << name << " = " << fixed6(commutator(*row, adjoint(*row)).real());
    }
    out << "\n";
    return kSuccess;
}

int run_sweep(const std::string& config_path, const std::optional<std::string>& out_path, std::ostream& out,
              std::ostream& err) {
    const auto loaded = load(config_path, err);
    if (!loaded) return kUsageError;
    const std::string csv = write_csv(sweep(loaded->config.params, loaded->config.sweep));
    if (!out_path) {
        out << csv;
        return kSuccess;
    }

    namespace fs = std::filesystem;
    const fs::path target(*out_path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file || !(file << csv) || !file.flush()) {
            err << "error: cannot write " << tmp.string() << "\n";
            std::error_code ignored;
            fs::remove(tmp, ignored);
            return kUsageError;
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        err << "error: cannot move output into place at " << target.string() << ": " << ec.message() << "\n";
        fs::remove(tmp, ec);
        return kUsageError;
    }
    return kSuccess;
}

int run_optimize(const std::string& config_path, std::ostream& out, std::ostream& err) {
    const auto loaded = load(config_path, err);
    if (!loaded) return kUsageError;
    const RunConfig& cfg = loaded->config;
    const double w = cfg.sweep.omega_min;

    const MatchingOptimum opt = optimize_matching(cfg.params, w);
    const double sigma_l = thermal_sigma(cfg.params.env.temperature(PortId::signal_l), w, cfg.params.constants);
    const double nf = noise_figure_db(opt.sigma_star, sigma_l);
    const double matched_R0 = cfg.params.R_l * std::exp(-2.0 * opt.xi_star);

    char line[200];
    out << "config sha256 = " << sha256_hex(loaded->bytes) << "\n";
    out << "omega = " << sig6(w) << " rad/s\n";
    std::snprintf(line, sizeof line, "xi* = %s, sigma* = %s, NF = %.4f dB\n", fixed6(opt.xi_star).c_str(),
                  fixed6(opt.sigma_star).c_str(), nf);
    out << line;
    out << "matched R_0 = " << sig6(matched_R0) << " ohm\n";
    return kSuccess;
}

}  // namespace qopamp::cli
