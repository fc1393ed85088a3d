#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace qopamp::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

inline constexpr unsigned kVerifySeed = 0;
inline constexpr std::size_t kVerifyDraws = 1000;

int run_verify(const std::string& config_path, std::ostream& out, std::ostream& err);
int run_scatter(const std::string& config_path, std::optional<double> omega, std::ostream& out, std::ostream& err);
/// Writes to out_path atomically when given, otherwise to `out`.
int run_sweep(const std::string& config_path, const std::optional<std::string>& out_path, std::ostream& out,
              std::ostream& err);
int run_optimize(const std::string& config_path, std::ostream& out, std::ostream& err);

}  // namespace qopamp::cli
