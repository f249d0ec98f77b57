#pragma once

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "symineq/optimizer.hpp"

namespace symineq {

// Every command returns the same triple: a machine report (stable field
// order, rationals as exact decimal strings, no timestamps, so identical
// inputs give byte-identical output), a human rendering derived from the
// same data, and the process exit code. Exit convention: 0 claim supported,
// 1 counterexample or certificate failure, 2 usage error.
struct CommandResult {
    nlohmann::ordered_json report;
    std::string human;
    int exit_code = 0;
};

CommandResult run_partitions(unsigned d);

CommandResult run_majorize(const std::string& mu_text, const std::string& lambda_text);

CommandResult run_eval(const std::string& family, const std::string& lambda_text,
                       const std::string& point_text);

CommandResult run_verify(const std::string& mu_text, const std::string& lambda_text,
                         unsigned n_lo, unsigned n_hi, const SearchConfig& config,
                         const std::string& family);

CommandResult run_certify_d8(unsigned t_lo, unsigned t_hi,
                             const std::optional<std::string>& appendix_path);

CommandResult run_theorem(unsigned d, unsigned n_lo, unsigned n_hi, const SearchConfig& config);

CommandResult run_scan(unsigned d, unsigned n_lo, unsigned n_hi, const SearchConfig& config,
                       const std::optional<std::pair<std::string, std::string>>& pair);

// "p/q,p/q,..." -> exact point; whitespace ignored
EvalPoint parse_point(const std::string& text);

}  // namespace symineq
