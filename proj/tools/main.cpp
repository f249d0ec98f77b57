#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symineq/commands.hpp"
#include "symineq/rational.hpp"
#include "symineq/version.hpp"

namespace {

using symineq::CommandResult;
using symineq::SearchConfig;

bool parse_range(const std::string& text, unsigned& lo, unsigned& hi) {
    try {
        const auto pos = text.find("..");
        if (pos == std::string::npos) {
            lo = hi = static_cast<unsigned>(std::stoul(text));
        } else {
            lo = static_cast<unsigned>(std::stoul(text.substr(0, pos)));
            hi = static_cast<unsigned>(std::stoul(text.substr(pos + 2)));
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

// Keys mirror the flags: samples, seed, t_grid, n_range, numerator_bound.
// Values from the file lose to explicitly passed flags (applied afterwards).
bool apply_config_file(const std::string& path, SearchConfig& config, std::string& n_range,
                       std::string& error) {
    std::ifstream in(path);
    if (!in) {
        error = "cannot open config file '" + path + "'";
        return false;
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        error = std::string("config file is not valid JSON: ") + e.what();
        return false;
    }
    if (!doc.is_object()) {
        error = "config file must hold a JSON object";
        return false;
    }
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "seed") {
                config.seed = value.get<std::uint64_t>();
            } else if (key == "samples") {
                config.samples = value.get<unsigned>();
            } else if (key == "numerator_bound") {
                config.bound = value.get<unsigned>();
            } else if (key == "n_range") {
                n_range = value.is_string() ? value.get<std::string>() : value.dump();
            } else if (key == "t_grid") {
                std::vector<symineq::Rat> grid;
                for (const auto& entry : value)
                    grid.push_back(symineq::rat_parse(
                        entry.is_string() ? entry.get<std::string>() : entry.dump()));
                config.t_grid = std::move(grid);
            } else {
                error = "unknown config key '" + key + "'";
                return false;
            }
        } catch (const std::exception& e) {
            error = "bad config value for '" + key + "': " + e.what();
            return false;
        }
    }
    return true;
}

int usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

int emit(const CommandResult& res, bool json) {
    if (json)
        std::cout << res.report.dump(2) << "\n";
    else
        std::cout << res.human;
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for inequalities among normalized symmetric functions"};
    app.set_version_flag("--version", std::string(symineq::kVersion));
    app.require_subcommand(1);

    bool json = false;
    std::uint64_t seed = 0;
    unsigned samples = 0;
    unsigned bound = 0;
    std::string n_range;
    std::string config_path;
    app.add_flag("--json", json, "emit the machine-readable report instead of text");
    auto* seed_opt = app.add_option("--seed", seed, "seed for sampled checks (default 0)");
    auto* samples_opt = app.add_option("--samples", samples, "sample count per n");
    auto* n_opt = app.add_option("--n", n_range, "variable counts to check, 'A..B' or 'A'");
    auto* bound_opt =
        app.add_option("--bound", bound, "numerator/denominator bound for sampled rationals");
    app.add_option("--config", config_path,
                   "JSON config file {samples, seed, t_grid, n_range, numerator_bound}");

    unsigned part_d = 0;
    auto* cmd_partitions =
        app.add_subcommand("partitions", "list Par(d) with the pairwise majorization matrix");
    cmd_partitions->fallthrough();
    cmd_partitions->add_option("d", part_d, "degree")->required();

    std::string maj_mu, maj_lambda;
    auto* cmd_majorize = app.add_subcommand("majorize", "decide whether mu majorizes lambda");
    cmd_majorize->fallthrough();
    cmd_majorize->add_option("mu", maj_mu, "partition, e.g. 2^4 or 3,1,1")->required();
    cmd_majorize->add_option("lambda", maj_lambda, "partition of the same degree")->required();

    std::string eval_family = "h", eval_lambda, eval_point;
    auto* cmd_eval =
        app.add_subcommand("eval", "evaluate a normalized symmetric function at an exact point");
    cmd_eval->fallthrough();
    cmd_eval->add_option("lambda", eval_lambda, "partition index")->required();
    cmd_eval->add_option("point", eval_point, "comma-separated rationals, e.g. 1/2,3,0")
        ->required();
    cmd_eval->add_option("--family", eval_family, "h, m, or p (default h)");

    std::string ver_mu, ver_lambda, ver_family = "h";
    auto* cmd_verify = app.add_subcommand(
        "verify", "search for violations of F_mu >= F_lambda over a range of variable counts");
    cmd_verify->fallthrough();
    cmd_verify->add_option("mu", ver_mu, "left partition")->required();
    cmd_verify->add_option("lambda", ver_lambda, "right partition, same degree")->required();
    cmd_verify->add_option("--family", ver_family, "h, m, or p (default h)");

    std::string t_range = "3..200";
    std::string appendix_path;
    auto* cmd_certify = app.add_subcommand(
        "certify-d8", "rebuild the symbolic certificate for H_{n,(2^4)} >= H_{n,(3,1^5)}");
    cmd_certify->fallthrough();
    cmd_certify->add_option("--t-range", t_range,
                            "range of n for the boundary-ratio monotonicity check");
    cmd_certify->add_option("--appendix", appendix_path,
                            "file of published coefficient expressions to compare against");

    unsigned theorem_d = 0;
    auto* cmd_theorem = app.add_subcommand(
        "theorem", "full evidence that the degree-d pair breaks the majorization correspondence");
    cmd_theorem->fallthrough();
    cmd_theorem->add_option("d", theorem_d, "degree, >= 8")->required();

    unsigned scan_d = 0;
    std::string scan_pair;
    auto* cmd_scan = app.add_subcommand(
        "scan", "sweep incomparable pairs in Par(d) for counterexample candidates");
    cmd_scan->fallthrough();
    cmd_scan->add_option("d", scan_d, "degree, >= 2")->required();
    cmd_scan->add_option("--pair", scan_pair, "restrict to one pair, 'MU:LAMBDA'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*cmd_partitions) return emit(symineq::run_partitions(part_d), json);
    if (*cmd_majorize) return emit(symineq::run_majorize(maj_mu, maj_lambda), json);
    if (*cmd_eval) return emit(symineq::run_eval(eval_family, eval_lambda, eval_point), json);

    if (*cmd_certify) {
        unsigned lo = 0, hi = 0;
        if (!parse_range(t_range, lo, hi)) return usage("bad --t-range '" + t_range + "'");
        std::optional<std::string> appendix;
        if (!appendix_path.empty()) appendix = appendix_path;
        return emit(symineq::run_certify_d8(lo, hi, appendix), json);
    }

    // The searching commands share the sampling configuration; built-in
    // defaults, then the config file, then explicit flags.
    SearchConfig config;
    std::string range;
    if (*cmd_verify) {
        config.samples = 200;
        range = "1..4";
    } else if (*cmd_theorem) {
        config.samples = 1000;
        range = "1..6";
    } else {
        config.samples = 100;
        range = "2..3";
    }
    if (!config_path.empty()) {
        std::string error;
        if (!apply_config_file(config_path, config, range, error)) return usage(error);
    }
    if (seed_opt->count()) config.seed = seed;
    if (samples_opt->count()) config.samples = samples;
    if (bound_opt->count()) config.bound = bound;
    if (n_opt->count()) range = n_range;
    unsigned n_lo = 0, n_hi = 0;
    if (!parse_range(range, n_lo, n_hi)) return usage("bad --n range '" + range + "'");

    if (*cmd_verify)
        return emit(symineq::run_verify(ver_mu, ver_lambda, n_lo, n_hi, config, ver_family),
                    json);
    if (*cmd_theorem) return emit(symineq::run_theorem(theorem_d, n_lo, n_hi, config), json);

    std::optional<std::pair<std::string, std::string>> pair;
    if (!scan_pair.empty()) {
        const auto colon = scan_pair.find(':');
        if (colon == std::string::npos)
            return usage("--pair expects 'MU:LAMBDA', got '" + scan_pair + "'");
        pair = std::make_pair(scan_pair.substr(0, colon), scan_pair.substr(colon + 1));
    }
    return emit(symineq::run_scan(scan_d, n_lo, n_hi, config, pair), json);
}
