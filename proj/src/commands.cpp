#include "symineq/commands.hpp"

#include <sstream>
#include <stdexcept>

#include "symineq/version.hpp"

namespace symineq {

namespace {

using nlohmann::ordered_json;

ordered_json report_skeleton(const std::string& command, ordered_json inputs,
                             std::uint64_t seed) {
    return {{"schema", kReportSchema},
            {"command", command},
            {"inputs", std::move(inputs)},
            {"seed", seed},
            {"version", kVersion}};
}

CommandResult usage_error(const std::string& command, const std::string& message) {
    CommandResult res;
    res.report = {{"schema", kReportSchema},
                  {"command", command},
                  {"error", message},
                  {"version", kVersion}};
    res.human = "error: " + message + "\n";
    res.exit_code = 2;
    return res;
}

ordered_json point_json(const EvalPoint& x) {
    ordered_json arr = ordered_json::array();
    for (const Rat& c : x) arr.push_back(rat_str(c));
    return arr;
}

ordered_json witness_json(const Witness& w) {
    return {{"x", point_json(w.x)},
            {"mu_value", rat_str(w.mu_value)},
            {"lambda_value", rat_str(w.lambda_value)}};
}

ordered_json verdict_json(const InequalityVerdict& v) {
    ordered_json out = {{"mu", v.mu.str()},
                        {"lambda", v.lambda.str()},
                        {"n_lo", v.n_lo},
                        {"n_hi", v.n_hi},
                        {"status", verdict_status_name(v.status)}};
    if (v.witness) out["witness"] = witness_json(*v.witness);
    out["evidence"] = v.evidence;
    return out;
}

std::string witness_human(const Witness& w) {
    std::string xs;
    for (const Rat& c : w.x) {
        if (!xs.empty()) xs += ",";
        xs += rat_str(c);
    }
    return "witness x = (" + xs + "): mu value " + rat_str(w.mu_value) + " < lambda value " +
           rat_str(w.lambda_value);
}

}  // namespace

EvalPoint parse_point(const std::string& text) {
    EvalPoint x;
    std::string cleaned;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) cleaned += ch;
    if (cleaned.empty()) throw std::invalid_argument("empty evaluation point");
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty coordinate in point '" + text + "'");
        x.push_back(rat_parse(item));
    }
    if (cleaned.back() == ',') throw std::invalid_argument("trailing comma in point '" + text + "'");
    return x;
}

CommandResult run_partitions(unsigned d) {
    if (d == 0) return usage_error("partitions", "d must be >= 1");
    const std::vector<Partition> all = enumerate_partitions(d);
    ordered_json parts = ordered_json::array();
    for (const Partition& p : all) parts.push_back(p.str());
    ordered_json matrix = ordered_json::array();
    for (const Partition& mu : all) {
        ordered_json row = ordered_json::array();
        for (const Partition& la : all) row.push_back(majorizes(mu, la));
        matrix.push_back(std::move(row));
    }
    CommandResult res;
    res.report = report_skeleton("partitions", {{"d", d}}, 0);
    res.report["result"] = {{"count", all.size()},
                            {"partitions", parts},
                            {"majorization_matrix", matrix}};
    std::string h = "partitions of " + std::to_string(d) + " (" + std::to_string(all.size()) +
                    "), reverse-lexicographic:\n";
    for (std::size_t i = 0; i < all.size(); ++i)
        h += "  [" + std::to_string(i) + "] (" + all[i].block_str() + ")\n";
    h += "majorization matrix (row >= column):\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
        h += "  ";
        for (std::size_t j = 0; j < all.size(); ++j)
            h += res.report["result"]["majorization_matrix"][i][j].get<bool>() ? '1' : '.';
        h += "  (" + all[i].block_str() + ")\n";
    }
    res.human = std::move(h);
    return res;
}

CommandResult run_majorize(const std::string& mu_text, const std::string& lambda_text) {
    Partition mu, lambda;
    try {
        mu = Partition::parse(mu_text);
        lambda = Partition::parse(lambda_text);
        if (mu.degree() != lambda.degree())
            throw std::domain_error("partitions have different degrees (" +
                                    std::to_string(mu.degree()) + " vs " +
                                    std::to_string(lambda.degree()) + ")");
    } catch (const std::exception& e) {
        return usage_error("majorize", e.what());
    }
    const bool holds = majorizes(mu, lambda);
    CommandResult res;
    res.report = report_skeleton("majorize", {{"mu", mu.str()}, {"lambda", lambda.str()}}, 0);
    ordered_json mu_prefix = ordered_json::array(), la_prefix = ordered_json::array();
    unsigned long pm = 0, pl = 0;
    const unsigned d = mu.degree();
    for (unsigned j = 0; j < d; ++j) {
        pm += j < mu.length() ? mu.parts()[j] : 0;
        pl += j < lambda.length() ? lambda.parts()[j] : 0;
        mu_prefix.push_back(pm);
        la_prefix.push_back(pl);
    }
    res.report["result"] = {{"majorizes", holds},
                            {"mu_prefix_sums", mu_prefix},
                            {"lambda_prefix_sums", la_prefix}};
    res.human = "(" + mu.block_str() + ") majorizes (" + lambda.block_str() + "): " +
                (holds ? "true" : "false") + "\n";
    res.exit_code = holds ? 0 : 1;
    return res;
}

CommandResult run_eval(const std::string& family, const std::string& lambda_text,
                       const std::string& point_text) {
    Family fam;
    Partition lambda;
    EvalPoint x;
    Rat raw, norm, value;
    try {
        fam = family_from_string(family);
        lambda = Partition::parse(lambda_text);
        x = parse_point(point_text);
        raw = raw_eval(fam, lambda, x);
        norm = normalization_constant(fam, static_cast<unsigned>(x.size()), lambda);
        value = raw / norm;
    } catch (const std::exception& e) {
        return usage_error("eval", e.what());
    }
    CommandResult res;
    res.report = report_skeleton(
        "eval", {{"family", family_name(fam)}, {"lambda", lambda.str()}, {"point", point_json(x)}},
        0);
    res.report["result"] = {{"n", x.size()},
                            {"raw", rat_str(raw)},
                            {"normalization_constant", rat_str(norm)},
                            {"normalized", rat_str(value)}};
    res.human = family_name(fam) + "_{" + std::to_string(x.size()) + ",(" + lambda.block_str() +
                ")} raw = " + rat_str(raw) + ", normalization " + rat_str(norm) +
                ", normalized = " + rat_str(value) + "\n";
    return res;
}

CommandResult run_verify(const std::string& mu_text, const std::string& lambda_text,
                         unsigned n_lo, unsigned n_hi, const SearchConfig& config,
                         const std::string& family) {
    Partition mu, lambda;
    Family fam;
    try {
        mu = Partition::parse(mu_text);
        lambda = Partition::parse(lambda_text);
        fam = family_from_string(family);
        if (mu.degree() != lambda.degree())
            throw std::domain_error("partitions have different degrees (" +
                                    std::to_string(mu.degree()) + " vs " +
                                    std::to_string(lambda.degree()) + ")");
        if (n_lo == 0 || n_hi < n_lo) throw std::domain_error("need 1 <= n_lo <= n_hi");
        if (fam == Family::monomial &&
            (mu.length() > n_lo || lambda.length() > n_lo))
            throw std::domain_error(
                "monomial family needs n >= max partition length (" +
                std::to_string(std::max(mu.length(), lambda.length())) + ")");
    } catch (const std::exception& e) {
        return usage_error("verify", e.what());
    }
    CommandResult res;
    res.report = report_skeleton("verify",
                                 {{"mu", mu.str()},
                                  {"lambda", lambda.str()},
                                  {"family", family_name(fam)},
                                  {"n_lo", n_lo},
                                  {"n_hi", n_hi},
                                  {"samples", config.samples},
                                  {"bound", config.bound}},
                                 config.seed);
    const bool comparable = majorizes(mu, lambda);
    const std::vector<Rat> grid = config.t_grid.empty() ? default_t_grid() : config.t_grid;
    ordered_json verdicts = ordered_json::array();
    bool any_violation = false;
    std::string h = "verify " + family_name(fam) + ": (" + mu.block_str() + ") >= (" +
                    lambda.block_str() + ")  [mu majorizes lambda: " +
                    (comparable ? "true" : "false") + "]\n";
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        InequalityVerdict v = sample_check(mu, lambda, n, config.samples, config.seed + n, fam,
                                           config.bound);
        if (v.status == VerdictStatus::holds_on_evidence) {
            const ProfileScanResult scan = profile_scan(mu, lambda, n, grid, fam);
            if (sgn(scan.minimum) < 0) {
                const EvalPoint x = scan.argmin.point();
                v.status = VerdictStatus::counterexample_found;
                v.witness = Witness{x, eval_normalized(fam, n, mu, x),
                                    eval_normalized(fam, n, lambda, x)};
                v.evidence.push_back("profile grid violation at " + scan.argmin.str());
            } else {
                v.evidence.push_back("profile grid minimum " + rat_str(scan.minimum) + " at " +
                                     scan.argmin.str() + " (" +
                                     std::to_string(scan.evaluations) + " evaluations)");
            }
        }
        any_violation = any_violation || v.status == VerdictStatus::counterexample_found;
        verdicts.push_back(verdict_json(v));
        h += "  n=" + std::to_string(n) + ": " + verdict_status_name(v.status);
        if (v.witness) h += "; " + witness_human(*v.witness);
        h += "\n";
    }
    res.report["result"] = {{"majorizes", comparable},
                            {"verdicts", verdicts},
                            {"overall", any_violation ? "counterexample_found"
                                                      : "holds_on_evidence"}};
    res.human = std::move(h);
    res.exit_code = any_violation ? 1 : 0;
    return res;
}

CommandResult run_certify_d8(unsigned t_lo, unsigned t_hi,
                             const std::optional<std::string>& appendix_path) {
    D8Certificate cert;
    try {
        if (t_lo < 2 || t_hi < t_lo) throw std::domain_error("t-range needs 2 <= lo <= hi");
        if (appendix_path)
            cert = build_d8_certificate(t_lo, t_hi, load_appendix_file(*appendix_path));
        else
            cert = build_d8_certificate(t_lo, t_hi);
    } catch (const std::exception& e) {
        return usage_error("certify-d8", e.what());
    }
    CommandResult res;
    ordered_json inputs = {{"t_lo", t_lo}, {"t_hi", t_hi}};
    if (appendix_path) inputs["coefficient_file"] = *appendix_path;
    res.report = report_skeleton("certify-d8", std::move(inputs), 0);
    res.report["result"] = cert.to_json();
    std::string h = "degree-8 certificate: H_{n,(2^4)} >= H_{n,(3,1^5)} for all n\n";
    for (const auto& s : cert.steps)
        h += "  [" + std::string(s.passed ? "pass" : "FAIL") + "] " + s.name + ": " + s.evidence +
             "\n";
    h += cert.valid ? "certificate VALID\n" : "certificate INVALID\n";
    res.human = std::move(h);
    res.exit_code = cert.valid ? 0 : 1;
    return res;
}

CommandResult run_theorem(unsigned d, unsigned n_lo, unsigned n_hi, const SearchConfig& config) {
    if (d < 8)
        return usage_error("theorem",
                           "the construction needs d >= 8 (below that, majorization is known to "
                           "characterize these inequalities)");
    TheoremEvidence ev;
    try {
        ev = verify_counterexample(d, n_lo, n_hi, config);
    } catch (const std::exception& e) {
        return usage_error("theorem", e.what());
    }
    CommandResult res;
    res.report = report_skeleton(
        "theorem",
        {{"d", d}, {"n_lo", n_lo}, {"n_hi", n_hi}, {"samples", config.samples}},
        config.seed);
    res.report["result"] = {{"mu", ev.verdict.mu.str()},
                            {"lambda", ev.verdict.lambda.str()},
                            {"majorizes", !ev.majorization_fails},
                            {"verdict", verdict_json(ev.verdict)},
                            {"chain", ev.chain},
                            {"chain_ok", ev.chain_ok},
                            {"certificate", ev.certificate.to_json()},
                            {"ok", ev.ok()}};
    std::string h = "degree " + std::to_string(d) + " pair: mu = (" + ev.verdict.mu.block_str() +
                    "), lambda = (" + ev.verdict.lambda.block_str() + ")\n";
    h += "  mu majorizes lambda: " + std::string(ev.majorization_fails ? "false" : "true") + "\n";
    h += "  inequality evidence over n in [" + std::to_string(n_lo) + ", " +
         std::to_string(n_hi) + "]: " + verdict_status_name(ev.verdict.status) + "\n";
    for (const auto& line : ev.verdict.evidence) h += "    " + line + "\n";
    h += "  reduction chain:\n";
    for (const auto& line : ev.chain) h += "    " + line + "\n";
    h += "  degree-8 certificate: " + std::string(ev.certificate.valid ? "valid" : "INVALID") +
         "\n";
    h += ev.ok() ? "claim supported: the pair is incomparable yet the inequality holds on all "
                   "evidence\n"
                 : "CLAIM NOT SUPPORTED: see evidence above\n";
    res.human = std::move(h);
    res.exit_code = ev.ok() ? 0 : 1;
    return res;
}

CommandResult run_scan(unsigned d, unsigned n_lo, unsigned n_hi, const SearchConfig& config,
                       const std::optional<std::pair<std::string, std::string>>& pair) {
    std::optional<std::pair<Partition, Partition>> only;
    try {
        if (d < 2) throw std::domain_error("scan needs d >= 2");
        if (pair) {
            Partition mu = Partition::parse(pair->first);
            Partition lambda = Partition::parse(pair->second);
            if (mu.degree() != d || lambda.degree() != d)
                throw std::domain_error("pair filter must consist of partitions of d");
            only = std::make_pair(std::move(mu), std::move(lambda));
        }
    } catch (const std::exception& e) {
        return usage_error("scan", e.what());
    }
    ScanResult scan;
    try {
        scan = scan_incomparable(d, n_lo, n_hi, config, only);
    } catch (const std::exception& e) {
        return usage_error("scan", e.what());
    }
    CommandResult res;
    ordered_json inputs = {{"d", d},
                           {"n_lo", n_lo},
                           {"n_hi", n_hi},
                           {"samples", config.samples}};
    if (only)
        inputs["pair"] = {{"mu", only->first.str()}, {"lambda", only->second.str()}};
    res.report = report_skeleton("scan", std::move(inputs), config.seed);
    ordered_json falsified = ordered_json::array(), unfalsified = ordered_json::array();
    for (const ScanEntry& e : scan.falsified) falsified.push_back(verdict_json(e.verdict));
    for (const ScanEntry& e : scan.unfalsified) unfalsified.push_back(verdict_json(e.verdict));
    res.report["result"] = {{"pairs_scanned", scan.falsified.size() + scan.unfalsified.size()},
                            {"falsified", falsified},
                            {"unfalsified", unfalsified}};
    std::string h = "scan d=" + std::to_string(d) + ", n in [" + std::to_string(n_lo) + ", " +
                    std::to_string(n_hi) + "]: " +
                    std::to_string(scan.falsified.size() + scan.unfalsified.size()) +
                    " ordered pairs with mu not majorizing lambda\n";
    h += "falsified (" + std::to_string(scan.falsified.size()) + "):\n";
    for (const ScanEntry& e : scan.falsified) {
        h += "  (" + e.mu.block_str() + ") vs (" + e.lambda.block_str() + ")";
        if (e.verdict.witness) h += ": " + witness_human(*e.verdict.witness);
        h += "\n";
    }
    h += "unfalsified candidates (" + std::to_string(scan.unfalsified.size()) + "):\n";
    for (const ScanEntry& e : scan.unfalsified)
        h += "  (" + e.mu.block_str() + ") vs (" + e.lambda.block_str() + ")\n";
    res.human = std::move(h);
    res.exit_code = 0;
    return res;
}

}  // namespace symineq
