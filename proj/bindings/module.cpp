#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "symineq/commands.hpp"
#include "symineq/symbolic.hpp"
#include "symineq/version.hpp"

namespace py = pybind11;

namespace {

using namespace symineq;

// Rationals cross the boundary as exact "p/q" strings; the python package
// turns them into fractions.Fraction. Reports cross as JSON text.

Partition make_partition(const std::vector<unsigned>& parts) { return Partition(parts); }

EvalPoint make_point(const std::vector<std::string>& coords) {
    EvalPoint x;
    x.reserve(coords.size());
    for (const auto& c : coords) x.push_back(rat_parse(c));
    return x;
}

std::vector<Rat> make_grid(const std::vector<std::string>& entries) {
    std::vector<Rat> grid;
    grid.reserve(entries.size());
    for (const auto& e : entries) grid.push_back(rat_parse(e));
    return grid;
}

py::dict verdict_dict(const InequalityVerdict& v) {
    py::dict d;
    d["mu"] = v.mu.parts();
    d["lambda"] = v.lambda.parts();
    d["status"] = verdict_status_name(v.status);
    if (v.witness) {
        py::dict w;
        std::vector<std::string> coords;
        for (const Rat& c : v.witness->x) coords.push_back(rat_str(c));
        w["x"] = coords;
        w["mu_value"] = rat_str(v.witness->mu_value);
        w["lambda_value"] = rat_str(v.witness->lambda_value);
        d["witness"] = w;
    } else {
        d["witness"] = py::none();
    }
    d["evidence"] = v.evidence;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact verification of inequalities among normalized symmetric functions";
    m.attr("__version__") = kVersion;
    m.attr("REPORT_SCHEMA") = kReportSchema;

    m.def(
        "partitions",
        [](unsigned d) {
            std::vector<std::vector<unsigned>> out;
            for (const Partition& p : enumerate_partitions(d)) out.push_back(p.parts());
            return out;
        },
        py::arg("d"), "partitions of d, reverse-lexicographic");

    m.def(
        "majorizes",
        [](const std::vector<unsigned>& mu, const std::vector<unsigned>& lambda) {
            return majorizes(make_partition(mu), make_partition(lambda));
        },
        py::arg("mu"), py::arg("lambda_"), "dominance order on equal-degree partitions");

    m.def(
        "counterexample_pair",
        [](unsigned d) {
            const auto pair = counterexample_pair(d);
            return py::make_tuple(pair.first.parts(), pair.second.parts());
        },
        py::arg("d"), "the incomparable pair whose inequality survives every check, d >= 8");

    m.def(
        "eval_normalized",
        [](const std::string& family, const std::vector<unsigned>& lambda,
           const std::vector<std::string>& x) {
            const EvalPoint pt = make_point(x);
            return rat_str(eval_normalized(family_from_string(family),
                                           static_cast<unsigned>(pt.size()),
                                           make_partition(lambda), pt));
        },
        py::arg("family"), py::arg("lambda_"), py::arg("x"),
        "F_lambda(x) = f_lambda(x) / f_lambda(1,...,1), exact");

    m.def(
        "normalization_constant",
        [](const std::string& family, unsigned n, const std::vector<unsigned>& lambda) {
            return rat_str(
                normalization_constant(family_from_string(family), n, make_partition(lambda)));
        },
        py::arg("family"), py::arg("n"), py::arg("lambda_"), "f_lambda(1,...,1)");

    m.def(
        "t_ratio", [](unsigned n) { return rat_str(t_ratio(n).value); }, py::arg("n"),
        "the boundary-induction ratio T(n), exact");

    m.def(
        "profile_scan",
        [](const std::vector<unsigned>& mu, const std::vector<unsigned>& lambda, unsigned n,
           const std::vector<std::string>& t_grid, const std::string& family) {
            const std::vector<Rat> grid =
                t_grid.empty() ? default_t_grid() : make_grid(t_grid);
            const ProfileScanResult r = profile_scan(make_partition(mu), make_partition(lambda),
                                                     n, grid, family_from_string(family));
            py::dict d;
            d["minimum"] = rat_str(r.minimum);
            d["t"] = rat_str(r.argmin.t);
            d["u"] = r.argmin.u;
            d["v"] = r.argmin.v;
            d["evaluations"] = r.evaluations;
            return d;
        },
        py::arg("mu"), py::arg("lambda_"), py::arg("n"),
        py::arg("t_grid") = std::vector<std::string>{}, py::arg("family") = "h",
        "exact minimum of F_mu - F_lambda over two-value profiles (t^u, 1^v)");

    m.def(
        "sample_check",
        [](const std::vector<unsigned>& mu, const std::vector<unsigned>& lambda, unsigned n,
           unsigned samples, std::uint64_t seed, const std::string& family, unsigned bound) {
            return verdict_dict(sample_check(make_partition(mu), make_partition(lambda), n,
                                             samples, seed, family_from_string(family), bound));
        },
        py::arg("mu"), py::arg("lambda_"), py::arg("n"), py::arg("samples") = 200,
        py::arg("seed") = 0, py::arg("family") = "h", py::arg("bound") = 100,
        "seeded falsifier for F_mu >= F_lambda at fixed n");

    m.def(
        "verify_dh_identity", [](unsigned n, unsigned k, unsigned i) {
            return verify_dh_identity(n, k, i);
        },
        py::arg("n"), py::arg("k"), py::arg("i"),
        "d h_k / d x_i == sum_{j<k} h_j x_i^(k-1-j), checked symbolically");

    m.def(
        "certify_d8_report",
        []() { return run_certify_d8(3, 200, std::nullopt).report.dump(); },
        "full degree-8 certificate report as JSON text");

    m.def(
        "theorem_report",
        [](unsigned d, unsigned n_lo, unsigned n_hi, unsigned samples, std::uint64_t seed) {
            SearchConfig config;
            config.samples = samples;
            config.seed = seed;
            CommandResult res = run_theorem(d, n_lo, n_hi, config);
            py::dict out;
            out["report"] = res.report.dump();
            out["exit_code"] = res.exit_code;
            return out;
        },
        py::arg("d"), py::arg("n_lo") = 1, py::arg("n_hi") = 3, py::arg("samples") = 100,
        py::arg("seed") = 0, "evidence bundle for the degree-d incomparable pair as JSON text");
}
