#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "symineq/optimizer.hpp"
#include "symineq/partition.hpp"
#include "symineq/rational.hpp"
#include "symineq/sampling.hpp"
#include "symineq/symmetric.hpp"

using namespace symineq;

TEST_CASE("profile points expand to two-value vectors") {
    const ProfilePoint p{rat(3, 2), 2, 1};
    const EvalPoint x = p.point();
    REQUIRE(x.size() == 3);
    CHECK(x[0] == rat(3, 2));
    CHECK(x[1] == rat(3, 2));
    CHECK(x[2] == 1);

    const EvalPoint s = p.simplex_point();
    Rat sum = 0;
    for (const auto& v : s) sum += v;
    CHECK(sum == 1);
    CHECK(s[0] == rat(3, 8));

    const ProfilePoint zero{0, 1, 0};
    CHECK(zero.point() == EvalPoint{0});
    CHECK_THROWS_AS(zero.simplex_point(), std::domain_error);
}

TEST_CASE("default grid has 70 distinct nonnegative values") {
    const auto grid = default_t_grid();
    CHECK(grid.size() == 70);
    const std::set<Rat> dedup(grid.begin(), grid.end());
    CHECK(dedup.size() == 70);
    for (const auto& t : grid) CHECK(t >= 0);
    for (long probe : {0L, 1L, 2L, 5L, 10L, 100L, 1000L, 10000L})
        CHECK(dedup.count(Rat(probe)) == 1);
    CHECK(dedup.count(rat(1, 16)) == 1);
    CHECK(dedup.count(rat(29, 16)) == 1);
    CHECK(dedup.count(Rat(4)) == 1);
}

TEST_CASE("profile scan confirms the degree-8 pair stays nonnegative") {
    const auto [mu, la] = counterexample_pair(8);
    const auto res = profile_scan(mu, la, 3, default_t_grid());
    CHECK(res.minimum == 0);
    CHECK(res.evaluations == 3 * 70);
}

TEST_CASE("profile scan exposes the reversed remark pair") {
    // swapping the incomparable pair makes the difference go negative
    const Partition mu({2, 2, 2});
    const Partition la({3, 1, 1, 1});

    const auto res = profile_scan(mu, la, 3, {Rat(2)});
    CHECK(res.minimum < 0);
    CHECK(res.argmin.t == 2);

    // the grid minimum at t = 2 is attained at u = 1: the point (2, 1, 1)
    const EvalPoint x = res.argmin.point();
    const auto [hm, hl] = eval_normalized_pair(Family::complete_h, mu, la, x);
    CHECK(hm - hl == res.minimum);

    // frozen exact value at (2,1,1): 6655/1080 - 832/135 = -1/1080
    const EvalPoint probe = {2, 1, 1};
    const Rat diff = eval_normalized(Family::complete_h, 3, mu, probe) -
                     eval_normalized(Family::complete_h, 3, la, probe);
    CHECK(diff == rat(-1, 1080));

    // full default grid finds a deeper minimum nearby
    const auto full = profile_scan(mu, la, 3, default_t_grid());
    CHECK(full.minimum < 0);
    CHECK(full.minimum <= res.minimum);
    CHECK(rat_str(full.minimum) == "-28778503/18119393280");
    CHECK(full.argmin.t == rat(29, 16));
    CHECK(full.argmin.u == 1);
    CHECK(full.argmin.v == 2);
}

TEST_CASE("profile scan input validation") {
    const Partition mu({2, 2, 2});
    const Partition la({3, 1, 1, 1});
    CHECK_THROWS_AS(profile_scan(mu, Partition({3, 1}), 3, default_t_grid()), std::domain_error);
    CHECK_THROWS_AS(profile_scan(mu, la, 3, {rat(-1, 2)}), std::domain_error);
    CHECK_THROWS_AS(profile_scan(mu, la, 3, {}), std::domain_error);
    // t = 1 only probes all-ones points, where the difference vanishes
    const auto res = profile_scan(mu, la, 3, {Rat(1)});
    CHECK(res.minimum == 0);
}

TEST_CASE("sampling holds for true dominance inequalities") {
    const auto v = sample_check(Partition({3}), Partition({2, 1}), 3, 60, 7);
    CHECK(v.status == VerdictStatus::holds_on_evidence);
    CHECK_FALSE(v.witness.has_value());
    CHECK(v.n_lo == 3);
    CHECK(v.n_hi == 3);
}

TEST_CASE("sampling finds the monomial corner witness immediately") {
    // the monomial family reverses the dominance direction; the corner
    // (1,1,0) separates m_(1,1,1) from m_(2,1)
    const auto v = sample_check(Partition({1, 1, 1}), Partition({2, 1}), 3, 50, 0,
                                Family::monomial);
    REQUIRE(v.status == VerdictStatus::counterexample_found);
    REQUIRE(v.witness.has_value());
    const auto& w = *v.witness;
    CHECK(w.x == EvalPoint{1, 1, 0});
    CHECK(w.mu_value == 0);
    CHECK(w.lambda_value == rat(1, 3));
    CHECK(w.mu_value < w.lambda_value);
}

TEST_CASE("sampling keeps the incomparable survivor clean") {
    const auto v = sample_check(Partition({4, 4}), Partition({5, 2, 1}), 3, 150, 11);
    CHECK(v.status == VerdictStatus::holds_on_evidence);
    CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("sampling is deterministic in the seed") {
    const Partition mu({2, 2, 2});
    const Partition la({3, 1, 1, 1});
    const auto a = sample_check(la, mu, 3, 80, 12345);
    const auto b = sample_check(la, mu, 3, 80, 12345);
    CHECK(a.status == b.status);
    CHECK(a.witness.has_value() == b.witness.has_value());
    if (a.witness && b.witness) {
        CHECK(a.witness->x == b.witness->x);
        CHECK(a.witness->mu_value == b.witness->mu_value);
    }
}

TEST_CASE("witnesses are exact violations") {
    // reversed remark pair: a violation exists and any reported witness must
    // evaluate to an exact strict inequality
    const auto v = sample_check(Partition({2, 2, 2}), Partition({3, 1, 1, 1}), 3, 400, 3);
    if (v.status == VerdictStatus::counterexample_found) {
        REQUIRE(v.witness.has_value());
        const auto& w = *v.witness;
        CHECK(eval_normalized(Family::complete_h, 3, Partition({2, 2, 2}), w.x) == w.mu_value);
        CHECK(eval_normalized(Family::complete_h, 3, Partition({3, 1, 1, 1}), w.x) ==
              w.lambda_value);
        CHECK(w.mu_value < w.lambda_value);
        CHECK(is_nonnegative(w.x));
    }
}

TEST_CASE("boundary induction identity at concrete points") {
    CHECK(boundary_identity_check(3, {2, 1, 0}));
    CHECK(boundary_identity_check(3, {rat(5, 2), rat(1, 3), 0}));
    CHECK(boundary_identity_check(4, {3, 2, 1, 0}));
    CHECK(boundary_identity_check(5, {1, 1, 2, 3, 0}));

    RatSampler sam(51);
    for (unsigned n = 3; n <= 5; ++n) {
        for (int rep = 0; rep < 15; ++rep) {
            EvalPoint p = sam.nonneg_point(n - 1, 30);
            p.push_back(0);
            CHECK(boundary_identity_check(n, p));
        }
    }

    CHECK_THROWS_AS(boundary_identity_check(3, {2, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(boundary_identity_check(2, {1, 0}), std::domain_error);
    CHECK_THROWS_AS(boundary_identity_check(3, {2, 1}), std::domain_error);
}

TEST_CASE("theorem evidence bundle for the degree-8 pair") {
    SearchConfig cfg;
    cfg.samples = 60;
    const auto ev = verify_counterexample(8, 1, 3, cfg);
    CHECK(ev.ok());
    CHECK(ev.d == 8);
    CHECK(ev.majorization_fails);
    CHECK(ev.chain_ok);
    CHECK(ev.certificate.valid);
    CHECK(ev.verdict.status == VerdictStatus::holds_on_evidence);
    CHECK(ev.verdict.n_lo == 1);
    CHECK(ev.verdict.n_hi == 3);
    // degree 8 is the core: the chain is just the explanatory line
    REQUIRE(ev.chain.size() == 1);
    CHECK(ev.chain[0].find("no reduction") != std::string::npos);
}

TEST_CASE("theorem evidence covers higher degrees through the chain") {
    SearchConfig cfg;
    cfg.samples = 40;
    const auto ev9 = verify_counterexample(9, 2, 3, cfg);
    CHECK(ev9.ok());
    // odd degree: one reduction identity per n
    CHECK(ev9.chain.size() == 2);
    CHECK(ev9.chain[0].find("odd reduction") != std::string::npos);

    const auto ev10 = verify_counterexample(10, 2, 3, cfg);
    CHECK(ev10.ok());
    // even degree 10: chain step m=5 per n
    CHECK(ev10.chain.size() == 2);
    CHECK(ev10.chain[0].find("chain step m=5") != std::string::npos);

    CHECK_THROWS_AS(verify_counterexample(7, 1, 3, cfg), std::domain_error);
}

TEST_CASE("incomparable scan structure") {
    SearchConfig cfg;
    cfg.samples = 30;

    // the sweep covers every ordered pair where mu does not majorize lambda,
    // so reversed comparable pairs are included; at d = 2 that is the single
    // pair ((1,1),(2)), falsified at the corner (1,0)
    const auto r2 = scan_incomparable(2, 2, 2, cfg);
    REQUIRE(r2.falsified.size() == 1);
    CHECK(r2.unfalsified.empty());
    CHECK(r2.falsified[0].mu == Partition({1, 1}));
    CHECK(r2.falsified[0].lambda == Partition({2}));

    // degree 5 is still a chain: every swept pair is a reversed comparable
    // pair, and each is falsified (the corner (1,0) always separates them)
    const auto r5 = scan_incomparable(5, 2, 2, cfg);
    const auto par5 = enumerate_partitions(5);
    std::size_t expected = 0;
    for (const auto& mu : par5)
        for (const auto& la : par5)
            if (!majorizes(mu, la)) ++expected;
    CHECK(expected == 21);
    CHECK(r5.falsified.size() == expected);
    CHECK(r5.unfalsified.empty());

    // degree 6 has the first incomparable pairs
    const auto r6 = scan_incomparable(6, 2, 3, cfg);
    CHECK(r6.d == 6);
    CHECK(r6.falsified.size() + r6.unfalsified.size() > 0);
    for (const auto& entry : r6.falsified) {
        CHECK_FALSE(majorizes(entry.mu, entry.lambda));
        REQUIRE(entry.verdict.witness.has_value());
        CHECK(entry.verdict.witness->mu_value < entry.verdict.witness->lambda_value);
    }
    for (const auto& entry : r6.unfalsified) {
        CHECK_FALSE(majorizes(entry.mu, entry.lambda));
        CHECK(entry.verdict.status == VerdictStatus::holds_on_evidence);
    }
}

TEST_CASE("scan restricted to one pair") {
    SearchConfig cfg;
    cfg.samples = 50;
    const auto only = std::make_pair(Partition({4, 4}), Partition({5, 2, 1}));
    const auto res = scan_incomparable(8, 3, 3, cfg, only);
    CHECK(res.falsified.empty());
    REQUIRE(res.unfalsified.size() == 1);
    CHECK(res.unfalsified[0].mu == Partition({4, 4}));
    CHECK(res.unfalsified[0].lambda == Partition({5, 2, 1}));

    // a pair that is actually falsifiable lands in the other bucket
    const auto rev = std::make_pair(Partition({3, 1, 1, 1}), Partition({2, 2, 2}));
    const auto res2 = scan_incomparable(6, 3, 3, cfg, rev);
    CHECK(res2.unfalsified.empty());
    REQUIRE(res2.falsified.size() == 1);
    CHECK(res2.falsified[0].verdict.status == VerdictStatus::counterexample_found);
}

TEST_CASE("verdict status names") {
    CHECK(verdict_status_name(VerdictStatus::holds_on_evidence) == "holds_on_evidence");
    CHECK(verdict_status_name(VerdictStatus::counterexample_found) == "counterexample_found");
    CHECK(verdict_status_name(VerdictStatus::inconclusive) == "inconclusive");
}

TEST_CASE("sampler reproducibility and ranges") {
    RatSampler a(9), b(9);
    for (int i = 0; i < 20; ++i) CHECK(a.bounded(1000) == b.bounded(1000));
    RatSampler s(10);
    for (int i = 0; i < 50; ++i) {
        CHECK(s.nonneg(12) >= 0);
        CHECK(s.positive(12) > 0);
        const auto bp = s.boundary_point(4, 12);
        CHECK(std::any_of(bp.begin(), bp.end(), [](const Rat& v) { return v == 0; }));
        CHECK(is_nonnegative(bp));
    }
    CHECK(canonical_corner(3, 2) == EvalPoint{1, 1, 0});
    CHECK(canonical_corner(3, 0) == EvalPoint{0, 0, 0});
    CHECK(canonical_corner(2, 2) == EvalPoint{1, 1});
}
