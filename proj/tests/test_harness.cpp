#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "helpers.hpp"
#include "sdlab/algebra.hpp"
#include "sdlab/errors.hpp"
#include "sdlab/harness.hpp"
#include "sdlab/inequalities.hpp"
#include "sdlab/matrix_io.hpp"

using sdlab::BlockStructure;
using sdlab::ComplexMatrix;
namespace hns = sdlab::harness;

namespace {

// wall_ms is the only nondeterministic field in a campaign report
void strip_wall_ms(nlohmann::json& j) {
    if (j.is_object()) {
        j.erase("wall_ms");
        for (auto& [key, value] : j.items()) strip_wall_ms(value);
    } else if (j.is_array()) {
        for (auto& value : j) strip_wall_ms(value);
    }
}

} // namespace

TEST_SUITE("harness") {

TEST_CASE("mix64 is the frozen avalanche permutation") {
    CHECK(hns::mix64(0) == 0xE220A8397B1DCDAFULL);
    CHECK(hns::mix64(0) != hns::mix64(1));
    // adjacent inputs land far apart
    const int flipped = std::popcount(hns::mix64(0) ^ hns::mix64(1));
    CHECK(flipped > 10);
    CHECK(flipped < 54);
}

TEST_CASE("counter rng is a pure function of key and position") {
    hns::CounterRng a(7), b(7), c(8);
    std::vector<double> xs, ys;
    bool any_diff = false;
    for (int i = 0; i < 64; ++i) {
        const double x = a.u01();
        const double y = b.u01();
        CHECK(x == y);
        any_diff = any_diff || (x != c.u01());
        CHECK(x > 0.0);
        CHECK(x < 1.0);
    }
    CHECK(any_diff);
}

TEST_CASE("counter rng has roughly the right moments") {
    hns::CounterRng rng(12345);
    double mean = 0.0;
    const int draws = 4000;
    for (int i = 0; i < draws; ++i) mean += rng.u01();
    mean /= draws;
    CHECK(std::abs(mean - 0.5) < 0.03);

    hns::CounterRng g(54321);
    double m1 = 0.0, m2 = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double v = g.normal();
        m1 += v;
        m2 += v * v;
    }
    m1 /= draws;
    m2 /= draws;
    CHECK(std::abs(m1) < 0.1);
    CHECK(std::abs(m2 - 1.0) < 0.15);

    hns::CounterRng h(99);
    double pow2 = 0.0;
    for (int i = 0; i < draws; ++i) pow2 += std::norm(h.std_complex_normal());
    CHECK(std::abs(pow2 / draws - 1.0) < 0.15);
}

TEST_CASE("sample generation is bitwise deterministic") {
    const BlockStructure b({2, 2});
    for (hns::Ensemble e : {hns::Ensemble::Ginibre, hns::Ensemble::UpperGinibre,
                            hns::Ensemble::ACapAInv, hns::Ensemble::Psd,
                            hns::Ensemble::BlockDiag}) {
        const ComplexMatrix x = hns::generate(e, 4, b, 1001);
        const ComplexMatrix y = hns::generate(e, 4, b, 1001);
        CHECK(testutil::max_abs_diff(x, y) == 0.0);
        const ComplexMatrix z = hns::generate(e, 4, b, 1002);
        CHECK(testutil::max_abs_diff(x, z) > 0.0);
    }
}

TEST_CASE("ensembles land in their advertised classes") {
    const BlockStructure b({2, 3});
    const ComplexMatrix up = hns::generate(hns::Ensemble::UpperGinibre, 5, b, 2001);
    CHECK(sdlab::algebra::in_subdiagonal(up, b, 0.0)); // structural zeros are exact

    const ComplexMatrix inv = hns::generate(hns::Ensemble::ACapAInv, 5, b, 2002);
    CHECK(sdlab::algebra::in_a_cap_a_inv(inv, b));
    for (int i = 0; i < 5; ++i) {
        const double r = std::abs(inv(i, i));
        CHECK(r > 0.499999);
        CHECK(r < 2.000001);
    }

    const ComplexMatrix p = hns::generate(hns::Ensemble::Psd, 5, b, 2003);
    CHECK(p.hermitian_defect() == 0.0);
    CHECK(sdlab::linalg::hermitian_eigen(p).values.back() > -1e-12);

    const ComplexMatrix d = hns::generate(hns::Ensemble::BlockDiag, 5, b, 2004);
    CHECK(sdlab::algebra::in_diagonal(d, b, 0.0));

    CHECK_THROWS_AS(hns::generate(hns::Ensemble::Ginibre, 4, BlockStructure::all_ones(3), 1),
                    sdlab::DimensionMismatchError);
}

TEST_CASE("ensemble names round-trip") {
    for (hns::Ensemble e : {hns::Ensemble::Ginibre, hns::Ensemble::UpperGinibre,
                            hns::Ensemble::ACapAInv, hns::Ensemble::Psd,
                            hns::Ensemble::BlockDiag}) {
        CHECK(hns::ensemble_from_string(hns::ensemble_to_string(e)) == e);
    }
    CHECK_THROWS_AS(hns::ensemble_from_string("gaussian"), sdlab::UnknownEnsembleError);
}

TEST_CASE("structure shapes resolve as documented") {
    CHECK(hns::structure_for("all_one", 4, 0).block_count() == 4);
    CHECK(hns::structure_for("halves", 5, 0) == BlockStructure({3, 2}));
    CHECK(hns::structure_for("halves", 1, 0) == BlockStructure::single(1));
    CHECK(hns::structure_for("head_one", 5, 0) == BlockStructure({1, 4}));
    CHECK(hns::structure_for("2,3", 5, 0) == BlockStructure({2, 3}));
    CHECK_THROWS_AS(hns::structure_for("2,3", 6, 0), sdlab::DimensionMismatchError);
    CHECK_THROWS_AS(hns::structure_for("mystery", 4, 0), std::invalid_argument);

    const BlockStructure r1 = hns::structure_for("random", 9, 77);
    const BlockStructure r2 = hns::structure_for("random", 9, 77);
    CHECK(r1 == r2);
    CHECK(r1.n() == 9);
    CHECK(hns::structure_for("random", 9, 78).n() == 9);
}

TEST_CASE("campaign config survives json round trips") {
    const hns::CampaignConfig defaults;
    const hns::CampaignConfig from_empty = hns::config_from_json(nlohmann::json::object());
    CHECK(from_empty.to_json().dump() == defaults.to_json().dump());
    CHECK(from_empty.master_seed == 42);
    CHECK(from_empty.trials == 1000);
    CHECK(from_empty.sizes == std::vector<int>{2, 4, 8, 16});

    nlohmann::json partial{{"trials", 7}, {"sizes", {3}}, {"equality_tol", 1e-6}};
    const hns::CampaignConfig cfg = hns::config_from_json(partial);
    CHECK(cfg.trials == 7);
    CHECK(cfg.sizes == std::vector<int>{3});
    CHECK(cfg.equality_tol == 1e-6);
    CHECK(cfg.master_seed == 42); // untouched keys keep defaults
    CHECK(cfg.structures == defaults.structures);

    const hns::CampaignConfig back = hns::config_from_json(cfg.to_json());
    CHECK(back.to_json().dump() == cfg.to_json().dump());
}

TEST_CASE("campaign with no checkers does nothing") {
    hns::CampaignConfig cfg;
    cfg.checkers = {};
    cfg.trials = 5;
    const auto report = hns::run_campaign(cfg);
    CHECK(report.results.empty());
    CHECK(report.total_trials == 0);
    CHECK(report.total_violations == 0);
}

TEST_CASE("small campaign shape and outcome") {
    hns::CampaignConfig cfg;
    cfg.trials = 3;
    cfg.sizes = {2, 4};
    cfg.structures = {"all_one", "halves"};
    cfg.checkers = {"schwarz", "jensen_seed"};
    const auto report = hns::run_campaign(cfg);
    CHECK(report.results.size() == 8); // 2 checkers x 2 sizes x 2 shapes
    CHECK(report.total_trials == 24);
    CHECK(report.total_violations == 0);
    for (const auto& res : report.results) {
        CHECK(res.trials == 3);
        CHECK(res.violated == 0);
        CHECK(res.any_evaluated);
        CHECK(res.holds + res.equality + res.violated + res.skipped == res.trials);
    }
    CHECK_THROWS_AS(
        [] {
            hns::CampaignConfig bad;
            bad.checkers = {"mystery"};
            hns::run_campaign(bad);
        }(),
        std::invalid_argument);
}

TEST_CASE("corner checker needs at least two blocks") {
    hns::CampaignConfig cfg;
    cfg.trials = 2;
    cfg.sizes = {2};
    cfg.checkers = {"lin"};
    cfg.structures = {"2"}; // single block: the variant has no corner to test
    CHECK(hns::run_campaign(cfg).results.empty());
    cfg.structures = {"all_one"};
    CHECK(hns::run_campaign(cfg).results.size() == 1);
}

TEST_CASE("diagonal-only checker runs only on the scalar structure") {
    hns::CampaignConfig cfg;
    cfg.trials = 2;
    cfg.sizes = {3};
    cfg.checkers = {"drury"};
    cfg.structures = {"halves", "all_one", "head_one"};
    const auto report = hns::run_campaign(cfg);
    CHECK(report.results.size() == 1);
    CHECK(report.results[0].blocks == "1,1,1");
}

TEST_CASE("campaign reports are deterministic modulo timing") {
    hns::CampaignConfig cfg;
    cfg.trials = 4;
    cfg.sizes = {2, 3};
    cfg.structures = {"all_one", "random"};
    cfg.checkers = {"schwarz", "log_majorization", "cor_app"};
    cfg.p_values = {1.0, 2.0};
    auto j1 = hns::run_campaign(cfg).to_json();
    auto j2 = hns::run_campaign(cfg).to_json();
    strip_wall_ms(j1);
    strip_wall_ms(j2);
    CHECK(j1.dump() == j2.dump());

    cfg.master_seed = 43;
    auto j3 = hns::run_campaign(cfg).to_json();
    strip_wall_ms(j3);
    CHECK(j1.dump() != j3.dump());
}

TEST_CASE("variant labels carry their parameters") {
    hns::CampaignConfig cfg;
    cfg.trials = 1;
    cfg.sizes = {2};
    cfg.structures = {"all_one"};
    cfg.checkers = {"jensen_main", "cor_app", "dyadic_powers"};
    cfg.f_specs = {"pow:2", "log1p_pow:1"};
    cfg.p_values = {0.5};
    cfg.dyadic_depth = 3;
    const auto report = hns::run_campaign(cfg);
    REQUIRE(report.results.size() == 4);
    CHECK(report.results[0].checker == "jensen_main[pow:2]");
    CHECK(report.results[1].checker == "jensen_main[log1p_pow:1]");
    CHECK(report.results[2].checker == "cor_app[p=0.5]");
    CHECK(report.results[3].checker == "dyadic_powers[depth=3]");
}

TEST_CASE("report serialization records violations and null worst margins") {
    hns::VariantResult res;
    res.checker = "demo";
    res.n = 2;
    res.blocks = "1,1";
    res.trials = 1;
    res.skipped = 1;
    res.any_evaluated = false;
    hns::Violation v;
    v.checker = "demo";
    v.n = 2;
    v.blocks = "1,1";
    v.trial = 0;
    v.seed = 99;
    v.margin = -0.25;
    v.status = "VIOLATED";
    v.matrix = sdlab::io::matrix_to_json(ComplexMatrix::identity(2));
    res.violations.push_back(v);

    hns::CampaignReport report;
    report.version = "test";
    report.master_seed = 1;
    report.results.push_back(res);
    const auto j = report.to_json();
    CHECK(j.at("results").at(0).at("worst_margin").is_null());
    const auto& jv = j.at("results").at(0).at("violations").at(0);
    CHECK(jv.at("seed") == 99);
    CHECK(jv.at("margin") == -0.25);
    CHECK(jv.at("status") == "VIOLATED");
    CHECK(jv.at("matrix").at("n") == 2);
}

TEST_CASE("margins survive a matrix io round trip bit for bit") {
    // a recorded counterexample must reproduce the exact margin on reload
    const BlockStructure b({2, 2});
    const ComplexMatrix a = hns::generate(hns::Ensemble::UpperGinibre, 4, b, 3001);
    const ComplexMatrix back = sdlab::io::matrix_from_json(sdlab::io::matrix_to_json(a));
    CHECK(testutil::max_abs_diff(a, back) == 0.0);
    const auto r1 = sdlab::inequalities::check_jensen_seed(a, b);
    const auto r2 = sdlab::inequalities::check_jensen_seed(back, b);
    CHECK(r1.margin == r2.margin);
    CHECK(r1.lhs == r2.lhs);
    CHECK(r1.rhs == r2.rhs);
}

} // TEST_SUITE("harness")
