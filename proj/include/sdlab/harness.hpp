#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdlab/block_structure.hpp"
#include "sdlab/complex_matrix.hpp"
#include "sdlab/inequalities.hpp"

namespace sdlab::harness {

// splitmix64 finalizer; the whole generator is built from it so draws are
// pure functions of (key, counter) and independent of evaluation order.
std::uint64_t mix64(std::uint64_t v);

// Counter-based generator: draw k of stream `key` depends only on (key, k).
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    double u01();             // uniform on (0, 1)
    double normal();          // standard real normal (Box-Muller)
    cplx std_complex_normal();// E|z|^2 = 1

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

enum class Ensemble {
    Ginibre,      // iid standard complex normal entries
    UpperGinibre, // normal entries on/above the block diagonal, exact zeros below
    ACapAInv,     // scalar upper triangular, diagonal moduli in [1/2, 2]
    Psd,          // g* g for Ginibre g
    BlockDiag,    // normal entries inside diagonal blocks only
};

Ensemble ensemble_from_string(const std::string& name);
std::string ensemble_to_string(Ensemble e);

// Deterministic sample: entries are filled in row-major order from a
// CounterRng keyed by seed, with structural zeros never consuming draws.
ComplexMatrix generate(Ensemble e, int n, const BlockStructure& b, std::uint64_t seed);

// Named block-structure shapes for a given n: "all_one" (n singleton blocks),
// "halves" (two blocks of n/2 rounded), "head_one" ({1, n-1}), "random"
// (seed-determined partition), or an explicit comma-separated size list.
BlockStructure structure_for(const std::string& shape, int n, std::uint64_t seed);

struct CampaignConfig {
    std::uint64_t master_seed = 42;
    int trials = 1000;
    std::vector<int> sizes = {2, 4, 8, 16};
    std::vector<std::string> structures = {"all_one", "halves", "head_one", "random"};
    std::vector<std::string> checkers = {"schwarz",      "sigma_phi",   "jensen_seed",
                                         "dyadic_powers", "log_majorization", "jensen_main",
                                         "cor_app",      "lin",         "drury",
                                         "epsilon_path"};
    std::vector<std::string> f_specs = {"pow:0.5", "pow:1", "pow:2",
                                        "pow:3",   "log1p_pow:1", "log1p_pow:2"};
    std::vector<double> p_values = {0.5, 1.0, 2.0, 3.0};
    std::vector<double> eps_list = {1.0, 0.1, 0.01};
    int dyadic_depth = 6;
    double equality_tol = 1e-8;
    int max_recorded_violations = 10; // per variant

    nlohmann::json to_json() const;
};

// Fill a config from a JSON document; absent keys keep their defaults.
CampaignConfig config_from_json(const nlohmann::json& j);

struct Violation {
    std::string checker;
    int n = 0;
    std::string blocks;
    int trial = 0;
    std::uint64_t seed = 0;
    double margin = 0.0;
    std::string status;
    nlohmann::json matrix;
};

struct VariantResult {
    std::string checker; // variant label, e.g. "jensen_main[pow:2]"
    int n = 0;
    std::string blocks;
    long trials = 0;
    long holds = 0;
    long equality = 0;
    long violated = 0;
    long skipped = 0;
    double worst_margin = 0.0; // minimum margin over evaluated trials
    bool any_evaluated = false;
    double wall_ms = 0.0;
    std::vector<Violation> violations;
};

struct CampaignReport {
    std::string version;
    std::uint64_t master_seed = 0;
    CampaignConfig config;
    std::vector<VariantResult> results;
    long total_trials = 0;
    long total_violations = 0;

    // Deterministic modulo the wall_ms fields.
    nlohmann::json to_json() const;
};

CampaignReport run_campaign(const CampaignConfig& config);

} // namespace sdlab::harness
