// Command-line front end: check inequalities on a matrix, compute
// factorizations and s-number profiles, or run a randomized fuzzing campaign.
//
// Exit codes: 0 all checks hold (or equality), 1 input/usage error,
// 2 at least one violation (or factorization failure), 3 all checks skipped.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdlab/algebra.hpp"
#include "sdlab/block_structure.hpp"
#include "sdlab/errors.hpp"
#include "sdlab/factorization.hpp"
#include "sdlab/funcspec.hpp"
#include "sdlab/harness.hpp"
#include "sdlab/inequalities.hpp"
#include "sdlab/linalg.hpp"
#include "sdlab/matrix_io.hpp"
#include "sdlab/spectral.hpp"
#include "sdlab/version.hpp"

namespace {

using sdlab::BlockStructure;
using sdlab::ComplexMatrix;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolated = 2;
constexpr int kExitSkipped = 3;

struct CheckArgs {
    std::string matrix_path;
    std::string blocks;
    std::string check = "all";
    std::string f_spec = "pow:2";
    double p = 2.0;
    int depth = 6;
    std::vector<double> eps_list = {1.0, 0.1, 0.01};
    int lin_r = 0; // 0 = first block size
    double tol = 0.0; // 0 = default / SDLAB_TOL
    std::string out_path;
};

struct FactorArgs {
    std::string matrix_path;
    std::string blocks;
    std::string mode = "arveson";
};

struct SnumbersArgs {
    std::string matrix_path;
    std::string blocks;
};

struct FuzzArgs {
    std::uint64_t seed = 42;
    int trials = 1000;
    std::vector<int> sizes;
    std::vector<std::string> structures;
    std::vector<std::string> checkers;
    std::string out_dir;
    std::string config_path;
};

sdlab::inequalities::CheckOptions options_from_env() {
    sdlab::inequalities::CheckOptions opts;
    if (const char* tol = std::getenv("SDLAB_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(tol, &end);
        if (end != tol && *end == '\0' && v > 0.0) opts.equality_tol = v;
    }
    return opts;
}

// Runs one named check, mapping precondition failures to Skipped reports so
// `--check all` can flow past inapplicable checks.
sdlab::inequalities::CheckReport run_check(const std::string& name, const ComplexMatrix& x,
                                           const BlockStructure& b, const CheckArgs& args,
                                           const sdlab::inequalities::CheckOptions& opts) {
    namespace ineq = sdlab::inequalities;
    try {
        if (name == "schwarz") return ineq::check_schwarz(x, b, opts);
        if (name == "sigma_phi") return ineq::check_sigma_phi(x, b, opts);
        if (name == "jensen_seed") return ineq::check_jensen_seed(x, b, opts);
        if (name == "dyadic_powers") return ineq::check_dyadic_powers(x, b, args.depth, opts);
        if (name == "log_majorization") return ineq::check_log_majorization(x, b, opts);
        if (name == "jensen_main") {
            return ineq::check_jensen_main(x, b, sdlab::funcspec::FunctionSpec::parse(args.f_spec),
                                           opts);
        }
        if (name == "cor_app") return ineq::check_cor_app(x, b, args.p, opts);
        if (name == "lin") {
            const int r = args.lin_r > 0 ? args.lin_r : b.sizes()[0];
            return ineq::check_lin(x, r, args.p, opts);
        }
        if (name == "drury") return ineq::check_drury(x, opts);
        if (name == "epsilon_path") {
            return ineq::check_epsilon_path(x, b, sdlab::funcspec::FunctionSpec::parse(args.f_spec),
                                            args.eps_list, opts);
        }
    } catch (const sdlab::NotInAlgebraError& e) {
        ineq::CheckReport rep;
        rep.name = name;
        rep.status = ineq::Status::Skipped;
        rep.skip_reason = e.what();
        return rep;
    } catch (const sdlab::NotPsdError& e) {
        ineq::CheckReport rep;
        rep.name = name;
        rep.status = ineq::Status::Skipped;
        rep.skip_reason = e.what();
        return rep;
    } catch (const sdlab::NotInvertibleError& e) {
        ineq::CheckReport rep;
        rep.name = name;
        rep.status = ineq::Status::Skipped;
        rep.skip_reason = e.what();
        return rep;
    }
    throw std::invalid_argument("unknown check: " + name);
}

int cmd_check(const CheckArgs& args) {
    const ComplexMatrix x = sdlab::io::read_matrix_file(args.matrix_path);
    const BlockStructure b = args.blocks.empty() ? BlockStructure::single(x.n())
                                                 : BlockStructure::parse(args.blocks);
    if (b.n() != x.n()) {
        throw sdlab::DimensionMismatchError("block structure covers " + std::to_string(b.n()) +
                                            " but the matrix is " + std::to_string(x.n()) + "x" +
                                            std::to_string(x.n()));
    }
    auto opts = options_from_env();
    if (args.tol > 0.0) opts.equality_tol = args.tol;
    std::vector<std::string> names;
    if (args.check == "all") {
        names = {"schwarz",     "sigma_phi", "jensen_seed", "dyadic_powers", "log_majorization",
                 "jensen_main", "cor_app",   "lin",         "drury",         "epsilon_path"};
    } else {
        names = {args.check};
    }

    nlohmann::json reports = nlohmann::json::array();
    bool any_violated = false;
    bool any_evaluated = false;
    for (const std::string& name : names) {
        if (name == "lin" && args.lin_r == 0 && b.block_count() < 2) {
            if (args.check != "all") {
                throw std::invalid_argument("lin needs --lin-r or a structure with >= 2 blocks");
            }
            continue;
        }
        const auto rep = run_check(name, x, b, args, opts);
        reports.push_back(rep.to_json());
        if (rep.status == sdlab::inequalities::Status::Violated) any_violated = true;
        if (rep.status != sdlab::inequalities::Status::Skipped) any_evaluated = true;
    }

    nlohmann::json out{{"version", sdlab::kVersion},
                       {"input", args.matrix_path},
                       {"blocks", b.to_csv()},
                       {"equality_tol", opts.equality_tol},
                       {"reports", std::move(reports)}};
    if (!args.out_path.empty()) {
        std::ofstream f(args.out_path);
        f << out.dump(2) << "\n";
    }
    std::cout << out.dump(2) << "\n";
    if (any_violated) return kExitViolated;
    if (!any_evaluated) return kExitSkipped;
    return kExitOk;
}

int cmd_factor(const FactorArgs& args) {
    const ComplexMatrix x = sdlab::io::read_matrix_file(args.matrix_path);
    const BlockStructure b = args.blocks.empty() ? BlockStructure::single(x.n())
                                                 : BlockStructure::parse(args.blocks);
    if (b.n() != x.n()) {
        throw sdlab::DimensionMismatchError("block structure does not cover the matrix");
    }
    nlohmann::json out{{"version", sdlab::kVersion}, {"mode", args.mode}};
    try {
        if (args.mode == "arveson") {
            const auto fac = sdlab::factorization::arveson_factor(x, b);
            out["u"] = sdlab::io::matrix_to_json(fac.u);
            out["a_tilde"] = sdlab::io::matrix_to_json(fac.a_tilde);
            out["certified"] = fac.certified;
            out["residual"] = fac.residual;
        } else if (args.mode == "positive") {
            const ComplexMatrix z = sdlab::factorization::positive_factor(x);
            out["z"] = sdlab::io::matrix_to_json(z);
            out["residual"] = (z.adjoint() * z - x).frobenius_norm();
        } else if (args.mode == "sqrt") {
            const auto res = sdlab::factorization::newton_sqrt(x);
            out["result"] = sdlab::io::matrix_to_json(res.result);
            out["iterations"] = res.iterations;
            out["residual"] = res.residual;
        } else {
            throw std::invalid_argument("unknown mode: " + args.mode);
        }
    } catch (const sdlab::NotInvertibleError& e) {
        std::cout << nlohmann::json{{"error", e.what()}}.dump(2) << "\n";
        return kExitViolated;
    } catch (const sdlab::NotPositiveDefiniteError& e) {
        std::cout << nlohmann::json{{"error", e.what()}}.dump(2) << "\n";
        return kExitViolated;
    } catch (const sdlab::NoConvergenceError& e) {
        std::cout << nlohmann::json{{"error", e.what()}}.dump(2) << "\n";
        return kExitViolated;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_snumbers(const SnumbersArgs& args) {
    const ComplexMatrix x = sdlab::io::read_matrix_file(args.matrix_path);
    const int n = x.n();
    auto profile_of = [n](const ComplexMatrix& m) {
        const auto sf = sdlab::spectral::mu(m);
        nlohmann::json j;
        j["mu"] = sf.values();
        nlohmann::json sig = nlohmann::json::array();
        for (int k = 1; k <= n; ++k) sig.push_back(sf.prefix(k));
        j["sigma_profile"] = std::move(sig);
        const double smax = sf.values().front();
        const double smin = sf.values().back();
        if (smin > 1e-8 * smax) {
            nlohmann::json lsig = nlohmann::json::array();
            double acc = 0.0;
            for (int k = 0; k < n; ++k) {
                acc += std::log(sf.values()[k]) / n;
                lsig.push_back(acc);
            }
            j["log_sigma_profile"] = std::move(lsig);
        } else {
            j["log_sigma_profile"] = nullptr;
            j["log_sigma_skip_reason"] = "matrix is singular within tolerance";
        }
        j["fk_det"] = sdlab::spectral::fk_det(m);
        return j;
    };
    nlohmann::json out{{"version", sdlab::kVersion}, {"n", n}};
    out["matrix"] = profile_of(x);
    if (!args.blocks.empty()) {
        const BlockStructure b = BlockStructure::parse(args.blocks);
        if (b.n() != n) {
            throw sdlab::DimensionMismatchError("block structure does not cover the matrix");
        }
        out["blocks"] = b.to_csv();
        out["phi"] = profile_of(sdlab::algebra::phi(x, b));
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_fuzz(const FuzzArgs& args, bool seed_given, bool trials_given) {
    sdlab::harness::CampaignConfig cfg;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) throw sdlab::ParseError("cannot open " + args.config_path, 0);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::parse_error& e) {
            throw sdlab::ParseError(std::string("invalid JSON in ") + args.config_path + ": " +
                                        e.what(),
                                    static_cast<std::size_t>(e.byte));
        }
        cfg = sdlab::harness::config_from_json(j);
    }
    if (seed_given) cfg.master_seed = args.seed;
    if (trials_given) cfg.trials = args.trials;
    if (!args.sizes.empty()) cfg.sizes = args.sizes;
    if (!args.structures.empty()) cfg.structures = args.structures;
    if (!args.checkers.empty()) cfg.checkers = args.checkers;
    if (const char* tol = std::getenv("SDLAB_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(tol, &end);
        if (end != tol && *end == '\0' && v > 0.0) cfg.equality_tol = v;
    }
    const auto report = sdlab::harness::run_campaign(cfg);
    const nlohmann::json j = report.to_json();
    if (!args.out_dir.empty()) {
        std::filesystem::create_directories(args.out_dir);
        std::ofstream out(args.out_dir + "/report.json");
        out << j.dump(2) << "\n";
        int idx = 0;
        for (const auto& res : report.results) {
            for (const auto& v : res.violations) {
                std::ofstream mf(args.out_dir + "/counterexample_" + std::to_string(idx++) +
                                 ".json");
                mf << v.matrix.dump(2) << "\n";
            }
        }
    }
    std::cout << j.dump(2) << "\n";
    return report.total_violations > 0 ? kExitViolated : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for block upper-triangular matrix algebras"};
    app.set_version_flag("--version", std::string(sdlab::kVersion));
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "run inequality checks on a matrix");
    check->add_option("matrix,--matrix", check_args.matrix_path, "matrix JSON file")->required();
    check->add_option("--blocks", check_args.blocks, "block sizes, e.g. 2,3,1 (default: one block)");
    check->add_option("--check", check_args.check,
                      "check name or 'all' (schwarz, sigma_phi, jensen_seed, dyadic_powers, "
                      "log_majorization, jensen_main, cor_app, lin, drury, epsilon_path)");
    check->add_option("--f", check_args.f_spec, "function spec for jensen_main/epsilon_path");
    check->add_option("--p", check_args.p, "exponent for cor_app/lin");
    check->add_option("--depth", check_args.depth, "depth for dyadic_powers");
    check->add_option("--eps", check_args.eps_list, "descending eps list for epsilon_path")
        ->delimiter(',');
    check->add_option("--lin-r", check_args.lin_r, "corner size for lin (default: first block)");
    check->add_option("--tol", check_args.tol, "equality tolerance (overrides SDLAB_TOL)");
    check->add_option("--out", check_args.out_path, "also write the report to this file");

    FactorArgs factor_args;
    auto* factor = app.add_subcommand("factor", "factor a matrix");
    factor->add_option("matrix,--matrix", factor_args.matrix_path, "matrix JSON file")->required();
    factor->add_option("--mode", factor_args.mode, "arveson | positive | sqrt");
    factor->add_option("--blocks", factor_args.blocks, "block sizes for certification");

    SnumbersArgs sn_args;
    auto* sn = app.add_subcommand("snumbers", "singular value profiles and determinants");
    sn->add_option("matrix,--matrix", sn_args.matrix_path, "matrix JSON file")->required();
    sn->add_option("--blocks", sn_args.blocks, "also profile the block-diagonal compression");

    FuzzArgs fuzz_args;
    auto* fuzz = app.add_subcommand("fuzz", "randomized checking campaign");
    auto* seed_opt = fuzz->add_option("--seed", fuzz_args.seed, "master seed");
    auto* trials_opt = fuzz->add_option("--trials", fuzz_args.trials, "trials per checker variant");
    fuzz->add_option("--sizes,--n", fuzz_args.sizes, "matrix sizes")->delimiter(',');
    fuzz->add_option("--structures", fuzz_args.structures, "structure shapes")->delimiter(',');
    fuzz->add_option("--checkers", fuzz_args.checkers, "checker subset (default: all)")
        ->delimiter(',');
    fuzz->add_option("--out", fuzz_args.out_dir, "directory for report and counterexamples");
    fuzz->add_option("--config", fuzz_args.config_path, "campaign config JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (check->parsed()) return cmd_check(check_args);
        if (factor->parsed()) return cmd_factor(factor_args);
        if (sn->parsed()) return cmd_snumbers(sn_args);
        if (fuzz->parsed()) {
            return cmd_fuzz(fuzz_args, seed_opt->count() > 0, trials_opt->count() > 0);
        }
    } catch (const sdlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
