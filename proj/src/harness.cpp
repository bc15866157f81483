#include "sdlab/harness.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sdlab/algebra.hpp"
#include "sdlab/errors.hpp"
#include "sdlab/matrix_io.hpp"
#include "sdlab/version.hpp"

namespace sdlab::harness {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string format_param(double v) {
    std::string s = io::format_double(v);
    return s;
}

struct Variant {
    std::string label;
    std::string base;                    // checker family
    Ensemble ensemble = Ensemble::Ginibre;
    funcspec::FunctionSpec f = funcspec::FunctionSpec::pow(2.0);
    double p = 2.0;
    int depth = 6;
    bool all_one_only = false;
};

std::vector<Variant> expand_variants(const CampaignConfig& cfg) {
    std::vector<Variant> out;
    for (const std::string& name : cfg.checkers) {
        if (name == "schwarz") {
            out.push_back({"schwarz", name, Ensemble::Ginibre, funcspec::FunctionSpec::pow(2.0),
                           2.0, 0, false});
        } else if (name == "sigma_phi") {
            out.push_back({"sigma_phi", name, Ensemble::Psd, funcspec::FunctionSpec::pow(2.0), 2.0,
                           0, false});
        } else if (name == "jensen_seed") {
            out.push_back({"jensen_seed", name, Ensemble::UpperGinibre,
                           funcspec::FunctionSpec::pow(2.0), 2.0, 0, false});
        } else if (name == "dyadic_powers") {
            out.push_back({"dyadic_powers[depth=" + std::to_string(cfg.dyadic_depth) + "]", name,
                           Ensemble::ACapAInv, funcspec::FunctionSpec::pow(2.0), 2.0,
                           cfg.dyadic_depth, false});
        } else if (name == "log_majorization") {
            out.push_back({"log_majorization", name, Ensemble::ACapAInv,
                           funcspec::FunctionSpec::pow(2.0), 2.0, 0, false});
        } else if (name == "jensen_main") {
            for (const std::string& spec : cfg.f_specs) {
                out.push_back({"jensen_main[" + spec + "]", name, Ensemble::UpperGinibre,
                               funcspec::FunctionSpec::parse(spec), 2.0, 0, false});
            }
        } else if (name == "cor_app") {
            for (double p : cfg.p_values) {
                out.push_back({"cor_app[p=" + format_param(p) + "]", name, Ensemble::UpperGinibre,
                               funcspec::FunctionSpec::pow(2.0), p, 0, false});
            }
        } else if (name == "lin") {
            out.push_back({"lin[p=2]", name, Ensemble::UpperGinibre,
                           funcspec::FunctionSpec::pow(2.0), 2.0, 0, false});
        } else if (name == "drury") {
            out.push_back({"drury", name, Ensemble::UpperGinibre, funcspec::FunctionSpec::pow(2.0),
                           2.0, 0, true});
        } else if (name == "epsilon_path") {
            out.push_back({"epsilon_path[pow:2]", name, Ensemble::UpperGinibre,
                           funcspec::FunctionSpec::pow(2.0), 2.0, 0, false});
        } else {
            throw std::invalid_argument("unknown checker: " + name);
        }
    }
    return out;
}

inequalities::CheckReport run_one(const Variant& v, const ComplexMatrix& x,
                                  const BlockStructure& b, const CampaignConfig& cfg) {
    inequalities::CheckOptions opts;
    opts.equality_tol = cfg.equality_tol;
    if (v.base == "schwarz") return inequalities::check_schwarz(x, b, opts);
    if (v.base == "sigma_phi") return inequalities::check_sigma_phi(x, b, opts);
    if (v.base == "jensen_seed") return inequalities::check_jensen_seed(x, b, opts);
    if (v.base == "dyadic_powers") return inequalities::check_dyadic_powers(x, b, v.depth, opts);
    if (v.base == "log_majorization") return inequalities::check_log_majorization(x, b, opts);
    if (v.base == "jensen_main") return inequalities::check_jensen_main(x, b, v.f, opts);
    if (v.base == "cor_app") return inequalities::check_cor_app(x, b, v.p, opts);
    if (v.base == "lin") return inequalities::check_lin(x, b.sizes()[0], v.p, opts);
    if (v.base == "drury") return inequalities::check_drury(x, opts);
    if (v.base == "epsilon_path") {
        return inequalities::check_epsilon_path(x, b, v.f, cfg.eps_list, opts);
    }
    throw std::invalid_argument("unknown checker: " + v.base);
}

} // namespace

std::uint64_t mix64(std::uint64_t v) {
    v += 0x9e3779b97f4a7c15ULL;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
    return v ^ (v >> 31);
}

double CounterRng::u01() {
    const std::uint64_t bits = mix64(key_ ^ mix64(counter_++));
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::normal() {
    const double u1 = u01();
    const double u2 = u01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx CounterRng::std_complex_normal() {
    const double re = normal();
    const double im = normal();
    return cplx(re, im) * std::sqrt(0.5);
}

Ensemble ensemble_from_string(const std::string& name) {
    if (name == "ginibre") return Ensemble::Ginibre;
    if (name == "upper_ginibre") return Ensemble::UpperGinibre;
    if (name == "a_cap_ainv") return Ensemble::ACapAInv;
    if (name == "psd") return Ensemble::Psd;
    if (name == "block_diag") return Ensemble::BlockDiag;
    throw UnknownEnsembleError("unknown ensemble: " + name);
}

std::string ensemble_to_string(Ensemble e) {
    switch (e) {
        case Ensemble::Ginibre: return "ginibre";
        case Ensemble::UpperGinibre: return "upper_ginibre";
        case Ensemble::ACapAInv: return "a_cap_ainv";
        case Ensemble::Psd: return "psd";
        case Ensemble::BlockDiag: return "block_diag";
    }
    return "ginibre";
}

ComplexMatrix generate(Ensemble e, int n, const BlockStructure& b, std::uint64_t seed) {
    if (b.n() != n) throw DimensionMismatchError("block structure does not cover the matrix");
    CounterRng rng(seed);
    ComplexMatrix m(n);
    switch (e) {
        case Ensemble::Ginibre:
        case Ensemble::Psd:
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) m(i, j) = rng.std_complex_normal();
            }
            if (e == Ensemble::Psd) m = m.adjoint() * m;
            break;
        case Ensemble::UpperGinibre:
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (b.upper_of_or_in_block(i, j)) m(i, j) = rng.std_complex_normal();
                }
            }
            break;
        case Ensemble::ACapAInv:
            // Scalar upper triangular with diagonal moduli bounded away from
            // zero, so the matrix is invertible with triangular inverse for
            // every block structure coarsening the scalar one.
            for (int i = 0; i < n; ++i) {
                for (int j = i; j < n; ++j) {
                    if (i == j) {
                        const double r = 0.5 + 1.5 * rng.u01();
                        const double theta = 2.0 * std::numbers::pi * rng.u01();
                        m(i, j) = cplx(r * std::cos(theta), r * std::sin(theta));
                    } else {
                        m(i, j) = rng.std_complex_normal();
                    }
                }
            }
            break;
        case Ensemble::BlockDiag:
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (b.same_block(i, j)) m(i, j) = rng.std_complex_normal();
                }
            }
            break;
    }
    m.validate("generated sample");
    return m;
}

BlockStructure structure_for(const std::string& shape, int n, std::uint64_t seed) {
    if (shape == "all_one") return BlockStructure::all_ones(n);
    if (shape == "halves") {
        if (n < 2) return BlockStructure::single(n);
        return BlockStructure({n - n / 2, n / 2});
    }
    if (shape == "head_one") {
        if (n < 2) return BlockStructure::single(n);
        return BlockStructure({1, n - 1});
    }
    if (shape == "random") {
        CounterRng rng(seed);
        std::vector<int> sizes;
        int remaining = n;
        while (remaining > 0) {
            int sz = 1 + static_cast<int>(rng.u01() * remaining);
            if (sz > remaining) sz = remaining;
            sizes.push_back(sz);
            remaining -= sz;
        }
        return BlockStructure(sizes);
    }
    if (shape.find_first_not_of("0123456789,") == std::string::npos && !shape.empty()) {
        BlockStructure b = BlockStructure::parse(shape);
        if (b.n() != n) {
            throw DimensionMismatchError("structure " + shape + " covers " +
                                         std::to_string(b.n()) + " but n = " + std::to_string(n));
        }
        return b;
    }
    throw std::invalid_argument("unknown structure shape: " + shape);
}

nlohmann::json CampaignConfig::to_json() const {
    return nlohmann::json{{"master_seed", master_seed},
                          {"trials", trials},
                          {"sizes", sizes},
                          {"structures", structures},
                          {"checkers", checkers},
                          {"f_specs", f_specs},
                          {"p_values", p_values},
                          {"eps_list", eps_list},
                          {"dyadic_depth", dyadic_depth},
                          {"equality_tol", equality_tol},
                          {"max_recorded_violations", max_recorded_violations}};
}

CampaignConfig config_from_json(const nlohmann::json& j) {
    CampaignConfig cfg;
    if (j.contains("master_seed")) cfg.master_seed = j["master_seed"].get<std::uint64_t>();
    if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
    if (j.contains("sizes")) cfg.sizes = j["sizes"].get<std::vector<int>>();
    if (j.contains("structures")) cfg.structures = j["structures"].get<std::vector<std::string>>();
    if (j.contains("checkers")) cfg.checkers = j["checkers"].get<std::vector<std::string>>();
    if (j.contains("f_specs")) cfg.f_specs = j["f_specs"].get<std::vector<std::string>>();
    if (j.contains("p_values")) cfg.p_values = j["p_values"].get<std::vector<double>>();
    if (j.contains("eps_list")) cfg.eps_list = j["eps_list"].get<std::vector<double>>();
    if (j.contains("dyadic_depth")) cfg.dyadic_depth = j["dyadic_depth"].get<int>();
    if (j.contains("equality_tol")) cfg.equality_tol = j["equality_tol"].get<double>();
    if (j.contains("max_recorded_violations")) {
        cfg.max_recorded_violations = j["max_recorded_violations"].get<int>();
    }
    return cfg;
}

nlohmann::json CampaignReport::to_json() const {
    nlohmann::json res = nlohmann::json::array();
    for (const VariantResult& r : results) {
        nlohmann::json viols = nlohmann::json::array();
        for (const Violation& v : r.violations) {
            viols.push_back({{"checker", v.checker},
                             {"n", v.n},
                             {"blocks", v.blocks},
                             {"trial", v.trial},
                             {"seed", v.seed},
                             {"margin", v.margin},
                             {"status", v.status},
                             {"matrix", v.matrix}});
        }
        nlohmann::json jr{{"checker", r.checker},
                          {"n", r.n},
                          {"blocks", r.blocks},
                          {"trials", r.trials},
                          {"holds", r.holds},
                          {"equality", r.equality},
                          {"violated", r.violated},
                          {"skipped", r.skipped},
                          {"wall_ms", r.wall_ms},
                          {"violations", std::move(viols)}};
        if (r.any_evaluated) jr["worst_margin"] = r.worst_margin;
        else jr["worst_margin"] = nullptr;
        res.push_back(std::move(jr));
    }
    return nlohmann::json{{"version", version},
                          {"master_seed", master_seed},
                          {"config", config.to_json()},
                          {"results", std::move(res)},
                          {"total_trials", total_trials},
                          {"total_violations", total_violations}};
}

CampaignReport run_campaign(const CampaignConfig& config) {
    CampaignReport report;
    report.version = kVersion;
    report.master_seed = config.master_seed;
    report.config = config;

    const std::vector<Variant> variants = expand_variants(config);
    for (const Variant& v : variants) {
        for (int n : config.sizes) {
            for (const std::string& shape : config.structures) {
                if (v.all_one_only && shape != "all_one") continue;
                const std::uint64_t shape_seed =
                    mix64(config.master_seed ^ fnv1a(shape) ^ static_cast<std::uint64_t>(n));
                const BlockStructure b = structure_for(shape, n, shape_seed);
                if (v.base == "lin" && b.block_count() < 2) continue;

                VariantResult res;
                res.checker = v.label;
                res.n = n;
                res.blocks = b.to_csv();
                const auto t0 = std::chrono::steady_clock::now();
                std::uint64_t h = mix64(config.master_seed ^ fnv1a(v.label));
                h = mix64(h ^ static_cast<std::uint64_t>(n));
                h = mix64(h ^ fnv1a(res.blocks));
                for (int trial = 0; trial < config.trials; ++trial) {
                    const std::uint64_t seed = mix64(h ^ static_cast<std::uint64_t>(trial));
                    const ComplexMatrix x = generate(v.ensemble, n, b, seed);
                    inequalities::CheckReport rep;
                    try {
                        rep = run_one(v, x, b, config);
                    } catch (const NotInvertibleError& e) {
                        rep.status = inequalities::Status::Skipped;
                        rep.skip_reason = e.what();
                    }
                    ++res.trials;
                    switch (rep.status) {
                        case inequalities::Status::Holds: ++res.holds; break;
                        case inequalities::Status::EqualityWithinTol: ++res.equality; break;
                        case inequalities::Status::Violated: ++res.violated; break;
                        case inequalities::Status::Skipped: ++res.skipped; break;
                    }
                    if (rep.status != inequalities::Status::Skipped) {
                        if (!res.any_evaluated || rep.margin < res.worst_margin) {
                            res.worst_margin = rep.margin;
                        }
                        res.any_evaluated = true;
                    }
                    if (rep.status == inequalities::Status::Violated &&
                        static_cast<int>(res.violations.size()) < config.max_recorded_violations) {
                        res.violations.push_back(Violation{v.label, n, res.blocks, trial, seed,
                                                           rep.margin,
                                                           inequalities::status_to_string(rep.status),
                                                           io::matrix_to_json(x)});
                    }
                }
                const auto t1 = std::chrono::steady_clock::now();
                res.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                report.total_trials += res.trials;
                report.total_violations += res.violated;
                report.results.push_back(std::move(res));
            }
        }
    }
    return report;
}

} // namespace sdlab::harness
