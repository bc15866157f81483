#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdlab/block_structure.hpp"
#include "sdlab/complex_matrix.hpp"
#include "sdlab/funcspec.hpp"
#include "sdlab/spectral.hpp"

namespace sdlab::inequalities {

enum class Status { Holds, EqualityWithinTol, Violated, Skipped };

std::string status_to_string(Status s);

// Rigidity diagnosis attached to equality-carrying checks: compares the
// observed distance to the fixed-point set against a fixed relative
// threshold of 1e-7.
struct EqualityDiagnosis {
    bool predicted_phi_fixed = false;
    double actual_phi_distance = 0.0;
};

struct CheckReport {
    std::string name;
    Status status = Status::Skipped;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // rhs - lhs at the tightest point; negative only when Violated
    std::string skip_reason;
    std::optional<EqualityDiagnosis> equality_diagnosis;
    std::vector<double> t_profile; // per-breakpoint margins, checker-specific

    nlohmann::json to_json() const;
};

struct CheckOptions {
    double equality_tol = 1e-8;   // relative: compared against tol * scale
    double membership_tol = 1e-10;
    double min_sv_ratio = 1e-8;   // invertibility gate s_min > ratio * s_max
};

// Expectation is a Schwarz map: phi(x)* phi(x) <= phi(x* x), with equality
// exactly when phi fixes x. Margin is the normalized trace of the gap once
// its smallest eigenvalue passes the PSD gate; t_profile carries the gap's
// eigenvalues in descending order.
CheckReport check_schwarz(const ComplexMatrix& x, const BlockStructure& b,
                          const CheckOptions& opts = {});

// For Hermitian PSD x, the partial sums of eigenvalues of phi(x) never exceed
// those of x. Throws NotPsdError for non-Hermitian or indefinite input.
// t_profile holds the n breakpoint margins at t = j/n.
CheckReport check_sigma_phi(const ComplexMatrix& x, const BlockStructure& b,
                            const CheckOptions& opts = {});

// Quadratic submajorization seed: prefix sums of squared singular values of
// phi(a) stay below those of a, for a in the block upper-triangular algebra.
// Throws NotInAlgebraError when a fails membership screening.
CheckReport check_jensen_seed(const ComplexMatrix& a, const BlockStructure& b,
                              const CheckOptions& opts = {});

// Power-mean cascade: prefix sums of s-numbers raised to 2^-d dominate those
// of phi(a) for every depth d = 1..depth. Requires a invertible in the
// algebra; t_profile holds per-breakpoint minima over depths.
CheckReport check_dyadic_powers(const ComplexMatrix& a, const BlockStructure& b, int depth = 6,
                                const CheckOptions& opts = {});

// Logarithmic submajorization of phi(a) by a, with forced equality of the
// full log-integrals (equivalently |det phi(a)| = |det a|) when a and its
// inverse both live in the algebra. The t = 1 identity is cross-checked
// against an LU determinant when conditioning allows. Throws
// NotInvertibleError for singular a; returns Skipped when phi(a) is singular.
CheckReport check_log_majorization(const ComplexMatrix& a, const BlockStructure& b,
                                   const CheckOptions& opts = {});

// Majorization transfer: given log-scale profiles phi_sf and psi_sf (step
// functions of log s-numbers) with prefix dominance and equal totals,
// integrating t -> f(exp(.)) preserves the order. Returns Skipped when the
// precondition fails; the equality diagnosis (pointwise coincidence) is
// populated only when f is strictly convex after exp.
CheckReport check_hlp_transfer(const spectral::StepFunction& phi_sf,
                               const spectral::StepFunction& psi_sf,
                               const funcspec::FunctionSpec& f, const CheckOptions& opts = {});

// Main trace inequality: tr f(|phi(a)|) <= tr f(|a|) for admissible convex f,
// with equality forcing phi(a) = a when f is strictly convex after exp.
// Throws NotInAlgebraError / DomainError for bad inputs; log-type f on a
// singular argument yields Skipped.
CheckReport check_jensen_main(const ComplexMatrix& a, const BlockStructure& b,
                              const funcspec::FunctionSpec& f, const CheckOptions& opts = {});

// Two specializations at once: (i) tr |phi(a)|^p <= tr |a|^p and
// (ii) the Fuglede-Kadison determinant of (1 + |phi(a)|^p) stays below that
// of (1 + |a|^p). t_profile = [margin_i, margin_ii] in log scale for (ii).
CheckReport check_cor_app(const ComplexMatrix& a, const BlockStructure& b, double p,
                          const CheckOptions& opts = {});

// Block 2x2 determinant inequality: for T = [[X, Y], [0, Z]] with X of size
// r, det(1 + |T|^p) >= det(1 + |X|^p) det(1 + |Z|^p), equality iff Y = 0.
CheckReport check_lin(const ComplexMatrix& t, int r, double p, const CheckOptions& opts = {});

// Upper-triangular determinant inequality: det(1 + x* x) >= prod(1 + |x_ii|^2),
// equality iff x is diagonal.
CheckReport check_drury(const ComplexMatrix& x, const CheckOptions& opts = {});

// Regularized positive factorization path: for eps > 0 factor
// eps + a* a = z_eps* z_eps and compare tr f(|phi(z_eps)|) against
// tr f(|phi(a)|) and tr f(|a|). Verifies the operator order
// |phi(z_eps)| >= |phi(a)|, monotonicity of the upper bound along the
// descending eps list, and the limiting inequality. Headline margin is the
// limit pair tr f(|a|) - tr f(|phi(a)|); t_profile carries per-eps margins.
CheckReport check_epsilon_path(const ComplexMatrix& a, const BlockStructure& b,
                               const funcspec::FunctionSpec& f,
                               const std::vector<double>& eps_list, const CheckOptions& opts = {});

} // namespace sdlab::inequalities
