#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sdlab/errors.hpp"

namespace sdlab::funcspec {

// Symbolic description of a scalar function f on [0, inf). The interesting
// class is the functions whose companion g(t) = f(exp(t)) is convex on R;
// each node tracks whether that companion is strictly convex, so checkers can
// decide when an equality forces rigidity.
//
// Kinds:
//   Pow(p)        t^p, p > 0
//   Log1pPow(p)   log(1 + t^p), p > 0
//   Log           log t (t > 0); companion is affine, never strict
//   Sqrt          t^(1/2)
//   Affine        b0 + b1*t; unvalidated escape hatch, so adversarial
//                 (decreasing) instances are representable for the falsifier
//   AffineCombo   offset + sum c_i * f_i, c_i >= 0, at least one positive
//   Compose       outer(inner) with outer restricted to increasing convex
//                 primitives: Pow(q >= 1) or Affine(b1 >= 0); an outer
//                 log(1 + s^q) is accepted only over a power inner, where it
//                 collapses algebraically to Log1pPow
class FunctionSpec {
  public:
    enum class Kind { Pow, Log1pPow, Log, Sqrt, Affine, AffineCombo, Compose };

    static FunctionSpec pow(double p);
    static FunctionSpec log1p_pow(double p);
    static FunctionSpec log();
    static FunctionSpec sqrt();
    static FunctionSpec affine(double b0, double b1);
    static FunctionSpec combo(std::vector<double> coeffs, std::vector<FunctionSpec> parts,
                              double offset = 0.0);
    static FunctionSpec compose_pow(double q, FunctionSpec inner);
    static FunctionSpec compose_affine(double b0, double b1, FunctionSpec inner);
    static FunctionSpec compose_log1p_pow(double q, const FunctionSpec& inner);

    // t -> f(t^p) rewritten structurally into the kinds above.
    static FunctionSpec precompose_power(const FunctionSpec& f, double p);

    // Text forms: "pow:2", "log1p_pow:1.5", "log", "sqrt", "affine:1,0.5",
    // "sum:0.5*pow:1+0.5*log1p_pow:2". Parse errors cite the byte offset.
    static FunctionSpec parse(const std::string& text);

    double eval(double t) const;

    Kind kind() const { return kind_; }
    bool strictly_convex_after_exp() const { return strict_; }
    bool nonnegative_range() const { return nonneg_; }
    bool requires_positive_argument() const { return needs_pos_; }

    std::string to_string() const;

  private:
    FunctionSpec() = default;

    Kind kind_ = Kind::Log;
    double a_ = 0.0; // exponent, or affine intercept
    double b_ = 0.0; // affine slope, or compose-outer parameter
    std::vector<double> coeffs_;
    std::vector<FunctionSpec> parts_; // combo parts, or the single compose inner
    double offset_ = 0.0;
    // For Compose: which outer primitive (Pow uses b_, Affine uses a_, b_).
    enum class Outer { None, Pow, Affine };
    Outer outer_ = Outer::None;

    bool strict_ = false;
    bool injective_ = false;
    bool nonneg_ = false;
    bool needs_pos_ = false;
};

struct MembershipReport {
    bool ok = true;
    std::string witness; // first violated grid condition, empty when ok
};

// Grid falsifier: monotonicity of f and midpoint convexity of f(exp(.)) on
// the given positive ascending grid, with ~1e-7 relative slack. Does not
// certify membership; it can only refute it.
MembershipReport check_membership_report(const FunctionSpec& f, const std::vector<double>& grid);
bool check_membership(const FunctionSpec& f, const std::vector<double>& grid);

// Geometric grid 2^-10 .. 2^10, quarter-power steps.
std::vector<double> default_grid();

} // namespace sdlab::funcspec
