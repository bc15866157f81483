#include "sdlab/funcspec.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace sdlab::funcspec {

FunctionSpec FunctionSpec::pow(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("pow: exponent must be positive");
    FunctionSpec f;
    f.kind_ = Kind::Pow;
    f.a_ = p;
    f.strict_ = true; // exp(p t) is strictly convex
    f.injective_ = true;
    f.nonneg_ = true;
    return f;
}

FunctionSpec FunctionSpec::log1p_pow(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("log1p_pow: exponent must be positive");
    FunctionSpec f;
    f.kind_ = Kind::Log1pPow;
    f.a_ = p;
    f.strict_ = true; // log(1 + exp(p t)) is strictly convex
    f.injective_ = true;
    f.nonneg_ = true;
    return f;
}

FunctionSpec FunctionSpec::log() {
    FunctionSpec f;
    f.kind_ = Kind::Log;
    f.strict_ = false; // companion is the identity, affine
    f.injective_ = true;
    f.nonneg_ = false;
    f.needs_pos_ = true;
    return f;
}

FunctionSpec FunctionSpec::sqrt() {
    FunctionSpec f;
    f.kind_ = Kind::Sqrt;
    f.strict_ = true;
    f.injective_ = true;
    f.nonneg_ = true;
    return f;
}

FunctionSpec FunctionSpec::affine(double b0, double b1) {
    FunctionSpec f;
    f.kind_ = Kind::Affine;
    f.a_ = b0;
    f.b_ = b1;
    f.strict_ = b1 > 0.0; // b0 + b1 exp(t)
    f.injective_ = b1 != 0.0;
    f.nonneg_ = b0 >= 0.0 && b1 >= 0.0;
    return f;
}

FunctionSpec FunctionSpec::combo(std::vector<double> coeffs, std::vector<FunctionSpec> parts,
                                 double offset) {
    if (coeffs.size() != parts.size() || parts.empty())
        throw std::invalid_argument("combo: need matching, non-empty coefficient and part lists");
    bool any_pos = false;
    for (double c : coeffs) {
        if (c < 0.0) throw std::invalid_argument("combo: coefficients must be non-negative");
        if (c > 0.0) any_pos = true;
    }
    if (!any_pos) throw std::invalid_argument("combo: at least one coefficient must be positive");
    FunctionSpec f;
    f.kind_ = Kind::AffineCombo;
    f.offset_ = offset;
    f.nonneg_ = offset >= 0.0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const FunctionSpec& p = parts[i];
        if (coeffs[i] > 0.0) {
            f.strict_ = f.strict_ || p.strict_;
            f.injective_ = f.injective_ || p.injective_;
        }
        f.nonneg_ = f.nonneg_ && (coeffs[i] == 0.0 || p.nonneg_);
        f.needs_pos_ = f.needs_pos_ || (coeffs[i] > 0.0 && p.needs_pos_);
    }
    f.coeffs_ = std::move(coeffs);
    f.parts_ = std::move(parts);
    return f;
}

FunctionSpec FunctionSpec::compose_pow(double q, FunctionSpec inner) {
    if (!(q >= 1.0)) throw std::invalid_argument("compose_pow: outer exponent must be >= 1");
    if (!inner.nonneg_)
        throw std::invalid_argument("compose_pow: inner must have non-negative range");
    FunctionSpec f;
    f.kind_ = Kind::Compose;
    f.outer_ = Outer::Pow;
    f.b_ = q;
    const bool outer_strict = q > 1.0;
    f.strict_ = (outer_strict && inner.injective_) || (inner.strict_ /* outer injective */);
    f.injective_ = inner.injective_;
    f.nonneg_ = true;
    f.needs_pos_ = inner.needs_pos_;
    f.parts_.push_back(std::move(inner));
    return f;
}

FunctionSpec FunctionSpec::compose_affine(double b0, double b1, FunctionSpec inner) {
    if (b1 < 0.0) throw std::invalid_argument("compose_affine: outer slope must be >= 0");
    FunctionSpec f;
    f.kind_ = Kind::Compose;
    f.outer_ = Outer::Affine;
    f.a_ = b0;
    f.b_ = b1;
    f.strict_ = inner.strict_ && b1 > 0.0; // outer never strict, injective iff slope > 0
    f.injective_ = inner.injective_ && b1 > 0.0;
    f.nonneg_ = b0 >= 0.0 && (b1 == 0.0 || inner.nonneg_);
    f.needs_pos_ = b1 > 0.0 && inner.needs_pos_;
    f.parts_.push_back(std::move(inner));
    return f;
}

FunctionSpec FunctionSpec::compose_log1p_pow(double q, const FunctionSpec& inner) {
    if (!(q > 0.0)) throw std::invalid_argument("compose_log1p_pow: exponent must be positive");
    // log(1 + s^q) is not convex in s, so it is only accepted where the
    // composition collapses into a plain Log1pPow node.
    if (inner.kind_ == Kind::Pow) return log1p_pow(q * inner.a_);
    if (inner.kind_ == Kind::Sqrt) return log1p_pow(q * 0.5);
    throw std::invalid_argument("compose_log1p_pow: inner must be a power");
}

FunctionSpec FunctionSpec::precompose_power(const FunctionSpec& f, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("precompose_power: exponent must be positive");
    switch (f.kind_) {
        case Kind::Pow: return pow(f.a_ * p);
        case Kind::Sqrt: return pow(0.5 * p);
        case Kind::Log1pPow: return log1p_pow(f.a_ * p);
        case Kind::Log: return combo({p}, {log()});
        case Kind::Affine: {
            if (f.b_ == 0.0) return affine(f.a_, 0.0);
            return combo({f.b_}, {pow(p)}, f.a_);
        }
        case Kind::AffineCombo: {
            std::vector<FunctionSpec> parts;
            parts.reserve(f.parts_.size());
            for (const FunctionSpec& part : f.parts_) parts.push_back(precompose_power(part, p));
            return combo(f.coeffs_, std::move(parts), f.offset_);
        }
        case Kind::Compose: {
            FunctionSpec inner = precompose_power(f.parts_[0], p);
            if (f.outer_ == Outer::Pow) return compose_pow(f.b_, std::move(inner));
            return compose_affine(f.a_, f.b_, std::move(inner));
        }
    }
    throw std::logic_error("precompose_power: unreachable");
}

double FunctionSpec::eval(double t) const {
    if (t < 0.0) throw DomainError("FunctionSpec: argument must be >= 0");
    switch (kind_) {
        case Kind::Pow: return std::pow(t, a_);
        case Kind::Log1pPow: return std::log1p(std::pow(t, a_));
        case Kind::Log:
            if (t <= 0.0) throw DomainError("log undefined at 0");
            return std::log(t);
        case Kind::Sqrt: return std::sqrt(t);
        case Kind::Affine: return a_ + b_ * t;
        case Kind::AffineCombo: {
            double sum = offset_;
            for (std::size_t i = 0; i < parts_.size(); ++i)
                if (coeffs_[i] != 0.0) sum += coeffs_[i] * parts_[i].eval(t);
            return sum;
        }
        case Kind::Compose: {
            const double s = parts_[0].eval(t);
            if (outer_ == Outer::Pow) {
                if (s < 0.0) throw DomainError("compose: inner value left [0, inf)");
                return std::pow(s, b_);
            }
            return a_ + b_ * s;
        }
    }
    throw std::logic_error("FunctionSpec::eval: unreachable");
}

namespace {

std::string format_number(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

std::string FunctionSpec::to_string() const {
    switch (kind_) {
        case Kind::Pow: return "pow:" + format_number(a_);
        case Kind::Log1pPow: return "log1p_pow:" + format_number(a_);
        case Kind::Log: return "log";
        case Kind::Sqrt: return "sqrt";
        case Kind::Affine: return "affine:" + format_number(a_) + "," + format_number(b_);
        case Kind::AffineCombo: {
            std::string s = "sum:";
            bool first = true;
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (!first) s += "+";
                s += format_number(coeffs_[i]) + "*" + parts_[i].to_string();
                first = false;
            }
            if (offset_ != 0.0) s += "+" + format_number(offset_) + "*affine:1,0";
            return s;
        }
        case Kind::Compose: {
            const std::string inner = parts_[0].to_string();
            if (outer_ == Outer::Pow) return "comp_pow:" + format_number(b_) + "(" + inner + ")";
            return "comp_affine:" + format_number(a_) + "," + format_number(b_) + "(" + inner + ")";
        }
    }
    return "?";
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool eof() const { return pos >= text.size(); }

    bool consume(const std::string& word) {
        if (text.compare(pos, word.size(), word) == 0) {
            pos += word.size();
            return true;
        }
        return false;
    }

    double number() {
        const char* start = text.c_str() + pos;
        char* end = nullptr;
        const double v = std::strtod(start, &end);
        if (end == start) throw ParseError("expected a number", pos);
        pos += static_cast<std::size_t>(end - start);
        return v;
    }
};

FunctionSpec parse_atom(Cursor& cur) {
    const std::size_t at = cur.pos;
    if (cur.consume("log1p_pow:")) return FunctionSpec::log1p_pow(cur.number());
    if (cur.consume("pow:")) return FunctionSpec::pow(cur.number());
    if (cur.consume("log")) return FunctionSpec::log();
    if (cur.consume("sqrt")) return FunctionSpec::sqrt();
    if (cur.consume("affine:")) {
        const double b0 = cur.number();
        if (!cur.consume(",")) throw ParseError("affine needs 'intercept,slope'", cur.pos);
        const double b1 = cur.number();
        return FunctionSpec::affine(b0, b1);
    }
    throw ParseError("unknown function", at);
}

} // namespace

FunctionSpec FunctionSpec::parse(const std::string& text) {
    Cursor cur{text};
    try {
        FunctionSpec result = [&]() {
            if (cur.consume("sum:")) {
                std::vector<double> coeffs;
                std::vector<FunctionSpec> parts;
                while (true) {
                    coeffs.push_back(cur.number());
                    if (!cur.consume("*")) throw ParseError("expected '*' after coefficient", cur.pos);
                    parts.push_back(parse_atom(cur));
                    if (!cur.consume("+")) break;
                }
                return combo(std::move(coeffs), std::move(parts));
            }
            return parse_atom(cur);
        }();
        if (!cur.eof()) throw ParseError("trailing characters after function spec", cur.pos);
        return result;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), cur.pos);
    }
}

std::vector<double> default_grid() {
    std::vector<double> g;
    g.reserve(81);
    for (int k = 0; k <= 80; ++k) g.push_back(std::exp2(-10.0 + 0.25 * k));
    return g;
}

MembershipReport check_membership_report(const FunctionSpec& f, const std::vector<double>& grid) {
    MembershipReport rep;
    if (grid.size() < 3) {
        rep.ok = false;
        rep.witness = "grid too small to test anything";
        return rep;
    }
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0) || (i + 1 < grid.size() && !(grid[i] < grid[i + 1]))) {
            rep.ok = false;
            rep.witness = "grid must be positive and strictly ascending";
            return rep;
        }
        try {
            vals[i] = f.eval(grid[i]);
        } catch (const DomainError& e) {
            rep.ok = false;
            rep.witness = std::string("evaluation failed at t=") + format_number(grid[i]) + ": " + e.what();
            return rep;
        }
    }
    const double kSlack = 1e-7;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double scale = std::max({1.0, std::fabs(vals[i]), std::fabs(vals[i + 1])});
        if (vals[i] > vals[i + 1] + kSlack * scale) {
            rep.ok = false;
            rep.witness = "not increasing: f(" + format_number(grid[i]) + ") > f(" +
                          format_number(grid[i + 1]) + ")";
            return rep;
        }
        // midpoint convexity of f(exp(.)): the exp-midpoint of t_i, t_{i+1}
        // is their geometric mean
        const double mid = std::sqrt(grid[i] * grid[i + 1]);
        const double fmid = f.eval(mid);
        if (fmid > 0.5 * (vals[i] + vals[i + 1]) + kSlack * scale) {
            rep.ok = false;
            rep.witness = "f(exp(.)) fails midpoint convexity between t=" + format_number(grid[i]) +
                          " and t=" + format_number(grid[i + 1]);
            return rep;
        }
    }
    return rep;
}

bool check_membership(const FunctionSpec& f, const std::vector<double>& grid) {
    return check_membership_report(f, grid).ok;
}

} // namespace sdlab::funcspec
