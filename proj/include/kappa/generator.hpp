#pragma once

#include <string>

#include "kappa/rational.hpp"

namespace kappa {

/// One letter of a noncommutative word: a position generator x_mu, a momentum
/// generator P_mu (mu in 0..3), or the group-like exponential
/// ExpP(r) = e^{-r P_0 / (kappa hbar)} with rational r.
struct Generator {
    enum class Kind { X = 0, Exp = 1, P = 2 };

    Kind kind = Kind::X;
    int index = 0;   // mu for X and P
    Rational exp_r;  // r for Exp

    static Generator x(int mu) { return {Kind::X, mu, Rational(0)}; }
    static Generator p(int mu) { return {Kind::P, mu, Rational(0)}; }
    static Generator exp_p0(const Rational& r) { return {Kind::Exp, 0, r}; }

    bool is_x() const { return kind == Kind::X; }
    bool is_p() const { return kind == Kind::P; }
    bool is_exp() const { return kind == Kind::Exp; }

    /// Position in the fixed normal-ordering chain
    /// x0 < x1 < x2 < x3 < Exp < P0 < P1 < P2 < P3.
    int order_class() const {
        switch (kind) {
            case Kind::X: return index;
            case Kind::Exp: return 4;
            case Kind::P: return 5 + index;
        }
        return 0;
    }

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.kind == b.kind && a.index == b.index && a.exp_r == b.exp_r;
    }
    friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
    friend bool operator<(const Generator& a, const Generator& b) {
        if (a.order_class() != b.order_class()) return a.order_class() < b.order_class();
        return a.exp_r < b.exp_r;
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::X: return "x" + std::to_string(index);
            case Kind::P: return "P" + std::to_string(index);
            case Kind::Exp:
                if (exp_r.is_one()) return "E";
                return "E^(" + exp_r.to_string() + ")";
        }
        return "?";
    }
};

} // namespace kappa
