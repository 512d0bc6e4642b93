#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kappa/rational.hpp"

namespace kappa {

/// Exact coefficient ring of the engine: finite sums of Gaussian rationals
/// times integer powers of hbar and kappa^{-1}.  Powers of i are folded into
/// the Gaussian part (i*i = -1), so equality is plain structural equality.
class Scalar {
public:
    struct Gaussian {
        Rational re;
        Rational im;

        bool is_zero() const { return re.is_zero() && im.is_zero(); }
        Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
        Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
        Gaussian operator-() const { return {-re, -im}; }
        Gaussian operator*(const Gaussian& o) const {
            return {re * o.re - im * o.im, re * o.im + im * o.re};
        }
        Gaussian inverse() const {
            Rational n = re * re + im * im;
            if (n.is_zero()) throw Error("inverse of zero scalar");
            return {re / n, -(im / n)};
        }
        bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
    };

    /// (m, n): power of hbar and power of kappa^{-1}.
    using Key = std::pair<int, int>;

    Scalar() = default;
    Scalar(std::int64_t n) { set(Key{0, 0}, Gaussian{Rational(n), Rational(0)}); }
    Scalar(const Rational& q) { set(Key{0, 0}, Gaussian{q, Rational(0)}); }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return term(Rational(0), Rational(1), 0, 0); }
    static Scalar hbar() { return term(Rational(1), Rational(0), 1, 0); }
    static Scalar inv_kappa() { return term(Rational(1), Rational(0), 0, 1); }
    static Scalar i_hbar() { return term(Rational(0), Rational(1), 1, 0); }
    static Scalar i_over_kappa() { return term(Rational(0), Rational(1), 0, 1); }

    /// q_re + i q_im times hbar^m kappa^{-n}.
    static Scalar term(const Rational& q_re, const Rational& q_im, int m, int n) {
        Scalar s;
        s.set(Key{m, n}, Gaussian{q_re, q_im});
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    const std::map<Key, Gaussian>& terms() const { return terms_; }

    /// Nonempty iff the scalar is a single (m, n) term; used for inversion
    /// and compact printing.
    bool single_term() const { return terms_.size() == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; defined only for single-term scalars.
    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Drops every term carrying a positive power of kappa^{-1}.
    Scalar classical_limit() const;

    /// Numeric value at given hbar and 1/kappa.
    std::complex<double> eval(double hbar_value, double inv_kappa_value) const;

    /// Canonical rendering, factor order (rational)*i*hbar^m*kappa^-n per
    /// term.  A zero scalar prints as "0".
    std::string to_string() const;

    /// True if printing needs parentheses when used as a coefficient.
    bool needs_parens() const;

    /// Rendering split into (leading sign, magnitude string); used by the
    /// element printer to absorb signs into "+"/"-" separators.
    std::pair<int, std::string> signed_parts() const;

private:
    void set(const Key& k, const Gaussian& g) {
        if (!g.is_zero()) terms_[k] = g;
    }
    void add(const Key& k, const Gaussian& g) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!g.is_zero()) terms_[k] = g;
            return;
        }
        it->second = it->second + g;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<Key, Gaussian> terms_;
};

} // namespace kappa
