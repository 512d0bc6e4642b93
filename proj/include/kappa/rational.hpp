#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "kappa/errors.hpp"

namespace kappa {

/// Exact rational number over 64-bit integers.  Always stored reduced with a
/// positive denominator; arithmetic throws OverflowError instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const { return Rational(checked_neg(num_), den_, already_reduced{}); }

    Rational operator+(const Rational& o) const {
        std::int64_t g = std::gcd(den_, o.den_);
        std::int64_t dl = den_ / g;
        std::int64_t dr = o.den_ / g;
        std::int64_t n = checked_add(checked_mul(num_, dr), checked_mul(o.num_, dl));
        std::int64_t d = checked_mul(checked_mul(dl, dr), g);
        return Rational(n, d);
    }

    Rational operator-(const Rational& o) const { return *this + (-o); }

    Rational operator*(const Rational& o) const {
        std::int64_t g1 = std::gcd(std::abs(num_), o.den_);
        std::int64_t g2 = std::gcd(std::abs(o.num_), den_);
        std::int64_t n = checked_mul(num_ / g1, o.num_ / g2);
        std::int64_t d = checked_mul(den_ / g2, o.den_ / g1);
        return Rational(n, d, already_reduced{});
    }

    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw Error("division by zero rational");
        return *this * o.inverse();
    }

    Rational inverse() const {
        if (num_ == 0) throw Error("inverse of zero rational");
        if (num_ > 0) return Rational(den_, num_, already_reduced{});
        return Rational(checked_neg(den_), checked_neg(num_), already_reduced{});
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    struct already_reduced {};
    Rational(std::int64_t n, std::int64_t d, already_reduced) : num_(n), den_(d) {}

    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("rational multiply overflow");
        return r;
    }
    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw OverflowError("rational add overflow");
        return r;
    }
    static std::int64_t checked_neg(std::int64_t a) {
        if (a == INT64_MIN) throw OverflowError("rational negate overflow");
        return -a;
    }

    void reduce() {
        if (den_ == 0) throw Error("zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        std::int64_t g = std::gcd(std::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace kappa
