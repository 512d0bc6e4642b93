#include "kappa/scalar.hpp"

#include <cmath>
#include <sstream>

namespace kappa {

bool Scalar::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [key, g] = *terms_.begin();
    return key == Key{0, 0} && g.re.is_one() && g.im.is_zero();
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    for (const auto& [k, g] : o.terms_) r.add(k, g);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r = *this;
    for (const auto& [k, g] : o.terms_) r.add(k, -g);
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (const auto& [k, g] : terms_) r.terms_[k] = -g;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    for (const auto& [ka, ga] : terms_)
        for (const auto& [kb, gb] : o.terms_)
            r.add(Key{ka.first + kb.first, ka.second + kb.second}, ga * gb);
    return r;
}

Scalar Scalar::inverse() const {
    if (!single_term()) throw Error("scalar inverse requires a single hbar/kappa term");
    const auto& [key, g] = *terms_.begin();
    Scalar r;
    r.set(Key{-key.first, -key.second}, g.inverse());
    return r;
}

Scalar Scalar::classical_limit() const {
    Scalar r;
    for (const auto& [k, g] : terms_)
        if (k.second <= 0) r.set(k, g);
    return r;
}

std::complex<double> Scalar::eval(double hbar_value, double inv_kappa_value) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [k, g] : terms_) {
        double w = std::pow(hbar_value, k.first);
        if (k.second >= 0) {
            w *= std::pow(inv_kappa_value, k.second);
        } else {
            if (inv_kappa_value == 0.0) throw Error("positive kappa power at 1/kappa = 0");
            w *= std::pow(1.0 / inv_kappa_value, -k.second);
        }
        acc += std::complex<double>(g.re.to_double(), g.im.to_double()) * w;
    }
    return acc;
}

namespace {

// One display term: |q| * i * hbar^m * kappa^-n with 1-factors omitted.
std::string display_term(const Rational& q, bool imaginary, int m, int n) {
    std::vector<std::string> factors;
    Rational mag = q.sign() < 0 ? -q : q;
    bool unit = mag.is_one();
    if (!unit || (!imaginary && m == 0 && n == 0)) factors.push_back(mag.to_string());
    if (imaginary) factors.push_back("i");
    if (m == 1)
        factors.push_back("hbar");
    else if (m != 0)
        factors.push_back("hbar^" + std::to_string(m));
    if (n != 0) factors.push_back("kappa^" + std::to_string(-n));
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "*";
        out += factors[i];
    }
    return out;
}

struct DisplayTerm {
    int sign;
    std::string text;
};

std::vector<DisplayTerm> display_terms(const std::map<Scalar::Key, Scalar::Gaussian>& terms) {
    std::vector<DisplayTerm> out;
    for (const auto& [k, g] : terms) {
        if (!g.re.is_zero())
            out.push_back({g.re.sign(), display_term(g.re, false, k.first, k.second)});
        if (!g.im.is_zero())
            out.push_back({g.im.sign(), display_term(g.im, true, k.first, k.second)});
    }
    return out;
}

} // namespace

std::string Scalar::to_string() const {
    if (terms_.empty()) return "0";
    auto parts = display_terms(terms_);
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == 0) {
            if (parts[i].sign < 0) out += "-";
        } else {
            out += parts[i].sign < 0 ? " - " : " + ";
        }
        out += parts[i].text;
    }
    return out;
}

bool Scalar::needs_parens() const {
    return display_terms(terms_).size() > 1;
}

std::pair<int, std::string> Scalar::signed_parts() const {
    auto parts = display_terms(terms_);
    if (parts.size() == 1) return {parts[0].sign, parts[0].text};
    return {1, "(" + to_string() + ")"};
}

} // namespace kappa
