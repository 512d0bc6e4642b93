#include "kappa/element.hpp"

#include <algorithm>

namespace kappa {

void Monomial::fold_exponentials() {
    std::vector<Generator> out;
    out.reserve(word_.size());
    for (const auto& g : word_) {
        if (g.is_exp() && !out.empty() && out.back().is_exp()) {
            out.back().exp_r += g.exp_r;
            if (out.back().exp_r.is_zero()) out.pop_back();
            continue;
        }
        if (g.is_exp() && g.exp_r.is_zero()) continue;
        out.push_back(g);
    }
    word_ = std::move(out);
}

int Monomial::inversions() const {
    int count = 0;
    for (std::size_t i = 0; i < word_.size(); ++i)
        for (std::size_t j = i + 1; j < word_.size(); ++j)
            if (word_[i].order_class() > word_[j].order_class()) ++count;
    return count;
}

int Monomial::p_degree() const {
    int d = 0;
    for (const auto& g : word_)
        if (g.is_p()) ++d;
    return d;
}

bool Monomial::is_sorted() const {
    for (std::size_t i = 0; i + 1 < word_.size(); ++i) {
        if (word_[i].order_class() > word_[i + 1].order_class()) return false;
        if (word_[i].is_exp() && word_[i + 1].is_exp()) return false; // unfolded pair
    }
    return true;
}

Monomial Monomial::concat(const Monomial& o) const {
    std::vector<Generator> w = word_;
    w.insert(w.end(), o.word_.begin(), o.word_.end());
    return Monomial(std::move(w));
}

bool operator<(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.word_.begin(), a.word_.end(), b.word_.begin(),
                                        b.word_.end());
}

std::string Monomial::to_string() const {
    if (word_.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < word_.size()) {
        std::size_t j = i;
        while (j < word_.size() && word_[j] == word_[i]) ++j;
        if (!out.empty()) out += "*";
        out += word_[i].to_string();
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

Element Element::exp_p0(const Rational& r) {
    if (r.is_zero()) return Element::one();
    return Element(Generator::exp_p0(r));
}

Scalar Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

bool Element::is_scalar() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

Scalar Element::scalar_part() const {
    return coefficient(Monomial::unit());
}

void Element::add_term(const Monomial& m, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, s);
        return;
    }
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    r -= o;
    return r;
}

Element Element::operator-() const {
    Element r;
    for (const auto& [m, s] : terms_) r.terms_.emplace(m, -s);
    return r;
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [m, s] : o.terms_) add_term(m, s);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [m, s] : o.terms_) add_term(m, -s);
    return *this;
}

Element Element::concat_product(const Element& o) const {
    Element r;
    for (const auto& [ma, sa] : terms_)
        for (const auto& [mb, sb] : o.terms_) r.add_term(ma.concat(mb), sa * sb);
    return r;
}

Element Element::scaled(const Scalar& s) const {
    Element r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, s] : terms_) {
        auto [sign, text] = s.signed_parts();
        if (first) {
            if (sign < 0) out += "-";
            first = false;
        } else {
            out += sign < 0 ? " - " : " + ";
        }
        bool unit_coeff = (text == "1");
        if (m.is_unit()) {
            out += text;
        } else if (unit_coeff) {
            out += m.to_string();
        } else {
            out += text + "*" + m.to_string();
        }
    }
    return out;
}

} // namespace kappa
