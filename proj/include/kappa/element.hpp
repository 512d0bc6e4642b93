#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "kappa/generator.hpp"
#include "kappa/scalar.hpp"

namespace kappa {

/// A word in the generators.  The canonical form is
/// x0^a x1^b x2^c x3^d * E^(r) * P0^e P1^f P2^g P3^h, with at most one
/// exponential factor; non-canonical words are valid inputs and get ordered
/// by the rewrite engine.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Generator> w) : word_(std::move(w)) { fold_exponentials(); }
    Monomial(std::initializer_list<Generator> w) : Monomial(std::vector<Generator>(w)) {}

    static Monomial unit() { return Monomial(); }

    const std::vector<Generator>& word() const { return word_; }
    bool is_unit() const { return word_.empty(); }
    std::size_t size() const { return word_.size(); }

    /// Merges adjacent exponentials (E^(r) E^(s) -> E^(r+s)) and drops E^(0).
    void fold_exponentials();

    /// Number of adjacent transpositions away from sorted order, the primary
    /// component of the rewrite termination measure.
    int inversions() const;
    int p_degree() const;
    bool is_sorted() const;

    Monomial concat(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.word_ == b.word_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b);

    std::string to_string() const; // "1" for the empty word

private:
    std::vector<Generator> word_;
};

/// Finite Scalar-linear combination of monomials.  Zero coefficients are
/// never stored; predicates and printing rely on that.
class Element {
public:
    Element() = default;
    /* implicit */ Element(const Scalar& s) { add_term(Monomial::unit(), s); }
    /* implicit */ Element(const Generator& g) { add_term(Monomial({g}), Scalar::one()); }
    explicit Element(const Monomial& m) { add_term(m, Scalar::one()); }
    Element(const Monomial& m, const Scalar& s) { add_term(m, s); }

    static Element zero() { return Element(); }
    static Element one() { return Element(Scalar::one()); }
    static Element x(int mu) { return Element(Generator::x(mu)); }
    static Element p(int mu) { return Element(Generator::p(mu)); }
    static Element exp_p0(const Rational& r);

    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of a monomial (zero Scalar if absent).
    Scalar coefficient(const Monomial& m) const;

    /// True if the element is a pure scalar (single term on the empty word,
    /// or zero).
    bool is_scalar() const;
    Scalar scalar_part() const; // coefficient of the empty word

    void add_term(const Monomial& m, const Scalar& s);

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);

    /// Product in the free algebra: concatenates words without reordering.
    /// Use multiply() from relation_table.hpp for the normal-ordered product.
    Element concat_product(const Element& o) const;

    Element scaled(const Scalar& s) const;

    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::string to_string() const; // "0" for the zero element

private:
    std::map<Monomial, Scalar> terms_;
};

inline Element operator*(const Scalar& s, const Element& e) { return e.scaled(s); }

} // namespace kappa
