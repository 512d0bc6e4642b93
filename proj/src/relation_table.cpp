#include "kappa/relation_table.hpp"

#include <deque>

namespace kappa {

RelationTable RelationTable::momentum() {
    RelationTable t;
    t.kind_ = Kind::MomentumOnly;
    t.name_ = "momentum";
    return t;
}

RelationTable RelationTable::position(const Scalar& time_space_coeff) {
    RelationTable t;
    t.kind_ = Kind::PositionOnly;
    t.name_ = "position";
    t.xx_coeff_ = time_space_coeff;
    return t;
}

RelationTable RelationTable::phase_space(const Scalar& time_space_coeff,
                                         std::array<std::array<Element, 4>, 4> cross,
                                         std::string name) {
    RelationTable t;
    t.kind_ = Kind::PhaseSpace;
    t.name_ = std::move(name);
    t.xx_coeff_ = time_space_coeff;
    t.cross_ = std::move(cross);
    return t;
}

bool RelationTable::supports(const Generator& g) const {
    switch (kind_) {
        case Kind::PositionOnly: return g.is_x();
        case Kind::MomentumOnly: return g.is_p() || g.is_exp();
        case Kind::PhaseSpace: return true;
    }
    return false;
}

const Element& RelationTable::cross_commutator(int mu, int nu) const {
    if (kind_ != Kind::PhaseSpace) throw Error("table has no cross sector");
    return cross_[mu][nu];
}

Scalar RelationTable::exp_commutator_coefficient(int mu, const Rational& r) const {
    // E^(r) = e^{-r P_0/(kappa hbar)} and [x_mu, P_0] is a scalar here, so
    // [x_mu, E^(r)] = (-r/(kappa hbar)) [x_mu, P_0] E^(r).
    const Element& c = cross_[mu][0];
    if (!c.is_scalar())
        throw Error("exponential rule needs scalar [x_mu, P_0] in table " + name_);
    return Scalar::term(-r, Rational(0), -1, 1) * c.scalar_part();
}

Element RelationTable::rewrite(const Generator& g, const Generator& h) const {
    // g comes after h in the chain; produce the reordered form of g*h.
    if (g.is_p() && (h.is_p() || h.is_exp())) {
        // Momenta commute among themselves and with the exponential.
        return Element(Monomial({h, g}));
    }
    if (g.is_x() && h.is_x()) {
        Element swapped(Monomial({h, g}));
        if (h.index == 0) {
            // x_k x_0 = x_0 x_k - [x_0, x_k]
            return swapped - Element(Monomial({g}), xx_coeff_);
        }
        return swapped; // spatial positions commute
    }
    if (kind_ != Kind::PhaseSpace)
        throw UnknownGeneratorError("no rule for " + g.to_string() + "*" + h.to_string() +
                                    " in table " + name_);
    if (g.is_p() && h.is_x()) {
        // P_nu x_mu = x_mu P_nu - [x_mu, P_nu]
        return Element(Monomial({h, g})) - cross_[h.index][g.index];
    }
    if (g.is_exp() && h.is_x()) {
        // E^(r) x_mu = x_mu E^(r) - [x_mu, E^(r)]
        Scalar c = exp_commutator_coefficient(h.index, g.exp_r);
        return Element(Monomial({h, g})) - Element(Monomial({g}), c);
    }
    throw Error("unexpected rewrite pair " + g.to_string() + "*" + h.to_string());
}

namespace {

constexpr int kRewriteFuel = 4'000'000;

} // namespace

Element normalize(const Element& e, const RelationTable& t) {
    for (const auto& [m, s] : e.terms())
        for (const auto& g : m.word())
            if (!t.supports(g))
                throw UnknownGeneratorError("generator " + g.to_string() +
                                            " has no rules in table " + t.name());

    Element result;
    std::deque<std::pair<Monomial, Scalar>> work(e.terms().begin(), e.terms().end());
    int fuel = kRewriteFuel;
    while (!work.empty()) {
        auto [mono, coeff] = work.front();
        work.pop_front();
        if (coeff.is_zero()) continue;

        const auto& w = mono.word();
        std::size_t pos = w.size();
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i].order_class() > w[i + 1].order_class()) {
                pos = i;
                break;
            }
        }
        if (pos == w.size()) {
            result.add_term(mono, coeff);
            continue;
        }
        if (--fuel < 0) throw Error("normalize: rewrite fuel exhausted");

        Element replaced = t.rewrite(w[pos], w[pos + 1]);
        std::vector<Generator> prefix(w.begin(), w.begin() + pos);
        std::vector<Generator> suffix(w.begin() + pos + 2, w.end());
        for (const auto& [rm, rs] : replaced.terms()) {
            std::vector<Generator> nw = prefix;
            nw.insert(nw.end(), rm.word().begin(), rm.word().end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            work.emplace_back(Monomial(std::move(nw)), coeff * rs);
        }
    }
    return result;
}

Element multiply(const Element& a, const Element& b, const RelationTable& t) {
    return normalize(a.concat_product(b), t);
}

Element commutator(const Element& a, const Element& b, const RelationTable& t) {
    return normalize(a.concat_product(b) - b.concat_product(a), t);
}

Element classical_limit(const Element& e) {
    Element out;
    for (const auto& [m, s] : e.terms()) {
        Scalar limited = s.classical_limit();
        if (limited.is_zero()) continue;
        std::vector<Generator> w;
        for (const auto& g : m.word())
            if (!g.is_exp()) w.push_back(g);
        out.add_term(Monomial(std::move(w)), limited);
    }
    return out;
}

} // namespace kappa
