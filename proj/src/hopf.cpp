#include "kappa/hopf.hpp"

#include <array>

namespace kappa {

TensorElement TensorElement::tensor(const Element& left, const Element& right) {
    TensorElement t;
    for (const auto& [lm, ls] : left.terms())
        for (const auto& [rm, rs] : right.terms()) t.add_term(lm, rm, ls * rs);
    return t;
}

void TensorElement::add_term(const Monomial& l, const Monomial& r, const Scalar& s) {
    if (s.is_zero()) return;
    Key k{l, r};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), s);
        return;
    }
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [k, s] : o.terms_) r.add_term(k.first, k.second, s);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [k, s] : o.terms_) r.add_term(k.first, k.second, -s);
    return r;
}

TensorElement TensorElement::scaled(const Scalar& s) const {
    TensorElement r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
    return r;
}

TensorElement TensorElement::product(const TensorElement& o, const RelationTable& left_table,
                                     const RelationTable& right_table) const {
    TensorElement r;
    for (const auto& [ka, sa] : terms_) {
        for (const auto& [kb, sb] : o.terms_) {
            Element l = multiply(Element(ka.first), Element(kb.first), left_table);
            Element rg = multiply(Element(ka.second), Element(kb.second), right_table);
            Scalar s = sa * sb;
            for (const auto& [lm, ls] : l.terms())
                for (const auto& [rm, rs] : rg.terms()) r.add_term(lm, rm, s * ls * rs);
        }
    }
    return r;
}

TensorElement TensorElement::swapped() const {
    TensorElement r;
    for (const auto& [k, s] : terms_) r.add_term(k.second, k.first, s);
    return r;
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, s] : terms_) {
        auto [sign, text] = s.signed_parts();
        if (first) {
            if (sign < 0) out += "-";
            first = false;
        } else {
            out += sign < 0 ? " - " : " + ";
        }
        std::string pair_text = "(" + k.first.to_string() + " (x) " + k.second.to_string() + ")";
        out += (text == "1") ? pair_text : text + "*" + pair_text;
    }
    return out;
}

namespace {

void check_side(const Element& e, Side side, const char* what) {
    for (const auto& [m, s] : e.terms()) {
        for (const auto& g : m.word()) {
            bool ok = (side == Side::X) ? g.is_x() : (g.is_p() || g.is_exp());
            if (!ok)
                throw WrongSideError(std::string(what) + ": generator " + g.to_string() +
                                     " does not belong to the " +
                                     (side == Side::X ? "position" : "momentum") + " algebra");
        }
    }
}

TensorElement coproduct_generator(const Generator& g, Side side, const HopfContext& ctx) {
    TensorElement t;
    const Monomial unit = Monomial::unit();
    if (side == Side::X) {
        t.add_term(Monomial({g}), unit, Scalar::one());
        t.add_term(unit, Monomial({g}), Scalar::one());
        return t;
    }
    if (g.is_exp()) {
        t.add_term(Monomial({g}), Monomial({g}), Scalar::one());
        return t;
    }
    if (g.index == 0) {
        t.add_term(Monomial({g}), unit, Scalar::one());
        t.add_term(unit, Monomial({g}), Scalar::one());
        return t;
    }
    // Spatial momenta: the only basis-dependent coproduct.
    Monomial pk({g});
    if (ctx.basis == Basis::Bicrossproduct) {
        // P_k (x) 1 + E (x) P_k
        t.add_term(pk, unit, Scalar::one());
        t.add_term(Monomial({Generator::exp_p0(Rational(1))}), pk, Scalar::one());
    } else {
        // P_k (x) E^(-1/2) + E^(1/2) (x) P_k
        t.add_term(pk, Monomial({Generator::exp_p0(Rational(-1, 2))}), Scalar::one());
        t.add_term(Monomial({Generator::exp_p0(Rational(1, 2))}), pk, Scalar::one());
    }
    if (ctx.variant == CoproductVariant::Transposed) t = t.swapped();
    return t;
}

Scalar counit_mono(const Monomial& m) {
    for (const auto& g : m.word())
        if (!g.is_exp()) return Scalar::zero();
    return Scalar::one();
}

// <x_mu, single momentum monomial>; x_mu is primitive, so exactly one factor
// of the monomial is paired and the rest must have unit counit.
Scalar pair_generator(const Generator& xg, const Monomial& pm, const HopfContext& ctx) {
    int p_count = 0;
    int p_index = -1;
    Rational exp_sum(0);
    for (const auto& g : pm.word()) {
        if (g.is_p()) {
            ++p_count;
            p_index = g.index;
        } else {
            exp_sum += g.exp_r;
        }
    }
    if (p_count >= 2) return Scalar::zero();
    if (p_count == 1) {
        if (xg.index != p_index) return Scalar::zero();
        return Scalar::term(Rational(0), Rational(ctx.metric.sign(xg.index)), 1, 0);
    }
    // Pure exponential E^(r): <x_mu, E^(r)> = (-r/(kappa hbar)) <x_mu, P_0>.
    if (exp_sum.is_zero() || xg.index != 0) return Scalar::zero();
    return Scalar::term(Rational(0), -exp_sum * Rational(ctx.metric.sign(0)), 0, 1);
}

Scalar pair_mono(const Monomial& xm, const Monomial& pm, const HopfContext& ctx) {
    const auto& xw = xm.word();
    if (xw.empty()) return counit_mono(pm);
    if (xw.size() == 1) return pair_generator(xw[0], pm, ctx);

    Generator head = xw[0];
    Monomial rest(std::vector<Generator>(xw.begin() + 1, xw.end()));
    TensorElement dp = coproduct(Element(pm), Side::P, ctx);
    Scalar acc;
    for (const auto& [legs, s] : dp.terms()) {
        Scalar left = pair_generator(head, legs.first, ctx);
        if (left.is_zero()) continue;
        Scalar right = pair_mono(rest, legs.second, ctx);
        if (right.is_zero()) continue;
        acc += s * left * right;
    }
    return acc;
}

Element antipode_generator(const Generator& g, Side side, const HopfContext& ctx) {
    if (side == Side::X || g.is_x()) return -Element(g);
    if (g.is_exp()) return Element::exp_p0(-g.exp_r);
    if (g.index == 0) return -Element(g);
    if (ctx.basis == Basis::Standard) return -Element(g);
    // Bicrossproduct spatial momenta: S(P_k) = -e^{P_0/(kappa hbar)} P_k, the
    // unique extension satisfying the antipode axiom with the deformed
    // coproduct.
    return Element(Monomial({Generator::exp_p0(Rational(-1)), g}), Scalar(-1));
}

const RelationTable& side_table(Side side, const HopfContext& ctx) {
    return side == Side::X ? position_table(ctx) : momentum_table();
}

} // namespace

const RelationTable& momentum_table() {
    static const RelationTable t = RelationTable::momentum();
    return t;
}

Scalar derive_position_commutator_coefficient(const HopfContext& ctx) {
    // c = <x_0 x_1 - x_1 x_0, P_1> / <x_1, P_1>, with the product of position
    // generators paired through the momentum coproduct.
    Element lhs = Element(Monomial({Generator::x(0), Generator::x(1)})) -
                  Element(Monomial({Generator::x(1), Generator::x(0)}));
    Scalar num = pair(lhs, Element::p(1), ctx);
    Scalar den = pair(Element::x(1), Element::p(1), ctx);
    return num * den.inverse();
}

const RelationTable& position_table(const HopfContext& ctx) {
    static const std::array<RelationTable, 8> tables = [] {
        std::array<RelationTable, 8> out = {
            RelationTable::momentum(), RelationTable::momentum(), RelationTable::momentum(),
            RelationTable::momentum(), RelationTable::momentum(), RelationTable::momentum(),
            RelationTable::momentum(), RelationTable::momentum()};
        for (int b = 0; b < 2; ++b)
            for (int m = 0; m < 2; ++m)
                for (int v = 0; v < 2; ++v) {
                    HopfContext ctx{b ? Basis::Standard : Basis::Bicrossproduct,
                                    Metric{m != 0},
                                    v ? CoproductVariant::Transposed : CoproductVariant::Direct};
                    out[b * 4 + m * 2 + v] =
                        RelationTable::position(derive_position_commutator_coefficient(ctx));
                }
        return out;
    }();
    int idx = (ctx.basis == Basis::Standard ? 4 : 0) + (ctx.metric.flipped ? 2 : 0) +
              (ctx.variant == CoproductVariant::Transposed ? 1 : 0);
    return tables[idx];
}

TensorElement coproduct(const Element& e, Side side, const HopfContext& ctx) {
    check_side(e, side, "coproduct");
    const RelationTable& t = side_table(side, ctx);
    TensorElement out;
    for (const auto& [m, s] : e.terms()) {
        TensorElement acc = TensorElement::unit();
        for (const auto& g : m.word()) acc = acc.product(coproduct_generator(g, side, ctx), t, t);
        out = out + acc.scaled(s);
    }
    return out;
}

Scalar counit(const Element& e) {
    Scalar acc;
    for (const auto& [m, s] : e.terms()) acc += s * counit_mono(m);
    return acc;
}

Element antipode(const Element& e, Side side, const HopfContext& ctx) {
    check_side(e, side, "antipode");
    const RelationTable& t = side_table(side, ctx);
    Element out;
    for (const auto& [m, s] : e.terms()) {
        Element acc = Element::one();
        const auto& w = m.word();
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            acc = multiply(acc, antipode_generator(*it, side, ctx), t);
        out += acc.scaled(s);
    }
    return out;
}

Scalar pair(const Element& x, const Element& p, const HopfContext& ctx) {
    check_side(x, Side::X, "pair");
    check_side(p, Side::P, "pair");
    Scalar acc;
    for (const auto& [xm, xs] : x.terms())
        for (const auto& [pm, ps] : p.terms()) acc += xs * ps * pair_mono(xm, pm, ctx);
    return acc;
}

Element act(ActionMode mode, const Element& actor, const Element& target,
            const HopfContext& ctx) {
    Side target_side =
        (mode == ActionMode::LeftXOnP || mode == ActionMode::RightPByX) ? Side::P : Side::X;
    Side actor_side = target_side == Side::P ? Side::X : Side::P;
    check_side(actor, actor_side, "act");
    check_side(target, target_side, "act");

    TensorElement dt = coproduct(target, target_side, ctx);
    Element out;
    for (const auto& [legs, s] : dt.terms()) {
        Scalar weight;
        Monomial kept;
        switch (mode) {
            case ActionMode::LeftXOnP: // <x, p_(2)> p_(1)
                weight = pair(actor, Element(legs.second), ctx);
                kept = legs.first;
                break;
            case ActionMode::LeftPOnX: // <p, x_(2)> x_(1)
                weight = pair(Element(legs.second), actor, ctx);
                kept = legs.first;
                break;
            case ActionMode::RightPByX: // <x, p_(1)> p_(2)
                weight = pair(actor, Element(legs.first), ctx);
                kept = legs.second;
                break;
            case ActionMode::RightXByP: // <p, x_(1)> x_(2)
                weight = pair(Element(legs.first), actor, ctx);
                kept = legs.second;
                break;
        }
        out += Element(kept, s * weight);
    }
    return normalize(out, side_table(target_side, ctx));
}

} // namespace kappa
