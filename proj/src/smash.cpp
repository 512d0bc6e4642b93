#include "kappa/smash.hpp"

#include "kappa/fixtures.hpp"

namespace kappa {

std::string commutator_key(char a, int mu, char b, int nu) {
    return std::string("[") + a + std::to_string(mu) + "," + b + std::to_string(nu) + "]";
}

RelationTable DerivedTable::rules() const {
    Scalar c = comms.xx[0][1].coefficient(Monomial({Generator::x(1)}));
    return RelationTable::phase_space(c, comms.xp, config.id());
}

namespace {

void require_cross_pair(const Generator& p_like, const Generator& x_gen) {
    if (!(p_like.is_p() || p_like.is_exp()) || !x_gen.is_x())
        throw NonCrossPairError("cross relation needs one momentum-side and one position "
                                "generator, got " +
                                p_like.to_string() + ", " + x_gen.to_string());
}

} // namespace

Element cross_product_form(const Generator& p_like, const Generator& x_gen,
                           const SmashConfig& cfg, std::vector<std::string>* notes) {
    require_cross_pair(p_like, x_gen);
    HopfContext ctx = cfg.hopf();
    Element p(p_like);
    Element x(x_gen);

    if (cfg.order == Order::XP) {
        // Position-first space: p o x = (p_(1) |> x) o p_(2).
        TensorElement dp = coproduct(p, Side::P, ctx);
        Element form;
        for (const auto& [legs, s] : dp.terms()) {
            Element acted = act(ActionMode::LeftPOnX, Element(legs.first), x, ctx);
            form += acted.concat_product(Element(legs.second)).scaled(s);
            if (notes)
                notes->push_back("leg " + legs.first.to_string() + " (x) " +
                                 legs.second.to_string() + ": " + legs.first.to_string() + " |> " +
                                 x_gen.to_string() + " = " + acted.to_string());
        }
        return form;
    }

    // Momentum-first space: x o p = (x_(1) |> p) o x_(2); positions are
    // primitive, so p o x = x o p - x |> p reordered to the common basis.
    Element acted = act(ActionMode::LeftXOnP, x, p, ctx);
    if (notes)
        notes->push_back("primitive coproduct of " + x_gen.to_string() + ": " +
                         x_gen.to_string() + " |> " + p_like.to_string() + " = " +
                         acted.to_string());
    return x.concat_product(p) - acted;
}

Element cross_commutator(int mu, int nu, const SmashConfig& cfg,
                         std::vector<std::string>* notes) {
    Generator xg = Generator::x(mu);
    Generator pg = Generator::p(nu);
    Element ordered = Element(Monomial({xg, pg}));
    return ordered - cross_product_form(pg, xg, cfg, notes);
}

Element cross_commutator_right(int mu, int nu, const SmashConfig& cfg) {
    HopfContext ctx = cfg.hopf();
    Element x = Element::x(mu);
    Element p = Element::p(nu);

    if (cfg.order == Order::XP) {
        // Right cross product on the position-first space:
        //   p o x = x_(1) o (p <| x_(2)).
        TensorElement dx = coproduct(x, Side::X, ctx);
        Element form;
        for (const auto& [legs, s] : dx.terms()) {
            Element acted = act(ActionMode::RightPByX, Element(legs.second), p, ctx);
            form += Element(legs.first).concat_product(acted).scaled(s);
        }
        return x.concat_product(p) - form;
    }

    // Right cross product on the momentum-first space:
    //   x o p = p_(1) o (x <| p_(2));  p o x is already in order there.
    TensorElement dp = coproduct(p, Side::P, ctx);
    Element form;
    for (const auto& [legs, s] : dp.terms()) {
        Element acted = act(ActionMode::RightXByP, Element(legs.second), x, ctx);
        form += Element(legs.first).concat_product(acted).scaled(s);
    }
    return form - p.concat_product(x);
}

DerivedTable derive_table(const SmashConfig& cfg) {
    DerivedTable t;
    t.config = cfg;
    HopfContext ctx = cfg.hopf();

    Scalar c = derive_position_commutator_coefficient(ctx);
    std::string xx_note = "coefficient of [x0,xk] from the duality probe "
                          "<x0 xk - xk x0, Pk> / <xk, Pk> = (" +
                          c.to_string() + ")";
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            if (mu == 0 && nu > 0)
                t.comms.xx[mu][nu] = Element(Monomial({Generator::x(nu)}), c);
            else if (nu == 0 && mu > 0)
                t.comms.xx[mu][nu] = Element(Monomial({Generator::x(mu)}), -c);
            if (mu != nu)
                t.provenance[commutator_key('x', mu, 'x', nu)] = {xx_note};
            t.provenance[commutator_key('P', mu, 'P', nu)] = {
                "momenta commute by the defining relations of the translation algebra"};

            std::vector<std::string> notes;
            t.comms.xp[mu][nu] = cross_commutator(mu, nu, cfg, &notes);
            t.provenance[commutator_key('x', mu, 'P', nu)] = std::move(notes);
        }
    }

    try {
        t.annotations = fixture_for(cfg).annotations;
    } catch (const MissingFixtureError&) {
        // No reference transcription for this configuration.
    }
    return t;
}

ClassicalLimitReport check_classical_limit(const DerivedTable& t) {
    ClassicalLimitReport r;
    r.config = t.config;

    bool plus = true;
    bool minus = true;
    auto record = [&](const std::string& lhs, const Element& limit, const Element& target_plus) {
        bool ok_plus = (limit == target_plus);
        bool ok_minus = (limit == -target_plus);
        if (target_plus.is_zero()) ok_minus = ok_plus;
        plus = plus && ok_plus;
        minus = minus && ok_minus;
        r.entries.push_back({lhs, limit.to_string(), ok_plus});
    };

    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            if (mu < nu) {
                record(commutator_key('x', mu, 'x', nu), classical_limit(t.comms.xx[mu][nu]),
                       Element::zero());
                record(commutator_key('P', mu, 'P', nu), classical_limit(t.comms.pp[mu][nu]),
                       Element::zero());
            }
            Element target =
                (mu == nu)
                    ? Element(Scalar::term(Rational(0), Rational(t.config.metric.sign(mu)), 1, 0))
                    : Element::zero();
            record(commutator_key('x', mu, 'P', nu), classical_limit(t.comms.xp[mu][nu]), target);
        }
    }
    r.canonical = plus;
    r.sign_flipped = !plus && minus;
    r.convention = plus ? "i*hbar*g" : (minus ? "-i*hbar*g" : "other");
    return r;
}

std::vector<const DiffEntry*> DiffReport::mismatches() const {
    std::vector<const DiffEntry*> out;
    for (const auto& e : entries)
        if (!e.equal) out.push_back(&e);
    return out;
}

DiffReport verify_against_fixture(const DerivedTable& t) {
    const Fixture& fx = fixture_for(t.config);
    DiffReport r;
    r.fixture_id = fx.id;

    auto compare = [&](const std::string& lhs, const Element& derived, const Element& expected) {
        DiffEntry e;
        e.lhs = lhs;
        e.derived = derived.to_string();
        e.expected = expected.to_string();
        e.equal = (derived == expected);
        auto it = fx.annotations.find(lhs);
        if (it != fx.annotations.end()) e.annotation = it->second;
        r.clean = r.clean && e.equal;
        r.entries.push_back(std::move(e));
    };

    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            compare(commutator_key('x', mu, 'x', nu), t.comms.xx[mu][nu], fx.comms.xx[mu][nu]);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            compare(commutator_key('x', mu, 'P', nu), t.comms.xp[mu][nu], fx.comms.xp[mu][nu]);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            compare(commutator_key('P', mu, 'P', nu), t.comms.pp[mu][nu], fx.comms.pp[mu][nu]);
    return r;
}

} // namespace kappa
