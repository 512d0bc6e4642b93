#include "kappa/selftest.hpp"

#include <cmath>
#include <map>
#include <random>
#include <tuple>

#include "kappa/fixtures.hpp"
#include "kappa/parser.hpp"

namespace kappa {

void SuiteResult::check(bool cond, const std::string& msg) {
    ++checks;
    if (!cond) {
        ++failures;
        if (messages.size() < 24) messages.push_back(msg);
    }
}

void SuiteResult::merge(const SuiteResult& o) {
    checks += o.checks;
    failures += o.failures;
    for (const auto& m : o.messages)
        if (messages.size() < 24) messages.push_back(m);
}

namespace {

Scalar i_hbar() { return Scalar::i_hbar(); }

std::vector<SmashConfig> base_configs() {
    return {
        {Basis::Bicrossproduct, Order::XP, {}, {}},
        {Basis::Bicrossproduct, Order::PX, {}, {}},
        {Basis::Standard, Order::XP, {}, {}},
        {Basis::Standard, Order::PX, {}, {}},
    };
}

std::vector<SmashConfig> all_configs() {
    auto out = base_configs();
    out.push_back({Basis::Bicrossproduct, Order::XP, Metric{true}, {}});
    out.push_back({Basis::Bicrossproduct, Order::PX, Metric{true}, {}});
    out.push_back({Basis::Bicrossproduct, Order::XP, {}, CoproductVariant::Transposed});
    out.push_back({Basis::Bicrossproduct, Order::PX, {}, CoproductVariant::Transposed});
    return out;
}

struct NamedTable {
    std::string name;
    RelationTable table;
    std::vector<Generator> pool;
};

std::vector<Generator> momentum_pool() {
    std::vector<Generator> pool;
    for (int mu = 0; mu < 4; ++mu) pool.push_back(Generator::p(mu));
    pool.push_back(Generator::exp_p0(Rational(1)));
    pool.push_back(Generator::exp_p0(Rational(-1, 2)));
    return pool;
}

std::vector<Generator> position_pool() {
    std::vector<Generator> pool;
    for (int mu = 0; mu < 4; ++mu) pool.push_back(Generator::x(mu));
    return pool;
}

std::vector<Generator> phase_pool() {
    auto pool = position_pool();
    for (const auto& g : momentum_pool()) pool.push_back(g);
    pool.push_back(Generator::exp_p0(Rational(1, 2)));
    return pool;
}

std::vector<NamedTable> shipped_tables() {
    std::vector<NamedTable> out;
    out.push_back({"momentum", momentum_table(), momentum_pool()});
    out.push_back({"position", position_table(HopfContext{}), position_pool()});
    for (const auto& cfg : all_configs())
        out.push_back({cfg.id(), derive_table(cfg).rules(), phase_pool()});
    return out;
}

Monomial random_word(std::mt19937_64& rng, const std::vector<Generator>& pool, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<Generator> w;
    int n = len(rng);
    for (int k = 0; k < n; ++k) w.push_back(pool[pick(rng)]);
    return Monomial(std::move(w));
}

Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> pw(-1, 1);
    Rational re(num(rng), den(rng));
    Rational im(num(rng), den(rng));
    Scalar s = Scalar::term(re, im, pw(rng), pw(rng));
    return s.is_zero() ? Scalar::one() : s;
}

Element random_element(std::mt19937_64& rng, const std::vector<Generator>& pool, int max_len,
                       int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    Element e;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) e += Element(random_word(rng, pool, max_len), random_scalar(rng));
    return e;
}

bool is_canonical(const Element& e) {
    for (const auto& [m, s] : e.terms()) {
        if (!m.is_sorted()) return false;
        if (s.is_zero()) return false;
    }
    return true;
}

// ---- triple tensors for coassociativity ----------------------------------

using Tensor3 = std::map<std::tuple<Monomial, Monomial, Monomial>, Scalar>;

void tensor3_add(Tensor3& t, const Monomial& a, const Monomial& b, const Monomial& c,
                 const Scalar& s) {
    if (s.is_zero()) return;
    auto key = std::make_tuple(a, b, c);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(std::move(key), s);
        return;
    }
    it->second += s;
    if (it->second.is_zero()) t.erase(it);
}

Tensor3 expand_leg(const TensorElement& te, Side side, const HopfContext& ctx, bool left) {
    Tensor3 out;
    for (const auto& [legs, s] : te.terms()) {
        TensorElement inner = coproduct(Element(left ? legs.first : legs.second), side, ctx);
        for (const auto& [il, is] : inner.terms()) {
            if (left)
                tensor3_add(out, il.first, il.second, legs.second, s * is);
            else
                tensor3_add(out, legs.first, il.first, il.second, s * is);
        }
    }
    return out;
}

// ---- truncated exponential series (oracle only) ---------------------------

Element exp_series(const Rational& r, int order) {
    // Sum_{n<=order} (-r/(kappa hbar))^n P_0^n / n!
    Element out;
    Scalar coeff = Scalar::one();
    Scalar step = Scalar::term(-r, Rational(0), -1, 1); // -r / (kappa hbar)
    for (int n = 0; n <= order; ++n) {
        std::vector<Generator> w(n, Generator::p(0));
        out += Element(Monomial(std::move(w)), coeff);
        coeff = coeff * step * Scalar(Rational(1, n + 1));
    }
    return out;
}

} // namespace

SuiteResult scalar_ring_suite(const SelftestOptions& o) {
    SuiteResult r{"scalar-ring"};
    Scalar i = Scalar::i();
    r.check(i * i == -Scalar::one(), "i^2 != -1");
    r.check(i * i * i * i == Scalar::one(), "i^4 != 1");
    std::mt19937_64 rng(o.seed + 1);
    for (int k = 0; k < 200; ++k) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        r.check((a + b) * c == a * c + b * c, "distributivity failed");
        r.check(a * b == b * a, "scalar commutativity failed");
        r.check((a - a).is_zero(), "a - a != 0");
    }
    r.check(Scalar::i_over_kappa().classical_limit().is_zero(),
            "classical limit keeps kappa^-1 term");
    r.check(Scalar::i_hbar().classical_limit() == Scalar::i_hbar(),
            "classical limit drops kappa-free term");
    return r;
}

SuiteResult termination_suite(const SelftestOptions& o) {
    SuiteResult r{"termination"};
    std::mt19937_64 rng(o.seed + 2);
    for (const auto& nt : shipped_tables()) {
        for (int k = 0; k < o.termination_words; ++k) {
            Monomial w = random_word(rng, nt.pool, 12);
            try {
                Element n = normalize(Element(w), nt.table);
                r.check(is_canonical(n), "non-canonical normal form in " + nt.name);
                r.check(normalize(n, nt.table) == n, "normalize not a fixed point in " + nt.name);
            } catch (const Error& e) {
                r.check(false, "normalize threw in " + nt.name + ": " + e.what());
            }
        }
    }
    return r;
}

SuiteResult normalize_idempotence_suite(const SelftestOptions& o) {
    SuiteResult r{"normalize-idempotence"};
    std::mt19937_64 rng(o.seed + 3);
    for (const auto& nt : shipped_tables()) {
        for (int k = 0; k < 60; ++k) {
            Element e = random_element(rng, nt.pool, 4, 3);
            Element n1 = normalize(e, nt.table);
            r.check(normalize(n1, nt.table) == n1, "idempotence failed in " + nt.name);
        }
    }
    return r;
}

SuiteResult associativity_suite(const SelftestOptions& o) {
    SuiteResult r{"associativity"};
    std::mt19937_64 rng(o.seed + 4);
    for (const auto& nt : shipped_tables()) {
        std::uniform_int_distribution<std::size_t> pick(0, nt.pool.size() - 1);
        for (int k = 0; k < o.algebra_triples; ++k) {
            Element a(nt.pool[pick(rng)]), b(nt.pool[pick(rng)]), c(nt.pool[pick(rng)]);
            Element left = multiply(multiply(a, b, nt.table), c, nt.table);
            Element right = multiply(a, multiply(b, c, nt.table), nt.table);
            r.check(left == right, "associativity failed in " + nt.name);
        }
    }
    return r;
}

SuiteResult jacobi_suite(const SelftestOptions& o) {
    SuiteResult r{"jacobi"};
    std::mt19937_64 rng(o.seed + 5);
    for (const auto& nt : shipped_tables()) {
        std::uniform_int_distribution<std::size_t> pick(0, nt.pool.size() - 1);
        for (int k = 0; k < o.algebra_triples; ++k) {
            Element a(nt.pool[pick(rng)]), b(nt.pool[pick(rng)]), c(nt.pool[pick(rng)]);
            Element sum = commutator(commutator(a, b, nt.table), c, nt.table) +
                          commutator(commutator(b, c, nt.table), a, nt.table) +
                          commutator(commutator(c, a, nt.table), b, nt.table);
            r.check(sum.is_zero(), "jacobi failed in " + nt.name);
        }
    }
    return r;
}

SuiteResult hopf_axiom_suite(const SelftestOptions& o) {
    SuiteResult r{"hopf-axioms"};
    std::mt19937_64 rng(o.seed + 6);
    for (Basis basis : {Basis::Bicrossproduct, Basis::Standard}) {
        HopfContext ctx{basis, {}, {}};
        std::string tag = to_string(basis);
        for (Side side : {Side::X, Side::P}) {
            const auto pool = side == Side::X ? position_pool() : momentum_pool();
            const RelationTable& table = side == Side::X ? position_table(ctx) : momentum_table();

            std::vector<Element> samples;
            for (const auto& g : pool) samples.push_back(Element(g));
            for (int k = 0; k < o.hopf_products / 2; ++k)
                samples.push_back(normalize(Element(random_word(rng, pool, 3)), table));

            for (const auto& a : samples) {
                TensorElement da = coproduct(a, side, ctx);

                // Coassociativity.
                Tensor3 l = expand_leg(da, side, ctx, true);
                Tensor3 rr = expand_leg(da, side, ctx, false);
                r.check(l == rr, "coassociativity failed (" + tag + "): " + a.to_string());

                // Counit axiom.
                Element left_collapsed, right_collapsed;
                for (const auto& [legs, s] : da.terms()) {
                    left_collapsed += Element(legs.second, s * counit(Element(legs.first)));
                    right_collapsed += Element(legs.first, s * counit(Element(legs.second)));
                }
                r.check(normalize(left_collapsed, table) == a,
                        "counit (eps x id) failed (" + tag + "): " + a.to_string());
                r.check(normalize(right_collapsed, table) == a,
                        "counit (id x eps) failed (" + tag + "): " + a.to_string());

                // Antipode axiom.
                Element s_left, s_right;
                for (const auto& [legs, s] : da.terms()) {
                    s_left += multiply(antipode(Element(legs.first), side, ctx),
                                       Element(legs.second), table)
                                  .scaled(s);
                    s_right += multiply(Element(legs.first),
                                        antipode(Element(legs.second), side, ctx), table)
                                   .scaled(s);
                }
                Element target(counit(a));
                r.check(s_left == target, "antipode m(S x id) failed (" + tag + "): " + a.to_string());
                r.check(s_right == target,
                        "antipode m(id x S) failed (" + tag + "): " + a.to_string());
            }
        }
    }
    return r;
}

SuiteResult action_table_suite() {
    SuiteResult r{"action-tables"};
    HopfContext ctx{}; // bicrossproduct, default metric
    Element E = Element::exp_p0(Rational(1));

    auto expect = [&](ActionMode mode, const Element& actor, const Element& target,
                      const Element& want, const std::string& label) {
        Element got = act(mode, actor, target, ctx);
        r.check(got == want, label + ": got " + got.to_string() + ", want " + want.to_string());
    };

    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            Element x = Element::x(mu);
            Element p = Element::p(nu);
            // x |> P: -i hbar at (0,0), i hbar delta_kl E on spatial diagonal.
            Element want_xp = Element::zero();
            if (mu == 0 && nu == 0) want_xp = Element(-i_hbar());
            if (mu == nu && mu > 0) want_xp = E.scaled(i_hbar());
            expect(ActionMode::LeftXOnP, x, p, want_xp,
                   "x" + std::to_string(mu) + " |> P" + std::to_string(nu));

            // P |> x: -i hbar at (0,0), i hbar delta on spatial diagonal.
            Element want_px = Element::zero();
            if (mu == 0 && nu == 0) want_px = Element(-i_hbar());
            if (mu == nu && mu > 0) want_px = Element(i_hbar());
            expect(ActionMode::LeftPOnX, p, x, want_px,
                   "P" + std::to_string(nu) + " |> x" + std::to_string(mu));

            // P <| x: extra (i/kappa) P_k at (k, 0).
            Element want_pux = want_px;
            if (nu > 0 && mu == 0)
                want_pux = Element(Monomial({Generator::p(nu)}), Scalar::i_over_kappa());
            expect(ActionMode::RightPByX, x, p, want_pux,
                   "P" + std::to_string(nu) + " <| x" + std::to_string(mu));

            // x <| P: same entries as P |> x.
            expect(ActionMode::RightXByP, p, x, want_px,
                   "x" + std::to_string(mu) + " <| P" + std::to_string(nu));
        }
    }
    return r;
}

SuiteResult pairing_compatibility_suite() {
    SuiteResult r{"pairing-compatibility"};
    for (Basis basis : {Basis::Bicrossproduct, Basis::Standard}) {
        HopfContext ctx{basis, {}, {}};
        for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l)
                for (int m = 0; m < 4; ++m)
                    for (int n = 0; n < 4; ++n) {
                        Element xy(Monomial({Generator::x(k), Generator::x(l)}));
                        Element pq(Monomial({Generator::p(m), Generator::p(n)}));
                        Scalar direct = pair(xy, pq, ctx);
                        // Other route: split the position product instead.
                        Scalar split;
                        TensorElement dx = coproduct(xy, Side::X, ctx);
                        for (const auto& [legs, s] : dx.terms())
                            split += s * pair(Element(legs.first), Element::p(m), ctx) *
                                     pair(Element(legs.second), Element::p(n), ctx);
                        r.check(direct == split,
                                "pairing routes disagree at x" + std::to_string(k) + "x" +
                                    std::to_string(l) + ", P" + std::to_string(m) + "P" +
                                    std::to_string(n) + " (" + to_string(basis) + ")");
                    }
    }
    return r;
}

SuiteResult module_algebra_suite() {
    SuiteResult r{"module-algebra"};
    for (Basis basis : {Basis::Bicrossproduct, Basis::Standard}) {
        HopfContext ctx{basis, {}, {}};
        const RelationTable& xt = position_table(ctx);
        std::vector<Element> actors;
        for (int mu = 0; mu < 4; ++mu) actors.push_back(Element::p(mu));
        actors.push_back(Element::exp_p0(Rational(1)));
        for (const auto& p : actors) {
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    Element xy = multiply(Element::x(a), Element::x(b), xt);
                    Element lhs = act(ActionMode::LeftPOnX, p, xy, ctx);
                    Element rhs;
                    TensorElement dp = coproduct(p, Side::P, ctx);
                    for (const auto& [legs, s] : dp.terms()) {
                        Element left = act(ActionMode::LeftPOnX, Element(legs.first),
                                           Element::x(a), ctx);
                        Element right = act(ActionMode::LeftPOnX, Element(legs.second),
                                            Element::x(b), ctx);
                        rhs += multiply(left, right, xt).scaled(s);
                    }
                    r.check(lhs == rhs, "module-algebra law failed for p=" + p.to_string() +
                                            ", x" + std::to_string(a) + " x" + std::to_string(b) +
                                            " (" + to_string(basis) + ")");
                }
        }
    }
    return r;
}

SuiteResult series_oracle_suite() {
    SuiteResult r{"series-oracles"};
    HopfContext ctx{};

    // [x_0, E] against the order-8 truncated series, both orderings.
    for (Order order : {Order::XP, Order::PX}) {
        SmashConfig cfg{Basis::Bicrossproduct, order, {}, {}};
        RelationTable rules = derive_table(cfg).rules();
        Element series8 = exp_series(Rational(1), 8);
        Element series7 = exp_series(Rational(1), 7);
        Element lhs = commutator(Element::x(0), series8, rules);
        Element closed = commutator(Element::x(0), Element::exp_p0(Rational(1)), rules);
        Scalar c = closed.coefficient(Monomial({Generator::exp_p0(Rational(1))}));
        r.check(!c.is_zero(), "closed [x0,E] vanished in " + cfg.id());
        r.check(lhs == series7.scaled(c),
                "series oracle for [x0,E] failed in " + cfg.id() + ": " + lhs.to_string());
    }

    // Group-likeness of the exponential against the order-6 series with the
    // primitive coproduct of P_0.
    {
        Element series6 = exp_series(Rational(1), 6);
        TensorElement ds = coproduct(series6, Side::P, ctx);
        TensorElement expected;
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; a + b <= 6; ++b) {
                Element ta = exp_series(Rational(1), a) - exp_series(Rational(1), a - 1 < 0 ? 0 : a - 1);
                (void)ta;
                // coefficient of P_0^a (x) P_0^b in series (x) series
                Scalar ca = exp_series(Rational(1), 6).coefficient(
                    Monomial(std::vector<Generator>(a, Generator::p(0))));
                Scalar cb = exp_series(Rational(1), 6).coefficient(
                    Monomial(std::vector<Generator>(b, Generator::p(0))));
                expected.add_term(Monomial(std::vector<Generator>(a, Generator::p(0))),
                                  Monomial(std::vector<Generator>(b, Generator::p(0))), ca * cb);
            }
        r.check(ds == expected, "exponential series is not group-like to order 6");
        TensorElement closed = coproduct(Element::exp_p0(Rational(1)), Side::P, ctx);
        TensorElement group = TensorElement::tensor(Element::exp_p0(Rational(1)),
                                                    Element::exp_p0(Rational(1)));
        r.check(closed == group, "closed-form coproduct of E is not E (x) E");
    }

    // <x_0, E> against the order-6 series.
    {
        Scalar via_series = pair(Element::x(0), exp_series(Rational(1), 6), ctx);
        Scalar via_closed = pair(Element::x(0), Element::exp_p0(Rational(1)), ctx);
        r.check(via_series == via_closed, "pairing against E disagrees with series");
        r.check(via_closed == Scalar::i_over_kappa(), "pair(x0, E) != i/kappa");
    }

    // Antipode of the exponential via the series.
    {
        Element s_series = antipode(exp_series(Rational(1), 6), Side::P, ctx);
        r.check(s_series == exp_series(Rational(-1), 6), "antipode series mismatch");
        r.check(antipode(Element::exp_p0(Rational(1)), Side::P, ctx) ==
                    Element::exp_p0(Rational(-1)),
                "antipode of E is not E^(-1)");
        r.check(counit(exp_series(Rational(1), 6)) == Scalar::one(), "counit of series != 1");
    }
    return r;
}

SuiteResult golden_table_suite() {
    SuiteResult r{"golden-tables"};
    for (const auto& cfg : base_configs()) {
        DerivedTable t = derive_table(cfg);
        DiffReport diff = verify_against_fixture(t);
        r.check(diff.clean, "derived table " + cfg.id() + " deviates from its fixture");
        for (const auto* e : diff.mismatches())
            r.check(false, cfg.id() + " " + e->lhs + ": " + e->derived + " != " + e->expected);
        for (const auto& [key, notes] : t.provenance)
            r.check(!notes.empty(), "empty provenance for " + key + " in " + cfg.id());
    }
    // The flagged entries of the standard-basis tables must carry their
    // annotations in the verify output.
    DiffReport spx = verify_against_fixture(derive_table({Basis::Standard, Order::PX, {}, {}}));
    bool found = false;
    for (const auto& e : spx.entries)
        if (e.lhs == commutator_key('x', 0, 'P', 1) && !e.annotation.empty()) found = true;
    r.check(found, "standard-px coefficient flag missing from verify output");
    return r;
}

SuiteResult variant_suite() {
    SuiteResult r{"variant-claims"};
    // Metric flip changes the sign of every position-position and cross
    // relation; the fixtures store the flipped tables.
    for (Order order : {Order::XP, Order::PX}) {
        SmashConfig flipped{Basis::Bicrossproduct, order, Metric{true}, {}};
        r.check(verify_against_fixture(derive_table(flipped)).clean,
                "metric flip mismatch for " + flipped.id());

        SmashConfig transposed{Basis::Bicrossproduct, order, {}, CoproductVariant::Transposed};
        r.check(verify_against_fixture(derive_table(transposed)).clean,
                "transposed coproduct mismatch for " + transposed.id());
    }

    // Cross-check the flips entry by entry against the direct tables.
    DerivedTable xp = derive_table({Basis::Bicrossproduct, Order::XP, {}, {}});
    DerivedTable px = derive_table({Basis::Bicrossproduct, Order::PX, {}, {}});
    DerivedTable xp_m = derive_table({Basis::Bicrossproduct, Order::XP, Metric{true}, {}});
    DerivedTable xp_t =
        derive_table({Basis::Bicrossproduct, Order::XP, {}, CoproductVariant::Transposed});
    DerivedTable px_t =
        derive_table({Basis::Bicrossproduct, Order::PX, {}, CoproductVariant::Transposed});
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            r.check(xp_m.comms.xp[mu][nu] == -xp.comms.xp[mu][nu],
                    "metric flip does not negate cross sector");
            r.check(xp_m.comms.xx[mu][nu] == -xp.comms.xx[mu][nu],
                    "metric flip does not negate position sector");
            // Transposing the coproduct exchanges the construction orders.
            r.check(px_t.comms.xp[mu][nu] == -xp.comms.xp[mu][nu],
                    "transposed px table is not the negated xp table");
            r.check(xp_t.comms.xp[mu][nu] == -px.comms.xp[mu][nu],
                    "transposed xp table is not the negated px table");
        }
    return r;
}

SuiteResult classical_limit_suite() {
    SuiteResult r{"classical-limit"};
    for (const auto& cfg : base_configs()) {
        auto report = check_classical_limit(derive_table(cfg));
        if (cfg.order == Order::PX) {
            r.check(report.canonical, cfg.id() + " limit should be canonical");
        } else {
            r.check(!report.canonical && report.sign_flipped,
                    cfg.id() + " limit should be the sign-flipped pattern");
        }
    }
    // Element-level examples.
    Element e = Element(Monomial({Generator::exp_p0(Rational(1))}), i_hbar());
    r.check(classical_limit(e) == Element(i_hbar()), "limit of i hbar E != i hbar");
    r.check(classical_limit(Element(Monomial({Generator::x(1)}), Scalar::i_over_kappa()))
                .is_zero(),
            "limit of (i/kappa) x1 != 0");
    Element x0p0(Monomial({Generator::x(0), Generator::p(0)}));
    r.check(classical_limit(x0p0) == x0p0, "limit of x0 P0 changed");
    return r;
}

SuiteResult isomorphism_suite() {
    SuiteResult r{"left-right-isomorphism"};
    for (const auto& cfg : base_configs()) {
        DerivedTable left = derive_table(cfg);
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                Element right = cross_commutator_right(mu, nu, cfg);
                r.check(right == left.comms.xp[mu][nu],
                        cfg.id() + " right construction differs at " +
                            commutator_key('x', mu, 'P', nu) + ": " + right.to_string());
            }
    }
    return r;
}

SuiteResult sector_invariance_suite() {
    SuiteResult r{"sector-invariance"};
    // Position-position and momentum-momentum sectors agree across both
    // bases, both orders and both (left/right) constructions.
    auto reference = derive_table(base_configs().front());
    for (const auto& cfg : base_configs()) {
        DerivedTable t = derive_table(cfg);
        r.check(t.comms.xx == reference.comms.xx, cfg.id() + " position sector changed");
        r.check(t.comms.pp == reference.comms.pp, cfg.id() + " momentum sector changed");
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
                r.check(t.comms.pp[mu][nu].is_zero(), "momentum sector nonzero in " + cfg.id());
    }
    return r;
}

SuiteResult roundtrip_suite(const SelftestOptions& o) {
    SuiteResult r{"parse-print-roundtrip"};
    std::mt19937_64 rng(o.seed + 7);
    std::uniform_int_distribution<int> xpow(0, 2), ppow(0, 2), pick_exp(0, 4), nterms(1, 4);
    const Rational exp_choices[5] = {Rational(0), Rational(1), Rational(-1), Rational(1, 2),
                                     Rational(-3, 2)};
    for (int k = 0; k < o.roundtrip_samples; ++k) {
        Element e;
        int n = nterms(rng);
        for (int t = 0; t < n; ++t) {
            std::vector<Generator> w;
            for (int mu = 0; mu < 4; ++mu)
                for (int c = xpow(rng); c > 0; --c) w.push_back(Generator::x(mu));
            Rational er = exp_choices[pick_exp(rng)];
            if (!er.is_zero()) w.push_back(Generator::exp_p0(er));
            for (int mu = 0; mu < 4; ++mu)
                for (int c = ppow(rng); c > 0; --c) w.push_back(Generator::p(mu));
            e += Element(Monomial(std::move(w)), random_scalar(rng));
        }
        if (e.is_zero()) e = Element::one();
        Element back = parse(e.to_string());
        r.check(back == e, "roundtrip failed for " + e.to_string());
    }
    return r;
}

SuiteResult residual_suite(RepresentCase c, const SelftestOptions& o) {
    SuiteResult r{"residuals-" + to_string(c)};
    Grid g{o.residual_grid_n, 8.0};
    OperatorSet ops(c, g, 1.0, 1.0);
    std::vector<GaussianParams> states = {
        {0.0, 0.5, 0.7, 0.6, 1.0, -1.5},
        {-0.8, -0.3, 0.8, 0.7, -2.0, 0.5},
        {0.6, 0.0, 0.6, 0.8, 0.0, 2.0},
    };
    for (const auto& p : states) {
        GridState state = GridState::gaussian(g, p);
        for (const auto& row : commutator_residuals(ops, state)) {
            r.check(row.residual <= 1e-6,
                    to_string(c) + " residual " + row.relation + " = " +
                        std::to_string(row.residual) + " on state " + p.to_string());
        }
    }
    return r;
}

SuiteResult uncertainty_suite(RepresentCase c, const SelftestOptions& o) {
    SuiteResult r{"uncertainty-" + to_string(c)};
    Grid g{o.sweep_grid_n, 8.0};
    auto report = uncertainty_sweep(c, g, 1.0, o.uncertainty_kappas, o.uncertainty_states,
                                    o.seed + 8);
    for (const auto& row : report.rows)
        r.check(row.pass(), to_string(c) + " " + row.pair_name + " kappa=" +
                                std::to_string(row.kappa) + " margin=" +
                                std::to_string(row.margin) + " state " + row.state.to_string());
    return r;
}

SuiteResult classical_probe_suite(RepresentCase c, const SelftestOptions& o) {
    SuiteResult r{"classical-probe-" + to_string(c)};
    Grid g{o.sweep_grid_n, 8.0};
    double kappa = 1000.0;
    OperatorSet ops(c, g, 1.0, kappa);
    auto params = random_gaussian_params(o.classical_probe_states, o.seed + 9, 0.5);
    for (const auto& p : params) {
        GridState state = GridState::gaussian(g, p);
        auto rows = check_uncertainty(ops, state, p);
        for (const auto& row : rows) {
            if (row.pair_name != "(P1,x1)") continue;
            double target = 0.5 * ops.hbar();
            r.check(std::abs(row.rhs - target) <= 1e-3 * target,
                    to_string(c) + " spatial bound " + std::to_string(row.rhs) +
                        " not within 0.1% of hbar/2 at kappa=1000");
            r.check(row.pass(), "classical probe inequality violated");
        }
    }
    return r;
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& o) {
    std::vector<SuiteResult> out;
    out.push_back(scalar_ring_suite(o));
    out.push_back(termination_suite(o));
    out.push_back(normalize_idempotence_suite(o));
    out.push_back(associativity_suite(o));
    out.push_back(jacobi_suite(o));
    out.push_back(hopf_axiom_suite(o));
    out.push_back(action_table_suite());
    out.push_back(pairing_compatibility_suite());
    out.push_back(module_algebra_suite());
    out.push_back(series_oracle_suite());
    out.push_back(golden_table_suite());
    out.push_back(variant_suite());
    out.push_back(classical_limit_suite());
    out.push_back(isomorphism_suite());
    out.push_back(sector_invariance_suite());
    out.push_back(roundtrip_suite(o));
    if (o.run_numeric) {
        for (RepresentCase c : {RepresentCase::Bicross, RepresentCase::Standard}) {
            out.push_back(residual_suite(c, o));
            out.push_back(uncertainty_suite(c, o));
            out.push_back(classical_probe_suite(c, o));
        }
    }
    return out;
}

} // namespace kappa
