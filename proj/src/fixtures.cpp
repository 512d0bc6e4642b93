#include "kappa/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "kappa/parser.hpp"

namespace kappa {

namespace {

Scalar i_hbar() { return Scalar::i_hbar(); }
Scalar i_over_kappa() { return Scalar::i_over_kappa(); }
Scalar i_over_2kappa() { return Scalar::term(Rational(0), Rational(1, 2), 0, 1); }

Element exp_term(const Scalar& coeff, const Rational& r) {
    return Element(Monomial({Generator::exp_p0(r)}), coeff);
}

void fill_xx(CommutatorSet& c, const Scalar& coeff) {
    for (int k = 1; k < 4; ++k) {
        c.xx[0][k] = Element(Monomial({Generator::x(k)}), coeff);
        c.xx[k][0] = Element(Monomial({Generator::x(k)}), -coeff);
    }
}

CommutatorSet negated(const CommutatorSet& c) {
    CommutatorSet out;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            out.xx[mu][nu] = -c.xx[mu][nu];
            out.xp[mu][nu] = -c.xp[mu][nu];
            out.pp[mu][nu] = -c.pp[mu][nu];
        }
    return out;
}

// Position-first table, bicrossproduct coproduct:
//   [x_mu, P_0] = i hbar d_mu0,   [x_mu, P_k] = -i hbar d_muk - (i/kappa) d_mu0 P_k.
CommutatorSet bicross_xp_comms() {
    CommutatorSet c;
    fill_xx(c, i_over_kappa());
    c.xp[0][0] = Element(i_hbar());
    for (int k = 1; k < 4; ++k) {
        c.xp[0][k] = Element(Monomial({Generator::p(k)}), -i_over_kappa());
        c.xp[k][k] = Element(-i_hbar());
    }
    return c;
}

// Momentum-first table, bicrossproduct coproduct:
//   [x_0, P_mu] = -i hbar d_mu0,   [x_k, P_l] = i hbar d_kl E.
CommutatorSet bicross_px_comms() {
    CommutatorSet c;
    fill_xx(c, i_over_kappa());
    c.xp[0][0] = Element(-i_hbar());
    for (int k = 1; k < 4; ++k) c.xp[k][k] = exp_term(i_hbar(), Rational(1));
    return c;
}

// Position-first table, standard coproduct:
//   [x_mu, P_0] = i hbar d_mu0,
//   [x_mu, P_k] = -i hbar d_muk e^{+P_0/2 kappa hbar} - (i/2kappa) d_mu0 P_k.
CommutatorSet standard_xp_comms() {
    CommutatorSet c;
    fill_xx(c, i_over_kappa());
    c.xp[0][0] = Element(i_hbar());
    for (int k = 1; k < 4; ++k) {
        c.xp[0][k] = Element(Monomial({Generator::p(k)}), -i_over_2kappa());
        c.xp[k][k] = exp_term(-i_hbar(), Rational(-1, 2));
    }
    return c;
}

// Momentum-first table, standard coproduct:
//   [x_mu, P_0] = -i hbar d_mu0,
//   [x_mu, P_k] = i hbar d_muk e^{-P_0/2 kappa hbar} - (i/2kappa) d_mu0 P_k.
CommutatorSet standard_px_comms() {
    CommutatorSet c;
    fill_xx(c, i_over_kappa());
    c.xp[0][0] = Element(-i_hbar());
    for (int k = 1; k < 4; ++k) {
        c.xp[0][k] = Element(Monomial({Generator::p(k)}), -i_over_2kappa());
        c.xp[k][k] = exp_term(i_hbar(), Rational(1, 2));
    }
    return c;
}

std::map<std::string, Fixture> build_fixtures() {
    std::map<std::string, Fixture> out;
    auto add = [&](Fixture f) { out.emplace(f.id, std::move(f)); };

    const std::string exp_sign_note =
        "the reference table prints the opposite exponent sign here; the cross-product "
        "construction and the Jacobi identity force the sign stored in this fixture";
    const std::string hbar_note =
        "the reference table prints an extra hbar in this coefficient; dimensional "
        "consistency, the derivation and the matching uncertainty bound give -(i/(2*kappa))";
    const std::string transposed_note =
        "transposing the spatial-momentum coproduct exchanges the two construction orders: "
        "each order reproduces the other order's table with all signs flipped";

    add({"bicross-xp", SmashConfig{Basis::Bicrossproduct, Order::XP, {}, {}},
         bicross_xp_comms(), {}});
    add({"bicross-px", SmashConfig{Basis::Bicrossproduct, Order::PX, {}, {}},
         bicross_px_comms(), {}});

    Fixture sxp{"standard-xp", SmashConfig{Basis::Standard, Order::XP, {}, {}},
                standard_xp_comms(), {}};
    for (int k = 1; k < 4; ++k) sxp.annotations[commutator_key('x', k, 'P', k)] = exp_sign_note;
    add(std::move(sxp));

    Fixture spx{"standard-px", SmashConfig{Basis::Standard, Order::PX, {}, {}},
                standard_px_comms(), {}};
    for (int k = 1; k < 4; ++k) spx.annotations[commutator_key('x', 0, 'P', k)] = hbar_note;
    add(std::move(spx));

    add({"bicross-xp-metric-flipped",
         SmashConfig{Basis::Bicrossproduct, Order::XP, Metric{true}, {}},
         negated(bicross_xp_comms()), {}});
    add({"bicross-px-metric-flipped",
         SmashConfig{Basis::Bicrossproduct, Order::PX, Metric{true}, {}},
         negated(bicross_px_comms()), {}});

    Fixture txp{"bicross-xp-transposed",
                SmashConfig{Basis::Bicrossproduct, Order::XP, {}, CoproductVariant::Transposed},
                negated(bicross_px_comms()),
                {}};
    txp.annotations["*"] = transposed_note;
    add(std::move(txp));

    Fixture tpx{"bicross-px-transposed",
                SmashConfig{Basis::Bicrossproduct, Order::PX, {}, CoproductVariant::Transposed},
                negated(bicross_xp_comms()),
                {}};
    tpx.annotations["*"] = transposed_note;
    add(std::move(tpx));

    return out;
}

bool parse_lhs(const std::string& lhs, char& a, int& mu, char& b, int& nu) {
    if (lhs.size() != 7 || lhs[0] != '[' || lhs[3] != ',' || lhs[6] != ']') return false;
    a = lhs[1];
    b = lhs[4];
    mu = lhs[2] - '0';
    nu = lhs[5] - '0';
    return (a == 'x' || a == 'P') && (b == 'x' || b == 'P') && mu >= 0 && mu < 4 && nu >= 0 &&
           nu < 4;
}

Fixture load_fixture_file(const std::string& path, const Fixture& fallback) {
    std::ifstream in(path);
    if (!in) throw MissingFixtureError("cannot read fixture file " + path);
    nlohmann::json j;
    in >> j;
    Fixture f;
    f.id = j.at("id").get<std::string>();
    f.config = fallback.config;
    for (const auto& rel : j.at("relations")) {
        std::string lhs = rel.at("lhs").get<std::string>();
        char a, b;
        int mu, nu;
        if (!parse_lhs(lhs, a, mu, b, nu))
            throw MissingFixtureError("bad relation key '" + lhs + "' in " + path);
        Element rhs = parse(rel.at("rhs").get<std::string>());
        if (a == 'x' && b == 'x')
            f.comms.xx[mu][nu] = rhs;
        else if (a == 'x' && b == 'P')
            f.comms.xp[mu][nu] = rhs;
        else if (a == 'P' && b == 'P')
            f.comms.pp[mu][nu] = rhs;
        else
            throw MissingFixtureError("unsupported relation key '" + lhs + "' in " + path);
        if (rel.contains("annotation")) f.annotations[lhs] = rel["annotation"].get<std::string>();
    }
    return f;
}

const std::map<std::string, Fixture>& builtin_fixtures() {
    static const std::map<std::string, Fixture> fixtures = build_fixtures();
    return fixtures;
}

} // namespace

std::vector<std::string> fixture_ids() {
    std::vector<std::string> out;
    for (const auto& [id, f] : builtin_fixtures()) out.push_back(id);
    return out;
}

const Fixture& fixture_by_id(const std::string& id) {
    const auto& builtins = builtin_fixtures();
    auto it = builtins.find(id);
    if (it == builtins.end())
        throw MissingFixtureError("no fixture with id '" + id + "'");

    if (const char* dir = std::getenv("KAPPA_FIXTURES_DIR")) {
        static std::map<std::string, Fixture> overrides;
        auto oit = overrides.find(id);
        if (oit != overrides.end()) return oit->second;
        std::string path = std::string(dir) + "/" + id + ".json";
        std::ifstream probe(path);
        if (probe) {
            auto [nit, ok] = overrides.emplace(id, load_fixture_file(path, it->second));
            (void)ok;
            return nit->second;
        }
    }
    return it->second;
}

const Fixture& fixture_for(const SmashConfig& cfg) {
    for (const auto& [id, f] : builtin_fixtures())
        if (f.config == cfg) return fixture_by_id(id);
    throw MissingFixtureError("no golden fixture for configuration " + cfg.id());
}

} // namespace kappa
