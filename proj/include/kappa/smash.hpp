#pragma once

#include <array>
#include <map>
#include <vector>

#include "kappa/hopf.hpp"

namespace kappa {

/// All commutators among the eight phase-space generators, stored as
/// canonical Elements: xx[mu][nu] = [x_mu, x_nu], xp[mu][nu] = [x_mu, P_nu],
/// pp[mu][nu] = [P_mu, P_nu].
struct CommutatorSet {
    std::array<std::array<Element, 4>, 4> xx{};
    std::array<std::array<Element, 4>, 4> xp{};
    std::array<std::array<Element, 4>, 4> pp{};

    bool operator==(const CommutatorSet& o) const { return xx == o.xx && xp == o.xp && pp == o.pp; }
};

/// Key strings for report entries: "[x0,P1]" and friends.
std::string commutator_key(char a, int mu, char b, int nu);

/// A phase-space algebra produced by the cross-product construction, with a
/// record of which coproduct legs and action values built each cross rule.
struct DerivedTable {
    SmashConfig config;
    CommutatorSet comms;
    std::map<std::string, std::vector<std::string>> provenance;
    std::map<std::string, std::string> annotations;

    const Element& cross(int mu, int nu) const { return comms.xp[mu][nu]; }

    /// Rewrite table in the common canonical basis (positions left of
    /// momenta regardless of the construction order).
    RelationTable rules() const;
};

/// Normal-ordered form of the out-of-order product of a momentum-side
/// generator with a position generator, computed from coproducts, pairings
/// and actions of the configured conventions.  p_like must be a P or Exp
/// generator and x_gen a position generator.
Element cross_product_form(const Generator& p_like, const Generator& x_gen,
                           const SmashConfig& cfg, std::vector<std::string>* notes = nullptr);

/// [x_mu, P_nu] in the configured cross-product algebra.
Element cross_commutator(int mu, int nu, const SmashConfig& cfg,
                         std::vector<std::string>* notes = nullptr);

DerivedTable derive_table(const SmashConfig& cfg);

/// Right-handed counterpart of the construction (built from the right
/// actions); used to check that left and right cross products give the same
/// table once expressed in the common canonical basis.
Element cross_commutator_right(int mu, int nu, const SmashConfig& cfg);

struct ClassicalLimitEntry {
    std::string lhs;
    std::string limit;
    bool canonical_entry = false;
};

struct ClassicalLimitReport {
    SmashConfig config;
    std::vector<ClassicalLimitEntry> entries;
    /// true when the limit is [x_mu, P_nu] = i hbar g_mu_nu with vanishing
    /// xx and PP sectors (the undeformed phase space).
    bool canonical = false;
    /// true when the limit matches -i hbar g_mu_nu instead.
    bool sign_flipped = false;
    std::string convention; // "i*hbar*g", "-i*hbar*g" or "other"
};

ClassicalLimitReport check_classical_limit(const DerivedTable& t);

struct DiffEntry {
    std::string lhs;
    std::string derived;
    std::string expected;
    bool equal = false;
    std::string annotation;
};

struct DiffReport {
    std::string fixture_id;
    std::vector<DiffEntry> entries;
    bool clean = true;

    std::vector<const DiffEntry*> mismatches() const;
};

/// Structural comparison of a derived table against the stored golden
/// fixture for its configuration.  Throws MissingFixtureError when no
/// fixture covers the configuration.
DiffReport verify_against_fixture(const DerivedTable& t);

} // namespace kappa
