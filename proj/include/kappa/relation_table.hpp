#pragma once

#include <array>
#include <optional>
#include <string>

#include "kappa/config.hpp"
#include "kappa/element.hpp"

namespace kappa {

/// The complete rewrite system of one algebra: how every adjacent
/// out-of-order generator pair g*h (g after h in the fixed chain) reorders.
/// Three shapes exist: the position algebra alone, the momentum algebra
/// alone, and the full phase-space algebras whose cross sector is supplied
/// by the smash construction.
class RelationTable {
public:
    enum class Kind { PositionOnly, MomentumOnly, PhaseSpace };

    /// Momentum algebra: everything commutes, exponentials merge.
    static RelationTable momentum();

    /// Position algebra with [x_0, x_k] = c * x_k (spatial pairs commute).
    /// The coefficient is supplied by the caller; see derive_x_coefficient()
    /// in hopf.hpp for how it is obtained from duality.
    static RelationTable position(const Scalar& time_space_coeff);

    /// Phase-space algebra: position rules plus the cross commutators
    /// [x_mu, P_nu] indexed as cross[mu][nu].
    static RelationTable phase_space(const Scalar& time_space_coeff,
                                     std::array<std::array<Element, 4>, 4> cross,
                                     std::string name);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    bool supports(const Generator& g) const;

    /// Commutator [x_mu, P_nu] as installed (phase-space tables only).
    const Element& cross_commutator(int mu, int nu) const;

    /// [x_0, x_k] coefficient.
    const Scalar& time_space_coefficient() const { return xx_coeff_; }

    /// [x_mu, E^(r)] = coeff * E^(r), derived from [x_mu, P_0] being central.
    Scalar exp_commutator_coefficient(int mu, const Rational& r) const;

    /// Rewrite of the adjacent out-of-order product g*h as a normal-ordered
    /// Element.  Pre: g.order_class() > h.order_class() and both supported.
    Element rewrite(const Generator& g, const Generator& h) const;

private:
    RelationTable() = default;

    Kind kind_ = Kind::MomentumOnly;
    std::string name_;
    Scalar xx_coeff_;
    std::array<std::array<Element, 4>, 4> cross_{}; // [x_mu, P_nu]
};

/// Rewrites e to its normal form under t.  Linear, idempotent; throws
/// UnknownGeneratorError when e mentions a generator outside t.
Element normalize(const Element& e, const RelationTable& t);

/// Normal-ordered associative product in the algebra described by t.
Element multiply(const Element& a, const Element& b, const RelationTable& t);

/// normalize(a*b - b*a, t).
Element commutator(const Element& a, const Element& b, const RelationTable& t);

/// kappa -> infinity: every exponential becomes 1 and every coefficient
/// carrying a positive power of kappa^{-1} is dropped.
Element classical_limit(const Element& e);

} // namespace kappa
