#pragma once

#include <map>
#include <utility>

#include "kappa/config.hpp"
#include "kappa/relation_table.hpp"

namespace kappa {

enum class Side { X, P };

/// The four actions between the position and momentum algebras:
///   x |> p = <x, p_(2)> p_(1)      (LeftXOnP)
///   p |> x = <p, x_(2)> x_(1)      (LeftPOnX)
///   p <| x = <x, p_(1)> p_(2)      (RightPByX)
///   x <| p = <p, x_(1)> x_(2)      (RightXByP)
enum class ActionMode { LeftXOnP, LeftPOnX, RightPByX, RightXByP };

/// Formal sum of monomial pairs: the Sweedler-expanded value of a coproduct.
/// Each leg is kept canonical in its own algebra.
class TensorElement {
public:
    using Key = std::pair<Monomial, Monomial>;

    TensorElement() = default;

    static TensorElement tensor(const Element& left, const Element& right);
    static TensorElement unit() { return tensor(Element::one(), Element::one()); }

    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& l, const Monomial& r, const Scalar& s);

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement scaled(const Scalar& s) const;

    /// Componentwise product; each leg is normalized with its table.
    TensorElement product(const TensorElement& o, const RelationTable& left_table,
                          const RelationTable& right_table) const;

    /// Legs exchanged.
    TensorElement swapped() const;

    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::map<Key, Scalar> terms_;
};

/// Momentum-algebra rewrite table (shared, stateless).
const RelationTable& momentum_table();

/// Position-algebra table for the given conventions.  The [x_0, x_k]
/// coefficient is derived from duality, not transcribed; see
/// derive_position_commutator_coefficient.
const RelationTable& position_table(const HopfContext& ctx);

/// Coefficient c in [x_0, x_k] = c x_k obtained by pairing the commutator
/// against the spatial momenta (the position product is dual to the momentum
/// coproduct, so c follows from the conventions in ctx).
Scalar derive_position_commutator_coefficient(const HopfContext& ctx);

/// Coalgebra maps.  Side selects which algebra e must live in; the basis
/// matters only for the momentum side.
TensorElement coproduct(const Element& e, Side side, const HopfContext& ctx);
Scalar counit(const Element& e);
Element antipode(const Element& e, Side side, const HopfContext& ctx);

/// Duality pairing, <x_mu, P_nu> = i hbar g_mu_nu on generators, extended to
/// products through the coproducts:
///   <xy, p> = <x, p_(1)><y, p_(2)>,   <x, pq> = <x_(1), p><x_(2), q>.
/// Exponentials pair in closed form (only the linear term survives against a
/// primitive position generator).
Scalar pair(const Element& x, const Element& p, const HopfContext& ctx);

Element act(ActionMode mode, const Element& actor, const Element& target,
            const HopfContext& ctx);

} // namespace kappa
