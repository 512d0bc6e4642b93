#pragma once

#include <string>

#include "kappa/errors.hpp"

namespace kappa {

/// Which realization of the translation coalgebra is in force; the two
/// choices differ only in the coproduct of the spatial momenta.
enum class Basis { Bicrossproduct, Standard };

/// Which factor of the phase space carries the module-algebra structure in
/// the cross-product construction: XP builds on positions-then-momenta,
/// PX on momenta-then-positions.
enum class Order { XP, PX };

enum class CoproductVariant { Direct, Transposed };

/// Diagonal metric used by the duality pairing; default signature
/// (-1, 1, 1, 1), with a global sign flip as the only variant.
struct Metric {
    bool flipped = false;

    int sign(int mu) const {
        int s = (mu == 0) ? -1 : 1;
        return flipped ? -s : s;
    }
    friend bool operator==(const Metric& a, const Metric& b) { return a.flipped == b.flipped; }
};

/// Everything the coalgebra maps and the pairing depend on.
struct HopfContext {
    Basis basis = Basis::Bicrossproduct;
    Metric metric{};
    CoproductVariant variant = CoproductVariant::Direct;

    friend bool operator==(const HopfContext& a, const HopfContext& b) {
        return a.basis == b.basis && a.metric == b.metric && a.variant == b.variant;
    }
};

struct SmashConfig {
    Basis basis = Basis::Bicrossproduct;
    Order order = Order::PX;
    Metric metric{};
    CoproductVariant variant = CoproductVariant::Direct;

    HopfContext hopf() const { return HopfContext{basis, metric, variant}; }

    /// Stable identifier, e.g. "bicross-px" or "standard-xp-transposed".
    std::string id() const;

    friend bool operator==(const SmashConfig& a, const SmashConfig& b) {
        return a.basis == b.basis && a.order == b.order && a.metric == b.metric &&
               a.variant == b.variant;
    }
};

std::string to_string(Basis b);
std::string to_string(Order o);
Basis basis_from_string(const std::string& s);
Order order_from_string(const std::string& s);

} // namespace kappa
