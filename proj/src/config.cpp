#include "kappa/config.hpp"

namespace kappa {

std::string to_string(Basis b) {
    return b == Basis::Bicrossproduct ? "bicrossproduct" : "standard";
}

std::string to_string(Order o) {
    return o == Order::XP ? "xp" : "px";
}

Basis basis_from_string(const std::string& s) {
    if (s == "bicross" || s == "bicrossproduct") return Basis::Bicrossproduct;
    if (s == "standard") return Basis::Standard;
    throw Error("unknown basis '" + s + "' (expected bicross or standard)");
}

Order order_from_string(const std::string& s) {
    if (s == "xp") return Order::XP;
    if (s == "px") return Order::PX;
    throw Error("unknown order '" + s + "' (expected xp or px)");
}

std::string SmashConfig::id() const {
    std::string out = (basis == Basis::Bicrossproduct ? "bicross" : "standard");
    out += order == Order::XP ? "-xp" : "-px";
    if (metric.flipped) out += "-metric-flipped";
    if (variant == CoproductVariant::Transposed) out += "-transposed";
    return out;
}

} // namespace kappa
