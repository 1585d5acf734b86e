#pragma once

#include "srkb/numeric.hpp"

#include <optional>
#include <string>

namespace srkb {

enum class Method {
    InducedSingleton,
    InducedHamming,
    InducedPlotkin,
    InducedElias,
    Singleton,
    TotalDistance,
    SpherePacking,
    ProjectiveSpherePacking,
    RatioType,
    Delsarte,
    LovaszTheta,
    SchrijverSDP,
};

// Short column label as used in the result tables ("iS", "DLP", ...).
std::string method_label(Method m);
std::optional<Method> method_from_label(const std::string& s);

struct BoundResult {
    Method method = Method::Singleton;
    bool applicable = false;
    std::optional<BigRat> value_exact;
    std::optional<BigInt> value_int;
    std::string detail;

    static BoundResult make(Method m, const BigRat& v, std::string detail = {});
    static BoundResult not_applicable(Method m, std::string why);

    // Value printed in tables: floored bound, 0 if not applicable.
    BigInt table_value() const { return applicable && value_int ? *value_int : BigInt(0); }
    bool operator==(const BoundResult&) const = default;
};

}  // namespace srkb
