#include "srkb/bound.hpp"

#include <array>
#include <stdexcept>

namespace srkb {

namespace {
const std::array<std::pair<Method, const char*>, 12> kLabels{{
    {Method::InducedSingleton, "iS"},
    {Method::InducedHamming, "iH"},
    {Method::InducedPlotkin, "iP"},
    {Method::InducedElias, "iE"},
    {Method::Singleton, "S"},
    {Method::TotalDistance, "TD"},
    {Method::SpherePacking, "SP"},
    {Method::ProjectiveSpherePacking, "PSP"},
    {Method::RatioType, "RT"},
    {Method::Delsarte, "DLP"},
    {Method::LovaszTheta, "theta"},
    {Method::SchrijverSDP, "SDP"},
}};
}  // namespace

std::string method_label(Method m) {
    for (const auto& [k, v] : kLabels)
        if (k == m) return v;
    throw std::logic_error("unknown method");
}

std::optional<Method> method_from_label(const std::string& s) {
    for (const auto& [k, v] : kLabels)
        if (s == v) return k;
    return std::nullopt;
}

BoundResult BoundResult::make(Method m, const BigRat& v, std::string detail) {
    BoundResult r;
    r.method = m;
    r.applicable = true;
    r.value_exact = v;
    r.value_int = floor(v);
    r.detail = std::move(detail);
    if (*r.value_int < 1) throw std::logic_error(method_label(m) + ": bound below 1");
    return r;
}

BoundResult BoundResult::not_applicable(Method m, std::string why) {
    BoundResult r;
    r.method = m;
    r.applicable = false;
    r.detail = std::move(why);
    return r;
}

}  // namespace srkb
