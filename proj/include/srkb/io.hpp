#pragma once

#include "srkb/bound.hpp"
#include "srkb/delsarte.hpp"
#include "srkb/existence.hpp"
#include "srkb/graphs.hpp"
#include "srkb/sdp.hpp"
#include "srkb/space.hpp"
#include "srkb/spectrum.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace srkb {

using nlohmann::json;

// Exact numbers travel as decimal strings ("p/q" for rationals).
void to_json(json& j, const SpaceParams& sp);
void from_json(const json& j, SpaceParams& sp);
void to_json(json& j, const BoundResult& b);
void from_json(const json& j, BoundResult& b);
void to_json(json& j, const Spectrum& s);
void from_json(const json& j, Spectrum& s);
void to_json(json& j, const Witness& w);
void from_json(const json& j, Witness& w);
void to_json(json& j, const Check& c);
void from_json(const json& j, Check& c);
void to_json(json& j, const Verdict& v);
void from_json(const json& j, Verdict& v);
void to_json(json& j, const DelsarteCertificate& c);
void from_json(const json& j, DelsarteCertificate& c);
void to_json(json& j, const AlphaResult& a);
void from_json(const json& j, AlphaResult& a);
void to_json(json& j, const RtSpReport& r);
void from_json(const json& j, RtSpReport& r);

// Scalar part of an SDP solution (matrices are not serialized).
struct SdpSummary {
    double primal_value = 0;
    double certified_upper_bound = 0;
    double gap = 0;
    double primal_residual = 0;
    double dual_residual = 0;
    double lambda_min_repair = 0;
    double eta = 0;
    int iterations = 0;
    bool converged = false;
    std::string certification;
    long long published_bound = 0;
    bool operator==(const SdpSummary&) const = default;
};
SdpSummary summarize(const SdpSolution& s);
void to_json(json& j, const SdpSummary& s);
void from_json(const json& j, SdpSummary& s);

// Parses "3,2" or "3 2" into block sizes.
std::vector<int> parse_blocks(const std::string& s);
std::string format_blocks(const std::vector<int>& v, char sep = ',');

// Minimal CSV quoting for a single field.
std::string csv_field(const std::string& s);

}  // namespace srkb
