#pragma once

#include "srkb/bound.hpp"
#include "srkb/sdp.hpp"
#include "srkb/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace srkb {

enum class Target { MSRD, Perfect, AdditivePerfect };
enum class Existence { RuledOut, Unknown };

std::string to_string(Target t);
std::string to_string(Existence e);
Target target_from_string(const std::string& s);
Existence existence_from_string(const std::string& s);

struct Witness {
    BigRat bound;
    BigRat target_size;
    bool operator==(const Witness&) const = default;
};

// One evaluated criterion.
struct Check {
    std::string criterion;
    bool fired = false;
    std::optional<Witness> witness;
    std::string note;
    bool operator==(const Check&) const = default;
};

// Never claims existence: Unknown is the only alternative to RuledOut.
struct Verdict {
    Target target = Target::MSRD;
    Existence exists = Existence::Unknown;
    SpaceParams params;
    int d = 1;
    // First criterion that fired, with its witness (bound < target size).
    std::string criterion;
    std::optional<Witness> witness;
    std::vector<Check> checks;
    bool operator==(const Verdict&) const = default;
};

struct VerdictMethods {
    bool classical = false;
    bool rt = true;
    bool dlp = true;
    bool theta = false;
    bool sdp = false;
    SdpOptions sdp_options;
    std::uint64_t sdp_cap = 1024;

    // Comma-separated subset of classical, rt, dlp, theta, sdp, or "all".
    static VerdictMethods parse(const std::string& list);
};

// Whether the space is (m, 1, ..., 1)/(n, 1, ..., 1), and whether it is (2, ..., 2)/(2, ..., 2).
bool is_one_big_block(const SpaceParams& sp);
bool is_all_twos(const SpaceParams& sp);

Verdict msrd_verdict(const SpaceParams& sp, int d, const VerdictMethods& methods = {});
Verdict perfect_verdict(const SpaceParams& sp, int d, const VerdictMethods& methods = {});
// Additive perfect codes in the (m, 1, ..., 1)/(n, 1, ..., 1) family: ruled
// out when V_r is not divisible by p. Throws std::invalid_argument outside the family.
Verdict additive_perfect_congruence(const SpaceParams& sp, int d);

// Exact-integer forms of the two logarithmic criteria for the (m,1,...,1)/(n,1,...,1) family.
bool log_criterion_induced(int q, int m, int n, int t, int r);
bool log_criterion_singleton(int q, int m, int n, int t, int r);

struct RtSpReport {
    BigRat rt;            // ratio_type_d3 of the spectrum
    BigRat rt_closed;     // closed form for the family
    BigRat sp;            // |V| / V_1
    bool strict = false;  // rt_closed < sp
    bool condition = false;
    bool closed_form_exact = false;  // closed form equals the computed bound
    bool consistent() const { return rt <= sp && rt_closed <= sp && strict == condition; }
};
// d = 3 comparison for either family. Throws std::invalid_argument otherwise.
RtSpReport rt_vs_sp_report(const SpaceParams& sp);

}  // namespace srkb
