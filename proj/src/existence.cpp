#include "srkb/existence.hpp"

#include "srkb/classical.hpp"
#include "srkb/delsarte.hpp"
#include "srkb/ratio_type.hpp"
#include "srkb/spectrum.hpp"

#include <sstream>
#include <stdexcept>

namespace srkb {

std::string to_string(Target t) {
    switch (t) {
        case Target::MSRD: return "MSRD";
        case Target::Perfect: return "Perfect";
        case Target::AdditivePerfect: return "AdditivePerfect";
    }
    return "?";
}

std::string to_string(Existence e) { return e == Existence::RuledOut ? "Ruled_Out" : "Unknown"; }

Target target_from_string(const std::string& s) {
    for (Target t : {Target::MSRD, Target::Perfect, Target::AdditivePerfect})
        if (to_string(t) == s) return t;
    throw std::invalid_argument("unknown verdict target: " + s);
}

Existence existence_from_string(const std::string& s) {
    if (s == "Ruled_Out") return Existence::RuledOut;
    if (s == "Unknown") return Existence::Unknown;
    throw std::invalid_argument("unknown existence value: " + s);
}

VerdictMethods VerdictMethods::parse(const std::string& list) {
    VerdictMethods m;
    m.classical = m.rt = m.dlp = m.theta = m.sdp = false;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "all") m.classical = m.rt = m.dlp = m.theta = m.sdp = true;
        else if (item == "classical") m.classical = true;
        else if (item == "rt") m.rt = true;
        else if (item == "dlp") m.dlp = true;
        else if (item == "theta") m.theta = true;
        else if (item == "sdp") m.sdp = true;
        else throw std::invalid_argument("unknown method: " + item);
    }
    return m;
}

bool is_one_big_block(const SpaceParams& sp) {
    if (sp.t() < 1 || sp.m[0] < sp.n[0]) return false;
    for (int i = 1; i < sp.t(); ++i)
        if (sp.n[i] != 1 || sp.m[i] != 1) return false;
    return true;
}

bool is_all_twos(const SpaceParams& sp) {
    for (int i = 0; i < sp.t(); ++i)
        if (sp.n[i] != 2 || sp.m[i] != 2) return false;
    return sp.t() >= 1;
}

namespace {

// Appends the check and records it as the verdict's reason if it is the first to fire.
void record(Verdict& v, Check c) {
    if (c.fired) {
        if (!c.witness || !(c.witness->bound < c.witness->target_size))
            throw std::logic_error("verdict: fired check without a strict witness");
        if (v.exists == Existence::Unknown) {
            v.exists = Existence::RuledOut;
            v.criterion = c.criterion;
            v.witness = c.witness;
        }
    }
    v.checks.push_back(std::move(c));
}

Check bound_check(const BoundResult& b, const BigRat& target) {
    Check c;
    c.criterion = method_label(b.method);
    if (!b.applicable || !b.value_exact) {
        c.note = "not applicable: " + b.detail;
        return c;
    }
    c.witness = Witness{*b.value_exact, target};
    c.fired = *b.value_exact < target;
    c.note = b.detail;
    return c;
}

// Runs every requested bound method against the target size.
void bound_checks(Verdict& v, const SpaceParams& sp, int d, const VerdictMethods& methods, const BigRat& target,
                  bool skip_singleton) {
    if (methods.classical)
        for (const auto& b : classical_bounds(sp, d)) {
            if (skip_singleton && b.method == Method::Singleton) continue;
            record(v, bound_check(b, target));
        }
    if (methods.rt) record(v, bound_check(ratio_type_bound(sp, d), target));
    if (methods.dlp) record(v, bound_check(delsarte_bound(sp, d), target));
    for (auto [on, m] : {std::pair{methods.theta, Method::LovaszTheta}, std::pair{methods.sdp, Method::SchrijverSDP}}) {
        if (!on) continue;
        if (sp.size() > BigInt(methods.sdp_cap)) {
            record(v, Check{method_label(m), false, std::nullopt, "skipped: space exceeds cap"});
            continue;
        }
        // Only the certified upper endpoint is compared.
        auto b = m == Method::LovaszTheta ? theta_bound(sp, d, methods.sdp_options, methods.sdp_cap)
                                          : sdp_bound(sp, d, methods.sdp_options, methods.sdp_cap);
        record(v, bound_check(b, target));
    }
}

BigRat ball_target(const SpaceParams& sp, int d) { return BigRat(sp.size(), ball_volume(sp, (d - 1) / 2)); }

}  // namespace

Verdict msrd_verdict(const SpaceParams& sp, int d, const VerdictMethods& methods) {
    Verdict v;
    v.target = Target::MSRD;
    v.params = sp;
    v.d = d;
    BoundResult s = singleton(sp, d);
    const BigRat target = *s.value_exact;

    if (is_all_twos(sp) && sp.t() >= 2 && d == 3) {
        Check c;
        c.criterion = "RT closed form (2,...,2), t >= q-1";
        BigRat rt = ratio_type_22_closed_form(sp.q, sp.t());
        c.witness = Witness{rt, target};
        c.fired = sp.t() >= sp.q - 1 && rt < target;
        if (sp.t() >= sp.q - 1 && !(rt < target)) c.note = "condition holds but closed form is not below Singleton";
        record(v, c);
    }
    bound_checks(v, sp, d, methods, target, true);
    return v;
}

bool log_criterion_induced(int q, int m, int n, int t, int r) {
    const long long e = 1LL * r * r + 1LL * (m - n - 2) * r - 1LL * (t - 1) * (m - 1) - 1;
    if (e < 0) return false;
    const BigInt X = BigInt(r + 1) * binomial(unsigned(t - 1), unsigned((t - 1) / 2));
    return ipow(q, unsigned(e)) >= X;
}

bool log_criterion_singleton(int q, int m, int n, int t, int r) {
    const long long e = 1LL * r * r - 1LL * (m + n) * r - (n + 1 - 1LL * m * n);
    if (e < 0) return false;
    const BigInt X = BigInt(r + 1) * binomial(unsigned(t - 1), unsigned((t - 1) / 2));
    return ipow(q, unsigned(e)) > X;
}

Verdict perfect_verdict(const SpaceParams& sp, int d, const VerdictMethods& methods) {
    sp.validate(false);
    if (d < 1 || d > sp.N()) throw std::out_of_range("perfect_verdict: d outside 1..N");
    Verdict v;
    v.target = Target::Perfect;
    v.params = sp;
    v.d = d;
    const int r = (d - 1) / 2;
    const BigRat target = ball_target(sp, d);
    const int q = sp.q, t = sp.t();

    if (is_one_big_block(sp)) {
        const int m = sp.m[0], n = sp.n[0];
        {
            Check c;
            c.criterion = "log inequality with induced Singleton";
            const bool cond = log_criterion_induced(q, m, n, t, r);
            c.witness = Witness{BigRat(ipow(q, unsigned(std::max(0, m * (n + t - 2 * r - 1))))), target};
            c.fired = cond && c.witness->bound < target;
            if (cond && !c.fired) c.note = "inequality holds but witness comparison fails";
            record(v, c);
        }
        if (d > n) {
            Check c;
            c.criterion = "log inequality with Singleton, d > n";
            const bool cond = log_criterion_singleton(q, m, n, t, r);
            c.witness = Witness{BigRat(ipow(q, unsigned(std::max(0, t - 2 * r + n - 1)))), target};
            c.fired = cond && c.witness->bound < target;
            if (cond && !c.fired) c.note = "inequality holds but witness comparison fails";
            record(v, c);
        }
        if (d == 3 && t >= 2 && m >= 2) {
            Check c;
            c.criterion = "RT below sphere packing, t != 1 mod q";
            BigRat rt = ratio_type_d3(sum_rank_spectrum(sp));
            c.witness = Witness{rt, target};
            c.fired = t % q != 1 % q && rt < target;
            record(v, c);
        }
    }
    if (is_all_twos(sp) && t >= 2 && d == 3) {
        Check c;
        c.criterion = "RT below sphere packing (2,...,2), t(q+1) != 1 mod q^2";
        BigRat rt = ratio_type_d3(sum_rank_spectrum(sp));
        c.witness = Witness{rt, target};
        c.fired = (t * (q + 1)) % (q * q) != 1 && rt < target;
        record(v, c);
    }
    bound_checks(v, sp, d, methods, target, false);
    return v;
}

Verdict additive_perfect_congruence(const SpaceParams& sp, int d) {
    if (!is_one_big_block(sp)) throw std::invalid_argument("additive_perfect_congruence: needs (m,1,...,1)/(n,1,...,1)");
    if (d < 1 || d > sp.N()) throw std::out_of_range("additive_perfect_congruence: d outside 1..N");
    Verdict v;
    v.target = Target::AdditivePerfect;
    v.params = sp;
    v.d = d;
    const int r = (d - 1) / 2;
    const int p = sp.characteristic();
    const BigInt V = ball_volume(sp, r);
    const BigRat target(sp.size(), V);

    Check c;
    c.criterion = "V_r not divisible by p";
    const bool fires = r >= 1 && mod(V, p) != 0;
    // An additive code has p-power size; the largest one not above the target.
    BigInt pk = 1;
    while (BigRat(pk * p) <= target) pk *= p;
    c.witness = Witness{BigRat(pk), target};
    c.fired = fires && BigRat(pk) < target;
    c.note = "V_r = " + to_string(V) + ", V_r mod p = " + std::to_string(mod(V, p));
    if ((d == 3 || d == 4) && sp.t() >= 2) {
        const bool by_t = sp.t() % p != 1 % p;
        if (by_t != fires) throw std::logic_error("additive_perfect_congruence: t-criterion and V_1 mod p disagree");
    }
    record(v, c);
    return v;
}

RtSpReport rt_vs_sp_report(const SpaceParams& sp) {
    RtSpReport rep;
    const int q = sp.q, t = sp.t();
    if (t < 2) throw std::invalid_argument("rt_vs_sp_report: needs t >= 2");
    if (is_one_big_block(sp) && sp.m[0] >= 2) {
        rep.rt_closed = ratio_type_family_closed_form(q, sp.m[0], sp.n[0], t);
        rep.condition = t % q != 1 % q;
    } else if (is_all_twos(sp)) {
        rep.rt_closed = ratio_type_22_closed_form(q, t);
        rep.condition = (t * (q + 1)) % (q * q) != 1;
    } else {
        throw std::invalid_argument("rt_vs_sp_report: space is in neither closed-form family");
    }
    rep.rt = ratio_type_d3(sum_rank_spectrum(sp));
    rep.sp = BigRat(sp.size(), ball_volume(sp, 1));
    rep.strict = rep.rt_closed < rep.sp;
    rep.closed_form_exact = rep.rt == rep.rt_closed;
    return rep;
}

}  // namespace srkb
