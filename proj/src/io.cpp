#include "srkb/io.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace srkb {

namespace {

std::vector<std::string> int_strings(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

std::vector<std::string> rat_strings(const std::vector<BigRat>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

std::vector<BigInt> ints(const json& j) {
    std::vector<BigInt> out;
    for (const auto& s : j) out.emplace_back(s.get<std::string>());
    return out;
}

std::vector<BigRat> rats(const json& j) {
    std::vector<BigRat> out;
    for (const auto& s : j) out.push_back(parse_rational(s.get<std::string>()));
    return out;
}

}  // namespace

void to_json(json& j, const SpaceParams& sp) { j = json{{"q", sp.q}, {"n", sp.n}, {"m", sp.m}}; }

void from_json(const json& j, SpaceParams& sp) {
    sp = SpaceParams(j.at("q").get<int>(), j.at("n").get<std::vector<int>>(), j.at("m").get<std::vector<int>>());
}

void to_json(json& j, const BoundResult& b) {
    j = json{{"method", method_label(b.method)}, {"applicable", b.applicable}, {"detail", b.detail}};
    j["value_exact"] = b.value_exact ? json(to_string(*b.value_exact)) : json(nullptr);
    j["value"] = b.value_int ? json(to_string(*b.value_int)) : json(nullptr);
}

void from_json(const json& j, BoundResult& b) {
    auto m = method_from_label(j.at("method").get<std::string>());
    if (!m) throw std::invalid_argument("unknown method label " + j.at("method").get<std::string>());
    b.method = *m;
    b.applicable = j.at("applicable").get<bool>();
    b.detail = j.at("detail").get<std::string>();
    b.value_exact.reset();
    b.value_int.reset();
    if (!j.at("value_exact").is_null()) b.value_exact = parse_rational(j.at("value_exact").get<std::string>());
    if (!j.at("value").is_null()) b.value_int = BigInt(j.at("value").get<std::string>());
}

void to_json(json& j, const Spectrum& s) {
    j = json{{"eigenvalues", int_strings(s.eigenvalues)},
             {"multiplicities", int_strings(s.multiplicities)},
             {"vertex_count", to_string(s.vertex_count)}};
}

void from_json(const json& j, Spectrum& s) {
    s.eigenvalues = ints(j.at("eigenvalues"));
    s.multiplicities = ints(j.at("multiplicities"));
    s.vertex_count = BigInt(j.at("vertex_count").get<std::string>());
}

void to_json(json& j, const Witness& w) {
    j = json{{"bound", to_string(w.bound)}, {"target_size", to_string(w.target_size)}};
}

void from_json(const json& j, Witness& w) {
    w.bound = parse_rational(j.at("bound").get<std::string>());
    w.target_size = parse_rational(j.at("target_size").get<std::string>());
}

void to_json(json& j, const Check& c) {
    j = json{{"criterion", c.criterion}, {"fired", c.fired}, {"note", c.note}};
    j["witness"] = c.witness ? json(*c.witness) : json(nullptr);
}

void from_json(const json& j, Check& c) {
    c.criterion = j.at("criterion").get<std::string>();
    c.fired = j.at("fired").get<bool>();
    c.note = j.at("note").get<std::string>();
    c.witness.reset();
    if (!j.at("witness").is_null()) c.witness = j.at("witness").get<Witness>();
}

void to_json(json& j, const Verdict& v) {
    j = json{{"target", to_string(v.target)}, {"exists", to_string(v.exists)}, {"params", v.params},
             {"d", v.d},                      {"criterion", v.criterion},     {"checks", v.checks}};
    j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
}

void from_json(const json& j, Verdict& v) {
    v.target = target_from_string(j.at("target").get<std::string>());
    v.exists = existence_from_string(j.at("exists").get<std::string>());
    v.params = j.at("params").get<SpaceParams>();
    v.d = j.at("d").get<int>();
    v.criterion = j.at("criterion").get<std::string>();
    v.checks = j.at("checks").get<std::vector<Check>>();
    v.witness.reset();
    if (!j.at("witness").is_null()) v.witness = j.at("witness").get<Witness>();
}

void to_json(json& j, const DelsarteCertificate& c) {
    j = json{{"params", c.sp},
             {"d", c.d},
             {"symmetrized", c.symmetrized},
             {"value", to_string(c.value)},
             {"variables", c.variables},
             {"orbit_sizes", int_strings(c.orbit_sizes)},
             {"distribution", rat_strings(c.distribution)},
             {"columns", c.columns},
             {"dual", rat_strings(c.dual)}};
}

void from_json(const json& j, DelsarteCertificate& c) {
    c.sp = j.at("params").get<SpaceParams>();
    c.d = j.at("d").get<int>();
    c.symmetrized = j.at("symmetrized").get<bool>();
    c.value = parse_rational(j.at("value").get<std::string>());
    c.variables = j.at("variables").get<std::vector<std::vector<int>>>();
    c.orbit_sizes = ints(j.at("orbit_sizes"));
    c.distribution = rats(j.at("distribution"));
    c.columns = j.at("columns").get<std::vector<std::vector<int>>>();
    c.dual = rats(j.at("dual"));
}

void to_json(json& j, const AlphaResult& a) {
    j = json{{"lower", a.lower}, {"upper", a.upper}, {"exact", a.exact()},
             {"witness", a.witness}, {"nodes", a.nodes}, {"seconds", a.seconds}};
}

void from_json(const json& j, AlphaResult& a) {
    a.lower = j.at("lower").get<int>();
    a.upper = j.at("upper").get<int>();
    a.witness = j.at("witness").get<std::vector<int>>();
    a.nodes = j.at("nodes").get<long long>();
    a.seconds = j.at("seconds").get<double>();
}

void to_json(json& j, const RtSpReport& r) {
    j = json{{"rt", to_string(r.rt)},         {"rt_closed_form", to_string(r.rt_closed)},
             {"sp", to_string(r.sp)},         {"strict", r.strict},
             {"condition", r.condition},      {"closed_form_exact", r.closed_form_exact},
             {"consistent", r.consistent()}};
}

void from_json(const json& j, RtSpReport& r) {
    r.rt = parse_rational(j.at("rt").get<std::string>());
    r.rt_closed = parse_rational(j.at("rt_closed_form").get<std::string>());
    r.sp = parse_rational(j.at("sp").get<std::string>());
    r.strict = j.at("strict").get<bool>();
    r.condition = j.at("condition").get<bool>();
    r.closed_form_exact = j.at("closed_form_exact").get<bool>();
}

SdpSummary summarize(const SdpSolution& s) {
    SdpSummary out;
    out.primal_value = s.primal_value;
    out.certified_upper_bound = s.certified_upper_bound;
    out.gap = s.gap;
    out.primal_residual = s.primal_residual;
    out.dual_residual = s.dual_residual;
    out.lambda_min_repair = s.lambda_min_repair;
    out.eta = s.eta;
    out.iterations = s.iterations;
    out.converged = s.converged;
    out.certification = s.certification;
    out.published_bound = std::isfinite(s.certified_upper_bound) ? s.published_bound() : 0;
    return out;
}

void to_json(json& j, const SdpSummary& s) {
    j = json{{"primal_value", s.primal_value},
             {"certified_upper_bound", s.certified_upper_bound},
             {"gap", s.gap},
             {"primal_residual", s.primal_residual},
             {"dual_residual", s.dual_residual},
             {"lambda_min_repair", s.lambda_min_repair},
             {"eta", s.eta},
             {"iterations", s.iterations},
             {"converged", s.converged},
             {"certification", s.certification},
             {"published_bound", s.published_bound}};
}

void from_json(const json& j, SdpSummary& s) {
    s.primal_value = j.at("primal_value").get<double>();
    s.certified_upper_bound = j.at("certified_upper_bound").get<double>();
    s.gap = j.at("gap").get<double>();
    s.primal_residual = j.at("primal_residual").get<double>();
    s.dual_residual = j.at("dual_residual").get<double>();
    s.lambda_min_repair = j.at("lambda_min_repair").get<double>();
    s.eta = j.at("eta").get<double>();
    s.iterations = j.at("iterations").get<int>();
    s.converged = j.at("converged").get<bool>();
    s.certification = j.at("certification").get<std::string>();
    s.published_bound = j.at("published_bound").get<long long>();
}

std::vector<int> parse_blocks(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        size_t pos = 0;
        int v = std::stoi(cur, &pos);
        if (pos != cur.size()) throw std::invalid_argument("bad block size '" + cur + "'");
        out.push_back(v);
        cur.clear();
    };
    for (char c : s) {
        if (c == ',' || c == ' ') flush();
        else cur += c;
    }
    flush();
    if (out.empty()) throw std::invalid_argument("empty block list");
    return out;
}

std::string format_blocks(const std::vector<int>& v, char sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace srkb
