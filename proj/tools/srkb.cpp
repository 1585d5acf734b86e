#include "srkb/classical.hpp"
#include "srkb/delsarte.hpp"
#include "srkb/existence.hpp"
#include "srkb/graphs.hpp"
#include "srkb/io.hpp"
#include "srkb/ratio_type.hpp"
#include "srkb/replay.hpp"
#include "srkb/sdp.hpp"
#include "srkb/spectrum.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace srkb;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitSolver = 3;

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    int q = 2;
    std::string n, m;
    int d = 1;
    bool no_reorder = false;
    std::string format = "text";
    std::string certificate;
    std::uint64_t cap = 1024;
    double tol = 1e-6;
    // Seconds; negative means the subcommand default.
    double budget = -1;
    std::string methods = "all";
    std::string verdict_methods = "rt,dlp";
    std::string dimacs;
    std::string batch;

    SpaceParams space() const {
        try {
            SpaceParams sp(q, parse_blocks(n), parse_blocks(m));
            sp.validate(false);
            if (!no_reorder) sp = sp.canonical();
            return sp;
        } catch (const std::exception& e) {
            throw InvalidInput(e.what());
        }
    }
    void check_d(const SpaceParams& sp) const {
        if (d < 1 || d > sp.N())
            throw InvalidInput("d must lie in 1.." + std::to_string(sp.N()) + " for " + sp.to_string());
    }
    SdpOptions sdp() const {
        SdpOptions o;
        o.gap_tol = tol;
        o.time_budget = std::max(0.0, budget);
        return o;
    }
};

std::uint64_t default_cap() {
    if (const char* s = std::getenv("SRKB_CAP_VERTICES")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw InvalidInput(std::string("SRKB_CAP_VERTICES is not a number: ") + s);
        }
    }
    return 1024;
}

void add_space_options(CLI::App* app, RunConfig& cfg, bool with_d = true) {
    app->add_option("--q", cfg.q, "field size")->required();
    app->add_option("--n", cfg.n, "row counts, e.g. 3,2")->required();
    app->add_option("--m", cfg.m, "column counts, e.g. 3,2")->required();
    if (with_d) app->add_option("--d", cfg.d, "minimum distance")->required();
    app->add_flag("--no-reorder", cfg.no_reorder, "keep the given block order");
}

void add_format_option(CLI::App* app, RunConfig& cfg) {
    app->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

std::string rat_text(const std::optional<BigRat>& v) { return v ? to_string(*v) : "-"; }

// Methods accepted by `bound`, in output order.
const std::vector<std::string> kBoundMethods{"iS", "iH", "iP", "iE", "S",     "SP",     "PSP",      "TD",
                                             "RT", "rt-lp", "rt-closed", "DLP", "theta", "SDP"};

std::string canonical_method(std::string s) {
    std::string low = s;
    std::transform(low.begin(), low.end(), low.begin(), [](unsigned char c) { return std::tolower(c); });
    for (const auto& m : kBoundMethods) {
        std::string ml = m;
        std::transform(ml.begin(), ml.end(), ml.begin(), [](unsigned char c) { return std::tolower(c); });
        if (ml == low) return m;
    }
    if (low == "psp-table") return "PSP";
    throw InvalidInput("unknown method '" + s + "'");
}

std::vector<std::string> select_methods(const std::string& list) {
    std::vector<std::string> picked;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "all") {
            for (const char* m : {"iS", "iH", "iP", "iE", "S", "SP", "PSP", "TD", "RT", "DLP"}) picked.push_back(m);
        } else if (item == "classical") {
            for (const char* m : {"iS", "iH", "iP", "iE", "S", "SP", "PSP", "TD"}) picked.push_back(m);
        } else {
            picked.push_back(canonical_method(item));
        }
    }
    std::vector<std::string> out;
    for (const auto& m : kBoundMethods)
        if (std::find(picked.begin(), picked.end(), m) != picked.end()) out.push_back(m);
    if (out.empty()) throw InvalidInput("no methods selected");
    return out;
}

struct BoundRow {
    std::string name;
    BoundResult result;
    std::optional<SdpSummary> sdp;
    std::string error;
};

BoundRow compute_bound(const std::string& name, const SpaceParams& sp, const RunConfig& cfg) {
    BoundRow row{name, {}, std::nullopt, ""};
    const int d = cfg.d;
    auto sdp_row = [&](Method method, const SdpSolution& s) {
        row.sdp = summarize(s);
        if (!std::isfinite(s.certified_upper_bound)) throw std::runtime_error("no certified bound");
        row.result = BoundResult::make(method, BigRat(s.certified_upper_bound), s.certification);
    };
    if (name == "iS") row.result = induced_singleton(sp, d);
    else if (name == "iH") row.result = induced_hamming(sp, d);
    else if (name == "iP") row.result = induced_plotkin(sp, d);
    else if (name == "iE") row.result = induced_elias(sp, d);
    else if (name == "S") row.result = singleton(sp, d);
    else if (name == "SP") row.result = sphere_packing(sp, d);
    else if (name == "PSP") row.result = projective_sphere_packing_table(sp, d);
    else if (name == "TD") row.result = total_distance(sp, d);
    else if (name == "RT") row.result = ratio_type_bound(sp, d);
    else if (name == "rt-lp")
        row.result = BoundResult::make(Method::RatioType, ratio_type_lp(sum_rank_spectrum(sp), d), "divided-difference LP");
    else if (name == "rt-closed") {
        if (d == 1) row.result = BoundResult::make(Method::RatioType, BigRat(sp.size()), "trivial");
        else {
            auto mr = minor_closed_form_detail(sum_rank_spectrum(sp), d);
            row.result = BoundResult::make(Method::RatioType, mr.value, "minor polynomial");
        }
    } else if (name == "DLP") {
        row.result = delsarte_bound(sp, d);
        if (!cfg.certificate.empty()) {
            std::ofstream out(cfg.certificate);
            if (!out) throw std::runtime_error("cannot write " + cfg.certificate);
            out << json(delsarte_certificate(sp, d)).dump(2) << "\n";
        }
    } else if (name == "theta") {
        if (d == 1) row.result = BoundResult::make(Method::LovaszTheta, BigRat(sp.size()), "trivial");
        else sdp_row(Method::LovaszTheta, lovasz_theta(build_graph(sp, d - 1, cfg.cap), cfg.sdp()));
    } else if (name == "SDP") {
        sdp_row(Method::SchrijverSDP, schrijver_sdp(sp, d, cfg.sdp(), cfg.cap));
    }
    return row;
}

int cmd_bound(const RunConfig& cfg) {
    const SpaceParams sp = cfg.space();
    cfg.check_d(sp);
    const auto methods = select_methods(cfg.methods);
    std::vector<BoundRow> rows;
    bool failed = false;
    for (const auto& name : methods) {
        try {
            rows.push_back(compute_bound(name, sp, cfg));
        } catch (const std::exception& e) {
            rows.push_back({name, BoundResult::not_applicable(Method::Singleton, e.what()), std::nullopt, e.what()});
            failed = true;
        }
    }

    if (cfg.format == "json") {
        json out{{"params", sp}, {"d", cfg.d}};
        json list = json::array();
        for (const auto& r : rows) {
            json j{{"name", r.name}};
            if (r.error.empty()) j["result"] = r.result;
            else j["error"] = r.error;
            if (r.sdp) j["sdp"] = *r.sdp;
            list.push_back(j);
        }
        out["bounds"] = list;
        std::cout << out.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "q,n,m,d";
        for (const auto& r : rows) std::cout << "," << r.name;
        std::cout << "\n"
                  << sp.q << "," << csv_field(format_blocks(sp.n)) << "," << csv_field(format_blocks(sp.m)) << ","
                  << cfg.d;
        for (const auto& r : rows) std::cout << "," << (r.error.empty() ? to_string(r.result.table_value()) : "error");
        std::cout << "\n";
    } else {
        std::cout << sp.to_string() << "  d=" << cfg.d << "  |V|=" << to_string(sp.size()) << "\n";
        for (const auto& r : rows) {
            std::cout << std::left << std::setw(10) << r.name << std::right << std::setw(12);
            if (!r.error.empty()) std::cout << "error" << "  " << r.error << "\n";
            else {
                std::cout << to_string(r.result.table_value()) << "  " << rat_text(r.result.value_exact);
                if (!r.result.detail.empty()) std::cout << "  (" << r.result.detail << ")";
                if (r.sdp) std::cout << "  gap " << r.sdp->gap;
                std::cout << "\n";
            }
        }
    }
    return failed ? kExitSolver : 0;
}

int cmd_spectrum(const RunConfig& cfg) {
    const SpaceParams sp = cfg.space();
    const Spectrum s = sum_rank_spectrum(sp);
    if (cfg.format == "json") {
        std::cout << json(s).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "eigenvalue,multiplicity\n";
        for (int j = 0; j <= s.r(); ++j) std::cout << to_string(s.eigenvalues[j]) << "," << to_string(s.multiplicities[j]) << "\n";
    } else {
        size_t w = 0;
        for (const auto& e : s.eigenvalues) w = std::max(w, to_string(e).size());
        for (int j = 0; j <= s.r(); ++j)
            std::cout << std::setw(int(w)) << to_string(s.eigenvalues[j]) << "  " << to_string(s.multiplicities[j]) << "\n";
    }
    return 0;
}

int cmd_brute(const RunConfig& cfg) {
    const SpaceParams sp = cfg.space();
    cfg.check_d(sp);
    if (cfg.d == 1) throw InvalidInput("brute alpha needs d >= 2");
    ExplicitGraph g = build_graph(sp, cfg.d - 1, cfg.cap);
    if (!cfg.dimacs.empty()) {
        std::ofstream out(cfg.dimacs);
        if (!out) throw std::runtime_error("cannot write " + cfg.dimacs);
        write_dimacs(g, out);
    }
    const AlphaResult a = independence_number(g, cfg.budget < 0 ? 60 : cfg.budget);
    if (cfg.format == "json") {
        std::cout << json{{"params", sp}, {"d", cfg.d}, {"alpha", a}}.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "q,n,m,d,lower,upper,exact,nodes\n"
                  << sp.q << "," << csv_field(format_blocks(sp.n)) << "," << csv_field(format_blocks(sp.m)) << ","
                  << cfg.d << "," << a.lower << "," << a.upper << "," << (a.exact() ? "true" : "false") << ","
                  << a.nodes << "\n";
    } else if (a.exact()) {
        std::cout << a.lower << "\n";
    } else {
        std::cout << "[" << a.lower << ", " << a.upper << "] (budget exhausted)\n";
    }
    return 0;
}

Verdict run_verdict(const std::string& target, const SpaceParams& sp, int d, const VerdictMethods& vm) {
    if (target == "msrd") return msrd_verdict(sp, d, vm);
    if (target == "perfect") return perfect_verdict(sp, d, vm);
    return additive_perfect_congruence(sp, d);
}

void verdict_csv_header() { std::cout << "target,q,n,m,d,exists,criterion,bound,target_size\n"; }

void verdict_csv_row(const Verdict& v) {
    std::cout << to_string(v.target) << "," << v.params.q << "," << csv_field(format_blocks(v.params.n)) << ","
              << csv_field(format_blocks(v.params.m)) << "," << v.d << "," << to_string(v.exists) << ","
              << csv_field(v.criterion) << "," << (v.witness ? to_string(v.witness->bound) : "") << ","
              << (v.witness ? to_string(v.witness->target_size) : "") << "\n";
}

int cmd_analyze(const std::string& target, const RunConfig& cfg) {
    VerdictMethods vm;
    try {
        vm = VerdictMethods::parse(cfg.verdict_methods);
    } catch (const std::exception& e) {
        throw InvalidInput(e.what());
    }
    vm.sdp_options = cfg.sdp();
    vm.sdp_cap = cfg.cap;

    if (!cfg.batch.empty()) {
        std::ifstream in(cfg.batch);
        if (!in) throw InvalidInput("cannot read " + cfg.batch);
        json list;
        try {
            in >> list;
        } catch (const std::exception& e) {
            throw InvalidInput(std::string("batch file: ") + e.what());
        }
        if (!list.is_array()) throw InvalidInput("batch file must hold a JSON list");
        verdict_csv_header();
        for (const auto& item : list) {
            RunConfig c = cfg;
            SpaceParams sp;
            try {
                sp = item.get<SpaceParams>();
                c.d = item.at("d").get<int>();
                sp.validate(false);
                if (!cfg.no_reorder) sp = sp.canonical();
                c.check_d(sp);
            } catch (const std::exception& e) {
                throw InvalidInput(std::string("batch entry ") + item.dump() + ": " + e.what());
            }
            verdict_csv_row(run_verdict(target, sp, c.d, vm));
        }
        return 0;
    }

    if (cfg.n.empty() || cfg.m.empty()) throw InvalidInput("--n and --m are required without --batch");
    const SpaceParams sp = cfg.space();
    cfg.check_d(sp);
    const Verdict v = run_verdict(target, sp, cfg.d, vm);
    if (cfg.format == "json") {
        std::cout << json(v).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        verdict_csv_header();
        verdict_csv_row(v);
    } else {
        std::cout << to_string(v.exists);
        if (v.witness)
            std::cout << "  " << v.criterion << ": " << to_string(v.witness->bound) << " < "
                      << to_string(v.witness->target_size);
        std::cout << "\n";
        for (const auto& c : v.checks) {
            std::cout << "  " << (c.fired ? "[fired] " : "[ -   ] ") << c.criterion;
            if (c.witness) std::cout << "  bound " << to_string(c.witness->bound);
            if (!c.note.empty()) std::cout << "  " << c.note;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_replay(const RunConfig& cfg, ReplayOptions opt, const std::string& columns, const std::string& rows) {
    std::stringstream cs(columns);
    for (std::string s; std::getline(cs, s, ',');)
        if (!s.empty()) opt.columns.insert(s);
    std::stringstream rs(rows);
    for (std::string s; std::getline(rs, s, ',');)
        if (!s.empty()) {
            try {
                opt.rows.insert(std::stoi(s));
            } catch (const std::exception&) {
                throw InvalidInput("bad row number '" + s + "'");
            }
        }
    opt.sdp = cfg.sdp();
    opt.sdp.time_budget = 0;
    const ReplayReport rep = replay(opt);
    if (cfg.format == "json") print_json(rep, std::cout);
    else if (cfg.format == "csv") print_csv(rep, std::cout);
    else print_text(rep, std::cout);
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds on codes in the sum-rank metric"};
    app.require_subcommand(1);
    RunConfig cfg;
    try {
        cfg.cap = default_cap();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    auto* bound = app.add_subcommand("bound", "evaluate upper bounds on A(q, n, m, d)");
    add_space_options(bound, cfg);
    add_format_option(bound, cfg);
    bound->add_option("--method", cfg.methods, "all, classical, or a comma list of iS,iH,iP,iE,S,SP,PSP,TD,RT,rt-lp,rt-closed,DLP,theta,SDP");
    bound->add_option("--emit-certificate", cfg.certificate, "write the Delsarte dual certificate as JSON");
    bound->add_option("--cap", cfg.cap, "vertex cap for graph-based methods");
    bound->add_option("--tol", cfg.tol, "relative SDP gap tolerance");
    bound->add_option("--budget", cfg.budget, "SDP time budget in seconds (0 = unlimited)");

    auto* spectrum = app.add_subcommand("spectrum", "distinct eigenvalues of the sum-rank graph");
    add_space_options(spectrum, cfg, false);
    add_format_option(spectrum, cfg);

    auto* brute = app.add_subcommand("brute", "exhaustive computations on the explicit graph");
    brute->require_subcommand(1);
    auto* alpha = brute->add_subcommand("alpha", "(d-1)-independence number by branch and bound");
    add_space_options(alpha, cfg);
    add_format_option(alpha, cfg);
    alpha->add_option("--budget", cfg.budget, "time budget in seconds (default 60, 0 = unlimited)");
    alpha->add_option("--cap", cfg.cap, "vertex cap");
    alpha->add_option("--dimacs", cfg.dimacs, "write the distance graph in DIMACS format");

    auto* analyze = app.add_subcommand("analyze", "non-existence verdicts");
    analyze->require_subcommand(1);
    std::string target;
    for (const char* name : {"msrd", "perfect", "additive"}) {
        auto* sub = analyze->add_subcommand(name, std::string(name) + " codes");
        sub->add_option("--q", cfg.q, "field size");
        sub->add_option("--n", cfg.n, "row counts");
        sub->add_option("--m", cfg.m, "column counts");
        sub->add_option("--d", cfg.d, "minimum distance");
        sub->add_flag("--no-reorder", cfg.no_reorder, "keep the given block order");
        sub->add_option("--methods", cfg.verdict_methods, "comma list of classical,rt,dlp,theta,sdp or all");
        sub->add_option("--batch", cfg.batch, "JSON list of {q, n, m, d}; prints CSV");
        sub->add_option("--cap", cfg.cap, "vertex cap for SDP methods");
        sub->add_option("--budget", cfg.budget, "SDP time budget in seconds");
        add_format_option(sub, cfg);
        sub->callback([&target, name] { target = name; });
    }

    auto* rep = app.add_subcommand("replay", "recompute the bundled result tables");
    ReplayOptions ropt;
    std::string columns, rows;
    int max_t = 0;
    rep->add_option("--table", ropt.table, "table 1, 2 or 3")->required()->check(CLI::Range(1, 3));
    rep->add_option("--columns", columns, "comma list of column labels, classical, lp");
    rep->add_option("--rows", rows, "comma list of row numbers");
    rep->add_option("--max-t", max_t, "skip rows with more blocks");
    rep->add_option("--max-vertices", ropt.max_vertices, "vertex cap for alpha, theta and SDP cells");
    rep->add_option("--alpha-budget", ropt.alpha_budget, "seconds per alpha cell");
    rep->add_option("--sdp-tol", ropt.sdp_abs_tol, "allowed certified gap for SDP cells");
    add_format_option(rep, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (bound->parsed()) return cmd_bound(cfg);
        if (spectrum->parsed()) return cmd_spectrum(cfg);
        if (brute->parsed()) return cmd_brute(cfg);
        if (analyze->parsed()) return cmd_analyze(target, cfg);
        if (rep->parsed()) {
            if (max_t > 0) ropt.max_t = max_t;
            if (!rep->count("--max-vertices")) ropt.max_vertices = std::min<std::uint64_t>(ropt.max_vertices, cfg.cap);
            return cmd_replay(cfg, ropt, columns, rows);
        }
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
    return 0;
}
