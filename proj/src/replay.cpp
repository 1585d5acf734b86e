#include "srkb/replay.hpp"

#include "srkb/classical.hpp"
#include "srkb/delsarte.hpp"
#include "srkb/graphs.hpp"
#include "srkb/io.hpp"
#include "srkb/ratio_type.hpp"
#include "srkb/tables.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace srkb {

std::string to_string(CellStatus s) {
    switch (s) {
        case CellStatus::Pass: return "pass";
        case CellStatus::Fail: return "fail";
        case CellStatus::Skip: return "skip";
    }
    return "?";
}

int ReplayReport::count(CellStatus s) const {
    int c = 0;
    for (const auto& cell : cells) c += cell.status == s;
    return c;
}

namespace {

bool wanted(const ReplayOptions& opt, const std::string& column) {
    if (opt.columns.empty() || opt.columns.count(column)) return true;
    const bool lp = column == "RT" || column == "DLP";
    if (lp && opt.columns.count("lp")) return true;
    for (Method m : table3_classical_columns())
        if (method_label(m) == column && opt.columns.count("classical")) return true;
    return false;
}

ReplayCell exact_cell(int table, int row, const std::string& column, const BigInt& expected,
                      const std::function<BoundResult()>& compute) {
    ReplayCell c{table, row, column, to_string(expected), "", CellStatus::Fail, ""};
    try {
        BoundResult b = compute();
        c.computed = to_string(b.table_value());
        c.detail = b.detail;
        c.status = b.table_value() == expected ? CellStatus::Pass : CellStatus::Fail;
    } catch (const std::exception& e) {
        c.computed = "error";
        c.detail = e.what();
    }
    return c;
}

ReplayCell skip_cell(int table, int row, const std::string& column, const std::string& expected, std::string why) {
    return ReplayCell{table, row, column, expected, "", CellStatus::Skip, std::move(why)};
}

std::string fixed(double x, int digits = 6) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
}

ReplayCell sdp_cell(int table, int row, const std::string& column, const BigInt& expected, const SdpSolution& s,
                    double abs_tol) {
    ReplayCell c{table, row, column, to_string(expected), "", CellStatus::Fail, ""};
    if (!std::isfinite(s.certified_upper_bound)) {
        c.computed = "none";
        c.detail = "no certified bound";
        return c;
    }
    c.computed = std::to_string(s.published_bound());
    c.detail = "certified " + fixed(s.certified_upper_bound) + ", primal " + fixed(s.primal_value) + ", " +
               s.certification;
    const bool tight = s.gap <= abs_tol;
    if (!tight) c.detail += ", gap above tolerance";
    c.status = tight && BigInt(s.published_bound()) == expected ? CellStatus::Pass : CellStatus::Fail;
    return c;
}

void replay_table1(const ReplayOptions& opt, ReplayReport& rep) {
    for (const auto& r : load_table1()) {
        if (!opt.rows.empty() && !opt.rows.count(r.row)) continue;
        if (opt.max_t && r.t > *opt.max_t) continue;
        SpaceParams sp = hamming_space(r.t, r.q);
        if (wanted(opt, "DLP"))
            rep.cells.push_back(exact_cell(1, r.row, "DLP", r.dlp_rt, [&] { return delsarte_bound(sp, r.d); }));
        if (wanted(opt, "RT"))
            rep.cells.push_back(exact_cell(1, r.row, "RT", r.dlp_rt, [&] { return ratio_type_bound(sp, r.d); }));
        if (wanted(opt, "S"))
            rep.cells.push_back(exact_cell(1, r.row, "S", r.singleton, [&] { return singleton(sp, r.d); }));
    }
}

void replay_table2(const ReplayOptions& opt, ReplayReport& rep) {
    for (const auto& r : load_table2()) {
        if (!opt.rows.empty() && !opt.rows.count(r.row)) continue;
        if (opt.max_t && r.sp.t() > *opt.max_t) continue;
        const bool small = r.sp.size() <= BigInt(opt.max_vertices);
        auto printed = [](const TableCell& c) { return c.value ? to_string(*c.value) : std::string("time"); };

        if (wanted(opt, "alpha")) {
            if (r.alpha.timed_out()) rep.cells.push_back(skip_cell(2, r.row, "alpha", "time", "not printed"));
            else if (!small) rep.cells.push_back(skip_cell(2, r.row, "alpha", printed(r.alpha), "exceeds vertex cap"));
            else {
                ReplayCell c{2, r.row, "alpha", printed(r.alpha), "", CellStatus::Fail, ""};
                AlphaResult a = independence_number(build_graph(r.sp, r.d - 1, opt.max_vertices), opt.alpha_budget);
                c.computed = a.exact() ? std::to_string(a.lower)
                                       : "[" + std::to_string(a.lower) + "," + std::to_string(a.upper) + "]";
                c.detail = std::to_string(a.nodes) + " nodes";
                c.status = a.exact() && BigInt(a.lower) == *r.alpha.value ? CellStatus::Pass : CellStatus::Fail;
                rep.cells.push_back(c);
            }
        }
        if (wanted(opt, "theta")) {
            if (r.theta.timed_out()) rep.cells.push_back(skip_cell(2, r.row, "theta", "time", "not printed"));
            else if (!small) rep.cells.push_back(skip_cell(2, r.row, "theta", printed(r.theta), "exceeds vertex cap"));
            else {
                auto s = lovasz_theta(build_graph(r.sp, r.d - 1, opt.max_vertices), opt.sdp);
                rep.cells.push_back(sdp_cell(2, r.row, "theta", *r.theta.value, s, opt.sdp_abs_tol));
            }
        }
        if (wanted(opt, "theta_lp") && !r.theta.timed_out())
            rep.cells.push_back(exact_cell(2, r.row, "theta_lp", *r.theta.value, [&] {
                return BoundResult::make(Method::LovaszTheta, theta_scheme_lp(r.sp, r.d), "scheme LP, free variables");
            }));
        if (wanted(opt, "RT"))
            rep.cells.push_back(exact_cell(2, r.row, "RT", *r.rt.value, [&] { return ratio_type_bound(r.sp, r.d); }));
        if (wanted(opt, "DLP"))
            rep.cells.push_back(exact_cell(2, r.row, "DLP", *r.dlp.value, [&] { return delsarte_bound(r.sp, r.d); }));
        if (wanted(opt, "SDP")) {
            if (!small) rep.cells.push_back(skip_cell(2, r.row, "SDP", printed(r.sdp), "exceeds vertex cap"));
            else {
                auto s = schrijver_sdp(r.sp, r.d, opt.sdp, opt.max_vertices);
                rep.cells.push_back(sdp_cell(2, r.row, "SDP", *r.sdp.value, s, opt.sdp_abs_tol));
            }
        }
    }
}

void replay_table3(const ReplayOptions& opt, ReplayReport& rep) {
    for (const auto& r : load_table3()) {
        if (!opt.rows.empty() && !opt.rows.count(r.row)) continue;
        if (opt.max_t && r.sp.t() > *opt.max_t) continue;
        if (wanted(opt, "RT"))
            rep.cells.push_back(exact_cell(3, r.row, "RT", r.values.at(Method::RatioType),
                                           [&] { return ratio_type_bound(r.sp, r.d); }));
        if (wanted(opt, "DLP"))
            rep.cells.push_back(exact_cell(3, r.row, "DLP", r.values.at(Method::Delsarte),
                                           [&] { return delsarte_bound(r.sp, r.d); }));
        for (Method m : table3_classical_columns()) {
            const std::string label = method_label(m);
            if (!wanted(opt, label)) continue;
            rep.cells.push_back(exact_cell(3, r.row, label, r.values.at(m), [&]() -> BoundResult {
                switch (m) {
                    case Method::InducedSingleton: return induced_singleton(r.sp, r.d);
                    case Method::InducedHamming: return induced_hamming(r.sp, r.d);
                    case Method::InducedPlotkin: return induced_plotkin(r.sp, r.d);
                    case Method::InducedElias: return induced_elias(r.sp, r.d);
                    case Method::Singleton: return singleton(r.sp, r.d);
                    case Method::SpherePacking: return sphere_packing(r.sp, r.d);
                    case Method::ProjectiveSpherePacking: return projective_sphere_packing_table(r.sp, r.d);
                    case Method::TotalDistance: return total_distance(r.sp, r.d);
                    default: throw std::logic_error("replay: unexpected column");
                }
            }));
        }
    }
}

}  // namespace

ReplayReport replay(const ReplayOptions& opt) {
    ReplayReport rep;
    switch (opt.table) {
        case 1: replay_table1(opt, rep); break;
        case 2: replay_table2(opt, rep); break;
        case 3: replay_table3(opt, rep); break;
        default: throw std::invalid_argument("replay: table must be 1, 2 or 3");
    }
    return rep;
}

void print_text(const ReplayReport& r, std::ostream& out) {
    for (const auto& c : r.cells) {
        out << "table " << c.table << " row " << c.row << " " << c.column << ": expected " << c.expected;
        if (c.status != CellStatus::Skip) out << ", computed " << c.computed;
        out << " [" << to_string(c.status) << "]";
        if (!c.detail.empty()) out << " " << c.detail;
        out << "\n";
    }
    out << r.count(CellStatus::Pass) << " pass, " << r.count(CellStatus::Fail) << " fail, " << r.count(CellStatus::Skip)
        << " skip\n";
}

void print_csv(const ReplayReport& r, std::ostream& out) {
    out << "table,row,column,expected,computed,status,detail\n";
    for (const auto& c : r.cells)
        out << c.table << "," << c.row << "," << csv_field(c.column) << "," << csv_field(c.expected) << ","
            << csv_field(c.computed) << "," << to_string(c.status) << "," << csv_field(c.detail) << "\n";
}

void print_json(const ReplayReport& r, std::ostream& out) {
    json cells = json::array();
    for (const auto& c : r.cells)
        cells.push_back(json{{"table", c.table},
                             {"row", c.row},
                             {"column", c.column},
                             {"expected", c.expected},
                             {"computed", c.computed},
                             {"status", to_string(c.status)},
                             {"detail", c.detail}});
    json j{{"cells", cells},
           {"pass", r.count(CellStatus::Pass)},
           {"fail", r.count(CellStatus::Fail)},
           {"skip", r.count(CellStatus::Skip)}};
    out << j.dump(2) << "\n";
}

}  // namespace srkb
