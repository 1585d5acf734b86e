#pragma once

#include "srkb/sdp.hpp"

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace srkb {

struct ReplayOptions {
    int table = 3;
    // Column labels to recompute ("classical" selects every classical column,
    // "lp" selects RT and DLP); empty means all.
    std::set<std::string> columns;
    std::set<int> rows;
    std::optional<int> max_t;
    // Size limit for the graph-based cells (alpha, theta, SDP).
    std::uint64_t max_vertices = 512;
    double alpha_budget = 120;
    SdpOptions sdp;
    // Allowed distance between the certified SDP bound and the primal value.
    double sdp_abs_tol = 1e-4;
};

enum class CellStatus { Pass, Fail, Skip };
std::string to_string(CellStatus s);

struct ReplayCell {
    int table = 0;
    int row = 0;
    std::string column;
    std::string expected;
    std::string computed;
    CellStatus status = CellStatus::Skip;
    std::string detail;
};

struct ReplayReport {
    std::vector<ReplayCell> cells;
    int count(CellStatus s) const;
    bool ok() const { return count(CellStatus::Fail) == 0; }
};

ReplayReport replay(const ReplayOptions& opt);

void print_text(const ReplayReport& r, std::ostream& out);
void print_csv(const ReplayReport& r, std::ostream& out);
void print_json(const ReplayReport& r, std::ostream& out);

}  // namespace srkb
