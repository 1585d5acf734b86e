#pragma once

#include "srkb/bound.hpp"
#include "srkb/space.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace srkb {

// Directory of the bundled expected-value CSV files: $SRKB_DATA_DIR if set,
// otherwise the directory configured at build time.
std::string data_dir();

// A published cell: an integer, or "time" when the computation was not finished.
struct TableCell {
    std::optional<BigInt> value;
    bool timed_out() const { return !value; }
};

struct Table1Row {
    int row = 0;
    int t = 0, q = 0, d = 0;
    BigInt dlp_rt;     // common floored value of DLP and RT
    BigInt singleton;  // q^(t-d+1)
};

struct Table2Row {
    int row = 0;
    SpaceParams sp;
    int d = 0;
    BigInt vertices;
    TableCell alpha, theta, rt, dlp, sdp;
};

struct Table3Row {
    int row = 0;
    SpaceParams sp;
    int d = 0;
    BigInt vertices;
    // RT, DLP and the classical columns; 0 means not applicable.
    std::map<Method, BigInt> values;
};

std::vector<Table1Row> load_table1(const std::string& path = data_dir() + "/table1.csv");
std::vector<Table2Row> load_table2(const std::string& path = data_dir() + "/table2.csv");
std::vector<Table3Row> load_table3(const std::string& path = data_dir() + "/table3.csv");

// Classical columns of the third table in printed order.
const std::vector<Method>& table3_classical_columns();

}  // namespace srkb
