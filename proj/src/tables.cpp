#include "srkb/tables.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace srkb {

#ifndef SRKB_DATA_DIR
#define SRKB_DATA_DIR "data"
#endif

std::string data_dir() {
    if (const char* env = std::getenv("SRKB_DATA_DIR"); env && *env) return env;
    return SRKB_DATA_DIR;
}

namespace {

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    size_t col(const std::string& name) const {
        for (size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw std::runtime_error("csv: missing column " + name);
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

Csv read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Csv csv;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line, ',');
        if (csv.header.empty()) {
            csv.header = std::move(fields);
            continue;
        }
        if (fields.size() != csv.header.size())
            throw std::runtime_error(path + ": row with " + std::to_string(fields.size()) + " fields");
        csv.rows.push_back(std::move(fields));
    }
    return csv;
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& x : split(s, ' '))
        if (!x.empty()) out.push_back(std::stoi(x));
    return out;
}

TableCell cell(const std::string& s) {
    if (s == "time") return {};
    return {BigInt(s)};
}

}  // namespace

std::vector<Table1Row> load_table1(const std::string& path) {
    Csv csv = read_csv(path);
    std::vector<Table1Row> out;
    for (const auto& f : csv.rows) {
        Table1Row r;
        r.row = std::stoi(f[csv.col("row")]);
        r.t = std::stoi(f[csv.col("t")]);
        r.q = std::stoi(f[csv.col("q")]);
        r.d = std::stoi(f[csv.col("d")]);
        r.dlp_rt = BigInt(f[csv.col("DLP_RT")]);
        r.singleton = BigInt(f[csv.col("S")]);
        out.push_back(r);
    }
    return out;
}

std::vector<Table2Row> load_table2(const std::string& path) {
    Csv csv = read_csv(path);
    std::vector<Table2Row> out;
    for (const auto& f : csv.rows) {
        Table2Row r;
        r.row = std::stoi(f[csv.col("row")]);
        r.sp = SpaceParams(std::stoi(f[csv.col("q")]), int_list(f[csv.col("n")]), int_list(f[csv.col("m")]));
        r.d = std::stoi(f[csv.col("d")]);
        r.vertices = BigInt(f[csv.col("V")]);
        r.alpha = cell(f[csv.col("alpha")]);
        r.theta = cell(f[csv.col("theta")]);
        r.rt = cell(f[csv.col("RT")]);
        r.dlp = cell(f[csv.col("DLP")]);
        r.sdp = cell(f[csv.col("SDP")]);
        out.push_back(r);
    }
    return out;
}

const std::vector<Method>& table3_classical_columns() {
    static const std::vector<Method> cols{Method::InducedSingleton, Method::InducedHamming, Method::InducedPlotkin,
                                          Method::InducedElias,     Method::Singleton,      Method::SpherePacking,
                                          Method::ProjectiveSpherePacking, Method::TotalDistance};
    return cols;
}

std::vector<Table3Row> load_table3(const std::string& path) {
    Csv csv = read_csv(path);
    std::vector<Table3Row> out;
    std::vector<Method> cols{Method::RatioType, Method::Delsarte};
    for (Method m : table3_classical_columns()) cols.push_back(m);
    for (const auto& f : csv.rows) {
        Table3Row r;
        r.row = std::stoi(f[csv.col("row")]);
        r.sp = SpaceParams(std::stoi(f[csv.col("q")]), int_list(f[csv.col("n")]), int_list(f[csv.col("m")]));
        r.d = std::stoi(f[csv.col("d")]);
        r.vertices = BigInt(f[csv.col("V")]);
        for (Method m : cols) r.values[m] = BigInt(f[csv.col(method_label(m))]);
        out.push_back(r);
    }
    return out;
}

}  // namespace srkb
