#include "secdt/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace secdt {

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        auto first = cell.find_first_not_of(" \t\r");
        auto last = cell.find_last_not_of(" \t\r");
        cells.push_back(first == std::string::npos
                            ? std::string{}
                            : cell.substr(first, last - first + 1));
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

[[noreturn]] void row_error(std::size_t row, const std::string& what) {
    throw std::runtime_error("row " + std::to_string(row) + ": " + what);
}

double parse_number(const std::string& cell, std::size_t row,
                    const std::string& col) {
    if (cell.empty()) row_error(row, "empty value in column " + col);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(cell, &used);
    } catch (const std::exception&) {
        row_error(row, "not a number in column " + col + ": '" + cell + "'");
    }
    if (used != cell.size())
        row_error(row, "not a number in column " + col + ": '" + cell + "'");
    if (!std::isfinite(v))
        row_error(row, "non-finite value in column " + col + ": '" + cell + "'");
    return v;
}

} // namespace

TrainingSet ingest_csv(std::istream& in, double scale, const RingConfig& ring,
                       std::size_t row_cap) {
    if (!(scale > 0)) throw std::invalid_argument("scale must be positive");
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
    auto header = split_row(line);
    if (header.size() < 2)
        throw std::runtime_error("need at least one attribute column and a "
                                 "label column");

    TrainingSet out;
    out.attr_names.assign(header.begin(), header.end() - 1);
    out.label_name = header.back();
    out.attrs.resize(out.attr_names.size());

    const i64 bound = i64(1) << ring.value_bits; // values must be < bound - 1
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        ++row;
        if (row > row_cap)
            row_error(row, "exceeds the row cap of " + std::to_string(row_cap));
        auto cells = split_row(line);
        if (cells.size() != header.size())
            row_error(row, "expected " + std::to_string(header.size()) +
                               " cells, got " + std::to_string(cells.size()));
        for (std::size_t j = 0; j + 1 < cells.size(); ++j) {
            double v = parse_number(cells[j], row, out.attr_names[j]) * scale;
            double q = std::round(v);
            if (!(q >= 0 && q <= double(bound - 2)))
                row_error(row, "value out of range after scaling in column " +
                                   out.attr_names[j] + ": " + cells[j]);
            out.attrs[j].push_back(i64(q));
        }
        const auto& label = cells.back();
        if (label != "0" && label != "1")
            row_error(row, "label must be 0 or 1, got '" + label + "'");
        out.labels.push_back(label == "1" ? 1 : 0);
    }
    if (out.labels.empty()) throw std::runtime_error("CSV has no data rows");
    return out;
}

TrainingSet ingest_csv_file(const std::string& path, double scale,
                            const RingConfig& ring, std::size_t row_cap) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return ingest_csv(in, scale, ring, row_cap);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void export_csv(const TrainingSet& data, std::ostream& out) {
    for (const auto& name : data.attr_names) out << name << ",";
    out << data.label_name << "\n";
    for (std::size_t i = 0; i < data.rows(); ++i) {
        for (const auto& col : data.attrs) out << col[i] << ",";
        out << data.labels[i] << "\n";
    }
}

} // namespace secdt
