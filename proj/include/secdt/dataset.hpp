#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "secdt/ring.hpp"

namespace secdt {

// Quantized training data as read from CSV: m integer attribute columns and
// one binary label column.
struct TrainingSet {
    std::vector<std::string> attr_names;
    std::string label_name;
    std::vector<std::vector<i64>> attrs; // column-major
    std::vector<u64> labels;

    std::size_t rows() const { return labels.size(); }
    std::size_t cols() const { return attrs.size(); }
};

// Largest n for which split scores (about 2n^5) stay well below M/2 at the
// default modulus.
inline constexpr std::size_t kDefaultRowCap = 2000;

// Reads a CSV with a header row; every column but the last is a numeric
// attribute, the last is a 0/1 label. Attribute values are quantized by
// round(value * scale), half away from zero, and must land in
// [0, 2^value_bits - 1). Malformed cells raise std::runtime_error naming the
// data row (1-based, excluding the header).
TrainingSet ingest_csv(std::istream& in, double scale, const RingConfig& ring,
                       std::size_t row_cap = kDefaultRowCap);
TrainingSet ingest_csv_file(const std::string& path, double scale,
                            const RingConfig& ring,
                            std::size_t row_cap = kDefaultRowCap);

// Writes the quantized set back out; ingest(export(s), scale=1) == s.
void export_csv(const TrainingSet& data, std::ostream& out);

} // namespace secdt
