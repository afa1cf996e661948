#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace secdt {

// Counts non-free ABB operations (everything except linear combinations
// with public coefficients) plus communication rounds. Breakdown entries
// whose key starts with "net." are backend-internal sub-costs reported for
// information only; they do not contribute to nonfree_ops.
struct CostMeter {
    std::uint64_t nonfree_ops = 0;
    std::uint64_t rounds = 0;
    std::map<std::string, std::uint64_t> breakdown;

    void add(const std::string& key, std::uint64_t units) {
        breakdown[key] += units;
        nonfree_ops += units;
    }
    void add_info(const std::string& key, std::uint64_t units) {
        breakdown[key] += units;
    }
    void reset() {
        nonfree_ops = 0;
        rounds = 0;
        breakdown.clear();
    }
};

} // namespace secdt
