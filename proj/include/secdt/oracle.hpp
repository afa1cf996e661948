#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "secdt/dtrain.hpp"

// Cleartext reference implementations: scan versions of the group-wise
// operations, an exact-rational split score, and a plain trainer that applies
// the same normalization and tie rules as the protocol.
namespace secdt::oracle {

using boost::multiprecision::cpp_int;

std::vector<u64> group_sum(const std::vector<u64>& g,
                           const std::vector<u64>& x);
std::vector<u64> group_prefix_sum(const std::vector<u64>& g,
                                  const std::vector<u64>& x);
std::vector<i64> group_max(const std::vector<u64>& g,
                           const std::vector<i64>& x);
std::vector<u64> group_first_one(const std::vector<u64>& g,
                                 const std::vector<u64>& b);
std::vector<u64> group_same(const std::vector<u64>& g,
                            const std::vector<u64>& y);

// Split score as an exact fraction; sentinel (-1, 1) loses to all real scores.
struct Frac {
    cpp_int p = -1;
    cpp_int q = 1;
    bool operator==(const Frac& o) const { return p * o.q == o.p * q; }
};
bool frac_less(const Frac& a, const Frac& b);

// Modified Gini score of splitting a group with label counts (u0, u1) on the
// "true" side and (w0, w1) on the "false" side.
Frac gini_score(u64 u0, u64 u1, u64 w0, u64 w1);

struct PlainDataset {
    std::vector<std::vector<i64>> attrs; // column-major, m columns of length n
    std::vector<u64> labels;
    std::size_t rows() const { return labels.size(); }
    std::size_t cols() const { return attrs.size(); }
};

struct BestTest {
    u64 attr = 1;       // 1-based; 1 when no valid split exists
    i64 threshold = -1; // doubled threshold; -1 sentinel
    Frac score;
};

// Best test over the given rows with the global tie rules (lowest attribute
// index, leftmost position in the stable x-sorted order).
BestTest best_test(const PlainDataset& data,
                   const std::vector<std::size_t>& rows);

// Best achievable score for one attribute over the rows: adjacent-pair
// candidate thresholds only, or every pairwise threshold x_a + x_b.
Frac best_score_adjacent(const std::vector<i64>& x,
                         const std::vector<u64>& y,
                         const std::vector<std::size_t>& rows);
Frac best_score_bruteforce(const std::vector<i64>& x,
                           const std::vector<u64>& y,
                           const std::vector<std::size_t>& rows);

// Normalized layer-by-layer trainer; ground truth for the protocol.
DecisionTree train(const PlainDataset& data, int height);

} // namespace secdt::oracle
