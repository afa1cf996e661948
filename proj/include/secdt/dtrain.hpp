#pragma once

#include <string>
#include <vector>

#include "secdt/abb.hpp"

namespace secdt {

// Split score as a division-free fraction. Valid scores have p >= 0 and
// q >= 1; the sentinel (-1, 1) loses to every valid score.
struct ScoreVec {
    SVec p;
    SVec q;
};

// Secret training data: m attribute vectors (non-negative, < 2^value_bits - 1)
// and a bit label vector, all of length n.
struct SecretDataset {
    std::vector<SVec> attrs;
    SVec labels;
    std::size_t rows() const { return labels.size(); }
    std::size_t cols() const { return attrs.size(); }
};

struct SecretLayer {
    SVec node;      // node numbers, NULL = 0 padding
    SVec attr;      // internal layers only
    SVec threshold; // internal layers only (doubled threshold)
    SVec label;     // leaf layer only
};

struct SecretTree {
    int height = 0;
    std::vector<SecretLayer> layers; // height internal layers + 1 leaf layer
};

// Public (revealed) trained tree in the normalized layered form.
struct TreeLayer {
    std::vector<u64> node;
    std::vector<u64> attr;      // internal
    std::vector<i64> threshold; // internal, signed (-1 sentinel)
    std::vector<u64> label;     // leaf

    bool operator==(const TreeLayer&) const = default;
};

struct DecisionTree {
    int height = 0;
    std::vector<TreeLayer> layers;

    std::string to_json() const;
    static DecisionTree from_json(const std::string& text);
    bool operator==(const DecisionTree&) const = default;
};

inline constexpr i64 kSentinelThreshold = -1;
inline constexpr u64 kNullNode = 0;

// [p_a * q_b < p_b * q_a]; elementwise.
SVec frac_lt(Abb& abb, const ScoreVec& a, const ScoreVec& b);

// Modified Gini score for splitting each group between i and i+1; labels
// must already be sorted by the attribute under consideration within groups.
ScoreVec modified_gini(Abb& abb, const SVec& g, const SVec& y);

struct SplitResult {
    SVec threshold;
    ScoreVec score;
};

// Best threshold and score per group for one attribute; x and y sorted by x
// within each group.
SplitResult attributewise_split(Abb& abb, const SVec& g, const SVec& x,
                                const SVec& y);

struct TestSelection {
    SVec attr;      // 1-based attribute index
    SVec threshold; // doubled threshold, -1 sentinel
};

// Best test across all attributes for each group.
TestSelection split_u(Abb& abb, const SecretDataset& data, const SVec& g);

// Test results b = [2 * x_{A} < T] per sample.
SVec eval_tests(Abb& abb, std::span<const SVec> attrs, const SVec& attr_idx,
                const SVec& threshold);

// Keep only group heads, move them to the front, truncate to min(2^k, n).
std::vector<SVec> shrink(Abb& abb, int k, const SVec& g,
                         std::span<const SVec> vecs);

struct InternalLayerResult {
    SecretLayer layer;
    SVec branch; // per-sample test results
};

InternalLayerResult train_internal_nodes(Abb& abb, int k,
                                         const SecretDataset& data,
                                         const SVec& g, const SVec& node);

SecretLayer train_leaf_nodes(Abb& abb, int h, const SVec& g, const SVec& y,
                             const SVec& node);

// Layer-by-layer decision tree training.
SecretTree train(Abb& abb, const SecretDataset& data, int height);

DecisionTree reveal_tree(Abb& abb, const SecretTree& tree);

// Cleartext inference on a revealed normalized tree.
u64 predict(const DecisionTree& tree, std::span<const i64> row);

} // namespace secdt
