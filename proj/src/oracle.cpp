#include "secdt/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace secdt::oracle {

namespace {

void require_lengths(const std::vector<u64>& g, std::size_t n) {
    if (g.size() != n || n == 0 || g[0] != 1)
        throw std::invalid_argument("oracle group op: bad group flags");
}

// Start index of each group, plus a trailing n.
std::vector<std::size_t> group_bounds(const std::vector<u64>& g) {
    std::vector<std::size_t> bounds;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i]) bounds.push_back(i);
    bounds.push_back(g.size());
    return bounds;
}

} // namespace

std::vector<u64> group_sum(const std::vector<u64>& g,
                           const std::vector<u64>& x) {
    require_lengths(g, x.size());
    auto bounds = group_bounds(g);
    std::vector<u64> out(x.size());
    for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
        u64 s = std::accumulate(x.begin() + bounds[b],
                                x.begin() + bounds[b + 1], u64(0));
        std::fill(out.begin() + bounds[b], out.begin() + bounds[b + 1], s);
    }
    return out;
}

std::vector<u64> group_prefix_sum(const std::vector<u64>& g,
                                  const std::vector<u64>& x) {
    require_lengths(g, x.size());
    std::vector<u64> out(x.size());
    u64 run = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (g[i]) run = 0;
        run += x[i];
        out[i] = run;
    }
    return out;
}

std::vector<i64> group_max(const std::vector<u64>& g,
                           const std::vector<i64>& x) {
    require_lengths(g, x.size());
    auto bounds = group_bounds(g);
    std::vector<i64> out(x.size());
    for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
        i64 m = *std::max_element(x.begin() + bounds[b],
                                  x.begin() + bounds[b + 1]);
        std::fill(out.begin() + bounds[b], out.begin() + bounds[b + 1], m);
    }
    return out;
}

std::vector<u64> group_first_one(const std::vector<u64>& g,
                                 const std::vector<u64>& b) {
    require_lengths(g, b.size());
    std::vector<u64> out(b.size(), 0);
    bool seen = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (g[i]) seen = false;
        if (b[i] && !seen) {
            out[i] = 1;
            seen = true;
        }
    }
    return out;
}

std::vector<u64> group_same(const std::vector<u64>& g,
                            const std::vector<u64>& y) {
    require_lengths(g, y.size());
    auto bounds = group_bounds(g);
    std::vector<u64> out(y.size());
    for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
        u64 ones = std::accumulate(y.begin() + bounds[b],
                                   y.begin() + bounds[b + 1], u64(0));
        u64 size = u64(bounds[b + 1] - bounds[b]);
        u64 same = (ones == 0 || ones == size) ? 1 : 0;
        std::fill(out.begin() + bounds[b], out.begin() + bounds[b + 1], same);
    }
    return out;
}

bool frac_less(const Frac& a, const Frac& b) { return a.p * b.q < b.p * a.q; }

Frac gini_score(u64 u0, u64 u1, u64 w0, u64 w1) {
    cpp_int u = cpp_int(u0) + u1;
    cpp_int w = cpp_int(w0) + w1;
    Frac f;
    f.p = w * (cpp_int(u0) * u0 + cpp_int(u1) * u1) +
          u * (cpp_int(w0) * w0 + cpp_int(w1) * w1);
    f.q = u * w;
    return f;
}

namespace {

// Best threshold for one attribute over the rows, leftmost on score ties.
// Rows must be in the current group order so the stable sort matches the
// protocol's radix sort.
struct AttrBest {
    Frac score;
    i64 threshold = -1;
};

AttrBest attr_best(const std::vector<i64>& x, const std::vector<u64>& y,
                   const std::vector<std::size_t>& rows) {
    std::vector<std::size_t> order = rows;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    u64 tot1 = 0;
    for (auto r : rows) tot1 += y[r];
    u64 tot0 = u64(rows.size()) - tot1;

    AttrBest best;
    u64 u0 = 0, u1 = 0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        if (y[order[i]]) ++u1; else ++u0;
        if (x[order[i]] == x[order[i + 1]]) continue;
        Frac s = gini_score(u0, u1, tot0 - u0, tot1 - u1);
        if (frac_less(best.score, s)) {
            best.score = s;
            best.threshold = x[order[i]] + x[order[i + 1]];
        }
    }
    return best;
}

} // namespace

BestTest best_test(const PlainDataset& data,
                   const std::vector<std::size_t>& rows) {
    if (data.cols() == 0 || rows.empty())
        throw std::invalid_argument("best_test: empty input");
    BestTest best;
    for (std::size_t j = 0; j < data.cols(); ++j) {
        AttrBest a = attr_best(data.attrs[j], data.labels, rows);
        if (j == 0 || frac_less(best.score, a.score)) {
            best.attr = j + 1;
            best.threshold = a.threshold;
            best.score = a.score;
        }
    }
    return best;
}

Frac best_score_adjacent(const std::vector<i64>& x, const std::vector<u64>& y,
                         const std::vector<std::size_t>& rows) {
    return attr_best(x, y, rows).score;
}

Frac best_score_bruteforce(const std::vector<i64>& x,
                           const std::vector<u64>& y,
                           const std::vector<std::size_t>& rows) {
    Frac best;
    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = 0; b < rows.size(); ++b) {
            i64 t = x[rows[a]] + x[rows[b]];
            u64 u0 = 0, u1 = 0, w0 = 0, w1 = 0;
            for (auto r : rows) {
                bool left = 2 * x[r] < t;
                if (y[r]) (left ? u1 : w1) += 1;
                else (left ? u0 : w0) += 1;
            }
            if (u0 + u1 == 0 || w0 + w1 == 0) continue;
            Frac s = gini_score(u0, u1, w0, w1);
            if (frac_less(best, s)) best = s;
        }
    }
    return best;
}

DecisionTree train(const PlainDataset& data, int height) {
    std::size_t n = data.rows();
    std::size_t m = data.cols();
    if (n == 0 || m == 0) throw std::invalid_argument("train: empty dataset");
    if (height < 0) throw std::invalid_argument("train: bad height");
    for (const auto& c : data.attrs)
        if (c.size() != n) throw std::invalid_argument("train: ragged dataset");

    struct Group {
        u64 node;
        std::vector<std::size_t> rows;
    };
    std::vector<Group> groups;
    Group root;
    root.node = 1;
    root.rows.resize(n);
    std::iota(root.rows.begin(), root.rows.end(), std::size_t(0));
    groups.push_back(std::move(root));

    DecisionTree tree;
    tree.height = height;
    for (int k = 0; k < height; ++k) {
        std::size_t len = std::min<std::size_t>(n, std::size_t(1) << k);
        TreeLayer layer;
        layer.node.assign(len, kNullNode);
        layer.attr.assign(len, 0);
        layer.threshold.assign(len, 0);

        std::vector<Group> falses, trues;
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            const Group& grp = groups[gi];
            bool pure = true;
            for (auto r : grp.rows)
                if (data.labels[r] != data.labels[grp.rows[0]]) {
                    pure = false;
                    break;
                }
            u64 attr = 1;
            i64 thr = kSentinelThreshold;
            if (!pure) {
                BestTest bt = best_test(data, grp.rows);
                attr = bt.attr;
                thr = bt.threshold;
            }
            layer.node[gi] = grp.node;
            layer.attr[gi] = attr;
            layer.threshold[gi] = thr;

            Group f{grp.node, {}}, t{grp.node + (u64(1) << k), {}};
            for (auto r : grp.rows) {
                if (2 * data.attrs[attr - 1][r] < thr) t.rows.push_back(r);
                else f.rows.push_back(r);
            }
            if (!f.rows.empty()) falses.push_back(std::move(f));
            if (!t.rows.empty()) trues.push_back(std::move(t));
        }
        groups = std::move(falses);
        for (auto& t : trues) groups.push_back(std::move(t));
        tree.layers.push_back(std::move(layer));
    }

    std::size_t len = height < 62
                          ? std::min<std::size_t>(n, std::size_t(1) << height)
                          : n;
    TreeLayer leaf;
    leaf.node.assign(len, kNullNode);
    leaf.label.assign(len, 0);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        u64 ones = 0;
        for (auto r : groups[gi].rows) ones += data.labels[r];
        u64 zeros = u64(groups[gi].rows.size()) - ones;
        leaf.node[gi] = groups[gi].node;
        leaf.label[gi] = zeros < ones ? 1 : 0;
    }
    tree.layers.push_back(std::move(leaf));
    return tree;
}

} // namespace secdt::oracle
