#include "secdt/dtrain.hpp"

#include <bit>
#include <stdexcept>

#include <json.hpp>

#include "secdt/groupvec.hpp"
#include "secdt/operm.hpp"

namespace secdt {

namespace {

int bits_for_count(std::size_t n) {
    // prefix_sum(g) takes values in [1, n]
    return std::max(1, int(std::bit_width(u64(n))));
}

void check_score_guard(const RingConfig& ring, std::size_t n) {
    // scores satisfy p <= uw(u+w) <= n^3/4 and q = uw <= n^2/4, so frac_lt
    // cross products stay below n^5/16; comparisons need 4x headroom, kept
    // here with another factor of 2 to spare
    u128 bound = 1;
    for (int i = 0; i < 5; ++i) {
        bound *= n;
        if (bound > (u128(1) << 100))
            throw std::invalid_argument("dataset too large for score ring");
    }
    if (bound >= 2 * u128(ring.modulus))
        throw std::invalid_argument(
            "score overflow guard failed: need n^5 < 2*modulus");
}

} // namespace

SVec frac_lt(Abb& abb, const ScoreVec& a, const ScoreVec& b) {
    return abb.lt(abb.mul(a.p, b.q), abb.mul(b.p, a.q));
}

ScoreVec modified_gini(Abb& abb, const SVec& g, const SVec& y) {
    abb.check_bits(y);
    SVec y1 = y;
    SVec y0 = abb.not_(y);
    SVec u0 = group_prefix_sum(abb, g, y0);
    SVec u1 = group_prefix_sum(abb, g, y1);
    SVec totals[] = {y0, y1};
    auto sums = group_sum_multi(abb, g, totals);
    SVec w0 = abb.sub(sums[0], u0);
    SVec w1 = abb.sub(sums[1], u1);
    SVec u = abb.add(u0, u1);
    SVec w = abb.add(w0, w1);
    SVec usq = abb.add(abb.mul(u0, u0), abb.mul(u1, u1));
    SVec wsq = abb.add(abb.mul(w0, w0), abb.mul(w1, w1));
    ScoreVec s;
    s.p = abb.add(abb.mul(w, usq), abb.mul(u, wsq));
    s.q = abb.mul(u, w);
    return s;
}

SplitResult attributewise_split(Abb& abb, const SVec& g, const SVec& x,
                                const SVec& y) {
    std::size_t n = g.size();
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("attributewise_split: length mismatch");

    ScoreVec s = modified_gini(abb, g, y);

    SVec t, invalid;
    if (n == 1) {
        t = abb.constant_signed(1, kSentinelThreshold);
        invalid = abb.constant(1, 1);
    } else {
        SVec lo = abb.slice(x, 0, n - 1);
        SVec hi = abb.slice(x, 1, n - 1);
        SVec t_parts[] = {abb.add(lo, hi),
                          abb.constant_signed(1, kSentinelThreshold)};
        t = abb.concat(t_parts);
        // A position cannot split if it is last in its group or if the next
        // element has the same attribute value.
        SVec g_next = abb.slice(g, 1, n - 1);
        SVec inv_parts[] = {abb.or_(g_next, abb.eq(lo, hi)),
                            abb.constant(1, 1)};
        invalid = abb.concat(inv_parts);
    }

    SVec sp = abb.if_else(invalid, abb.constant_signed(n, -1), s.p);
    SVec sq = abb.if_else(invalid, abb.constant(n, 1), s.q);
    t = abb.if_else(invalid, abb.constant_signed(n, kSentinelThreshold), t);

    SVec cols[] = {sp, sq, t};
    auto best = group_max_by(
        abb, g, cols, 2,
        [](Abb& a, std::span<const SVec> lhs, std::span<const SVec> rhs) {
            return frac_lt(a, ScoreVec{lhs[0], lhs[1]},
                           ScoreVec{rhs[0], rhs[1]});
        });
    return SplitResult{best[2], ScoreVec{best[0], best[1]}};
}

TestSelection split_u(Abb& abb, const SecretDataset& data, const SVec& g) {
    std::size_t m = data.cols();
    std::size_t n = data.rows();
    if (m == 0) throw std::invalid_argument("split_u: no attributes");
    check_score_guard(abb.ring(), n);

    SVec pg = abb.prefix_sum(g);
    int pg_bits = bits_for_count(n);
    int val_bits = abb.ring().value_bits;

    std::vector<SplitResult> per_attr;
    per_attr.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        SortKey keys[] = {{pg, pg_bits}, {data.attrs[j], val_bits}};
        SVec payloads[] = {data.attrs[j], data.labels};
        auto sorted = sort_by(abb, keys, payloads);
        per_attr.push_back(attributewise_split(abb, g, sorted[0], sorted[1]));
    }

    // Per-element tournament across attributes; ties keep the lower index.
    struct Entry {
        ScoreVec s;
        SVec attr;
        SVec thr;
    };
    std::vector<Entry> entries;
    entries.reserve(m);
    for (std::size_t j = 0; j < m; ++j)
        entries.push_back(Entry{per_attr[j].score, abb.constant(n, j + 1),
                                per_attr[j].threshold});
    while (entries.size() > 1) {
        std::vector<Entry> next;
        for (std::size_t j = 0; j + 1 < entries.size(); j += 2) {
            const Entry& l = entries[j];
            const Entry& r = entries[j + 1];
            SVec c = frac_lt(abb, l.s, r.s);
            Entry e;
            e.s.p = abb.add(l.s.p, abb.mul(c, abb.sub(r.s.p, l.s.p)));
            e.s.q = abb.add(l.s.q, abb.mul(c, abb.sub(r.s.q, l.s.q)));
            e.attr = abb.add(l.attr, abb.mul(c, abb.sub(r.attr, l.attr)));
            e.thr = abb.add(l.thr, abb.mul(c, abb.sub(r.thr, l.thr)));
            next.push_back(std::move(e));
        }
        if (entries.size() % 2 == 1) next.push_back(entries.back());
        entries = std::move(next);
    }
    return TestSelection{entries[0].attr, entries[0].thr};
}

SVec eval_tests(Abb& abb, std::span<const SVec> attrs, const SVec& attr_idx,
                const SVec& threshold) {
    if (attrs.empty()) throw std::invalid_argument("eval: no attributes");
    SVec selected;
    for (std::size_t j = 0; j < attrs.size(); ++j) {
        SVec part = abb.mul(abb.eq_pub(attr_idx, j + 1), attrs[j]);
        selected = selected.valid() ? abb.add(selected, part) : part;
    }
    return abb.lt(abb.mul_pub(selected, 2), threshold);
}

std::vector<SVec> shrink(Abb& abb, int k, const SVec& g,
                         std::span<const SVec> vecs) {
    std::size_t n = g.size();
    std::vector<SVec> heads;
    heads.reserve(vecs.size());
    for (const auto& v : vecs) heads.push_back(abb.mul(g, v)); // NULL = 0
    SortKey key[] = {{abb.not_(g), 1}};
    auto sorted = sort_by(abb, key, heads);
    std::size_t len = k < 62 && (u64(1) << k) < n ? std::size_t(u64(1) << k) : n;
    for (auto& v : sorted) v = abb.slice(v, 0, len);
    return sorted;
}

InternalLayerResult train_internal_nodes(Abb& abb, int k,
                                         const SecretDataset& data,
                                         const SVec& g, const SVec& node) {
    std::size_t n = data.rows();
    TestSelection sel = split_u(abb, data, g);
    SVec same = group_same(abb, g, data.labels);
    // A pure node becomes a forwarder with an always-false test.
    SVec attr = abb.if_else(same, abb.constant(n, 1), sel.attr);
    SVec thr = abb.if_else(same, abb.constant_signed(n, kSentinelThreshold),
                           sel.threshold);
    SVec b = eval_tests(abb, data.attrs, attr, thr);
    SVec vecs[] = {node, attr, thr};
    auto shrunk = shrink(abb, k, g, vecs);
    InternalLayerResult out;
    out.layer.node = shrunk[0];
    out.layer.attr = shrunk[1];
    out.layer.threshold = shrunk[2];
    out.branch = b;
    return out;
}

SecretLayer train_leaf_nodes(Abb& abb, int h, const SVec& g, const SVec& y,
                             const SVec& node) {
    SVec counts[] = {abb.not_(y), y};
    auto sums = group_sum_multi(abb, g, counts);
    SVec label = abb.lt(sums[0], sums[1]); // ties -> 0
    SVec vecs[] = {node, label};
    auto shrunk = shrink(abb, h, g, vecs);
    SecretLayer out;
    out.node = shrunk[0];
    out.label = shrunk[1];
    return out;
}

SecretTree train(Abb& abb, const SecretDataset& data, int height) {
    std::size_t n = data.rows();
    if (n == 0) throw std::invalid_argument("train: empty dataset");
    if (data.cols() == 0) throw std::invalid_argument("train: no attributes");
    if (height < 0) throw std::invalid_argument("train: height must be >= 0");
    if (height > 40 || (u128(1) << (height + 1)) >= abb.ring().modulus)
        throw std::invalid_argument("train: height too large for the ring");
    for (const auto& a : data.attrs)
        if (a.size() != n) throw std::invalid_argument("train: ragged dataset");
    check_score_guard(abb.ring(), n);

    std::vector<u64> g0(n, 0);
    g0[0] = 1;
    SVec g = abb.enc(g0);
    SVec node = abb.constant(n, 1);
    SecretDataset cur = data;

    SecretTree tree;
    tree.height = height;
    for (int k = 0; k < height; ++k) {
        auto res = train_internal_nodes(abb, k, cur, g, node);
        tree.layers.push_back(res.layer);

        SVec next_node = abb.add(abb.mul_pub(res.branch, u64(1) << k), node);
        SVec next_g = abb.add(group_first_one(abb, g, abb.not_(res.branch)),
                              group_first_one(abb, g, res.branch));

        SortKey key[] = {{res.branch, 1}};
        std::vector<SVec> payloads = cur.attrs;
        payloads.push_back(cur.labels);
        payloads.push_back(next_g);
        payloads.push_back(next_node);
        auto sorted = sort_by(abb, key, payloads);
        for (std::size_t j = 0; j < cur.attrs.size(); ++j)
            cur.attrs[j] = sorted[j];
        cur.labels = sorted[cur.attrs.size()];
        g = sorted[cur.attrs.size() + 1];
        node = sorted[cur.attrs.size() + 2];
    }
    tree.layers.push_back(train_leaf_nodes(abb, height, g, cur.labels, node));
    return tree;
}

DecisionTree reveal_tree(Abb& abb, const SecretTree& tree) {
    DecisionTree out;
    out.height = tree.height;
    out.layers.resize(tree.layers.size());
    for (std::size_t k = 0; k < tree.layers.size(); ++k) {
        const auto& sl = tree.layers[k];
        auto& tl = out.layers[k];
        tl.node = abb.dec(sl.node);
        if (int(k) < tree.height) {
            tl.attr = abb.dec(sl.attr);
            tl.threshold = abb.dec_signed(sl.threshold);
        } else {
            tl.label = abb.dec(sl.label);
        }
    }
    return out;
}

std::string DecisionTree::to_json() const {
    nlohmann::ordered_json j;
    j["height"] = height;
    j["layers"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < layers.size(); ++k) {
        nlohmann::ordered_json l;
        l["k"] = k;
        l["node"] = layers[k].node;
        if (int(k) < height) {
            l["attr"] = layers[k].attr;
            l["threshold"] = layers[k].threshold;
        } else {
            l["label"] = layers[k].label;
        }
        j["layers"].push_back(std::move(l));
    }
    return j.dump(2) + "\n";
}

DecisionTree DecisionTree::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    DecisionTree out;
    out.height = j.at("height").get<int>();
    for (const auto& l : j.at("layers")) {
        TreeLayer layer;
        layer.node = l.at("node").get<std::vector<u64>>();
        if (l.contains("attr")) {
            layer.attr = l.at("attr").get<std::vector<u64>>();
            layer.threshold = l.at("threshold").get<std::vector<i64>>();
        } else {
            layer.label = l.at("label").get<std::vector<u64>>();
        }
        out.layers.push_back(std::move(layer));
    }
    if (out.layers.size() != std::size_t(out.height) + 1)
        throw std::runtime_error("malformed tree: layer count mismatch");
    return out;
}

u64 predict(const DecisionTree& tree, std::span<const i64> row) {
    u64 d = 1;
    for (int k = 0; k < tree.height; ++k) {
        const auto& layer = tree.layers[k];
        bool found = false;
        for (std::size_t i = 0; i < layer.node.size(); ++i) {
            if (layer.node[i] != d) continue;
            u64 a = layer.attr[i];
            if (a < 1 || a > row.size())
                throw std::runtime_error("malformed tree: bad attribute index");
            if (2 * row[a - 1] < layer.threshold[i]) d += u64(1) << k;
            found = true;
            break;
        }
        if (!found)
            throw std::runtime_error("malformed tree: node number not found");
    }
    const auto& leaf = tree.layers[tree.height];
    for (std::size_t i = 0; i < leaf.node.size(); ++i)
        if (leaf.node[i] == d) return leaf.label[i];
    throw std::runtime_error("malformed tree: leaf node not found");
}

} // namespace secdt
