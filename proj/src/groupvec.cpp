#include "secdt/groupvec.hpp"

#include <stdexcept>

#include "secdt/operm.hpp"

namespace secdt {

namespace {

void require_grouped(const SVec& g, const SVec& x) {
    if (g.empty()) throw std::invalid_argument("group op: empty input");
    if (g.size() != x.size())
        throw std::invalid_argument("group op: length mismatch");
}

// t[i] = 1 iff i is the last element of its group.
SVec tail_flags(Abb& abb, const SVec& g) {
    std::size_t n = g.size();
    SVec parts[] = {abb.slice(g, 1, n - 1), abb.constant(1, 1)};
    return n == 1 ? abb.constant(1, 1) : abb.concat(parts);
}

} // namespace

std::vector<SVec> group_sum_multi(Abb& abb, const SVec& g,
                                  std::span<const SVec> xs) {
    for (const auto& x : xs) require_grouped(g, x);
    std::size_t n = g.size();
    abb.check_bits(g);

    // Heads of each group carry the reverse prefix sum; sorting them to the
    // front turns per-group sums into adjacent differences.
    SortKey key[] = {{abb.not_(g), 1}};
    PrivatePerm pi = sort_perm(abb, key);

    std::vector<SVec> marked;
    marked.reserve(xs.size());
    for (const auto& x : xs)
        marked.push_back(abb.mul(abb.prefix_sum_r(x), g));
    std::vector<SVec> front = apply(abb, pi, marked);

    std::vector<SVec> spread(front.size());
    for (std::size_t j = 0; j < front.size(); ++j)
        spread[j] = abb.prefix_sum_inv(abb.prefix_sum_r_inv(front[j]));
    std::vector<SVec> back = apply_inv(abb, pi, spread);

    std::vector<SVec> out;
    out.reserve(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j)
        out.push_back(abb.prefix_sum(abb.mul(back[j], g)));
    (void)n;
    return out;
}

SVec group_sum(Abb& abb, const SVec& g, const SVec& x) {
    SVec xs[] = {x};
    return group_sum_multi(abb, g, xs)[0];
}

SVec group_prefix_sum(Abb& abb, const SVec& g, const SVec& x) {
    require_grouped(g, x);
    std::size_t n = x.size();
    SVec s = abb.prefix_sum(x);
    // q holds, at each group head, the running total of all preceding groups.
    SVec q;
    if (n == 1) {
        q = abb.constant(1, 0);
    } else {
        SVec shifted = abb.slice(s, 0, n - 1);
        SVec parts[] = {abb.constant(1, 0),
                        abb.mul(shifted, abb.slice(g, 1, n - 1))};
        q = abb.concat(parts);
    }
    return abb.sub(s, group_sum(abb, g, q));
}

std::vector<SVec> group_max_by(Abb& abb, const SVec& g,
                               std::span<const SVec> cols, std::size_t nkeys,
                               const RowLess& less) {
    if (cols.empty() || nkeys == 0 || nkeys > cols.size())
        throw std::invalid_argument("group_max_by: bad column layout");
    for (const auto& c : cols) require_grouped(g, c);
    std::size_t n = g.size();
    abb.check_bits(g);

    // Doubling windows: work[c][i] holds the leftmost-max row over
    // (i - 2^d, i] intersected with i's group.
    std::vector<SVec> work(cols.begin(), cols.end());
    SVec gw = g;
    for (std::size_t w = 1; w < n; w *= 2) {
        std::size_t cnt = n - w;
        std::vector<std::size_t> hi(cnt), lo(cnt);
        for (std::size_t i = 0; i < cnt; ++i) {
            hi[i] = i + w;
            lo[i] = i;
        }
        std::vector<SVec> left(cols.size()), cur(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            left[c] = abb.gather(work[c], lo);
            cur[c] = abb.gather(work[c], hi);
        }
        SVec take_cur =
            less(abb, std::span<const SVec>(left.data(), nkeys),
                 std::span<const SVec>(cur.data(), nkeys));
        SVec g_hi = abb.gather(gw, hi);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            SVec merged =
                abb.add(left[c], abb.mul(take_cur, abb.sub(cur[c], left[c])));
            // Do not merge across a group head already inside the window.
            SVec kept =
                abb.add(merged, abb.mul(g_hi, abb.sub(cur[c], merged)));
            SVec parts[] = {abb.slice(work[c], 0, w), kept};
            work[c] = abb.concat(parts);
        }
        SVec g_lo = abb.gather(gw, lo);
        SVec g_parts[] = {abb.slice(gw, 0, w), abb.or_(g_lo, g_hi)};
        gw = abb.concat(g_parts);
    }

    // Each group's tail now holds the group max; copy it group-wide.
    SVec t = tail_flags(abb, g);
    std::vector<SVec> tails(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        tails[c] = abb.mul(t, work[c]);
    return group_sum_multi(abb, g, tails);
}

SVec group_max(Abb& abb, const SVec& g, const SVec& x) {
    SVec cols[] = {x};
    auto out = group_max_by(abb, g, cols, 1,
                            [](Abb& a, std::span<const SVec> lhs,
                               std::span<const SVec> rhs) {
                                return a.lt(lhs[0], rhs[0]);
                            });
    return out[0];
}

SVec group_first_one(Abb& abb, const SVec& g, const SVec& b) {
    require_grouped(g, b);
    abb.check_bits(b);
    SVec s = group_prefix_sum(abb, g, b);
    return abb.eq_pub(abb.mul(s, b), 1);
}

SVec group_same(Abb& abb, const SVec& g, const SVec& y) {
    require_grouped(g, y);
    abb.check_bits(y);
    std::size_t n = g.size();
    SVec xs[] = {abb.constant(n, 1), y};
    auto sums = group_sum_multi(abb, g, xs);
    const SVec& size = sums[0];
    const SVec& ones = sums[1];
    SVec zeros = abb.sub(size, ones);
    return abb.or_(abb.eq(size, zeros), abb.eq(size, ones));
}

} // namespace secdt
