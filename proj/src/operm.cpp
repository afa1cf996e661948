#include "secdt/operm.hpp"

#include <numeric>
#include <stdexcept>

namespace secdt {

namespace {

// Indices (0-based) such that routing x through them realizes z[p[j]-1] = x[j]
// for a revealed destination vector p.
std::vector<std::size_t> inverse_route(const std::vector<u64>& p) {
    std::vector<std::size_t> idx(p.size(), p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] < 1 || p[j] > p.size())
            throw std::runtime_error("revealed permutation out of range");
        if (idx[p[j] - 1] != p.size())
            throw std::runtime_error("revealed permutation has duplicates");
        idx[p[j] - 1] = j;
    }
    return idx;
}

std::vector<std::size_t> forward_route(const std::vector<u64>& p) {
    std::vector<std::size_t> idx(p.size());
    inverse_route(p); // validates
    for (std::size_t j = 0; j < p.size(); ++j) idx[j] = std::size_t(p[j] - 1);
    return idx;
}

// Stable 0s-before-1s destination for one radix pass.
SVec radix_destination(Abb& abb, const SVec& b) {
    std::size_t n = b.size();
    SVec nb = abb.not_(b);
    SVec zeros_before = abb.prefix_sum(nb);
    SVec total_zeros = abb.broadcast(abb.slice(zeros_before, n - 1, 1), n);
    SVec ones_dest = abb.add(total_zeros, abb.prefix_sum(b));
    return abb.if_else(b, ones_dest, zeros_before);
}

} // namespace

PrivatePerm random_perm(Abb& abb, std::size_t n) {
    if (n == 0) throw std::invalid_argument("random_perm: n must be >= 1");
    std::vector<u64> iota(n);
    std::iota(iota.begin(), iota.end(), u64(1));
    auto sh = abb.shuffler(n);
    return PrivatePerm{sh->forward(abb.enc(iota))};
}

std::vector<SVec> apply(Abb& abb, const PrivatePerm& perm,
                        std::span<const SVec> xs) {
    std::size_t n = perm.size();
    for (const auto& x : xs)
        if (x.size() != n) throw std::invalid_argument("apply: length mismatch");
    auto sh = abb.shuffler(n);
    auto p = abb.dec(sh->forward(perm.dest));
    auto route = inverse_route(p);
    std::vector<SVec> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(abb.gather(sh->forward(x), route));
    return out;
}

SVec apply(Abb& abb, const PrivatePerm& perm, const SVec& x) {
    SVec xs[] = {x};
    return apply(abb, perm, xs)[0];
}

std::vector<SVec> apply_inv(Abb& abb, const PrivatePerm& perm,
                            std::span<const SVec> xs) {
    std::size_t n = perm.size();
    for (const auto& x : xs)
        if (x.size() != n)
            throw std::invalid_argument("apply_inv: length mismatch");
    auto sh = abb.shuffler(n);
    auto p = abb.dec(sh->forward(perm.dest));
    auto route = forward_route(p);
    std::vector<SVec> out;
    out.reserve(xs.size());
    for (const auto& x : xs)
        out.push_back(sh->backward(abb.gather(x, route)));
    return out;
}

SVec apply_inv(Abb& abb, const PrivatePerm& perm, const SVec& x) {
    SVec xs[] = {x};
    return apply_inv(abb, perm, xs)[0];
}

PrivatePerm sort_perm(Abb& abb, std::span<const SortKey> keys) {
    if (keys.empty())
        throw std::invalid_argument("sort_perm: at least one key required");
    std::size_t n = keys[0].values.size();
    if (n == 0) throw std::invalid_argument("sort_perm: empty keys");
    for (const auto& k : keys)
        if (k.values.size() != n)
            throw std::invalid_argument("sort_perm: length mismatch");

    // Bit planes in processing order: last key first, LSB first.
    std::vector<SVec> planes;
    for (std::size_t ki = keys.size(); ki-- > 0;) {
        const auto& k = keys[ki];
        if (k.bits == 1) {
            abb.check_bits(k.values);
            planes.push_back(k.values);
        } else {
            auto bits = abb.bit_decompose(k.values, k.bits);
            planes.insert(planes.end(), bits.begin(), bits.end());
        }
    }

    PrivatePerm total;
    for (const auto& plane : planes) {
        if (!total.dest.valid()) {
            total.dest = radix_destination(abb, plane);
            continue;
        }
        // One shuffle session serves both directions: it moves the bit plane
        // into the current order and composes the pass back onto the total.
        auto sh = abb.shuffler(n);
        auto p = abb.dec(sh->forward(total.dest));
        SVec plane_cur = abb.gather(sh->forward(plane), inverse_route(p));
        SVec pass = radix_destination(abb, plane_cur);
        total.dest = sh->backward(abb.gather(pass, forward_route(p)));
    }
    return total;
}

std::vector<SVec> sort_by(Abb& abb, std::span<const SortKey> keys,
                          std::span<const SVec> payloads) {
    PrivatePerm perm = sort_perm(abb, keys);
    return apply(abb, perm, payloads);
}

} // namespace secdt
