#include "secdt/abb.hpp"

#include <numeric>
#include <stdexcept>

namespace secdt {

SVec Shuffler::forward(const SVec& x) {
    if (x.size() != n_) throw std::invalid_argument("shuffler: size mismatch");
    abb_.costs().add("shuffle", n_);
    abb_.note_wave();
    return v_forward(x);
}

SVec Shuffler::backward(const SVec& x) {
    if (x.size() != n_) throw std::invalid_argument("shuffler: size mismatch");
    abb_.costs().add("shuffle", n_);
    abb_.note_wave();
    return v_backward(x);
}

void Abb::require_mine(const SVec& a) const {
    if (!a.valid() || a.owner_ != this)
        throw std::invalid_argument("handle does not belong to this backend");
}

void Abb::require_same_size(const SVec& a, const SVec& b) const {
    if (a.size() != b.size())
        throw std::invalid_argument("vector length mismatch");
}

void Abb::conform(SVec& a, SVec& b) {
    require_mine(a);
    require_mine(b);
    if (a.size() == b.size()) return;
    if (a.size() == 1)
        a = broadcast(a, b.size());
    else if (b.size() == 1)
        b = broadcast(b, a.size());
    else
        throw std::invalid_argument("vector length mismatch");
}

SVec Abb::enc(std::span<const u64> xs) {
    std::vector<u64> reduced(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) reduced[i] = ring_.reduce(xs[i]);
    return v_enc(reduced);
}

SVec Abb::enc_signed(std::span<const i64> xs) {
    std::vector<u64> raw(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) raw[i] = ring_.from_signed(xs[i]);
    return v_enc(raw);
}

SVec Abb::constant(std::size_t n, u64 value) {
    std::vector<u64> xs(n, ring_.reduce(value));
    return v_enc(xs);
}

SVec Abb::constant_signed(std::size_t n, i64 value) {
    std::vector<u64> xs(n, ring_.from_signed(value));
    return v_enc(xs);
}

std::vector<u64> Abb::dec(const SVec& a) {
    require_mine(a);
    costs_.add("reveal", a.size());
    note_wave();
    return v_dec(a);
}

std::vector<i64> Abb::dec_signed(const SVec& a) {
    auto raw = dec(a);
    std::vector<i64> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) out[i] = ring_.to_signed(raw[i]);
    return out;
}

SVec Abb::add(const SVec& a, const SVec& b) {
    SVec x = a, y = b;
    conform(x, y);
    return v_affine(1, &x, 1, &y, 0, x.size());
}

SVec Abb::sub(const SVec& a, const SVec& b) {
    SVec x = a, y = b;
    conform(x, y);
    return v_affine(1, &x, ring_.modulus - 1, &y, 0, x.size());
}

SVec Abb::neg(const SVec& a) {
    require_mine(a);
    return v_affine(ring_.modulus - 1, &a, 0, nullptr, 0, a.size());
}

SVec Abb::add_pub(const SVec& a, u64 c) {
    require_mine(a);
    return v_affine(1, &a, 0, nullptr, ring_.reduce(c), a.size());
}

SVec Abb::mul_pub(const SVec& a, u64 c) {
    require_mine(a);
    return v_affine(ring_.reduce(c), &a, 0, nullptr, 0, a.size());
}

SVec Abb::affine(u64 ca, const SVec& a, u64 cb, const SVec& b, u64 c) {
    SVec x = a, y = b;
    conform(x, y);
    return v_affine(ring_.reduce(ca), &x, ring_.reduce(cb), &y, ring_.reduce(c),
                    x.size());
}

SVec Abb::gather(const SVec& a, std::span<const std::size_t> idx) {
    require_mine(a);
    for (std::size_t i : idx)
        if (i >= a.size()) throw std::out_of_range("gather index out of range");
    return v_gather(a, idx);
}

SVec Abb::concat(std::span<const SVec> parts) {
    for (const auto& p : parts) require_mine(p);
    return v_concat(parts);
}

SVec Abb::slice(const SVec& a, std::size_t first, std::size_t count) {
    if (first + count > a.size()) throw std::out_of_range("slice out of range");
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), first);
    return gather(a, idx);
}

SVec Abb::broadcast(const SVec& scalar, std::size_t n) {
    if (scalar.size() != 1)
        throw std::invalid_argument("broadcast expects a length-1 vector");
    std::vector<std::size_t> idx(n, 0);
    return gather(scalar, idx);
}

SVec Abb::prefix_sum(const SVec& a) {
    require_mine(a);
    return v_prefix(a, 0);
}
SVec Abb::prefix_sum_inv(const SVec& a) {
    require_mine(a);
    return v_prefix(a, 1);
}
SVec Abb::prefix_sum_r(const SVec& a) {
    require_mine(a);
    return v_prefix(a, 2);
}
SVec Abb::prefix_sum_r_inv(const SVec& a) {
    require_mine(a);
    return v_prefix(a, 3);
}

SVec Abb::mul(const SVec& a, const SVec& b) {
    SVec x = a, y = b;
    conform(x, y);
    costs_.add("mul", x.size());
    note_wave();
    return v_mul(x, y);
}

SVec Abb::eq(const SVec& a, const SVec& b) {
    SVec x = a, y = b;
    conform(x, y);
    costs_.add("eq", x.size());
    note_wave();
    return v_eq(x, y);
}

SVec Abb::eq_pub(const SVec& a, u64 c) {
    require_mine(a);
    costs_.add("eq", a.size());
    note_wave();
    return v_eq_pub(a, ring_.reduce(c));
}

SVec Abb::lt(const SVec& a, const SVec& b) {
    SVec x = a, y = b;
    conform(x, y);
    costs_.add("lt", x.size());
    note_wave();
    return v_lt(x, y);
}

std::vector<SVec> Abb::bit_decompose(const SVec& a, int nbits) {
    require_mine(a);
    if (nbits < 1 || nbits > ring_.value_bits + 2)
        throw std::invalid_argument("bit_decompose: bad bit count");
    costs_.add("bitdec", a.size() * std::size_t(nbits));
    note_wave();
    return v_bits(a, nbits);
}

std::unique_ptr<Shuffler> Abb::shuffler(std::size_t n) {
    if (n == 0) throw std::invalid_argument("shuffler: empty");
    return v_shuffler(n);
}

SVec Abb::or_(const SVec& a, const SVec& b) {
    v_check_bits(a);
    v_check_bits(b);
    SVec prod = mul(a, b);
    return sub(add(a, b), prod);
}

SVec Abb::not_(const SVec& a) {
    v_check_bits(a);
    return v_affine(ring_.modulus - 1, &a, 0, nullptr, 1, a.size());
}

SVec Abb::if_else(const SVec& c, const SVec& t, const SVec& f) {
    v_check_bits(c);
    SVec tt = t, ff = f;
    conform(tt, ff);
    SVec cc = c;
    if (cc.size() == 1 && tt.size() != 1) cc = broadcast(cc, tt.size());
    return add(ff, mul(cc, sub(tt, ff)));
}

SVec Abb::max_(const SVec& a, const SVec& b) {
    return if_else(lt(a, b), b, a);
}

std::vector<SVec> vect_max(Abb& abb, const SVec& keys,
                           std::span<const SVec> payloads) {
    if (keys.empty()) throw std::invalid_argument("vect_max: empty input");
    for (const auto& p : payloads)
        if (p.size() != keys.size())
            throw std::invalid_argument("vect_max: length mismatch");

    // Left-leaning tournament: adjacent pairs, ties keep the left entry, so
    // the result is the payload of the lowest-index maximum.
    std::vector<SVec> cols;
    cols.push_back(keys);
    for (const auto& p : payloads) cols.push_back(p);

    while (cols[0].size() > 1) {
        std::size_t n = cols[0].size();
        std::size_t pairs = n / 2;
        std::vector<std::size_t> even(pairs), odd(pairs);
        for (std::size_t i = 0; i < pairs; ++i) {
            even[i] = 2 * i;
            odd[i] = 2 * i + 1;
        }
        SVec kl = abb.gather(cols[0], even);
        SVec kr = abb.gather(cols[0], odd);
        SVec take_right = abb.lt(kl, kr);
        std::vector<SVec> next(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            SVec left = abb.gather(cols[c], even);
            SVec right = abb.gather(cols[c], odd);
            SVec merged = abb.add(left, abb.mul(take_right, abb.sub(right, left)));
            if (n % 2 == 1) {
                SVec last = abb.slice(cols[c], n - 1, 1);
                SVec both[] = {merged, last};
                merged = abb.concat(both);
            }
            next[c] = merged;
        }
        cols = std::move(next);
    }
    return std::vector<SVec>(cols.begin() + 1, cols.end());
}

} // namespace secdt
