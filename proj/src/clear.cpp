#include "secdt/clear.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace secdt {

class ClearShuffler : public Shuffler {
public:
    ClearShuffler(ClearAbb& abb, std::size_t n) : Shuffler(abb, n), perm_(n) {
        std::iota(perm_.begin(), perm_.end(), std::size_t(0));
        std::shuffle(perm_.begin(), perm_.end(), abb.rng_);
    }

protected:
    SVec v_forward(const SVec& x) override {
        auto& clear = static_cast<ClearAbb&>(abb_);
        const auto& in = clear.vals(x);
        std::vector<u64> out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[perm_[i]] = in[i];
        return clear.make(std::move(out));
    }
    SVec v_backward(const SVec& x) override {
        auto& clear = static_cast<ClearAbb&>(abb_);
        const auto& in = clear.vals(x);
        std::vector<u64> out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = in[perm_[i]];
        return clear.make(std::move(out));
    }

private:
    friend class ClearAbb;
    std::vector<std::size_t> perm_;
};

ClearAbb::ClearAbb(RingConfig ring, u64 seed) : Abb(ring), rng_(seed) {
    ring_.validate(/*require_prime=*/false);
}

SVec ClearAbb::v_enc(std::span<const u64> xs) {
    return make(Data(xs.begin(), xs.end()));
}

std::vector<u64> ClearAbb::v_dec(const SVec& a) { return vals(a); }

SVec ClearAbb::v_affine(u64 ca, const SVec* a, u64 cb, const SVec* b, u64 c,
                        std::size_t n) {
    Data out(n, c);
    if (a) {
        const auto& av = vals(*a);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = ring_.add(out[i], ring_.mul(ca, av[i]));
    }
    if (b) {
        const auto& bv = vals(*b);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = ring_.add(out[i], ring_.mul(cb, bv[i]));
    }
    return make(std::move(out));
}

SVec ClearAbb::v_gather(const SVec& a, std::span<const std::size_t> idx) {
    const auto& av = vals(a);
    Data out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) out[i] = av[idx[i]];
    return make(std::move(out));
}

SVec ClearAbb::v_concat(std::span<const SVec> parts) {
    Data out;
    for (const auto& p : parts) {
        const auto& pv = vals(p);
        out.insert(out.end(), pv.begin(), pv.end());
    }
    return make(std::move(out));
}

SVec ClearAbb::v_prefix(const SVec& a, int kind) {
    const auto& av = vals(a);
    std::size_t n = av.size();
    Data out(n);
    switch (kind) {
    case 0: { // prefix_sum
        u64 acc = 0;
        for (std::size_t i = 0; i < n; ++i) out[i] = acc = ring_.add(acc, av[i]);
        break;
    }
    case 1: // prefix_sum_inv
        for (std::size_t i = 0; i < n; ++i)
            out[i] = i == 0 ? av[0] : ring_.sub(av[i], av[i - 1]);
        break;
    case 2: { // prefix_sum_r
        u64 acc = 0;
        for (std::size_t i = n; i-- > 0;) out[i] = acc = ring_.add(acc, av[i]);
        break;
    }
    case 3: // prefix_sum_r_inv
        for (std::size_t i = 0; i < n; ++i)
            out[i] = i + 1 == n ? av[i] : ring_.sub(av[i], av[i + 1]);
        break;
    default:
        throw std::logic_error("bad prefix kind");
    }
    return make(std::move(out));
}

SVec ClearAbb::v_mul(const SVec& a, const SVec& b) {
    const auto& av = vals(a);
    const auto& bv = vals(b);
    Data out(av.size());
    for (std::size_t i = 0; i < av.size(); ++i) out[i] = ring_.mul(av[i], bv[i]);
    return make(std::move(out));
}

void ClearAbb::check_comparable(const SVec& a) const {
    // Comparison needs |x - y| < M/2; enforce each operand below M/4.
    const auto& av = vals(a);
    for (u64 x : av) {
        u64 mag = ring_.is_negative(x) ? ring_.modulus - x : x;
        if (u128(mag) * 4 >= ring_.modulus)
            throw std::domain_error(
                "comparison operand outside the signed payload range");
    }
}

SVec ClearAbb::v_eq(const SVec& a, const SVec& b) {
    check_comparable(a);
    check_comparable(b);
    const auto& av = vals(a);
    const auto& bv = vals(b);
    Data out(av.size());
    for (std::size_t i = 0; i < av.size(); ++i) out[i] = av[i] == bv[i] ? 1 : 0;
    return make(std::move(out));
}

SVec ClearAbb::v_eq_pub(const SVec& a, u64 c) {
    check_comparable(a);
    const auto& av = vals(a);
    Data out(av.size());
    for (std::size_t i = 0; i < av.size(); ++i) out[i] = av[i] == c ? 1 : 0;
    return make(std::move(out));
}

SVec ClearAbb::v_lt(const SVec& a, const SVec& b) {
    check_comparable(a);
    check_comparable(b);
    const auto& av = vals(a);
    const auto& bv = vals(b);
    Data out(av.size());
    for (std::size_t i = 0; i < av.size(); ++i)
        out[i] = ring_.to_signed(av[i]) < ring_.to_signed(bv[i]) ? 1 : 0;
    return make(std::move(out));
}

std::vector<SVec> ClearAbb::v_bits(const SVec& a, int nbits) {
    const auto& av = vals(a);
    for (u64 x : av)
        if (x >> nbits)
            throw std::domain_error("bit_decompose: value exceeds bit width");
    std::vector<SVec> out;
    out.reserve(nbits);
    for (int bit = 0; bit < nbits; ++bit) {
        Data d(av.size());
        for (std::size_t i = 0; i < av.size(); ++i) d[i] = (av[i] >> bit) & 1;
        out.push_back(make(std::move(d)));
    }
    return out;
}

std::unique_ptr<Shuffler> ClearAbb::v_shuffler(std::size_t n) {
    return std::make_unique<ClearShuffler>(*this, n);
}

void ClearAbb::v_check_bits(const SVec& a) {
    for (u64 x : vals(a))
        if (x > 1) throw std::domain_error("expected a secret bit vector");
}

} // namespace secdt
