#pragma once

#include <random>

#include "secdt/abb.hpp"

namespace secdt {

// Instrumented cleartext ABB. Deterministic given the seed; asserts the
// preconditions the secret-sharing backend cannot check.
class ClearAbb : public Abb {
public:
    explicit ClearAbb(RingConfig ring, u64 seed = 1);

protected:
    SVec v_enc(std::span<const u64> xs) override;
    std::vector<u64> v_dec(const SVec& a) override;
    SVec v_affine(u64 ca, const SVec* a, u64 cb, const SVec* b, u64 c,
                  std::size_t n) override;
    SVec v_gather(const SVec& a, std::span<const std::size_t> idx) override;
    SVec v_concat(std::span<const SVec> parts) override;
    SVec v_prefix(const SVec& a, int kind) override;
    SVec v_mul(const SVec& a, const SVec& b) override;
    SVec v_eq(const SVec& a, const SVec& b) override;
    SVec v_eq_pub(const SVec& a, u64 c) override;
    SVec v_lt(const SVec& a, const SVec& b) override;
    std::vector<SVec> v_bits(const SVec& a, int nbits) override;
    std::unique_ptr<Shuffler> v_shuffler(std::size_t n) override;
    void v_check_bits(const SVec& a) override;
    void note_wave() override { costs_.rounds += 1; }

private:
    friend class ClearShuffler;
    using Data = std::vector<u64>;
    SVec make(Data d) {
        std::size_t n = d.size();
        return wrap(std::make_shared<const Data>(std::move(d)), n);
    }
    const Data& vals(const SVec& v) const { return payload<Data>(v); }
    void check_comparable(const SVec& a) const;

    std::mt19937_64 rng_;
};

} // namespace secdt
