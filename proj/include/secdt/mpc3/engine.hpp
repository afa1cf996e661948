#pragma once

#include <random>

#include "secdt/abb.hpp"
#include "secdt/mpc3/transport.hpp"

namespace secdt::mpc3 {

// Replicated 2-out-of-3 sharing: party i holds components (s_i, s_{i+1}) with
// s_0 + s_1 + s_2 = x (mod p). One engine instance is one party; all three
// run the same deterministic sequence of ABB calls.
struct ReplShare {
    std::vector<u64> a; // s_i
    std::vector<u64> b; // s_{i+1}
};

class Mpc3Abb : public Abb {
public:
    // `seed` must be identical on all parties; it seeds the pairwise PRG
    // streams for zero sharings, shared bits, and shuffle permutations.
    Mpc3Abb(RingConfig ring, int party, Channel& next, Channel& prev,
            u64 seed);

    int party() const { return party_; }

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

private:
    friend class Mpc3Shuffler;

    SVec make(ReplShare s) {
        std::size_t n = s.a.size();
        return wrap(std::make_shared<const ReplShare>(std::move(s)), n);
    }
    const ReplShare& sh(const SVec& v) const { return payload<ReplShare>(v); }

    u64 draw(std::mt19937_64& rng);                // uniform in [0, p)
    std::vector<u64> draw_vec(std::mt19937_64& rng, std::size_t n);

    // protocol internals; these do not touch the public cost meter
    ReplShare raw_pub(std::span<const u64> xs) const;
    ReplShare raw_zero(std::size_t n);             // fresh sharing of 0
    std::vector<u64> raw_open(const ReplShare& x); // with consistency check
    ReplShare raw_mul(const ReplShare& x, const ReplShare& y);
    ReplShare raw_xor(const ReplShare& x, const ReplShare& y);
    std::vector<ReplShare> raw_rand_bits(std::size_t count, std::size_t n);
    // all prefixes of the borrow recursion c' = A + B*c, c_0 = 0 (Kogge-Stone)
    std::vector<ReplShare> borrow_prefixes(std::vector<ReplShare> A,
                                           std::vector<ReplShare> B);

    int party_;
    Channel& next_;
    Channel& prev_;
    std::mt19937_64 rng_next_; // stream of pair (i, i+1)
    std::mt19937_64 rng_prev_; // stream of pair (i-1, i)
    int bits_;                 // bit length of p
};

} // namespace secdt::mpc3
