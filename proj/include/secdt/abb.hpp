#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "secdt/cost.hpp"
#include "secdt/ring.hpp"

namespace secdt {

class Abb;

// Opaque, immutable handle to a vector of secret ring elements. Valid only
// against the backend that issued it.
class SVec {
public:
    SVec() = default;
    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }
    bool valid() const { return data_ != nullptr; }

private:
    friend class Abb;
    std::shared_ptr<const void> data_;
    const Abb* owner_ = nullptr;
    std::size_t n_ = 0;
};

// One hidden random permutation, shared across every forward/backward call
// on the same instance.
class Shuffler {
public:
    virtual ~Shuffler() = default;
    SVec forward(const SVec& x);
    SVec backward(const SVec& x);
    std::size_t size() const { return n_; }

protected:
    Shuffler(Abb& abb, std::size_t n) : abb_(abb), n_(n) {}
    virtual SVec v_forward(const SVec& x) = 0;
    virtual SVec v_backward(const SVec& x) = 0;
    Abb& abb_;
    std::size_t n_;
};

// Arithmetic black box: store/reveal/add/mul/eq/lt over Z_M plus the
// derived gates and free linear operations. Metering happens here so every
// backend reports identical non-free-operation counts.
class Abb {
public:
    explicit Abb(RingConfig ring) : ring_(ring) {}
    virtual ~Abb() = default;

    const RingConfig& ring() const { return ring_; }
    CostMeter& costs() { return costs_; }
    const CostMeter& costs() const { return costs_; }

    // -- store / reveal ----------------------------------------------------
    SVec enc(std::span<const u64> xs);
    SVec enc_signed(std::span<const i64> xs);
    SVec constant(std::size_t n, u64 value);
    SVec constant_signed(std::size_t n, i64 value);
    std::vector<u64> dec(const SVec& a);
    std::vector<i64> dec_signed(const SVec& a);

    // -- free linear operations --------------------------------------------
    SVec add(const SVec& a, const SVec& b);
    SVec sub(const SVec& a, const SVec& b);
    SVec neg(const SVec& a);
    SVec add_pub(const SVec& a, u64 c);
    SVec mul_pub(const SVec& a, u64 c);
    // ca*a + cb*b + c, elementwise
    SVec affine(u64 ca, const SVec& a, u64 cb, const SVec& b, u64 c);
    SVec gather(const SVec& a, std::span<const std::size_t> idx);
    SVec concat(std::span<const SVec> parts);
    SVec slice(const SVec& a, std::size_t first, std::size_t count);
    SVec broadcast(const SVec& scalar, std::size_t n);
    SVec prefix_sum(const SVec& a);
    SVec prefix_sum_inv(const SVec& a);
    SVec prefix_sum_r(const SVec& a);
    SVec prefix_sum_r_inv(const SVec& a);

    // -- non-free operations -----------------------------------------------
    SVec mul(const SVec& a, const SVec& b);
    SVec eq(const SVec& a, const SVec& b);
    SVec eq_pub(const SVec& a, u64 c);
    SVec lt(const SVec& a, const SVec& b); // signed order
    // Bits of a (LSB first); requires 0 <= a < 2^nbits.
    std::vector<SVec> bit_decompose(const SVec& a, int nbits);
    std::unique_ptr<Shuffler> shuffler(std::size_t n);

    // -- derived gates (scalar or elementwise vector, scalars broadcast) ----
    SVec or_(const SVec& a, const SVec& b);
    SVec not_(const SVec& a);
    SVec if_else(const SVec& c, const SVec& t, const SVec& f);
    SVec max_(const SVec& a, const SVec& b); // ties return a

    void check_bits(const SVec& a) { v_check_bits(a); }

protected:
    friend class Shuffler;

    virtual SVec v_enc(std::span<const u64> xs) = 0;
    virtual std::vector<u64> v_dec(const SVec& a) = 0;
    virtual SVec v_affine(u64 ca, const SVec* a, u64 cb, const SVec* b,
                          u64 c, std::size_t n) = 0;
    virtual SVec v_gather(const SVec& a, std::span<const std::size_t> idx) = 0;
    virtual SVec v_concat(std::span<const SVec> parts) = 0;
    // kind: 0 prefix_sum, 1 prefix_sum_inv, 2 reverse, 3 reverse_inv
    virtual SVec v_prefix(const SVec& a, int kind) = 0;
    virtual SVec v_mul(const SVec& a, const SVec& b) = 0;
    virtual SVec v_eq(const SVec& a, const SVec& b) = 0;
    virtual SVec v_eq_pub(const SVec& a, u64 c) = 0;
    virtual SVec v_lt(const SVec& a, const SVec& b) = 0;
    virtual std::vector<SVec> v_bits(const SVec& a, int nbits) = 0;
    virtual std::unique_ptr<Shuffler> v_shuffler(std::size_t n) = 0;
    virtual void v_check_bits(const SVec&) {}
    // Called once per metered batch wave; the clear backend counts a round.
    virtual void note_wave() {}

    SVec wrap(std::shared_ptr<const void> data, std::size_t n) const {
        SVec v;
        v.data_ = std::move(data);
        v.owner_ = this;
        v.n_ = n;
        return v;
    }
    template <typename T>
    const T& payload(const SVec& v) const {
        return *static_cast<const T*>(v.data_.get());
    }
    void require_mine(const SVec& a) const;
    void require_same_size(const SVec& a, const SVec& b) const;
    // Broadcast scalars so both operands have equal length.
    void conform(SVec& a, SVec& b);

    RingConfig ring_;
    CostMeter costs_;
};

// Extended Max: payload values at the position of the maximal key; ties go
// to the lowest index. Returns one length-1 vector per payload.
std::vector<SVec> vect_max(Abb& abb, const SVec& keys,
                           std::span<const SVec> payloads);

} // namespace secdt
