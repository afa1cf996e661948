#include "secdt/mpc3/engine.hpp"

#include <numeric>
#include <stdexcept>

namespace secdt::mpc3 {

namespace {

// Componentwise share arithmetic (linear, local).
ReplShare s_add(const RingConfig& r, const ReplShare& x, const ReplShare& y) {
    ReplShare z;
    z.a.resize(x.a.size());
    z.b.resize(x.a.size());
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        z.a[i] = r.add(x.a[i], y.a[i]);
        z.b[i] = r.add(x.b[i], y.b[i]);
    }
    return z;
}

ReplShare s_scale(const RingConfig& r, const ReplShare& x, u64 c) {
    ReplShare z;
    z.a.resize(x.a.size());
    z.b.resize(x.a.size());
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        z.a[i] = r.mul(x.a[i], c);
        z.b[i] = r.mul(x.b[i], c);
    }
    return z;
}

// x * c with a per-element public coefficient.
ReplShare s_scale_vec(const RingConfig& r, const ReplShare& x,
                      std::span<const u64> c) {
    ReplShare z;
    z.a.resize(x.a.size());
    z.b.resize(x.a.size());
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        z.a[i] = r.mul(x.a[i], c[i]);
        z.b[i] = r.mul(x.b[i], c[i]);
    }
    return z;
}

void s_add_pub_inplace(const RingConfig& r, int party, ReplShare& x,
                       std::span<const u64> c) {
    // the public constant is folded into share component 0
    if (party == 0)
        for (std::size_t i = 0; i < x.a.size(); ++i)
            x.a[i] = r.add(x.a[i], c[i]);
    else if (party == 2)
        for (std::size_t i = 0; i < x.b.size(); ++i)
            x.b[i] = r.add(x.b[i], c[i]);
}

ReplShare s_concat(const ReplShare& x, const ReplShare& y) {
    ReplShare z = x;
    z.a.insert(z.a.end(), y.a.begin(), y.a.end());
    z.b.insert(z.b.end(), y.b.begin(), y.b.end());
    return z;
}

ReplShare s_slice(const ReplShare& x, std::size_t first, std::size_t count) {
    ReplShare z;
    z.a.assign(x.a.begin() + first, x.a.begin() + first + count);
    z.b.assign(x.b.begin() + first, x.b.begin() + first + count);
    return z;
}

u64 seed_for_pair(u64 seed, int pair) {
    // splitmix64 over (seed, pair)
    u64 z = seed + 0x9e3779b97f4a7c15ull * u64(pair + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

Mpc3Abb::Mpc3Abb(RingConfig ring, int party, Channel& next, Channel& prev,
                 u64 seed)
    : Abb(ring), party_(party), next_(next), prev_(prev) {
    if (party < 0 || party > 2)
        throw std::invalid_argument("party must be 0, 1, or 2");
    ring_.validate(/*require_prime=*/true);
    // The masked comparison machinery needs a Mersenne modulus so that a
    // full-width random bit string is (almost) uniform mod p.
    bits_ = 0;
    u64 m = ring_.modulus;
    while (m) {
        if ((m & 1) == 0)
            throw std::invalid_argument(
                "mpc3 backend requires a Mersenne prime modulus");
        m >>= 1;
        ++bits_;
    }
    rng_next_.seed(seed_for_pair(seed, party_));
    rng_prev_.seed(seed_for_pair(seed, (party_ + 2) % 3));
}

u64 Mpc3Abb::draw(std::mt19937_64& rng) {
    for (;;) {
        u64 v = rng() >> (64 - bits_);
        if (v < ring_.modulus) return v;
    }
}

std::vector<u64> Mpc3Abb::draw_vec(std::mt19937_64& rng, std::size_t n) {
    std::vector<u64> out(n);
    for (auto& v : out) v = draw(rng);
    return out;
}

ReplShare Mpc3Abb::raw_pub(std::span<const u64> xs) const {
    // trivial sharing of a value all parties know: component 0 carries it
    ReplShare s;
    s.a.assign(xs.size(), 0);
    s.b.assign(xs.size(), 0);
    if (party_ == 0) s.a.assign(xs.begin(), xs.end());
    if (party_ == 2) s.b.assign(xs.begin(), xs.end());
    return s;
}

ReplShare Mpc3Abb::raw_zero(std::size_t n) {
    ReplShare s;
    s.a.resize(n);
    s.b.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        u64 sn = draw(rng_next_);
        u64 sp = draw(rng_prev_);
        s.a[i] = ring_.sub(sn, sp);
    }
    return s;
}

std::vector<u64> Mpc3Abb::raw_open(const ReplShare& x) {
    // party i is missing component i+2; both neighbors hold it
    next_.send(x.a);
    prev_.send(x.b);
    auto from_prev = prev_.recv(); // predecessor's first component = s_{i+2}
    auto from_next = next_.recv(); // successor's second component = s_{i+2}
    if (from_prev != from_next)
        throw std::runtime_error("reveal: inconsistent replicated shares");
    costs_.rounds += 1;
    std::vector<u64> out(x.a.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = ring_.add(ring_.add(x.a[i], x.b[i]), from_prev[i]);
    return out;
}

ReplShare Mpc3Abb::raw_mul(const ReplShare& x, const ReplShare& y) {
    std::size_t n = x.a.size();
    ReplShare alpha = raw_zero(n);
    std::vector<u64> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        u64 t = ring_.mul(x.a[i], y.a[i]);
        t = ring_.add(t, ring_.mul(x.a[i], y.b[i]));
        t = ring_.add(t, ring_.mul(x.b[i], y.a[i]));
        z[i] = ring_.add(t, alpha.a[i]);
    }
    prev_.send(z);
    auto zn = next_.recv();
    costs_.rounds += 1;
    costs_.add_info("net.mul_elems", n);
    ReplShare out;
    out.a = std::move(z);
    out.b = std::move(zn);
    return out;
}

ReplShare Mpc3Abb::raw_xor(const ReplShare& x, const ReplShare& y) {
    ReplShare prod = raw_mul(x, y);
    ReplShare sum = s_add(ring_, x, y);
    ReplShare twice = s_scale(ring_, prod, ring_.modulus - 2);
    return s_add(ring_, sum, twice);
}

std::vector<ReplShare> Mpc3Abb::raw_rand_bits(std::size_t count,
                                              std::size_t n) {
    // each bit is the XOR of one bit per pairwise PRG stream, combined in a
    // fixed global pair order so every party multiplies the same sharings.
    // Pair k's bit lives in share component k+1; this party contributes the
    // bits of its own two streams and holds zeros of the third.
    std::size_t total = count * n;
    ReplShare pair[3];
    for (int k = 0; k < 3; ++k) {
        pair[k].a.assign(total, 0);
        pair[k].b.assign(total, 0);
    }
    for (std::size_t i = 0; i < total; ++i) {
        pair[party_].b[i] = rng_next_() & 1;
        pair[(party_ + 2) % 3].a[i] = rng_prev_() & 1;
    }
    ReplShare mixed = raw_xor(raw_xor(pair[0], pair[1]), pair[2]);
    std::vector<ReplShare> out(count);
    for (std::size_t j = 0; j < count; ++j) out[j] = s_slice(mixed, j * n, n);
    return out;
}

std::vector<ReplShare> Mpc3Abb::borrow_prefixes(std::vector<ReplShare> A,
                                                std::vector<ReplShare> B) {
    // Kogge-Stone scan over the affine maps c -> A + B*c, LSB first.
    // Returns c_0..c_k where c_{i+1} is map i applied after maps 0..i-1.
    std::size_t k = A.size();
    std::size_t n = A[0].a.size();
    for (std::size_t d = 1; d < k; d *= 2) {
        // batch every composition of this level into one multiplication wave
        ReplShare lhs, rhs;
        for (std::size_t i = k; i-- > d;) {
            lhs = lhs.a.empty() ? s_concat(B[i], B[i])
                                : s_concat(lhs, s_concat(B[i], B[i]));
            rhs = rhs.a.empty() ? s_concat(A[i - d], B[i - d])
                                : s_concat(rhs, s_concat(A[i - d], B[i - d]));
        }
        ReplShare prod = raw_mul(lhs, rhs);
        std::size_t off = 0;
        for (std::size_t i = k; i-- > d;) {
            A[i] = s_add(ring_, A[i], s_slice(prod, off, n));
            B[i] = s_slice(prod, off + n, n);
            off += 2 * n;
        }
    }
    std::vector<ReplShare> out(k + 1);
    out[0].a.assign(n, 0);
    out[0].b.assign(n, 0);
    for (std::size_t i = 0; i < k; ++i) out[i + 1] = std::move(A[i]);
    return out;
}

SVec Mpc3Abb::v_enc(std::span<const u64> xs) { return make(raw_pub(xs)); }

std::vector<u64> Mpc3Abb::v_dec(const SVec& a) { return raw_open(sh(a)); }

SVec Mpc3Abb::v_affine(u64 ca, const SVec* a, u64 cb, const SVec* b, u64 c,
                       std::size_t n) {
    ReplShare out;
    out.a.assign(n, 0);
    out.b.assign(n, 0);
    if (a) out = s_scale(ring_, sh(*a), ca);
    if (b) out = s_add(ring_, out, s_scale(ring_, sh(*b), cb));
    std::vector<u64> cv(n, c);
    s_add_pub_inplace(ring_, party_, out, cv);
    return make(std::move(out));
}

SVec Mpc3Abb::v_gather(const SVec& a, std::span<const std::size_t> idx) {
    const ReplShare& x = sh(a);
    ReplShare out;
    out.a.resize(idx.size());
    out.b.resize(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        out.a[i] = x.a[idx[i]];
        out.b[i] = x.b[idx[i]];
    }
    return make(std::move(out));
}

SVec Mpc3Abb::v_concat(std::span<const SVec> parts) {
    ReplShare out;
    for (const auto& p : parts) out = s_concat(out, sh(p));
    return make(std::move(out));
}

SVec Mpc3Abb::v_prefix(const SVec& a, int kind) {
    const ReplShare& x = sh(a);
    std::size_t n = x.a.size();
    ReplShare out;
    out.a.resize(n);
    out.b.resize(n);
    auto run = [&](const std::vector<u64>& in, std::vector<u64>& res) {
        switch (kind) {
        case 0: {
            u64 acc = 0;
            for (std::size_t i = 0; i < n; ++i)
                res[i] = acc = ring_.add(acc, in[i]);
            break;
        }
        case 1:
            for (std::size_t i = 0; i < n; ++i)
                res[i] = i == 0 ? in[0] : ring_.sub(in[i], in[i - 1]);
            break;
        case 2: {
            u64 acc = 0;
            for (std::size_t i = n; i-- > 0;)
                res[i] = acc = ring_.add(acc, in[i]);
            break;
        }
        default:
            for (std::size_t i = 0; i < n; ++i)
                res[i] = i + 1 == n ? in[i] : ring_.sub(in[i], in[i + 1]);
        }
    };
    run(x.a, out.a);
    run(x.b, out.b);
    return make(std::move(out));
}

SVec Mpc3Abb::v_mul(const SVec& a, const SVec& b) {
    return make(raw_mul(sh(a), sh(b)));
}

SVec Mpc3Abb::v_eq(const SVec& a, const SVec& b) {
    std::size_t n = a.size();
    ReplShare z = s_add(ring_, sh(a), s_scale(ring_, sh(b), ring_.modulus - 1));

    auto rb = raw_rand_bits(std::size_t(bits_), n);
    ReplShare masked = z;
    for (int j = 0; j < bits_; ++j)
        masked = s_add(ring_, masked, s_scale(ring_, rb[j], u64(1) << j));
    auto m = raw_open(masked);

    // z == 0 iff every bit of m equals the corresponding bit of r. A false
    // negative happens only when r is the all-ones string (prob 2^-61); the
    // acceptance tolerances treat that as negligible.
    std::vector<ReplShare> e(bits_);
    for (int j = 0; j < bits_; ++j) {
        std::vector<u64> mj(n), flip(n);
        for (std::size_t i = 0; i < n; ++i) {
            u64 bit = (m[i] >> j) & 1;
            mj[i] = bit ? 1 : ring_.modulus - 1; // e = r if m_j else 1 - r
            flip[i] = bit ? 0 : 1;
        }
        e[j] = s_scale_vec(ring_, rb[j], mj);
        s_add_pub_inplace(ring_, party_, e[j], flip);
    }
    // product tree, batched per level
    while (e.size() > 1) {
        ReplShare lhs, rhs;
        std::size_t pairs = e.size() / 2;
        for (std::size_t t = 0; t < pairs; ++t) {
            lhs = s_concat(lhs, e[2 * t]);
            rhs = s_concat(rhs, e[2 * t + 1]);
        }
        ReplShare prod = raw_mul(lhs, rhs);
        std::vector<ReplShare> nxt(pairs);
        for (std::size_t t = 0; t < pairs; ++t)
            nxt[t] = s_slice(prod, t * n, n);
        if (e.size() % 2 == 1) nxt.push_back(e.back());
        e = std::move(nxt);
    }
    return make(std::move(e[0]));
}

SVec Mpc3Abb::v_eq_pub(const SVec& a, u64 c) {
    SVec cv = v_affine(0, nullptr, 0, nullptr, c, a.size());
    return v_eq(a, cv);
}

SVec Mpc3Abb::v_lt(const SVec& a, const SVec& b) {
    std::size_t n = a.size();
    // lt(a,b) = sign bit of a-b = LSB(2(a-b)) since p is odd
    ReplShare z = s_add(ring_, sh(a), s_scale(ring_, sh(b), ring_.modulus - 1));
    z = s_scale(ring_, z, 2);

    auto rb = raw_rand_bits(std::size_t(bits_), n);
    ReplShare masked = z;
    for (int j = 0; j < bits_; ++j)
        masked = s_add(ring_, masked, s_scale(ring_, rb[j], u64(1) << j));
    auto m = raw_open(masked);

    // w = [m < r] as bit strings = final borrow of m - r; the borrow
    // recursion c' = A + B*c has public-coefficient affine maps since m is
    // public: A = (1-m_j) r_j, B = r_j (2 m_j - 1) + (1 - m_j).
    std::vector<ReplShare> A(bits_), B(bits_);
    for (int j = 0; j < bits_; ++j) {
        std::vector<u64> ca(n), cb(n), flip(n);
        for (std::size_t i = 0; i < n; ++i) {
            u64 bit = (m[i] >> j) & 1;
            ca[i] = bit ? 0 : 1;
            cb[i] = bit ? 1 : ring_.modulus - 1;
            flip[i] = bit ? 0 : 1;
        }
        A[j] = s_scale_vec(ring_, rb[j], ca);
        B[j] = s_scale_vec(ring_, rb[j], cb);
        s_add_pub_inplace(ring_, party_, B[j], flip);
    }
    // only the final borrow is needed: fold the maps with a binary tree
    while (A.size() > 1) {
        std::size_t pairs = A.size() / 2;
        ReplShare lhs, rhs;
        for (std::size_t t = 0; t < pairs; ++t) {
            // compose map 2t+1 after map 2t: (A1 + B1*A0, B1*B0)
            lhs = s_concat(lhs, s_concat(B[2 * t + 1], B[2 * t + 1]));
            rhs = s_concat(rhs, s_concat(A[2 * t], B[2 * t]));
        }
        ReplShare prod = raw_mul(lhs, rhs);
        std::vector<ReplShare> nA(pairs), nB(pairs);
        for (std::size_t t = 0; t < pairs; ++t) {
            nA[t] = s_add(ring_, A[2 * t + 1], s_slice(prod, 2 * t * n, n));
            nB[t] = s_slice(prod, 2 * t * n + n, n);
        }
        if (A.size() % 2 == 1) {
            nA.push_back(A.back());
            nB.push_back(B.back());
        }
        A = std::move(nA);
        B = std::move(nB);
    }
    ReplShare w = std::move(A[0]);


    // LSB(z) = m_0 XOR r_0 XOR w
    std::vector<u64> c0(n), f0(n);
    for (std::size_t i = 0; i < n; ++i) {
        u64 bit = m[i] & 1;
        c0[i] = bit ? ring_.modulus - 1 : 1; // d0 = m_0 XOR r_0
        f0[i] = bit ? 1 : 0;
    }
    ReplShare d0 = s_scale_vec(ring_, rb[0], c0);
    s_add_pub_inplace(ring_, party_, d0, f0);
    return make(raw_xor(d0, w));
}

std::vector<SVec> Mpc3Abb::v_bits(const SVec& x, int nbits) {
    std::size_t n = x.size();
    auto rb = raw_rand_bits(std::size_t(bits_), n);
    ReplShare masked = sh(x);
    for (int j = 0; j < bits_; ++j)
        masked = s_add(ring_, masked, s_scale(ring_, rb[j], u64(1) << j));
    auto m = raw_open(masked);

    // d = (m - r) mod 2^k via the borrow chain; w = final borrow; then
    // x = (d - w) mod 2^k because p = 2^k - 1.
    std::vector<ReplShare> A(bits_), B(bits_);
    for (int j = 0; j < bits_; ++j) {
        std::vector<u64> ca(n), cb(n), flip(n);
        for (std::size_t i = 0; i < n; ++i) {
            u64 bit = (m[i] >> j) & 1;
            ca[i] = bit ? 0 : 1;
            cb[i] = bit ? 1 : ring_.modulus - 1;
            flip[i] = bit ? 0 : 1;
        }
        A[j] = s_scale_vec(ring_, rb[j], ca);
        B[j] = s_scale_vec(ring_, rb[j], cb);
        s_add_pub_inplace(ring_, party_, B[j], flip);
    }
    auto borrows = borrow_prefixes(std::move(A), std::move(B));
    ReplShare w = borrows[bits_];

    // d_j = m_j XOR r_j XOR borrow_j, batched into one XOR wave
    ReplShare mr, bor;
    for (int j = 0; j < bits_; ++j) {
        std::vector<u64> cj(n), fj(n);
        for (std::size_t i = 0; i < n; ++i) {
            u64 bit = (m[i] >> j) & 1;
            cj[i] = bit ? ring_.modulus - 1 : 1;
            fj[i] = bit ? 1 : 0;
        }
        ReplShare t = s_scale_vec(ring_, rb[j], cj);
        s_add_pub_inplace(ring_, party_, t, fj);
        mr = s_concat(mr, t);
        bor = s_concat(bor, borrows[j]);
    }
    ReplShare d = raw_xor(mr, bor);

    // subtract w: chain of borrows b_0 = w, b_{j+1} = b_j * (1 - d_j),
    // computed as prefix products of [w, 1-d_0, 1-d_1, ...]
    std::vector<ReplShare> chain(bits_);
    chain[0] = w;
    for (int j = 0; j + 1 < bits_; ++j) {
        ReplShare dj = s_slice(d, std::size_t(j) * n, n);
        ReplShare nd = s_scale(ring_, dj, ring_.modulus - 1);
        std::vector<u64> one(n, 1);
        s_add_pub_inplace(ring_, party_, nd, one);
        chain[j + 1] = nd;
    }
    // Kogge-Stone prefix product (inclusive)
    for (std::size_t dstep = 1; dstep < chain.size(); dstep *= 2) {
        ReplShare lhs, rhs;
        for (std::size_t i = chain.size(); i-- > dstep;) {
            lhs = s_concat(lhs, chain[i]);
            rhs = s_concat(rhs, chain[i - dstep]);
        }
        ReplShare prod = raw_mul(lhs, rhs);
        std::size_t off = 0;
        for (std::size_t i = chain.size(); i-- > dstep;) {
            chain[i] = s_slice(prod, off, n);
            off += n;
        }
    }

    // out_j = d_j XOR b_j, batched
    ReplShare dd, bb;
    for (int j = 0; j < nbits; ++j) {
        dd = s_concat(dd, s_slice(d, std::size_t(j) * n, n));
        bb = s_concat(bb, chain[std::size_t(j)]);
    }
    ReplShare outbits = raw_xor(dd, bb);
    std::vector<SVec> out;
    out.reserve(nbits);
    for (int j = 0; j < nbits; ++j)
        out.push_back(make(s_slice(outbits, std::size_t(j) * n, n)));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// permutation drawn identically by both members of a pair stream
std::vector<std::size_t> draw_perm(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t(0));
    for (std::size_t j = n; j-- > 1;)
        std::swap(p[j], p[rng() % (j + 1)]);
    return p;
}

std::vector<u64> permute(const std::vector<u64>& x,
                         const std::vector<std::size_t>& q) {
    std::vector<u64> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[q[i]];
    return out;
}

std::vector<u64> permute_inv(const std::vector<u64>& x,
                             const std::vector<std::size_t>& q) {
    std::vector<u64> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[q[i]] = x[i];
    return out;
}

} // namespace

class Mpc3Shuffler : public Shuffler {
public:
    Mpc3Shuffler(Mpc3Abb& abb, std::size_t n) : Shuffler(abb, n), eng_(abb) {
        // pass a permutes by a permutation known only to parties a and a+1;
        // this party knows the perms of passes `party` and `party - 1`
        perm_as_low_ = draw_perm(eng_.rng_next_, n);
        perm_as_high_ = draw_perm(eng_.rng_prev_, n);
    }

protected:
    SVec v_forward(const SVec& x) override {
        ReplShare cur = eng_.sh(x);
        for (int pass = 0; pass < 3; ++pass) cur = run_pass(cur, pass, false);
        return eng_.make(std::move(cur));
    }
    SVec v_backward(const SVec& x) override {
        ReplShare cur = eng_.sh(x);
        for (int pass = 2; pass >= 0; --pass) cur = run_pass(cur, pass, true);
        return eng_.make(std::move(cur));
    }

private:
    // One resharing pass for pair (pass, pass+1); party pass+2 goes blind.
    ReplShare run_pass(const ReplShare& x, int pass, bool inverse) {
        auto& ring = eng_.ring_;
        int me = eng_.party_;
        std::size_t n = n_;
        ReplShare out;
        eng_.costs_.rounds += 1;
        if (me == pass) {
            const auto& q = perm_as_low_;
            std::vector<u64> r2 = eng_.draw_vec(eng_.rng_prev_, n);
            std::vector<u64> u(n);
            for (std::size_t i = 0; i < n; ++i)
                u[i] = ring.add(x.a[i], x.b[i]);
            u = inverse ? permute_inv(u, q) : permute(u, q);
            std::vector<u64> A(n);
            for (std::size_t i = 0; i < n; ++i) A[i] = ring.sub(u[i], r2[i]);
            eng_.next_.send(A);
            auto B = eng_.next_.recv();
            out.a = std::move(r2);                       // y_me = r2
            out.b.resize(n);                             // y_{me+1} = A + B
            for (std::size_t i = 0; i < n; ++i)
                out.b[i] = ring.add(A[i], B[i]);
        } else if (me == (pass + 1) % 3) {
            const auto& q = perm_as_high_;
            std::vector<u64> r1 = eng_.draw_vec(eng_.rng_next_, n);
            std::vector<u64> v = x.b;                    // x_{pass+2}
            v = inverse ? permute_inv(v, q) : permute(v, q);
            std::vector<u64> B(n);
            for (std::size_t i = 0; i < n; ++i) B[i] = ring.sub(v[i], r1[i]);
            eng_.prev_.send(B);
            auto A = eng_.prev_.recv();
            out.a.resize(n);                             // y_{me} = A + B
            for (std::size_t i = 0; i < n; ++i)
                out.a[i] = ring.add(A[i], B[i]);
            out.b = std::move(r1);                       // y_{pass+2} = r1
        } else {
            // blind party: both new components come from its PRG streams
            out.a = eng_.draw_vec(eng_.rng_prev_, n);    // r1, stream (pass+1, me)
            out.b = eng_.draw_vec(eng_.rng_next_, n);    // r2, stream (me, pass)
        }
        return out;
    }

    Mpc3Abb& eng_;
    std::vector<std::size_t> perm_as_low_;  // pass where I am the lower party
    std::vector<std::size_t> perm_as_high_; // pass where I am the higher party
};

std::unique_ptr<Shuffler> Mpc3Abb::v_shuffler(std::size_t n) {
    return std::make_unique<Mpc3Shuffler>(*this, n);
}

} // namespace secdt::mpc3
