#include <doctest.h>

#include <map>
#include <numeric>
#include <thread>

#include "secdt/dtrain.hpp"
#include "secdt/mpc3/sim3.hpp"
#include "secdt/mpc3/transport.hpp"
#include "secdt/oracle.hpp"
#include "test_util.hpp"

using namespace secdt;
using mpc3::run_sim3;

namespace {

// run the body on all parties and return party 0's dec of its result
std::vector<u64> eval3(u64 seed, const std::function<SVec(Abb&)>& fn) {
    std::vector<u64> out;
    run_sim3(RingConfig{}, seed, [&](Abb& abb, int party) {
        auto v = abb.dec(fn(abb));
        if (party == 0) out = v;
    });
    return out;
}

} // namespace

TEST_CASE("share and reveal round trips") {
    u64 M = RingConfig{}.modulus;
    CHECK(eval3(1, [](Abb& a) { return a.enc(std::vector<u64>{42}); }) ==
          std::vector<u64>{42});
    CHECK(eval3(2, [&](Abb& a) { return a.enc(std::vector<u64>{M - 1}); }) ==
          std::vector<u64>{M - 1});
    CHECK(eval3(3, [](Abb& a) { return a.enc(std::vector<u64>{0}); }) ==
          std::vector<u64>{0});
}

TEST_CASE("multiplication") {
    CHECK(eval3(4, [](Abb& a) {
              return a.mul(a.enc(std::vector<u64>{6}),
                           a.enc(std::vector<u64>{7}));
          }) == std::vector<u64>{42});

    // agreement with the clear backend on random pairs
    std::mt19937_64 rng(5);
    std::vector<u64> xs(10000), ys(10000);
    auto ring = RingConfig{};
    for (auto& v : xs) v = rng() % ring.modulus;
    for (auto& v : ys) v = rng() % ring.modulus;
    auto got = eval3(6, [&](Abb& a) { return a.mul(a.enc(xs), a.enc(ys)); });
    for (std::size_t i = 0; i < xs.size(); ++i)
        REQUIRE(got[i] == ring.mul(xs[i], ys[i]));
}

TEST_CASE("comparisons agree with the clear backend") {
    // exhaustive over [-16, 16]^2
    std::vector<i64> as, bs;
    for (i64 a = -16; a <= 16; ++a)
        for (i64 b = -16; b <= 16; ++b) {
            as.push_back(a);
            bs.push_back(b);
        }
    std::vector<u64> lt_got, eq_got;
    run_sim3(RingConfig{}, 7, [&](Abb& abb, int party) {
        auto ea = abb.enc_signed(as);
        auto eb = abb.enc_signed(bs);
        auto l = abb.dec(abb.lt(ea, eb));
        auto e = abb.dec(abb.eq(ea, eb));
        if (party == 0) {
            lt_got = l;
            eq_got = e;
        }
    });
    for (std::size_t i = 0; i < as.size(); ++i) {
        REQUIRE(lt_got[i] == (as[i] < bs[i] ? 1 : 0));
        REQUIRE(eq_got[i] == (as[i] == bs[i] ? 1 : 0));
    }
}

TEST_CASE("comparisons on wide random values") {
    std::mt19937_64 rng(8);
    std::vector<i64> as(500), bs(500);
    for (auto& v : as) v = i64(rng() % (1u << 26)) - (1 << 25);
    for (auto& v : bs) v = i64(rng() % (1u << 26)) - (1 << 25);
    bs[0] = as[0]; // force at least one equality
    std::vector<u64> lt_got, eq_got, eqp_got;
    run_sim3(RingConfig{}, 9, [&](Abb& abb, int party) {
        auto ea = abb.enc_signed(as);
        auto eb = abb.enc_signed(bs);
        auto l = abb.dec(abb.lt(ea, eb));
        auto e = abb.dec(abb.eq(ea, eb));
        auto ep = abb.dec(abb.eq_pub(ea, 12345));
        if (party == 0) {
            lt_got = l;
            eq_got = e;
            eqp_got = ep;
        }
    });
    for (std::size_t i = 0; i < as.size(); ++i) {
        REQUIRE(lt_got[i] == (as[i] < bs[i] ? 1 : 0));
        REQUIRE(eq_got[i] == (as[i] == bs[i] ? 1 : 0));
        REQUIRE(eqp_got[i] == (as[i] == 12345 ? 1 : 0));
    }
}

TEST_CASE("bit decomposition") {
    std::mt19937_64 rng(10);
    std::vector<u64> xs(200);
    for (auto& v : xs) v = rng() % (1 << 24);
    std::vector<std::vector<u64>> planes;
    run_sim3(RingConfig{}, 11, [&](Abb& abb, int party) {
        auto bits = abb.bit_decompose(abb.enc(xs), 24);
        std::vector<std::vector<u64>> mine;
        for (auto& b : bits) mine.push_back(abb.dec(b));
        if (party == 0) planes = std::move(mine);
    });
    REQUIRE(planes.size() == 24);
    for (int j = 0; j < 24; ++j)
        for (std::size_t i = 0; i < xs.size(); ++i)
            REQUIRE(planes[j][i] == ((xs[i] >> j) & 1));
}

TEST_CASE("shuffle is a permutation; backward inverts forward") {
    std::vector<u64> xs = {5, 1, 9, 2, 8, 3, 7, 4};
    std::vector<u64> fwd, back;
    run_sim3(RingConfig{}, 12, [&](Abb& abb, int party) {
        auto sh = abb.shuffler(xs.size());
        auto y = sh->forward(abb.enc(xs));
        auto f = abb.dec(y);
        auto b = abb.dec(sh->backward(y));
        if (party == 0) {
            fwd = f;
            back = b;
        }
    });
    auto sorted = fwd;
    std::sort(sorted.begin(), sorted.end());
    auto expect = xs;
    std::sort(expect.begin(), expect.end());
    CHECK(sorted == expect);
    CHECK(back == xs);
}

TEST_CASE("shuffle distribution over n=3") {
    std::map<std::vector<u64>, int> freq;
    const int trials = 3000;
    run_sim3(RingConfig{}, 13, [&](Abb& abb, int party) {
        for (int t = 0; t < trials; ++t) {
            auto sh = abb.shuffler(3);
            auto out = abb.dec(sh->forward(abb.enc(std::vector<u64>{1, 2, 3})));
            if (party == 0) freq[out] += 1;
        }
    });
    REQUIRE(freq.size() == 6);
    for (const auto& [perm, count] : freq)
        CHECK(std::abs(count / double(trials) - 1.0 / 6) < 0.05);
}

TEST_CASE("rounds: a batched mul wave counts one round") {
    run_sim3(RingConfig{}, 14, [&](Abb& abb, int party) {
        auto x = abb.enc(std::vector<u64>(64, 3));
        u64 r0 = abb.costs().rounds;
        abb.mul(x, x);
        u64 one = abb.costs().rounds - r0;
        auto y = abb.enc(std::vector<u64>{3});
        u64 r1 = abb.costs().rounds;
        abb.mul(y, y);
        if (party == 0) CHECK(abb.costs().rounds - r1 == one);
    });
}

TEST_CASE("nonfree op counts match the clear backend") {
    oracle::PlainDataset d;
    d.attrs = {{1, 7, 3, 9, 4, 4}, {2, 2, 5, 1, 8, 6}};
    d.labels = {0, 1, 0, 1, 1, 0};

    auto run_train = [&](Abb& abb) {
        SecretDataset sd;
        for (const auto& col : d.attrs) sd.attrs.push_back(abb.enc_signed(col));
        sd.labels = abb.enc(d.labels);
        return reveal_tree(abb, train(abb, sd, 2));
    };

    auto clear = testutil::make_clear();
    auto expect_tree = run_train(clear);
    u64 expect_ops = clear.costs().nonfree_ops;

    run_sim3(RingConfig{}, 15, [&](Abb& abb, int party) {
        auto tree = run_train(abb);
        if (party == 0) {
            CHECK(tree == expect_tree);
            CHECK(abb.costs().nonfree_ops == expect_ops);
        }
    });
}

TEST_CASE("training on sim3 matches the oracle") {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 3; ++t) {
        oracle::PlainDataset d;
        std::size_t n = 8 + rng() % 24;
        d.attrs.resize(1 + rng() % 3);
        for (auto& col : d.attrs) {
            col.resize(n);
            for (auto& v : col) v = i64(rng() % 12);
        }
        d.labels.resize(n);
        for (auto& y : d.labels) y = rng() & 1;
        int h = 1 + int(rng() % 2);

        auto expect = oracle::train(d, h);
        run_sim3(RingConfig{}, 17 + u64(t), [&](Abb& abb, int party) {
            SecretDataset sd;
            for (const auto& col : d.attrs)
                sd.attrs.push_back(abb.enc_signed(col));
            sd.labels = abb.enc(d.labels);
            auto tree = reveal_tree(abb, train(abb, sd, h));
            if (party == 0) CHECK(tree == expect);
        });
    }
}

namespace {

// records every ring element received through the wrapped channel
class RecordingChannel : public mpc3::Channel {
public:
    RecordingChannel(mpc3::Channel& inner, std::vector<u64>& log)
        : inner_(inner), log_(log) {}
    void send(std::span<const u64> xs) override { inner_.send(xs); }
    std::vector<u64> recv() override {
        auto msg = inner_.recv();
        log_.insert(log_.end(), msg.begin(), msg.end());
        return msg;
    }
    void close() override { inner_.close(); }

private:
    mpc3::Channel& inner_;
    std::vector<u64>& log_;
};

} // namespace

TEST_CASE("privacy smoke: messages seen by one party look uniform") {
    // frequency test over the transcript party 0 receives during a batch of
    // multiplications and a shuffle (desk-scale sanity, not a proof)
    auto mesh = mpc3::make_local_mesh();
    std::vector<u64> transcript;
    RecordingChannel rec_next(*mesh[0].next, transcript);
    RecordingChannel rec_prev(*mesh[0].prev, transcript);

    auto body = [](mpc3::Mpc3Abb& abb) {
        std::vector<u64> xs(4096);
        for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = i % 97;
        auto x = abb.enc(xs);
        auto y = abb.mul(x, x);
        auto sh = abb.shuffler(xs.size());
        sh->forward(y);
    };
    std::array<std::thread, 2> others;
    for (int p = 1; p <= 2; ++p)
        others[p - 1] = std::thread([&, p] {
            mpc3::Mpc3Abb abb(RingConfig{}, p, *mesh[p].next, *mesh[p].prev,
                              18);
            body(abb);
        });
    mpc3::Mpc3Abb abb0(RingConfig{}, 0, rec_next, rec_prev, 18);
    body(abb0);
    for (auto& t : others) t.join();

    REQUIRE(transcript.size() >= 8192);
    const int bins = 16;
    std::vector<int> freq(bins, 0);
    u64 M = RingConfig{}.modulus;
    for (u64 v : transcript) freq[std::size_t((u128(v) * bins) / M)] += 1;
    double expect = transcript.size() / double(bins);
    double chi2 = 0;
    for (int c : freq) chi2 += (c - expect) * (c - expect) / expect;
    CHECK(chi2 < 37.7); // chi-square(15), p ~ 0.001
}
