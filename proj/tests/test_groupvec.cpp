#include <doctest.h>

#include "secdt/groupvec.hpp"
#include "secdt/oracle.hpp"
#include "test_util.hpp"

using namespace secdt;
using testutil::make_clear;

namespace {

const std::vector<u64> kG = {1, 0, 1, 1, 0, 0};
const std::vector<u64> kX = {3, 1, 2, 2, 3, 2};

} // namespace

TEST_CASE("group_sum fixture") {
    auto abb = make_clear();
    auto y = group_sum(abb, abb.enc(kG), abb.enc(kX));
    CHECK(abb.dec(y) == std::vector<u64>{4, 4, 2, 7, 7, 7});
}

TEST_CASE("group_prefix_sum fixture") {
    auto abb = make_clear();
    auto y = group_prefix_sum(abb, abb.enc(kG), abb.enc(kX));
    CHECK(abb.dec(y) == std::vector<u64>{3, 4, 2, 2, 5, 7});
}

TEST_CASE("group_max fixture") {
    auto abb = make_clear();
    auto y = group_max(abb, abb.enc(kG), abb.enc(kX));
    CHECK(abb.dec(y) == std::vector<u64>{3, 3, 2, 3, 3, 3});
}

TEST_CASE("group ops, trivial shapes") {
    auto abb = make_clear();
    auto ones = abb.constant(5, 1);
    auto x = abb.enc(std::vector<u64>{4, 1, 3, 2, 9});
    CHECK(abb.dec(group_sum(abb, ones, x)) == abb.dec(x));

    auto g1 = abb.enc(std::vector<u64>{1, 0, 0, 0, 0});
    CHECK(abb.dec(group_prefix_sum(abb, g1, x)) == abb.dec(abb.prefix_sum(x)));

    auto single = abb.enc(std::vector<u64>{1});
    CHECK(abb.dec(group_max(abb, single, abb.enc(std::vector<u64>{7}))) ==
          std::vector<u64>{7});
}

TEST_CASE("group_first_one fixtures") {
    auto abb = make_clear();
    auto f = group_first_one(abb, abb.enc(std::vector<u64>{1, 0, 0}),
                             abb.enc(std::vector<u64>{0, 1, 1}));
    CHECK(abb.dec(f) == std::vector<u64>{0, 1, 0});
    f = group_first_one(abb, abb.enc(kG), abb.constant(6, 0));
    CHECK(abb.dec(f) == std::vector<u64>{0, 0, 0, 0, 0, 0});
}

TEST_CASE("group_same fixtures") {
    auto abb = make_clear();
    auto s = group_same(abb, abb.enc(std::vector<u64>{1, 0, 1}),
                        abb.enc(std::vector<u64>{1, 1, 0}));
    CHECK(abb.dec(s) == std::vector<u64>{1, 1, 1});
    s = group_same(abb, abb.enc(std::vector<u64>{1, 0}),
                   abb.enc(std::vector<u64>{0, 1}));
    CHECK(abb.dec(s) == std::vector<u64>{0, 0});
}

TEST_CASE("group_max tie rule: leftmost payload") {
    auto abb = make_clear();
    // keys tie inside one group; payload of the leftmost max must win
    auto g = abb.enc(std::vector<u64>{1, 0, 0, 0});
    SVec cols[] = {abb.enc(std::vector<u64>{5, 9, 9, 2}),
                   abb.enc(std::vector<u64>{10, 20, 30, 40})};
    auto out = group_max_by(abb, g, cols, 1,
                            [](Abb& a, std::span<const SVec> l,
                               std::span<const SVec> r) {
                                return a.lt(l[0], r[0]);
                            });
    CHECK(abb.dec(out[1]) == std::vector<u64>{20, 20, 20, 20});
}

TEST_CASE("group ops vs scan oracle, random n <= 64") {
    auto abb = make_clear();
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng() % 64;
        auto g = testutil::random_flags(rng, n);
        auto x = testutil::random_values(rng, n, 100);
        auto b = testutil::random_bits(rng, n);
        auto y = testutil::random_bits(rng, n);

        auto eg = abb.enc(g);
        auto ex = abb.enc(x);
        CHECK(abb.dec(group_sum(abb, eg, ex)) == oracle::group_sum(g, x));
        CHECK(abb.dec(group_prefix_sum(abb, eg, ex)) ==
              oracle::group_prefix_sum(g, x));
        std::vector<i64> xs(x.begin(), x.end());
        CHECK(abb.dec_signed(group_max(abb, eg, ex)) ==
              oracle::group_max(g, xs));
        CHECK(abb.dec(group_first_one(abb, eg, abb.enc(b))) ==
              oracle::group_first_one(g, b));
        CHECK(abb.dec(group_same(abb, eg, abb.enc(y))) ==
              oracle::group_same(g, y));
    }
}

TEST_CASE("group_sum_multi shares one sort across columns") {
    auto abb = make_clear();
    auto g = abb.enc(kG);
    SVec xs[] = {abb.enc(kX), abb.constant(6, 1)};
    auto out = group_sum_multi(abb, g, xs);
    CHECK(abb.dec(out[0]) == std::vector<u64>{4, 4, 2, 7, 7, 7});
    CHECK(abb.dec(out[1]) == std::vector<u64>{2, 2, 1, 3, 3, 3});
}
