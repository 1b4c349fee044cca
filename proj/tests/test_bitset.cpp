#include "doctest.h"

#include <random>
#include <set>

#include "pso/bitset.hpp"

using pso::DynamicBitset;

TEST_CASE("bitset basics across word boundaries") {
    DynamicBitset b(130);
    CHECK(b.size() == 130);
    CHECK(b.none());
    CHECK(b.count() == 0);

    b.set(0);
    b.set(63);
    b.set(64);
    b.set(129);
    CHECK(b.any());
    CHECK(b.count() == 4);
    CHECK(b.test(63));
    CHECK(b.test(64));
    CHECK_FALSE(b.test(1));

    b.reset(63);
    CHECK_FALSE(b.test(63));
    CHECK(b.count() == 3);
    CHECK(b.to_vector() == std::vector<int>{0, 64, 129});
}

TEST_CASE("bitset set algebra matches std::set on random data") {
    std::mt19937_64 rng(42);
    const std::size_t n = 97;
    for (int round = 0; round < 50; ++round) {
        DynamicBitset a(n), b(n);
        std::set<int> sa, sb;
        for (std::size_t i = 0; i < n; ++i) {
            if (rng() % 3 == 0) { a.set(i); sa.insert(static_cast<int>(i)); }
            if (rng() % 3 == 0) { b.set(i); sb.insert(static_cast<int>(i)); }
        }

        DynamicBitset u = a;
        u |= b;
        std::set<int> su = sa;
        su.insert(sb.begin(), sb.end());
        CHECK(u.to_vector() == std::vector<int>(su.begin(), su.end()));

        DynamicBitset inter = a;
        inter &= b;
        std::vector<int> si;
        for (int x : sa)
            if (sb.count(x)) si.push_back(x);
        CHECK(inter.to_vector() == si);

        DynamicBitset diff = a;
        diff.subtract(b);
        std::vector<int> sd;
        for (int x : sa)
            if (!sb.count(x)) sd.push_back(x);
        CHECK(diff.to_vector() == sd);

        CHECK(inter.any() == a.intersects(b));
        CHECK(diff.is_subset_of(a));
        CHECK(inter.is_subset_of(a));
        CHECK(inter.is_subset_of(b));
        bool subset = true;
        for (int x : sa)
            if (!sb.count(x)) subset = false;
        CHECK(a.is_subset_of(b) == subset);
    }
}

TEST_CASE("bitset for_each visits ascending") {
    DynamicBitset b(70);
    b.set(5);
    b.set(64);
    b.set(69);
    std::vector<std::size_t> seen;
    b.for_each([&](std::size_t i) { seen.push_back(i); });
    CHECK(seen == std::vector<std::size_t>{5, 64, 69});
}

TEST_CASE("bitset equality is value equality") {
    DynamicBitset a(10), b(10);
    a.set(3);
    b.set(3);
    CHECK(a == b);
    b.set(4);
    CHECK_FALSE(a == b);
}
