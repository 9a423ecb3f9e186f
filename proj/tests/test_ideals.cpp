#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "clutterlab/ideals.hpp"

using namespace clutterlab;

namespace {

IntVector iv(std::initializer_list<long> xs)
{
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

Clutter triangle() { return Clutter(3, {{0, 1}, {1, 2}, {0, 2}}); }
Clutter four_cycle() { return Clutter(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

// oracle: minimal elements of {a ∈ [0,box]ⁿ : pred(a)} by full box scan
template <typename Pred>
std::vector<IntVector> box_minimal(std::size_t n, long box, Pred pred)
{
    std::vector<IntVector> members;
    std::vector<long> a(n, 0);
    while (true) {
        IntVector v(a.begin(), a.end());
        if (pred(v))
            members.push_back(v);
        std::size_t k = 0;
        while (k < n && a[k] == box)
            a[k++] = 0;
        if (k == n)
            break;
        ++a[k];
    }
    return MonomialIdeal(n, members).gens();
}

Clutter random_clutter(std::mt19937_64& rng, std::size_t n)
{
    std::vector<Mask> sets;
    const std::size_t k = 2 + rng() % 4;
    for (std::size_t i = 0; i < k; ++i) {
        Mask m = 0;
        while (std::popcount(m) < 2)
            m |= Mask(1) << (rng() % n);
        sets.push_back(m);
    }
    return Clutter::minimal_sets(n, sets);
}

} // namespace

TEST_CASE("edge ideals and powers")
{
    CHECK(edge_ideal(triangle()).gens() == std::vector<IntVector>{iv({0, 1, 1}), iv({1, 0, 1}), iv({1, 1, 0})});
    CHECK(edge_ideal(four_cycle()).gens().size() == 4);
    CHECK(edge_ideal(Clutter(3, {{0, 1, 2}})).gens() == std::vector<IntVector>{iv({1, 1, 1})});
    const auto I = edge_ideal(triangle());
    const auto I2 = power(I, 2);
    CHECK(I2.gens().size() == 6);
    for (const auto& g : I2.gens())
        CHECK(g[0] + g[1] + g[2] == 4);
    CHECK(power(I, 1) == I);
    CHECK(power(MonomialIdeal(3, {iv({1, 1, 1})}), 3).gens() == std::vector<IntVector>{iv({3, 3, 3})});
}

TEST_CASE("symbolic powers")
{
    CHECK(symbolic_power(triangle(), 2).gens() ==
          std::vector<IntVector>{iv({0, 2, 2}), iv({1, 1, 1}), iv({2, 0, 2}), iv({2, 2, 0})});
    CHECK(symbolic_power(triangle(), 1) == edge_ideal(triangle()));
    CHECK(symbolic_power(four_cycle(), 2) == power(edge_ideal(four_cycle()), 2));
}

TEST_CASE("closure of powers")
{
    const auto I = edge_ideal(triangle());
    CHECK(closure_power(I, 2) == power(I, 2));
    CHECK_FALSE(closure_power(I, 2).contains(iv({1, 1, 1})));
    CHECK(closure_power(I, 1) == I);
    CHECK(closure_power(MonomialIdeal(2, {iv({2, 0})}), 1).gens() == std::vector<IntVector>{iv({2, 0})});
    // x², y² : closure contains xy
    CHECK(closure_power(MonomialIdeal(2, {iv({2, 0}), iv({0, 2})}), 1).contains(iv({1, 1})));
}

TEST_CASE("membership and equality")
{
    const auto I = edge_ideal(triangle());
    CHECK(equals(I, I));
    CHECK(contains(symbolic_power(triangle(), 2), iv({1, 1, 1})));
    CHECK_FALSE(contains(power(I, 2), iv({1, 1, 1})));
    CHECK_THROWS_AS(equals(I, edge_ideal(four_cycle())), UsageError);
}

TEST_CASE("bounded torsion-freeness and normality")
{
    auto t = is_ntf_upto(triangle(), 3);
    CHECK_FALSE(t.holds);
    CHECK(t.failing_power == 2u);
    CHECK(t.witness == iv({1, 1, 1}));
    CHECK(is_ntf_upto(four_cycle(), 3).holds);
    CHECK(is_ntf_upto(blocker(four_cycle()), 3).holds);

    auto n = is_normal_upto(triangle(), 3);
    CHECK(n.normal.holds);
    CHECK_FALSE(n.closure_symbolic.holds);
    CHECK(n.closure_symbolic.failing_power == 2u);
    auto c = is_normal_upto(four_cycle(), 3);
    CHECK(c.normal.holds);
    CHECK(c.closure_symbolic.holds);
}

TEST_CASE("random clutters: staircases match box oracles and the chain of inclusions holds")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 3 + rng() % 3;
        const auto c = random_clutter(rng, n);
        const auto I = edge_ideal(c);
        const auto covers = blocker(c).characteristic_vectors();
        for (unsigned i = 1; i <= 3; ++i) {
            const auto p = power(I, i);
            const auto cl = closure_power(I, i);
            const auto s = symbolic_power(c, i);
            if (n <= 4 || i <= 2) {
                CHECK(s.gens() == box_minimal(n, i, [&](const IntVector& a) {
                          return std::all_of(covers.begin(), covers.end(), [&](const IntVector& u) {
                              return dot(a, u) >= static_cast<long>(i);
                          });
                      }));
                CHECK(cl.gens() == box_minimal(n, i, [&](const IntVector& a) { return in_closure_power(I, i, a); }));
            }
            for (const auto& g : p.gens())
                CHECK(cl.contains(g));
            for (const auto& g : cl.gens())
                CHECK(s.contains(g));
            // antichains
            for (const auto* J : {&p, &cl, &s})
                for (const auto& a : J->gens())
                    for (const auto& b : J->gens())
                        if (a != b)
                            CHECK_FALSE(std::equal(a.begin(), a.end(), b.begin(),
                                                   [](const Integer& x, const Integer& y) { return x >= y; }));
        }
        CHECK(symbolic_power(c, 1) == I);
        CHECK(closure_power(I, 1) == I);
    }
}
