#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "clutterlab/lattice.hpp"

using namespace clutterlab;

namespace {

IntVector iv(std::initializer_list<long> xs)
{
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

// lifted columns (v_i, 1) of the clique clutter of the line graph of K_{2,4}
std::vector<IntVector> line_k24_lifted()
{
    return {iv({1, 1, 1, 1, 0, 0, 0, 0, 1}), iv({0, 0, 0, 0, 1, 1, 1, 1, 1}), iv({1, 0, 0, 0, 1, 0, 0, 0, 1}),
            iv({0, 1, 0, 0, 0, 1, 0, 0, 1}), iv({0, 0, 1, 0, 0, 0, 1, 0, 1}), iv({0, 0, 0, 1, 0, 0, 0, 1, 1})};
}

// oracle: exhaustive search over coefficient vectors with a common degree bound
bool brute_member(const IntVector& a, const std::vector<IntVector>& H, int max_coeff)
{
    std::vector<int> c(H.size(), 0);
    while (true) {
        IntVector s(a.size(), 0);
        for (std::size_t j = 0; j < H.size(); ++j)
            for (std::size_t i = 0; i < a.size(); ++i)
                s[i] += c[j] * H[j][i];
        if (s == a)
            return true;
        std::size_t k = 0;
        while (k < c.size() && c[k] == max_coeff)
            c[k++] = 0;
        if (k == c.size())
            return false;
        ++c[k];
    }
}

void check_combination(const IntVector& a, const std::vector<IntVector>& H, const Membership& m)
{
    REQUIRE(m.member);
    IntVector s(a.size(), 0);
    for (std::size_t j = 0; j < H.size(); ++j) {
        CHECK(m.coefficients[j] >= 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            s[i] += m.coefficients[j] * H[j][i];
    }
    CHECK(s == a);
}

} // namespace

TEST_CASE("hilbert basis examples")
{
    CHECK(hilbert_basis(ConeWithLattice({iv({1, 0}), iv({0, 1})}, 2)) == std::vector<IntVector>{iv({0, 1}), iv({1, 0})});
    CHECK(hilbert_basis(ConeWithLattice({iv({1, 0}), iv({1, 2})}, 2)) ==
          std::vector<IntVector>{iv({1, 0}), iv({1, 1}), iv({1, 2})});
    CHECK(hilbert_basis(ConeWithLattice({iv({1, 2}), iv({2, 1})}, 2)) ==
          std::vector<IntVector>{iv({1, 1}), iv({1, 2}), iv({2, 1})});

    auto hb = hilbert_basis(ConeWithLattice(line_k24_lifted(), 9));
    CHECK(std::find(hb.begin(), hb.end(), iv({1, 1, 1, 1, 1, 1, 1, 1, 3})) != hb.end());
    CHECK(hb.size() == 7);

    CHECK_THROWS_AS(hilbert_basis(ConeWithLattice({iv({1, 0}), iv({-1, 0})}, 2)), UsageError);
}

TEST_CASE("semigroup membership")
{
    auto m = semigroup_member(iv({2, 3}), {iv({1, 0}), iv({0, 1})});
    check_combination(iv({2, 3}), {iv({1, 0}), iv({0, 1})}, m);
    CHECK(m.coefficients == iv({2, 3}));
    CHECK_FALSE(semigroup_member(iv({1, 1}), {iv({1, 0}), iv({1, 2})}).member);
    CHECK_FALSE(semigroup_member(iv({1, 1, 1, 1, 1, 1, 1, 1, 3}), line_k24_lifted()).member);
    CHECK(brute_member(iv({1, 1, 1, 1, 1, 1, 1, 1, 3}), line_k24_lifted(), 3) == false);

    // cones with lineality
    std::vector<IntVector> H{iv({1, 0}), iv({-1, 0}), iv({0, 1})};
    auto r = semigroup_member(iv({-3, 2}), H);
    check_combination(iv({-3, 2}), H, r);
    std::vector<IntVector> G{iv({2, 0}), iv({-2, 0}), iv({0, 1})};
    CHECK_FALSE(semigroup_member(iv({1, 1}), G).member);
    CHECK(semigroup_member(iv({4, 1}), G).member);
    CHECK_FALSE(semigroup_member(iv({0, -1}), G).member);
}

TEST_CASE("is_hilbert_basis examples")
{
    CHECK(is_hilbert_basis({iv({1, 0}), iv({0, 1})}, 2).verdict);
    auto r = is_hilbert_basis({iv({1, 0}), iv({1, 2})}, 2);
    CHECK_FALSE(r.verdict);
    CHECK(r.missing == std::vector<IntVector>{iv({1, 1})});
    CHECK(is_hilbert_basis({iv({1, 1, 0, 1}), iv({0, 1, 1, 1}), iv({1, 0, 1, 1})}, 4).verdict);

    auto e = is_hilbert_basis(line_k24_lifted(), 9);
    CHECK_FALSE(e.verdict);
    CHECK(e.missing == std::vector<IntVector>{iv({1, 1, 1, 1, 1, 1, 1, 1, 3})});

    // lineality
    CHECK(is_hilbert_basis({iv({1, 0}), iv({-1, 0}), iv({0, 1})}, 2).verdict);
    CHECK_FALSE(is_hilbert_basis({iv({2, 0}), iv({-2, 0}), iv({0, 1})}, 2).verdict);
    CHECK_FALSE(is_hilbert_basis({iv({1, 0}), iv({-1, 0}), iv({1, 2})}, 2).verdict);
    CHECK(is_hilbert_basis({iv({1, 1}), iv({-1, -1}), iv({1, 0}), iv({0, 1})}, 2).verdict);
    CHECK(is_hilbert_basis({iv({1, 0}), iv({0, 1}), iv({-1, -1})}, 2).verdict);
    CHECK(is_hilbert_basis({iv({1, 2}), iv({2, 1}), iv({-1, -1})}, 2).verdict);
    CHECK_FALSE(is_hilbert_basis({iv({1, 2}), iv({2, 1}), iv({-3, -3})}, 2).verdict);
    // the counterexample system A = (1), w = 2 lifted with −e_1
    CHECK_FALSE(is_hilbert_basis({iv({1, 2}), iv({-1, 0})}, 2).verdict);
}

TEST_CASE("random cones: irreducibility, closure and self-consistency")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 2 + rng() % 2;
        const std::size_t q = 2 + rng() % 3;
        std::vector<IntVector> H;
        for (std::size_t j = 0; j < q; ++j) {
            IntVector h(d);
            for (auto& x : h)
                x = static_cast<long>(rng() % 4);
            if (!is_zero(h))
                H.push_back(h);
        }
        if (H.empty())
            continue;
        ConeWithLattice cone(H, d);
        REQUIRE(cone.pointed());
        const auto hb = hilbert_basis(cone);
        const std::set<IntVector> hbset(hb.begin(), hb.end());
        for (const auto& h : hb) {
            CHECK(cone.contains(h));
            for (const auto& g : hb) {
                IntVector s(d);
                for (std::size_t i = 0; i < d; ++i)
                    s[i] = h[i] + g[i];
                CHECK(hbset.count(s) == 0);
            }
        }
        // every cone lattice point with coordinate sum ≤ 6 is an ℕ-combination of the basis
        std::vector<long> x(d, 0);
        while (true) {
            IntVector v(x.begin(), x.end());
            long sum = 0;
            for (auto c : x)
                sum += c;
            if (sum <= 6 && cone.contains(v)) {
                CHECK(semigroup_member(v, hb).member);
                CHECK(semigroup_member(v, H).member == brute_member(v, H, 6));
            }
            std::size_t k = 0;
            while (k < d && x[k] == 6)
                x[k++] = 0;
            if (k == d)
                break;
            ++x[k];
        }
        auto rep = is_hilbert_basis(hb, d);
        CHECK(rep.verdict);
        CHECK(rep.basis == hb);
        // appending a cone lattice point preserves a true verdict
        IntVector extra(d, 0);
        for (const auto& h : hb)
            for (std::size_t i = 0; i < d; ++i)
                extra[i] += h[i];
        auto more = hb;
        more.push_back(extra);
        CHECK(is_hilbert_basis(more, d).verdict);
        auto hrep = is_hilbert_basis(H, d);
        CHECK(hrep.verdict == std::all_of(hb.begin(), hb.end(), [&](const IntVector& h) {
                  return std::find(H.begin(), H.end(), h) != H.end();
              }));
        for (const auto& w : hrep.missing)
            CHECK_FALSE(semigroup_member(w, H).member);
    }
}
