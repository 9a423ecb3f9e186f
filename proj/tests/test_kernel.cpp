#include <doctest.h>

#include <random>

#include "clutterlab/kernel.hpp"

using namespace clutterlab;

namespace {

IntMatrix imat(std::vector<std::vector<long>> rows)
{
    const std::size_t c = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    return m;
}

IntVector iv(std::initializer_list<long> xs)
{
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

// vertex-clique matrix of the line graph of K_{2,4}: rows are the cliques
IntMatrix line_k24_matrix()
{
    return imat({{1, 1, 1, 1, 0, 0, 0, 0},
                 {0, 0, 0, 0, 1, 1, 1, 1},
                 {1, 0, 0, 0, 1, 0, 0, 0},
                 {0, 1, 0, 0, 0, 1, 0, 0},
                 {0, 0, 1, 0, 0, 0, 1, 0},
                 {0, 0, 0, 1, 0, 0, 0, 1}});
}

} // namespace

TEST_CASE("rank examples")
{
    CHECK(rank(imat({{1, 0}, {0, 1}})) == 2);
    CHECK(rank(IntMatrix()) == 0);
    // columns e1+e3, e1+e4, e2+e3, e2+e4 lifted by a trailing 1
    CHECK(rank(imat({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}})) == 3);
    CHECK(rank(line_k24_matrix()) == 5);
}

TEST_CASE("rank is invariant under transpose")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = static_cast<long>(rng() % 5) - 2;
        CHECK(rank(m) == rank(m.transpose()));
        CHECK(rank(to_rational(m)) == rank(m));
    }
}

TEST_CASE("solve examples")
{
    RatMatrix id(2, 2);
    id(0, 0) = 1;
    id(1, 1) = 1;
    auto x = solve(id, {3, 5});
    REQUIRE(x);
    CHECK(*x == RatVector{3, 5});

    RatMatrix bad(2, 2);
    bad(0, 0) = 1;
    bad(1, 0) = 1;
    CHECK_FALSE(solve(bad, {1, 2}));

    CHECK_THROWS_AS(solve(id, {1, 2, 3}), UsageError);

    // λ-system of the line-graph example: Σ λ_i (v_i,1) = (1,..,1,3)
    IntMatrix lifted(9, 6);
    const auto a = line_k24_matrix();
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 8; ++j)
            lifted(j, i) = a(i, j);
        lifted(8, i) = 1;
    }
    RatVector target(9, 1);
    target[8] = 3;
    auto lam = solve(to_rational(lifted), target);
    REQUIRE(lam);
    CHECK(multiply(to_rational(lifted), *lam) == target);
    for (const auto& l : *lam)
        CHECK(l == Rational(1, 2));
}

TEST_CASE("solve results satisfy the system")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        RatMatrix m(r, c);
        RatVector b(r);
        for (std::size_t i = 0; i < r; ++i) {
            b[i] = Rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3);
            b[i].canonicalize();
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = static_cast<long>(rng() % 5) - 2;
        }
        if (auto x = solve(m, b))
            CHECK(multiply(m, *x) == b);
    }
}

TEST_CASE("clear_denominators")
{
    auto a = clear_denominators({Rational(1, 2), Rational(1, 2)});
    CHECK(a.vector == iv({1, 1}));
    CHECK(a.scale == 2);
    auto b = clear_denominators({2, 4});
    CHECK(b.vector == iv({1, 2}));
    CHECK(b.scale == Rational(1, 2));
    auto c = clear_denominators({Rational(1, 3), Rational(-1, 6)});
    CHECK(c.vector == iv({2, -1}));
    CHECK(c.scale == 6);
    CHECK_THROWS_AS(clear_denominators({0, 0}), UsageError);
}

TEST_CASE("rational arithmetic stays exact and reduced")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        Rational a(static_cast<long>(rng() % 2001) - 1000, 1 + rng() % 999);
        Rational b(static_cast<long>(rng() % 2001) - 1000, 1 + rng() % 999);
        a.canonicalize();
        b.canonicalize();
        CHECK((a + b) - b == a);
        Rational p = a * b;
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.get_num_mpz_t(), p.get_den_mpz_t());
        CHECK(g == 1);
        CHECK(p.get_den() > 0);
    }
}

TEST_CASE("integer kernel and column echelon")
{
    auto m = imat({{2, 4, 6}, {1, 3, 5}});
    auto ce = column_echelon(m);
    CHECK(ce.rank == 2);
    IntMatrix prod(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Integer s = 0;
            for (std::size_t k = 0; k < 3; ++k)
                s += m(i, k) * ce.transform(k, j);
            prod(i, j) = s;
        }
    CHECK(prod == ce.echelon);
    CHECK(abs(determinant(ce.transform)) == 1);

    auto ker = integer_kernel(m);
    REQUIRE(ker.size() == 1);
    CHECK(multiply(m, ker[0]) == iv({0, 0}));

    CHECK(solve_integer(imat({{2}}), iv({3})) == std::nullopt);
    auto s = solve_integer(imat({{2, 3}}), iv({1}));
    REQUIRE(s);
    CHECK(multiply(imat({{2, 3}}), *s) == iv({1}));

    auto inv = unimodular_inverse(ce.transform);
    IntMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Integer t = 0;
            for (std::size_t k = 0; k < 3; ++k)
                t += inv(i, k) * ce.transform(k, j);
            id(i, j) = t;
        }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(id(i, j) == (i == j ? 1 : 0));
}

TEST_CASE("nullspace")
{
    auto ns = nullspace(imat({{1, 1, 1}}));
    CHECK(ns.size() == 2);
    for (const auto& v : ns)
        CHECK(multiply(imat({{1, 1, 1}}), v) == iv({0}));
    CHECK(determinant(imat({{2, 1}, {1, 1}})) == 1);
}
