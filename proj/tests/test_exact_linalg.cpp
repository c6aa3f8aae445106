#include "doctest.h"
#include "nforge/exact_linalg.hpp"

#include <random>

using namespace nforge;

TEST_CASE("exact rank") {
    CHECK(rank_exact(CycMatrix::identity(2)) == 2);
    CHECK(rank_exact(CycMatrix(5, 5)) == 0);
    CycMatrix s(1, 1, 2);
    s.set(0, 0, Cyc(1) + Cyc(-1));  // S_2 of the q = -1 rank-one braiding
    CHECK(rank_exact(s) == 0);
    CycMatrix a(2, 2, 3);
    a.set(0, 0, Cyc(1));
    a.set(0, 1, Cyc::root(3, 1));
    a.set(1, 0, Cyc::root(3, 2));
    a.set(1, 1, Cyc(1));
    CHECK(rank_exact(a) == 1);
    CHECK(rank_exact(a, PivotStrategy::first_nonzero) == 1);
}

TEST_CASE("kernels") {
    CHECK(kernel_basis(CycMatrix::identity(3)).empty());
    CHECK(kernel_basis(CycMatrix(1, 3)).size() == 3);
    CycMatrix m(1, 2);
    m.set(0, 0, Cyc(1));
    m.set(0, 1, Cyc(-1));
    const auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == k[0][1]);
    CHECK_FALSE(k[0][0].is_zero());
}

TEST_CASE("solve and inverse") {
    CycMatrix m(2, 2, 8);
    m.set(0, 0, Cyc::root(8, 1));
    m.set(0, 1, Cyc(1));
    m.set(1, 1, Cyc::root(8, 3));
    const auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == CycMatrix::identity(2, 8));
    const auto x = solve(m, {Cyc(1), Cyc(0)});
    REQUIRE(x);
    CHECK(m.apply(*x) == CycVector{Cyc(1), Cyc(0)});
    CHECK_FALSE(inverse(CycMatrix(2, 2)).has_value());
}

TEST_CASE("prime selection") {
    const auto p8 = choose_prime(8, 0);
    CHECK(p8.p % 8 == 1);
    CHECK(modp::pow(p8.rho, 8, p8.p) == 1);
    CHECK(modp::pow(p8.rho, 4, p8.p) != 1);
    CHECK(choose_prime(1, 0).rho == 1);
    for (int seed : {0, 1}) {
        const auto p = choose_prime(12, seed);
        CHECK(modp::pow(p.rho, 12, p.p) == 1);
        CHECK(modp::pow(p.rho, 6, p.p) != 1);
        CHECK(modp::pow(p.rho, 4, p.p) != 1);
    }
    CHECK(choose_prime(12, 0).p != choose_prime(12, 1).p);
}

TEST_CASE("modular rank") {
    const auto mp = choose_prime(4, 0);
    CHECK(mod_p_rank(CycMatrix::identity(3), mp) == 3);
    CycMatrix z(1, 1, 4);
    z.set(0, 0, Cyc::root(4, 1) - Cyc::root(4, 1));
    CHECK(mod_p_rank(z, mp) == 0);
    CycMatrix s(1, 1, 3);
    s.set(0, 0, Cyc(1) + Cyc::root(3, 1));
    CHECK(mod_p_rank(s, choose_prime(3, 0)) == 1);
}

TEST_CASE("randomized rank lower bound") {
    const auto mp = choose_prime(2, 0);
    const ModMatvec zero = [](const std::vector<std::uint64_t>& in, std::vector<std::uint64_t>& out) {
        out.assign(in.size(), 0);
    };
    const ModMatvec id = [](const std::vector<std::uint64_t>& in, std::vector<std::uint64_t>& out) { out = in; };
    CHECK(randomized_rank_lower_bound(zero, 16, 8, 1, mp) == 0);
    CHECK(randomized_rank_lower_bound(id, 16, 8, 1, mp) == 8);
}

TEST_CASE("serial and parallel elimination agree") {
    std::mt19937_64 rng(3);
    const std::uint64_t p = choose_prime(8, 0).p;
    for (std::size_t rows : {5u, 40u, 120u}) {
        const std::size_t cols = 90;
        std::vector<std::uint64_t> a(rows * cols);
        for (auto& x : a) x = rng() % 4 == 0 ? rng() % p : 0;
        // force a dependent row
        for (std::size_t c = 0; c < cols; ++c) a[(rows - 1) * cols + c] = a[c];
        const auto serial = modp::rank_dense(a, rows, cols, p, modp::Exec::serial);
        CHECK(serial == modp::rank_dense(a, rows, cols, p, modp::Exec::parallel));
        CHECK(serial < rows);
    }
}

TEST_CASE("exact echelon") {
    CycEchelon e;
    CHECK(e.insert({{0, Cyc(1)}, {2, Cyc::root(3, 1)}}));
    CHECK_FALSE(e.insert({{0, Cyc::root(3, 2)}, {2, Cyc(1)}}));
    CHECK(e.contains({{0, Cyc(2)}, {2, Cyc(2) * Cyc::root(3, 1)}}));
    CHECK(e.rank() == 1);
}
