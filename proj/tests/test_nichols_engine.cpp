#include "doctest.h"
#include "nforge/classifier.hpp"
#include "nforge/errors.hpp"
#include "nforge/nichols_engine.hpp"

#include <fstream>
#include <sstream>

using namespace nforge;

namespace {

using Dims = std::vector<std::size_t>;

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(NFORGE_DATA_DIR) + "/relations/" + name);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Dims trimmed(Dims d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

QMatrix a2(const Cyc& q) { return QMatrix{2, {q, q.inv(), Cyc(1), q}}; }

BraidedSpace family_braiding(int N, int n, int mu, int lambda, Family f, FamilyIndices idx) {
    const SuzukiAlgebra a(SuzukiParams::make(N, n, mu, lambda));
    return braiding_of(build_family(a, f, idx));
}

}  // namespace

TEST_CASE("reduced words and lifts") {
    CHECK(reduced_word({0, 1, 2}).empty());
    CHECK(reduced_word({1, 0}) == std::vector<int>{0});
    CHECK(reduced_word({2, 1, 0}).size() == 3);
    const auto b = make_vabe(Cyc::root(3, 1), Cyc(-1), Cyc(1));
    CHECK(braided_lift(b, {0, 1, 2}) == CycMatrix::identity(8, 6));
    CHECK(braided_lift(b, {1, 0}) == braided_lift_word(b, 2, {0}));
    CHECK_THROWS(braided_lift(b, {0, 0}));
}

TEST_CASE("S_2 of a rank-one braiding") {
    const auto minus = diagonal_braiding(QMatrix{1, {Cyc(-1)}});
    CHECK(symmetrizer(minus, 2).is_zero());
    const auto third = diagonal_braiding(QMatrix{1, {Cyc::root(3, 1)}});
    CHECK(rank_exact(symmetrizer(third, 2)) == 1);
    CHECK(rank_exact(symmetrizer(third, 3)) == 0);
}

TEST_CASE("Cartan A1 x A1 at q = -1") {
    const auto b = diagonal_braiding(QMatrix{2, {Cyc(-1), Cyc(1), Cyc(1), Cyc(-1)}});
    const auto d = degree_dims(b, 4, Engine::exact);
    CHECK(trimmed(d.dims) == Dims{1, 2, 1});
    CHECK(d.terminated);
    CHECK(d.total() == 4);
}

TEST_CASE("Cartan A2 at a cube root of unity") {
    const Cyc q = Cyc::root(3, 1);
    const auto b = diagonal_braiding(a2(q));
    const Dims want{1, 2, 4, 4, 5, 4, 4, 2, 1};
    const auto exact = degree_dims(b, 9, Engine::exact);
    CHECK(trimmed(exact.dims) == want);
    CHECK(exact.total() == 27);
    CHECK(trimmed(degree_dims(b, 9, Engine::modular).dims) == want);
    DimsOptions so;
    so.sketch_from = 5;
    CHECK(trimmed(degree_dims(b, 9, Engine::sketch, so).dims) == want);
    const Dims head(want.begin(), want.begin() + 7);
    CHECK(shuffle_dims(a2(q), 6) == head);
    CHECK(brute_force_dims(b, 6) == head);
}

TEST_CASE("V_abe oracles") {
    const Cyc w3 = Cyc::root(3, 1);
    CHECK(degree_dims(make_vabe(Cyc(1), w3, Cyc(1)), 6, Engine::exact).total() == 9);
    const auto d12 = degree_dims(make_vabe(w3, Cyc(-1), Cyc(1)), 8, Engine::exact);
    CHECK(trimmed(d12.dims) == Dims{1, 2, 2, 2, 2, 2, 1});
    CHECK(brute_force_dims(make_vabe(w3, Cyc(-1), Cyc(1)), 6) == Dims{1, 2, 2, 2, 2, 2, 1});
    CHECK(trimmed(degree_dims(make_vabe(Cyc(1), Cyc::root(4, 1), Cyc(1)), 8, Engine::modular).dims) ==
          Dims{1, 2, 3, 4, 3, 2, 1});
}

TEST_CASE("serial and parallel kernels agree") {
    const auto b = family_braiding(1, 2, 1, 1, Family::I, {0, 2, 0, 1, 1, 0});
    DimsOptions ser, par;
    ser.exec = modp::Exec::serial;
    par.exec = modp::Exec::parallel;
    CHECK(degree_dims(b, 6, Engine::modular, ser).dims == degree_dims(b, 6, Engine::modular, par).dims);
}

TEST_CASE("the engine refuses oversized work") {
    const auto b = family_braiding(1, 2, 1, 1, Family::I, {0, 2, 0, 1, 1, 0});
    DimsOptions tiny;
    tiny.max_entries = 1000;
    CHECK_THROWS_AS(degree_dims(b, 8, Engine::modular, tiny), BoundExceeded);
    CHECK_THROWS_AS(brute_force_dims(b, 8, 64), BoundExceeded);
}

TEST_CASE("64-dimensional Nichols algebras at q = -1") {
    const Dims want{1, 4, 8, 12, 14, 12, 8, 4, 1};
    CHECK(product_series({{1, 2}, {2, 1}, {1, 2}, {2, 1}}) == want);
    for (int j : {2, 4}) {
        const auto i = degree_dims(family_braiding(1, 2, 1, 1, Family::I, {0, j, 0, 1, 1, 0}), 9, Engine::modular);
        CHECK(trimmed(i.dims) == want);
        CHECK(i.primes.size() == 2);
        const auto k = degree_dims(family_braiding(1, 2, 1, 1, Family::K, {0, j, 0, 1, 1, 0}), 9, Engine::modular);
        CHECK(trimmed(k.dims) == want);
    }
}

TEST_CASE("Hilbert report") {
    HilbertOptions ho;
    ho.kmax = 6;
    ho.compare_series = product_series({{1, 2}, {2, 1}, {1, 2}, {2, 1}});
    const auto r = hilbert_report(family_braiding(1, 2, 1, 1, Family::I, {0, 4, 0, 1, 1, 0}), ho);
    CHECK(r.provenance == "modular-confirmed");
    REQUIRE(r.series_match);
    CHECK(*r.series_match);
    CHECK(r.partial_sums.back() <= 64);
}

TEST_CASE("relation fixtures lie in the symmetrizer kernel") {
    struct Case {
        int N, n, mu;
        Family f;
        int j;
        std::vector<std::string> files;
    };
    const std::vector<Case> cases = {
        {1, 2, 1, Family::I, 2, {"I_n2.rel"}},  {1, 2, -1, Family::I, 4, {"I_n2.rel", "I_n2_u.rel"}},
        {2, 2, 1, Family::I, 4, {"I_n2.rel", "I_n2_u.rel"}},
        {1, 2, 1, Family::K, 2, {"K_n2.rel"}},  {2, 2, -1, Family::K, 4, {"K_n2.rel"}},
        {1, 3, 1, Family::K, 2, {"K_n3.rel"}},  {2, 3, -1, Family::K, 4, {"K_n3.rel"}},
    };
    for (const auto& c : cases) {
        const auto p = SuzukiParams::make(c.N, c.n, c.mu, 1);
        const SuzukiAlgebra a(p);
        for (const auto& key : strict_keys(p)) {
            if (key.family != c.f || key.idx.j != c.j) continue;
            const auto b = braiding_of(build_family(a, key.family, key.idx));
            if (!(b.coefficient(0, 0, 0, 0) == Cyc(-1))) continue;
            const auto binds = relation_bindings(key.family, p, key.idx);
            for (const auto& file : c.files)
                for (const auto& r : parse_relations(fixture(file), b, binds))
                    CHECK_MESSAGE(relation_in_kernel(b, r.element), p.label() << " " << key.str() << " " << file << ":" << r.line);
        }
    }
}

TEST_CASE("a perturbed relation leaves the kernel") {
    const auto p = SuzukiParams::make(1, 2, 1, 1);
    const FamilyIndices idx{0, 2, 0, 1, 1, 0};
    const auto b = family_braiding(1, 2, 1, 1, Family::I, idx);
    auto binds = relation_bindings(Family::I, p, idx);
    const auto good = parse_relations("w1m2 - alpha^-1 m1w1 + w2m1 - alpha beta m2w2 = 0", b, binds);
    REQUIRE(good.size() == 1);
    CHECK(relation_in_kernel(b, good[0].element));
    const auto bad = parse_relations("w1m2 - alpha^-1 m1w1 + w2m1 + alpha beta m2w2 = 0", b, binds);
    CHECK_FALSE(relation_in_kernel(b, bad[0].element));
    binds["alpha"] = binds["alpha"] * p.omega(1);
    for (const auto& r : parse_relations(fixture("I_n2.rel"), b, binds))
        if (r.text.find("alpha") != std::string::npos) CHECK_FALSE(relation_in_kernel(b, r.element));
}

TEST_CASE("relation grammar") {
    const auto b = family_braiding(1, 2, 1, 1, Family::I, {0, 2, 0, 1, 1, 0});
    const std::map<std::string, Cyc> none;
    CHECK(parse_relations("# comment only\n\n", b, none).empty());
    CHECK(parse_relations("w1^2 = w2^2 = 0", b, none).size() == 2);
    CHECK(parse_relations("let z = root(8,3)\nw1 w2 - z w2 w1 = 0", b, none).size() == 1);
    CHECK(parse_relations("vec u = w1 + w2\nu^2 = 0", b, none).size() == 1);
    CHECK_THROWS_AS(parse_relations("w1 + = 0", b, none), ParseError);
    CHECK_THROWS_AS(parse_relations("w9 = 0", b, none), ParseError);
    CHECK_THROWS_AS(parse_relations("gamma w1 = 0", b, none), ParseError);
    CHECK_THROWS_AS(parse_relations("w1 + 3 = 0", b, none), ParseError);
}
