#include "doctest.h"
#include "nforge/classifier.hpp"
#include "nforge/errors.hpp"

#include <numeric>
#include <set>
#include <tuple>

using namespace nforge;

namespace {

using Triple = std::tuple<int, int, int>;

const std::set<Triple> kUfoD = {
    {1, 18, 0}, {1, 22, 2}, {1, 26, 4}, {1, 30, 6}, {1, 34, 0}, {1, 38, 2}, {1, 42, 4}, {1, 46, 6},
    {5, 2, 2},  {5, 6, 0},  {5, 10, 6}, {5, 14, 4}, {5, 22, 0}, {5, 30, 4}, {5, 34, 2}, {5, 42, 6},
    {7, 4, 0},  {7, 12, 6}, {7, 20, 4}, {7, 28, 2}, {7, 28, 6}, {7, 36, 0}, {7, 36, 4}, {7, 44, 2},
    {11, 8, 2}, {11, 8, 4}, {11, 24, 0}, {11, 24, 4}, {11, 24, 6}, {11, 40, 0}, {11, 40, 2}, {11, 40, 6}};

const std::set<Triple> kUfoE = {
    {1, 4, 3},  {1, 4, 7},  {1, 12, 1}, {1, 12, 5}, {1, 20, 3}, {1, 28, 1}, {1, 36, 7}, {1, 44, 5},
    {5, 8, 3},  {5, 8, 5},  {5, 24, 1}, {5, 24, 5}, {5, 24, 7}, {5, 40, 1}, {5, 40, 3}, {5, 40, 7},
    {7, 2, 5},  {7, 6, 7},  {7, 10, 1}, {7, 14, 3}, {7, 18, 5}, {7, 22, 7}, {7, 42, 1}, {7, 46, 3},
    {11, 2, 3}, {11, 6, 1}, {11, 10, 7}, {11, 14, 5}, {11, 22, 1}, {11, 30, 5}, {11, 34, 3}, {11, 42, 7}};

std::set<Triple> triples(const std::vector<SweepRecord>& rs) {
    std::set<Triple> t;
    for (const auto& r : rs) t.emplace(r.k, r.s, r.t);
    return t;
}

RootOfUnity rou(long m, long e) { return RootOfUnity::make(m, e); }

}  // namespace

TEST_CASE("one-dimensional lemmas") {
    const auto a = lemma_verdict(Family::A, SuzukiParams::make(2, 1, 1, 1), {0, 0, 1, 0, 1, 0});
    CHECK(a.outcome == Outcome::finite);
    CHECK(a.dim == 2u);
    CHECK(a.tag == TypeTag::A1);
    for (int n : {1, 3}) {
        const auto b = lemma_verdict(Family::Abar, SuzukiParams::make(1, n, 1, -1), {0, 1, 0, 0, 1, 0});
        CHECK(b.outcome == Outcome::finite);
        CHECK(b.dim == 2u);
    }
    CHECK(lemma_verdict(Family::Abar, SuzukiParams::make(1, 2, 1, -1), {0, 1, 0, 0, 1, 0}).outcome == Outcome::infinite);
    CHECK(lemma_verdict(Family::A, SuzukiParams::make(1, 2, 1, 1), {0, 0, 0, 0, 1, 0}).outcome == Outcome::infinite);
}

TEST_CASE("rank-two table") {
    const auto a11 = rank2_table_lookup(QMatrix{2, {Cyc(-1), Cyc(1), Cyc(1), Cyc(-1)}});
    CHECK(a11.dim == 4u);
    CHECK(a11.tag == TypeTag::A1xA1);
    const Cyc q = Cyc::root(3, 1);
    const auto a2 = rank2_table_lookup(QMatrix{2, {q, q.inv(), Cyc(1), q}});
    CHECK(a2.dim == 27u);
    CHECK(a2.tag == TypeTag::A2);
    const Cyc z = Cyc::root(12, 1), v = -(z * z);
    const auto ufo = rank2_table_lookup(QMatrix{2, {v, z, Cyc(1), v}});
    CHECK(ufo.outcome == Outcome::finite);
    CHECK(ufo.type_only());
    CHECK(ufo.tag == TypeTag::ufo8);
    CHECK(rank2_table_lookup(QMatrix{1, {Cyc(1)}}).outcome == Outcome::infinite);
    CHECK(rank2_table_lookup(QMatrix{1, {Cyc::root(5, 1)}}).dim == 5u);
}

TEST_CASE("V_abe verdicts") {
    const auto b_minus = vabe_verdict(rou(3, 1), rou(2, 1), rou(1, 0));
    CHECK(b_minus.dim == 12u);
    CHECK(b_minus.tag == TypeTag::Vabe4m);
    const auto ae_one = vabe_verdict(rou(1, 0), rou(4, 1), rou(1, 0));
    CHECK(ae_one.dim == 16u);
    CHECK(ae_one.tag == TypeTag::VabeM2);
    CHECK(vabe_verdict(rou(5, -2), rou(5, 1), rou(1, 0)).outcome == Outcome::infinite);
    CHECK(vabe_verdict(rou(1, 0), rou(2, 1), rou(1, 0)).dim == 4u);
    CHECK(vabe_verdict(rou(3, 2), rou(3, 1), rou(1, 0)).dim == 27u);
    CHECK_THROWS_AS(vabe_verdict(Cyc(0), Cyc(1), Cyc(1)), ZeroParameter);
    CHECK(vabe_verdict(Cyc(2), Cyc(1), Cyc(1)).outcome == Outcome::unknown);
}

TEST_CASE("V_abe corollary for b of order at least five") {
    for (long m : {5, 6, 7})
        for (long e = 1; e < m; ++e) {
            if (std::gcd(e, m) != 1) continue;
            const auto b = rou(m, e);
            CHECK_MESSAGE(vabe_verdict(b.pow(-2), b, rou(1, 0)).outcome == Outcome::infinite, m << " " << e);
        }
}

TEST_CASE("D and E four-case test") {
    const auto v = lemma_verdict(Family::D, SuzukiParams::make(48, 8, 1, 1), {0, 2, 1, 0, 18, 0});
    CHECK(std::find(v.matches.begin(), v.matches.end(), TypeTag::ufo8) != v.matches.end());
    const long M = 64;
    CHECK(de_verdict(32, 8, M).tag == TypeTag::SuperA2);
    CHECK(de_verdict(8, 32, M).tag == TypeTag::A1xA1);
    CHECK(de_verdict(0, 0, M).outcome == Outcome::infinite);
}

TEST_CASE("ufo8 presets return exactly the printed triples") {
    const auto d = sweep(ufo8_preset(Family::D));
    CHECK(d.size() == 32);
    CHECK(triples(d) == kUfoD);
    const auto e = sweep(ufo8_preset(Family::E));
    CHECK(triples(e) == kUfoE);
    CHECK(triples(sweep(ufo8_preset(Family::E), modp::Exec::serial)) == kUfoE);
    CHECK_THROWS_AS(ufo8_preset(Family::A), BadIndex);
}

TEST_CASE("G and H parameters") {
    for (int lambda : {1, -1}) {
        const auto p = SuzukiParams::make(2, 2, 1, lambda);
        const SuzukiAlgebra a(p);
        for (const auto& key : strict_keys(p)) {
            if (key.family != Family::G && key.family != Family::H) continue;
            const auto gh = gh_parameters(key.family, p, key.idx);
            const long sign = key.family == Family::G ? -1 : 1;
            CHECK(gh.ae * gh.b.pow(-2) == RootOfUnity::make(p.order(), sign * 4 * key.idx.j * p.N * (2 * key.idx.t + 1)));
        }
    }
}

TEST_CASE("printed braidings match the built ones") {
    for (auto [N, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}})
        for (int mu : {1, -1})
            for (int lambda : {1, -1}) {
                const auto p = SuzukiParams::make(N, n, mu, lambda);
                const SuzukiAlgebra a(p);
                for (const auto& key : strict_keys(p)) {
                    if (key.family > Family::K || (key.family == Family::I && n > 2)) continue;
                    const auto c = braiding_conformance(a, key.family, key.idx);
                    CHECK_MESSAGE(c.pass, c.mismatch);
                }
            }
}

TEST_CASE("conformance notices a wrong index") {
    const auto p = SuzukiParams::make(1, 2, 1, 1);
    const SuzukiAlgebra a(p);
    const FamilyIndices d{0, 2, 0, 0, 1, 0};
    auto other = d;
    other.t = 1;
    const auto printed = printed_braidings(Family::D, p, other);
    REQUIRE(printed.size() == 1);
    CHECK_FALSE(printed[0].braiding == braiding_of(build_family(a, Family::D, d)));
}

TEST_CASE("agreement rules") {
    const auto f4 = DimVerdict::finite(4, TypeTag::A1xA1, "");
    const auto f27 = DimVerdict::finite(27, TypeTag::A2, "");
    const auto inf = DimVerdict::infinite("");
    CHECK(compare_verdicts(f4, f4) == Agreement::agree);
    CHECK(compare_verdicts(f4, f27) == Agreement::disagree);
    CHECK(compare_verdicts(f4, inf) == Agreement::disagree);
    CHECK(compare_verdicts(inf, f4) == Agreement::disagree);
    CHECK(compare_verdicts(inf, DimVerdict::unclassified("")) == Agreement::weak);
    CHECK(compare_verdicts(DimVerdict::unknown(""), f4) == Agreement::compatible);
}

TEST_CASE("cross-check examples") {
    for (auto [N, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
        const auto p = SuzukiParams::make(N, n, -1, 1);
        const SuzukiAlgebra a(p);
        for (const auto& key : strict_keys(p))
            if (key.family == Family::C) CHECK(cross_check(a, key.family, key.idx).agreement == Agreement::agree);
    }
    {
        const SuzukiAlgebra a(SuzukiParams::make(1, 3, 1, 1));
        const auto r = cross_check(a, Family::I, {0, 2, 0, 0, 1, 0});
        CHECK(r.lemma.outcome == Outcome::infinite);
        CHECK(r.pipeline.outcome == Outcome::infinite);
        CHECK(r.pipeline.provenance == "rack");
    }
    {
        const SuzukiAlgebra a(SuzukiParams::make(1, 2, 1, 1));
        const auto r = cross_check(a, Family::K, {0, 2, 0, 1, 1, 0});
        CHECK(r.lemma.dim == 64u);
        CHECK(r.pipeline.dim == 64u);
        CHECK(r.agreement == Agreement::agree);
    }
}

TEST_CASE("type D witnesses in the I family") {
    for (int n : {3, 4}) {
        const SuzukiAlgebra a(SuzukiParams::make(1, n, 1, 1));
        const auto b = braiding_of(build_family(a, Family::I, {0, 2, 0, 0, 1, 0}));
        const auto rb = extract_rack(b);
        REQUIRE(rb);
        CHECK(rb->rack.size == static_cast<std::size_t>(2 * n));
        const std::size_t w1 = 0, m1 = n;
        const auto& r = rb->rack;
        const auto value = r.act(w1, r.act(m1, r.act(w1, m1)));
        CHECK(b.label(value) == (n == 3 ? "m3" : "m4"));
        CHECK(is_type_D(r).has_value());
    }
    const SuzukiAlgebra a(SuzukiParams::make(1, 2, 1, 1));
    const auto rb = extract_rack(braiding_of(build_family(a, Family::I, {0, 2, 0, 0, 1, 0})));
    REQUIRE(rb);
    CHECK_FALSE(is_type_D(rb->rack).has_value());
    CHECK(type_D_search_exhaustive(rb->rack));
}
