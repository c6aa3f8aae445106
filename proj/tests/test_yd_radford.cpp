#include "doctest.h"
#include "nforge/errors.hpp"
#include "nforge/yd_radford.hpp"

using namespace nforge;

namespace {

const std::vector<std::pair<int, int>> kSmall = {{1, 1}, {1, 2}, {2, 1}};

}  // namespace

TEST_CASE("tabulated box-product action agrees with the direct Radford formula") {
    for (auto [N, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}}) {
        const auto p = SuzukiParams::make(N, n, -1, -1);
        const SuzukiAlgebra a(p);
        for (const auto& m : simple_census(p).modules) {
            const BoxSpace box(a, m);
            for (Gen g : {Gen::x11, Gen::x12, Gen::x21, Gen::x22})
                for (std::size_t v = 0; v < m.dim; ++v)
                    for (const auto& b : a.basis()) {
                        const auto x = box.vec({{v, letters_of(b), Cyc(1)}});
                        CHECK_MESSAGE(box.apply(g, x) == box.act_radford(g, v, b),
                                      p.label() << " " << m.label() << " " << gen_name(g) << " on " << b.str());
                    }
        }
    }
}

TEST_CASE("box-product action spot values") {
    const auto p = SuzukiParams::make(2, 2, 1, 1);
    const SuzukiAlgebra a(p);
    for (int i : {0, 1}) {
        const auto v = simple_module(p, SimpleKind::V_ijk, i, i, 1);
        const BoxSpace box(a, v);
        for (int s = 1; s <= 2 * p.N; ++s) {
            const auto x = box.vec({{0, power(Gen::x11, s), Cyc(1)}});
            const Cyc scalar = Cyc(i ? -1 : 1) * p.omega(4 * p.n);
            BoxSpace::Vec want;
            for (const auto& [k, c] : x) want[k] = c * scalar;
            CHECK(box.apply(Gen::x11, x) == want);
        }
    }
}

TEST_CASE("every strict family module is a YD module with a braiding") {
    for (auto [N, n] : kSmall)
        for (int mu : {1, -1})
            for (int lambda : {1, -1}) {
                const auto p = SuzukiParams::make(N, n, mu, lambda);
                const SuzukiAlgebra a(p);
                for (const auto& key : strict_keys(p)) {
                    const auto m = build_family(a, key.family, key.idx);
                    CHECK(m.dim == family_dim(p, key.family));
                    const auto r = yd_compat_check(a, m);
                    CHECK_MESSAGE(r.pass, p.label() << " " << key.str() << " " << r.failed_check << " " << r.detail);
                    CHECK(check_braid_equation(braiding_of(m)).pass);
                }
            }
}

TEST_CASE("family dimensions") {
    const auto p = SuzukiParams::make(1, 3, 1, 1);
    CHECK(family_dim(p, Family::A) == 1);
    CHECK(family_dim(p, Family::D) == 2);
    CHECK(family_dim(p, Family::I) == 6);
    CHECK(family_dim(p, Family::K) == 6);
}

TEST_CASE("perturbed coaction fails the compatibility check") {
    const auto p = SuzukiParams::make(1, 2, 1, 1);
    const SuzukiAlgebra a(p);
    auto m = build_family(a, Family::D, {0, 2, 0, 0, 1, 0});
    REQUIRE(yd_compat_check(a, m).pass);
    for (auto& c : m.coaction[0][0].coeffs)
        if (!c.is_zero()) {
            c *= p.omega(1);
            break;
        }
    const auto r = yd_compat_check(a, m);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.failed_check.empty());
}

TEST_CASE("index validation") {
    const auto p = SuzukiParams::make(1, 2, 1, 1);
    const SuzukiAlgebra a(p);
    CHECK_THROWS_AS(build_family(a, Family::I, {0, 3, 0, 0, 1, 0}), BadIndex);
    CHECK_THROWS_AS(build_family(a, Family::A, {0, 0, 1, 0, 1, 0}), BadIndex);
    CHECK_FALSE(in_strict_range(p, Family::D, {0, 2, 0, 0, 1, 2}));
    CHECK(in_strict_range(p, Family::D, {0, 2, 0, 0, 1, 1}));
}

TEST_CASE("comodule supports") {
    const auto p = SuzukiParams::make(2, 1, 1, 1);
    const SuzukiAlgebra a(p);
    const auto b = build_family(a, Family::B, {0, 1, 1, 0, 2, 0});
    CHECK(comodule_support(a, b) == std::set<std::string>{"g+_2", "g-_2"});
    for (const auto& key : strict_keys(p))
        if (auto want = expected_support(p, key)) CHECK_MESSAGE(comodule_support(a, build_family(a, key.family, key.idx)) == *want, key.str());
}

TEST_CASE("printed isomorphism rules") {
    const auto p = SuzukiParams::make(1, 2, 1, 1);
    CHECK(canonical_key(p, Family::I, {0, 2, 0, 0, 1, 0}) == canonical_key(p, Family::I, {0, 6, 0, 0, 1, 0}));
    const auto j = canonical_key(p, Family::J, {0, 2, 0, 0, 1, 0});
    CHECK(j.family == Family::I);
}

TEST_CASE("duplicate families carry explicit intertwiners") {
    for (auto [N, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}})
        for (int mu : {1, -1})
            for (int lambda : {1, -1}) {
                const auto p = SuzukiParams::make(N, n, mu, lambda);
                const SuzukiAlgebra a(p);
                for (const auto& v : simple_census(p).modules) {
                    const auto d = decompose_boxtimes(a, v);
                    CHECK(d.total == d.box_dim);
                    for (const auto& c : d.parts) {
                        if (c.printed == c.resolved) continue;
                        const auto m1 = build_family(a, c.printed.family, c.printed.idx, IndexMode::lax);
                        const auto m2 = build_family(a, c.resolved.family, c.resolved.idx);
                        CHECK_MESSAGE(find_intertwiner(m1, m2).has_value(), c.printed.str() << " -> " << c.resolved.str());
                    }
                }
            }
}

TEST_CASE("distinct strict keys are not isomorphic") {
    const auto p = SuzukiParams::make(1, 2, 1, 1);
    const SuzukiAlgebra a(p);
    std::vector<YDModule> ms;
    for (const auto& key : strict_keys(p)) ms.push_back(build_family(a, key.family, key.idx));
    std::size_t tried = 0;
    for (std::size_t x = 0; x < ms.size(); ++x)
        for (std::size_t y = x + 1; y < ms.size(); ++y) {
            if (ms[x].dim != ms[y].dim) continue;
            ++tried;
            CHECK_MESSAGE(!find_intertwiner(ms[x], ms[y]).has_value(), ms[x].label() << " ~ " << ms[y].label());
        }
    CHECK(tried > 100);
}

TEST_CASE("box-product decompositions") {
    const auto p = SuzukiParams::make(1, 2, 1, 1);
    const SuzukiAlgebra a(p);
    const auto d = decompose_boxtimes(a, simple_module(p, SimpleKind::V_ijk, 0, 0, 0));
    CHECK(d.total == 16);
    const auto dj = decompose_boxtimes(a, simple_module(p, SimpleKind::V_jk, 0, 2, 0));
    std::set<Family> fams;
    for (const auto& c : dj.parts) fams.insert(c.printed.family);
    CHECK(fams == std::set<Family>{Family::D, Family::E, Family::I, Family::J});
}

TEST_CASE("YD census") {
    for (int N = 1; N <= 3; ++N)
        for (int n = 1; n <= 3; ++n)
            for (int mu : {1, -1})
                for (int lambda : {1, -1}) {
                    const auto c = yd_census(SuzukiParams::make(N, n, mu, lambda));
                    CHECK(c.one_dim == static_cast<std::size_t>(8 * N * N));
                    CHECK(c.two_dim == static_cast<std::size_t>(2 * N * N * (4 * n * n - 1)));
                    CHECK(c.twon_dim == static_cast<std::size_t>(8 * N * N));
                    CHECK(c.weighted_sum == static_cast<std::size_t>(64 * N * N * n * n));
                    CHECK(c.pass());
                }
    CHECK(yd_census(SuzukiParams::make(1, 1, 1, 1)).weighted_sum == 64);
}
