#include "doctest.h"
#include "nforge/errors.hpp"
#include "nforge/suzuki_hopf.hpp"

using namespace nforge;

namespace {

const std::vector<std::pair<int, int>> kGrid = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};

SignedWord word_value(const SuzukiAlgebra& a, const Word& w) { return a.rewrite(w); }

}  // namespace

TEST_CASE("parameters") {
    const auto p = SuzukiParams::make(2, 3, -1, 1);
    CHECK(p.dim() == 48);
    CHECK(p.order() == 48);
    CHECK(p.mu_bar() == p.omega(12));
    CHECK(p.mu_tilde().pow(2) == p.mu_bar());
    CHECK_THROWS(SuzukiParams::make(0, 1, 1, 1));
    CHECK_THROWS(SuzukiParams::make(1, 1, 2, 1));
}

TEST_CASE("defining relations") {
    for (int lambda : {1, -1}) {
        const SuzukiAlgebra a(SuzukiParams::make(1, 2, 1, lambda));
        CHECK(word_value(a, {Gen::x11, Gen::x12}).is_zero());
        CHECK(word_value(a, {Gen::x22, Gen::x22}) == word_value(a, {Gen::x11, Gen::x11}));
        const auto c21 = word_value(a, chi(Gen::x21, Gen::x12, 4));
        const auto c12 = word_value(a, chi(Gen::x12, Gen::x21, 4));
        CHECK(c21.word == c12.word);
        CHECK(c21.sign == lambda * c12.sign);
    }
}

TEST_CASE("unit and idempotents") {
    for (auto [N, n] : kGrid) {
        const SuzukiAlgebra a(SuzukiParams::make(N, n, -1, 1));
        const auto one = a.unit();
        for (const auto& w : a.basis()) CHECK(a.multiply(one, {{w, Cyc(1)}}) == AlgebraElement{{w, Cyc(1)}});
        const BasisWord x2N{Branch::diagonal, 2 * N, 0};
        CHECK(a.product(x2N, x2N) == SignedWord{1, x2N});
    }
}

TEST_CASE("associativity spot value") {
    const SuzukiAlgebra a(SuzukiParams::make(1, 1, 1, 1));
    const auto lhs = a.normalize_word(concat({a.word_of(a.letter(Gen::x11).word), {Gen::x22}, {Gen::x11}}));
    const auto rhs = a.normalize_word({Gen::x11, Gen::x22, Gen::x11});
    CHECK(lhs == rhs);
}

TEST_CASE("closed-form products agree with rewriting") {
    for (auto [N, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 4}, {4, 1}, {2, 4}})
        for (int mu : {1, -1})
            for (int lambda : {1, -1}) {
                const auto p = SuzukiParams::make(N, n, mu, lambda);
                const SuzukiAlgebra a(p);
                std::size_t bad = 0;
                for (const auto& x : a.basis())
                    for (const auto& y : a.basis()) bad += !(closed_form_product(p, x, y) == a.product(x, y));
                CHECK_MESSAGE(bad == 0, p.label());
            }
}

TEST_CASE("rewriting is confluent") {
    const SuzukiAlgebra a(SuzukiParams::make(2, 2, -1, -1));
    for (const auto& x : a.basis())
        for (const auto& y : a.basis()) {
            const Word w = concat({a.word_of(x), a.word_of(y)});
            CHECK(a.rewrite(w, RuleOrder::leftmost_first) == a.rewrite(w, RuleOrder::rightmost_reverse_priority));
        }
}

TEST_CASE("counit and antipode values") {
    for (auto [N, n] : kGrid) {
        const SuzukiAlgebra a(SuzukiParams::make(N, n, 1, -1));
        CHECK(a.counit(BasisWord{Branch::diagonal, 1, 1}) == 1);
        CHECK(a.counit(BasisWord{Branch::off_diagonal, 1, 1}) == 0);
        int eps_unit = 0;
        for (const auto& [w, c] : a.unit()) eps_unit += a.counit(w) * static_cast<int>(c.as_rational()->get_num().get_si());
        CHECK(eps_unit == 1);
        CHECK(a.antipode(a.letter(Gen::x11).word) == a.rewrite(power(Gen::x11, 4 * N - 1)));
        CHECK(a.antipode(a.letter(Gen::x12).word) == a.rewrite(power(Gen::x21, 4 * N - 1)));
    }
}

TEST_CASE("group-likes") {
    const SuzukiAlgebra a(SuzukiParams::make(2, 2, 1, 1));
    for (int s = 1; s <= 2; ++s) {
        // x11^{2s} = g + h with g, h group-like
        const auto cp = a.coproduct(BasisWord{Branch::diagonal, 2 * s, 0});
        for (const auto& t : cp) CHECK(t.left == t.right);
        const auto off = a.coproduct(BasisWord{Branch::off_diagonal, 2 * s, 0});
        CHECK(off[0].left == off[1].right);
    }
}

TEST_CASE("Hopf audit on the full basis") {
    for (auto [N, n] : kGrid)
        for (int mu : {1, -1})
            for (int lambda : {1, -1}) {
                const auto r = verify_hopf(SuzukiParams::make(N, n, mu, lambda));
                CHECK(r.dim == static_cast<std::size_t>(8 * N * n));
                for (const auto& ax : r.axioms) CHECK_MESSAGE(ax.pass, r.params.label() << " " << ax.name << " " << ax.counterexample);
                CHECK(r.pass);
            }
    CHECK(verify_hopf(SuzukiParams::make(1, 1, 1, -1)).dim == 8);
}

TEST_CASE("simple modules") {
    const auto p = SuzukiParams::make(1, 2, 1, 1);
    for (int i : {0, 1})
        for (int k = 0; k < p.N; ++k) {
            const auto v = simple_module(p, SimpleKind::V_ijk, i, i, k);
            CHECK(v.action(Gen::x11).get(0, 0) == Cyc(i ? -1 : 1) * p.omega(4 * p.n * k));
            CHECK(v.action(Gen::x12).is_zero());
        }
    const auto vjk = simple_module(SuzukiParams::make(2, 2, 1, 1), SimpleKind::V_jk, 0, 2, 1);
    const auto& x22 = vjk.action(Gen::x22);
    CHECK(x22.get(0, 0).is_zero());
    CHECK(x22.get(0, 1) == SuzukiParams::make(2, 2, 1, 1).omega(16));
    CHECK(x22.get(1, 0).is_one());
    CHECK(x22.get(1, 1).is_zero());
    CHECK_THROWS_AS(simple_module(p, SimpleKind::V_jk, 0, 1, 0), BadIndex);
}

TEST_CASE("simple module census") {
    for (auto [N, n] : kGrid)
        for (int mu : {1, -1})
            for (int lambda : {1, -1}) {
                const auto p = SuzukiParams::make(N, n, mu, lambda);
                const auto c = simple_census(p);
                CHECK_MESSAGE(c.sum_of_squares == p.dim(), p.label());
                CHECK(c.relations_ok);
                for (const auto& m : c.modules) CHECK_FALSE(relation_violation(p, m.gens).has_value());
            }
    CHECK(simple_census(SuzukiParams::make(1, 1, 1, 1)).sum_of_squares == 8);
    CHECK(simple_census(SuzukiParams::make(1, 2, 1, 1)).count == 8 + 2);
    CHECK(simple_census(SuzukiParams::make(1, 2, 1, -1)).count == 4 + 3);
}

TEST_CASE("relation audit catches a wrong matrix") {
    const auto p = SuzukiParams::make(1, 2, 1, 1);
    auto v = simple_module(p, SimpleKind::V_jk, 0, 2, 0);
    v.gens[static_cast<int>(Gen::x22)].set(1, 0, Cyc(2));
    CHECK(relation_violation(p, v.gens).has_value());
}
