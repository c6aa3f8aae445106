#include "doctest.h"
#include "nforge/braided_analysis.hpp"
#include "nforge/errors.hpp"
#include "nforge/nichols_engine.hpp"
#include "nforge/yd_radford.hpp"

using namespace nforge;

namespace {

QMatrix constant_q(std::size_t d, const Cyc& q) { return QMatrix{d, std::vector<Cyc>(d * d, q)}; }

}  // namespace

TEST_CASE("braid equation") {
    CHECK(check_braid_equation(diagonal_braiding(constant_q(3, Cyc::root(5, 2)))).pass);
    CHECK(check_braid_equation(make_vabe(Cyc(1), Cyc(1), Cyc(1))).pass);
    CHECK(check_braid_equation(make_vabe(Cyc::root(7, 1), Cyc::root(7, 3), Cyc::root(7, 5))).pass);
    CHECK(check_braid_equation(make_vabe(Cyc(1), Cyc(1), Cyc(1)), modp::Exec::serial).pass);
}

TEST_CASE("a corrupted constant breaks the braid equation") {
    BraidedSpace b = make_vabe(Cyc::root(4, 1), Cyc(-1), Cyc(1));
    BraidedSpace bad(2, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (const auto& t : b.image(i, j)) bad.add(i, j, t.k, t.l, (i == 0 && j == 1) ? Cyc::root(4, 1) : t.coeff);
    const auto r = check_braid_equation(bad);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.first_mismatch.empty());
}

TEST_CASE("diagonal detection") {
    const auto q = detect_diagonal(diagonal_braiding(constant_q(2, Cyc::root(3, 1))));
    REQUIRE(q);
    for (const auto& x : q->q) CHECK(x == Cyc::root(3, 1));
    const auto flip = detect_diagonal(diagonal_braiding(constant_q(3, Cyc(1))));
    REQUIRE(flip);
    for (const auto& x : flip->q) CHECK(x.is_one());
    CHECK_FALSE(detect_diagonal(make_vabe(Cyc::root(3, 1), Cyc(-1), Cyc(1))).has_value());
}

TEST_CASE("Dynkin diagrams") {
    const Cyc q = Cyc::root(3, 1);
    const auto d = dynkin(constant_q(2, q));
    CHECK(d.vertices == std::vector<Cyc>{q, q});
    REQUIRE(d.edges.size() == 1);
    CHECK(d.edges[0].label == q * q);
    CHECK(dynkin(constant_q(2, Cyc(-1))).edges.empty());
}

TEST_CASE("V_abe detection and its normal form") {
    const Cyc a = Cyc::root(12, 5), b = Cyc::root(12, 3), e = Cyc::root(12, 2);
    const auto v = detect_vabe(make_vabe(a, b, e));
    REQUIRE(v);
    CHECK(v->a == a);
    CHECK(v->b == b);
    CHECK(v->e == e);
    CHECK_FALSE(detect_vabe(diagonal_braiding(constant_q(2, Cyc::root(3, 1)))).has_value());

    // v1 -> sqrt(e) v1 intertwines V_{ae,b,1} with V_{a,b,e}
    const Cyc root_e = Cyc::root(12, 1);
    const CycMatrix c = braided_lift_word(make_vabe(a, b, e), 2, {0});
    const CycMatrix c1 = braided_lift_word(make_vabe(a * e, b, Cyc(1)), 2, {0});
    CycMatrix phi(4, 4, 12);
    phi.set(0, 0, e);
    phi.set(1, 1, root_e);
    phi.set(2, 2, root_e);
    phi.set(3, 3, Cyc(1));
    CHECK(phi * c1 == c * phi);
}

TEST_CASE("racks") {
    const auto flip = extract_rack(diagonal_braiding(constant_q(3, Cyc::root(3, 1))));
    REQUIRE(flip);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) CHECK(flip->rack.act(x, y) == y);
    CHECK(flip->rack.self_distributive());
    CHECK_FALSE(extract_rack(make_vabe(Cyc::root(3, 1), Cyc(-1), Cyc(1))).has_value());
    const SuzukiAlgebra a(SuzukiParams::make(1, 3, 1, 1));
    const auto b = braiding_of(build_family(a, Family::I, {0, 2, 0, 0, 1, 0}));
    const auto rb = extract_rack(b);
    REQUIRE(rb);
    CHECK(rb->rack.self_distributive());
    CHECK(rack_braiding(*rb, b.order()) == b);
}

TEST_CASE("type D needs two parts") {
    const auto rb = extract_rack(diagonal_braiding(constant_q(2, Cyc(-1))));
    REQUIRE(rb);
    CHECK_FALSE(is_type_D(rb->rack).has_value());
    CHECK(type_D_search_exhaustive(rb->rack));
}
