#include "nforge/errors.hpp"
#include "nforge/yd_radford.hpp"
#include "yd_internal.hpp"

namespace nforge {

namespace {

using G = Gen;

Word X11(int e) { return power(G::x11, e); }
Word X12(int e) { return power(G::x12, e); }
Word chi22(int t) { return chi(G::x22, G::x11, t); }
Word chi21(int t) { return chi(G::x21, G::x12, t); }
Word chi11(int t) { return chi(G::x11, G::x22, t); }
Word chi12(int t) { return chi(G::x12, G::x21, t); }

Cyc sign(int e) { return Cyc(e % 2 == 0 ? 1 : -1); }

bool bit(int x) { return x == 0 || x == 1; }

// Pair of two-term vectors on a two-dimensional simple module or on the same v.
struct TwoTerm {
    std::size_t v1, v2;
    Word w1, w2;
    Cyc c2;
};

BoxSpace::Vec two_term(const BoxSpace& box, const TwoTerm& t) {
    return box.vec({{t.v1, t.w1, Cyc(1)}, {t.v2, t.w2, t.c2}});
}

detail::SpanningSet pair_of(const BoxSpace& box, const TwoTerm& a, const TwoTerm& b) {
    return {{two_term(box, a), two_term(box, b)}, {"w1", "w2"}};
}

// w_r, m_r ladders of the families of dimension 2n built on x11 / x22 alternations.
detail::SpanningSet diagonal_ladder(const BoxSpace& box, const BoxSpace::Vec& w1, const BoxSpace::Vec& m1, int n) {
    detail::SpanningSet out;
    std::vector<BoxSpace::Vec> ms;
    for (int r = 1; r <= n; ++r) {
        const bool even = r % 2 == 0;
        out.vectors.push_back(box.apply_word(even ? chi22(r - 1) : chi11(r - 1), w1));
        ms.push_back(box.apply_word(even ? chi11(r - 1) : chi22(r - 1), m1));
        out.labels.push_back("w" + std::to_string(r));
    }
    for (int r = 1; r <= n; ++r) {
        out.vectors.push_back(ms[r - 1]);
        out.labels.push_back("m" + std::to_string(r));
    }
    return out;
}

detail::SpanningSet off_ladder(const BoxSpace& box, const BoxSpace::Vec& w1, int n) {
    detail::SpanningSet out;
    for (int r = 1; r <= 2 * n; ++r) {
        out.vectors.push_back(box.apply_word(r % 2 == 0 ? chi12(r - 1) : chi21(r - 1), w1));
        out.labels.push_back("w" + std::to_string(r));
    }
    return out;
}

}  // namespace

namespace detail {

SpanningSet family_vectors(const BoxSpace& box, Family f, const FamilyIndices& x) {
    const SuzukiParams& P = box.algebra().params();
    const int N = P.N, n = P.n, s = x.s, t = x.t, j = x.j, k = x.k;
    const Cyc par = sign(x.p);
    auto om = [&](long e) { return P.omega(e); };
    // Twist between v1 and v2 in the families on two-dimensional simple modules.
    const Cyc twist = om(static_cast<long>(j) * N - 4L * k * n);
    switch (f) {
        case Family::A:
        case Family::B:
        case Family::Q:
        case Family::K:
        case Family::L: {
            const std::size_t v = f == Family::L ? 1 : 0;
            BoxSpace::Vec w = box.vec({{v, X11(2 * s), Cyc(1)}, {v, X12(2 * s), par}});
            if (f == Family::A) return {{w}, {"w"}};
            if (f == Family::K || f == Family::L || f == Family::Q) return off_ladder(box, w, n);
            BoxSpace::Vec w2 = box.vec({{0, X11(2 * s), Cyc(1)}, {0, X12(2 * s), Cyc(-1)}});
            return {{w, w2}, {"w1", "w2"}};
        }
        case Family::Abar: {
            const Cyc c = par * P.sqrt_lambda();
            return {{box.vec({{0, concat({X11(2 * s + 1), chi22(2 * n - 1)}), Cyc(1)},
                              {0, concat({X12(2 * s + 1), chi21(2 * n - 1)}), c}})},
                    {"w"}};
        }
        case Family::C: {
            const Cyc r = P.sqrt_sign(x.i + j);
            return pair_of(box,
                           {0, 0, concat({X11(2 * s + 1), chi22(2 * t + 1)}), concat({X12(2 * s + 1), chi21(2 * t + 1)}),
                            par * r},
                           {0, 0, concat({X11(2 * s), chi22(2 * t + 2)}), concat({X12(2 * s), chi21(2 * t + 2)}),
                            par / r});
        }
        case Family::P: {
            const Cyc r = P.sqrt_sign(x.i + j);
            return pair_of(box,
                           {0, 0, concat({X11(2 * s + 1), chi22(2 * t)}), concat({X12(2 * s + 1), chi21(2 * t)}),
                            par / r},
                           {0, 0, concat({X11(2 * s), chi22(2 * t + 1)}), concat({X12(2 * s), chi21(2 * t + 1)}),
                            par * r});
        }
        case Family::D:
            return pair_of(box,
                           {0, 1, concat({X11(2 * s + 1), chi22(2 * t + 1)}), concat({X12(2 * s + 1), chi21(2 * t + 1)}),
                            par * twist},
                           {1, 0, concat({X11(2 * s), chi22(2 * t + 2)}), concat({X12(2 * s), chi21(2 * t + 2)}),
                            par / twist});
        case Family::E:
        case Family::F: {
            const int tt = f == Family::F ? 0 : t;
            return pair_of(box,
                           {0, 1, concat({X11(2 * s), chi22(2 * tt)}), concat({X12(2 * s), chi21(2 * tt)}), par * twist},
                           {1, 0, concat({X11(2 * s), chi11(2 * tt)}), concat({X12(2 * s), chi12(2 * tt)}), par / twist});
        }
        case Family::G:
        case Family::H: {
            const Cyc mt = P.mu_tilde();
            const bool g = f == Family::G;
            const int a1 = g ? 2 * s + 1 : 2 * s, b1 = g ? 2 * t : 2 * t + 1;
            const int a2 = g ? 2 * s : 2 * s + 1, b2 = g ? 2 * t + 1 : 2 * t;
            return pair_of(box, {0, 1, concat({X11(a1), chi22(b1)}), concat({X12(a1), chi21(b1)}), par * twist / mt},
                           {1, 0, concat({X11(a2), chi22(b2)}), concat({X12(a2), chi21(b2)}), par * mt / twist});
        }
        case Family::I:
        case Family::J: {
            const bool i_fam = f == Family::I;
            const Cyc c = par * (i_fam ? om(2L * (static_cast<long>(j) * N - 2L * k * n)) : om(-4L * k * n));
            const BoxSpace::Vec w1 =
                box.vec({{0, i_fam ? X11(2 * s + 1) : X12(2 * s + 1), Cyc(1)}, {1, i_fam ? X11(2 * s + 1) : X12(2 * s + 1), c}});
            const Word mw = i_fam ? concat({X12(2 * s), {G::x21}}) : concat({X11(2 * s), {G::x22}});
            const BoxSpace::Vec m1 = box.vec({{0, mw, Cyc(1)}, {1, mw, c}});
            return diagonal_ladder(box, w1, m1, n);
        }
        case Family::M:
            return diagonal_ladder(box, box.vec({{0, X11(2 * s + 1), Cyc(1)}}),
                                   box.vec({{0, concat({X12(2 * s), {G::x21}}), Cyc(1)}}), n);
        case Family::N:
            return diagonal_ladder(box, box.vec({{0, X12(2 * s + 1), Cyc(1)}}),
                                   box.vec({{0, concat({X11(2 * s), {G::x22}}), Cyc(1)}}), n);
    }
    throw BadIndex("unknown family");
}

}  // namespace detail

SimpleModule underlying_simple(const SuzukiParams& p, Family f, const FamilyIndices& x, IndexMode mode) {
    switch (f) {
        case Family::A: return simple_module(p, SimpleKind::V_ijk, x.i, x.i, x.k, mode);
        case Family::Abar:
        case Family::B:
        case Family::C:
        case Family::M:
        case Family::N: return simple_module(p, SimpleKind::V_ijk, x.i, x.j, x.k, mode);
        case Family::D:
        case Family::E:
        case Family::F:
        case Family::I:
        case Family::J: return simple_module(p, SimpleKind::V_jk, 0, x.j, x.k, mode);
        case Family::G:
        case Family::H:
        case Family::K:
        case Family::L: return simple_module(p, SimpleKind::Vp_jk, 0, x.j, x.k, mode);
        case Family::P:
        case Family::Q: return simple_module(p, SimpleKind::Vp_ijk, x.i, x.j, x.k, mode);
    }
    throw BadIndex("unknown family");
}

bool in_strict_range(const SuzukiParams& P, Family f, const FamilyIndices& x) {
    const int N = P.N, n = P.n;
    const bool lam = P.lambda == 1;
    if (x.k < 0 || x.k >= N || x.s < 1 || x.s > N || !bit(x.p)) return false;
    const bool t_full = x.t >= 0 && x.t < n;
    const bool even_j = x.j % 2 == 0 && x.j / 2 >= 1 && x.j / 2 <= n - 1;
    const bool odd_j = x.j % 2 == 1 && (x.j + 1) / 2 >= 1 && (x.j + 1) / 2 <= n;
    switch (f) {
        case Family::A: return bit(x.i);
        case Family::Abar: return bit(x.i) && x.j == (lam ? x.i : 1 - x.i);
        case Family::B: return x.i == 0 && x.j == 1;
        case Family::C:
            if (x.i != 0 || !bit(x.j)) return false;
            if (x.t >= 0 && x.t <= n - 2) return true;
            return x.t == n - 1 && x.p == 0 && x.j == (lam ? 1 : 0);
        case Family::D:
        case Family::E: return even_j && t_full;
        case Family::G:
        case Family::H: return (lam ? even_j : odd_j) && t_full;
        case Family::P: return lam && x.i == 0 && bit(x.j) && t_full;
        case Family::I: return x.j == 2 || x.j == 4;
        case Family::K: return lam ? (x.j == 2 || x.j == 4) : (x.j == 1 || x.j == 3);
        default: return false;
    }
}

YDModule build_family(const SuzukiAlgebra& algebra, Family f, FamilyIndices idx, IndexMode mode) {
    const SuzukiParams& P = algebra.params();
    const FamilyKey key = make_key(f, idx);
    idx = key.idx;
    if (mode == IndexMode::strict) {
        if (!in_strict_range(P, f, idx)) throw BadIndex(key.str() + " lies outside the classification ranges");
    } else {
        const auto use = index_use(f);
        const bool basic = idx.k >= 0 && idx.k < P.N && idx.s >= 1 && idx.s <= P.N && bit(idx.p) &&
                           (!use.i || bit(idx.i)) && idx.t >= 0 && idx.t < P.n &&
                           (!use.i || bit(idx.j)) && (use.i || !use.j || idx.j >= 1);
        if (!basic) throw BadIndex(key.str() + " has indices outside their domains");
    }
    // The range check above is authoritative; families I and K use j = 2n or 4, beyond the
    // simple module's own strict range, and the module only depends on j mod 4n.
    const BoxSpace box(algebra, underlying_simple(P, f, idx, IndexMode::lax));
    auto span = detail::family_vectors(box, f, idx);
    return module_from_span(box, span.vectors, key, std::move(span.labels));
}

}  // namespace nforge
