#include "nforge/errors.hpp"
#include "nforge/suzuki_hopf.hpp"

#include <sstream>

namespace nforge {

std::string kind_name(SimpleKind k) {
    switch (k) {
        case SimpleKind::V_ijk: return "V_ijk";
        case SimpleKind::Vp_ijk: return "Vp_ijk";
        case SimpleKind::V_jk: return "V_jk";
        case SimpleKind::Vp_jk: return "Vp_jk";
    }
    return "?";
}

std::string SimpleModule::label() const {
    std::ostringstream os;
    os << kind_name(kind) << "(";
    if (kind == SimpleKind::V_ijk || kind == SimpleKind::Vp_ijk) os << "i=" << i << ",";
    os << "j=" << j << ",k=" << k << ")";
    return os.str();
}

namespace {

void check_range(bool ok, const std::string& what) {
    if (!ok) throw BadIndex(what);
}

CycMatrix antidiag(unsigned M, const Cyc& upper, const Cyc& lower) {
    CycMatrix m(2, 2, M);
    m.set(0, 1, upper);
    m.set(1, 0, lower);
    return m;
}

CycMatrix scalar(unsigned M, const Cyc& v) {
    CycMatrix m(1, 1, M);
    m.set(0, 0, v);
    return m;
}

CycMatrix word_matrix(const std::array<CycMatrix, 4>& gens, const Word& w) {
    const std::size_t d = gens[0].rows();
    CycMatrix m = CycMatrix::identity(d, gens[0].order());
    for (Gen g : w) m = m * gens[static_cast<int>(g)];
    return m;
}

}  // namespace

SimpleModule simple_module(const SuzukiParams& p, SimpleKind kind, int i, int j, int k, IndexMode mode) {
    const unsigned M = p.order();
    const bool strict = mode == IndexMode::strict;
    const int N = p.N, n = p.n;
    auto sgn = [](int e) { return (e % 2 == 0) ? 1 : -1; };
    SimpleModule m;
    m.kind = kind;
    m.i = i;
    m.j = j;
    m.k = k;
    if (strict) check_range(k >= 0 && k < N, "k must lie in 0..N-1");
    switch (kind) {
        case SimpleKind::V_ijk: {
            check_range(i >= 0 && i <= 1 && j >= 0 && j <= 1, "i, j must lie in {0,1}");
            m.dim = 1;
            const Cyc base = p.omega(4L * n * k);
            m.gens = {scalar(M, base * Cyc(sgn(i))), CycMatrix(1, 1, M), CycMatrix(1, 1, M),
                      scalar(M, base * Cyc(sgn(j)))};
            break;
        }
        case SimpleKind::Vp_ijk: {
            check_range(i >= 0 && i <= 1 && j >= 0 && j <= 1, "i, j must lie in {0,1}");
            if (strict) check_range(p.lambda == 1, "V'_ijk exists only for lambda = 1");
            m.dim = 1;
            const Cyc base = p.omega(4L * n * k) * p.mu_tilde();
            m.gens = {CycMatrix(1, 1, M), scalar(M, base * Cyc(sgn(i))), scalar(M, base * Cyc(sgn(j))),
                      CycMatrix(1, 1, M)};
            break;
        }
        case SimpleKind::V_jk: {
            if (strict) check_range(j % 2 == 0 && j / 2 >= 1 && j / 2 <= n - 1, "V_jk needs j/2 in 1..n-1");
            m.dim = 2;
            m.gens = {antidiag(M, p.omega(2L * (4L * k * n - static_cast<long>(j) * N)), p.omega(2L * j * N)),
                      CycMatrix(2, 2, M), CycMatrix(2, 2, M), antidiag(M, p.omega(8L * k * n), Cyc(1))};
            break;
        }
        case SimpleKind::Vp_jk: {
            if (strict) {
                if (p.lambda == 1) check_range(j % 2 == 0 && j / 2 >= 1 && j / 2 <= n - 1, "V'_jk needs j/2 in 1..n-1");
                else check_range(j % 2 != 0 && (j + 1) / 2 >= 1 && (j + 1) / 2 <= n, "V'_jk needs (j+1)/2 in 1..n");
            }
            m.dim = 2;
            const Cyc mb = p.mu_bar();
            m.gens = {CycMatrix(2, 2, M), antidiag(M, mb * p.omega(8L * k * n), Cyc(1)),
                      antidiag(M, mb * p.omega(2L * (4L * k * n - static_cast<long>(j) * N)), p.omega(2L * j * N)),
                      CycMatrix(2, 2, M)};
            break;
        }
    }
    return m;
}

CycMatrix word_action(const SimpleModule& m, const Word& w) { return word_matrix(m.gens, w); }

std::optional<std::string> relation_violation(const SuzukiParams& p, const std::array<CycMatrix, 4>& gens) {
    const std::size_t d = gens[0].rows();
    const unsigned M = gens[0].order();
    auto W = [&](const Word& w) { return word_matrix(gens, w); };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const Gen ga = static_cast<Gen>(a), gb = static_cast<Gen>(b);
            if ((gen_row(ga) + gen_col(ga) + gen_row(gb) + gen_col(gb)) % 2 == 0) continue;
            if (!W({ga, gb}).is_zero()) return gen_name(ga) + "*" + gen_name(gb) + " != 0";
        }
    if (!(W({Gen::x11, Gen::x11}) == W({Gen::x22, Gen::x22}))) return std::string("x11^2 != x22^2");
    if (!(W({Gen::x12, Gen::x12}) == W({Gen::x21, Gen::x21}))) return std::string("x12^2 != x21^2");
    const int L = p.length();
    if (!(W(chi(Gen::x21, Gen::x12, L)) == W(chi(Gen::x12, Gen::x21, L)).scaled(Cyc(p.lambda))))
        return std::string("chi21^2n != lambda chi12^2n");
    if (!(W(chi(Gen::x11, Gen::x22, L)) == W(chi(Gen::x22, Gen::x11, L))))
        return std::string("chi11^2n != chi22^2n");
    const CycMatrix unit = W(power(Gen::x11, 2 * p.N)) + W(power(Gen::x12, 2 * p.N)).scaled(Cyc(p.mu));
    if (!(unit == CycMatrix::identity(d, M))) return std::string("x11^2N + mu x12^2N != 1");
    return std::nullopt;
}

SimpleCensus simple_census(const SuzukiParams& p) {
    SimpleCensus c;
    c.expected = p.dim();
    auto take = [&](SimpleModule m) {
        c.relations_ok = c.relations_ok && !relation_violation(p, m.gens);
        c.sum_of_squares += m.dim * m.dim;
        ++c.count;
        c.modules.push_back(std::move(m));
    };
    for (int k = 0; k < p.N; ++k) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                take(simple_module(p, SimpleKind::V_ijk, i, j, k));
                if (p.lambda == 1) take(simple_module(p, SimpleKind::Vp_ijk, i, j, k));
            }
        for (int h = 1; h <= p.n - 1; ++h) take(simple_module(p, SimpleKind::V_jk, 0, 2 * h, k));
        if (p.lambda == 1)
            for (int h = 1; h <= p.n - 1; ++h) take(simple_module(p, SimpleKind::Vp_jk, 0, 2 * h, k));
        else
            for (int h = 1; h <= p.n; ++h) take(simple_module(p, SimpleKind::Vp_jk, 0, 2 * h - 1, k));
    }
    return c;
}

}  // namespace nforge
