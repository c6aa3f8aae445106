#include "nforge/suzuki_hopf.hpp"

#include "nforge/errors.hpp"

#include <algorithm>
#include <sstream>

namespace nforge {

SuzukiParams SuzukiParams::make(int N, int n, int mu, int lambda) {
    if (N < 1 || n < 1) throw BadIndex("N and n must be positive");
    if ((mu != 1 && mu != -1) || (lambda != 1 && lambda != -1)) throw BadIndex("mu and lambda must be +1 or -1");
    return {N, n, mu, lambda};
}

std::string SuzukiParams::label() const {
    std::ostringstream os;
    os << "N=" << N << " n=" << n << " mu=" << (mu == 1 ? '+' : '-') << " lambda=" << (lambda == 1 ? '+' : '-');
    return os.str();
}

std::string gen_name(Gen g) {
    static const char* names[] = {"x11", "x12", "x21", "x22"};
    return names[static_cast<int>(g)];
}

std::string BasisWord::str() const {
    std::ostringstream os;
    if (branch == Branch::diagonal) os << "x11^" << s << "*chi22^" << t;
    else os << "x12^" << s << "*chi21^" << t;
    return os.str();
}

void add_term(AlgebraElement& e, const BasisWord& w, const Cyc& c) {
    auto it = e.find(w);
    if (it == e.end()) {
        if (!c.is_zero()) e.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
}

Word chi(Gen first, Gen second, int t) {
    Word w;
    for (int q = 0; q < t; ++q) w.push_back(q % 2 == 0 ? first : second);
    return w;
}

Word power(Gen g, int e) { return Word(static_cast<std::size_t>(std::max(e, 0)), g); }

Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

SuzukiAlgebra::SuzukiAlgebra(const SuzukiParams& params) : params_(params) {
    for (auto br : {Branch::diagonal, Branch::off_diagonal})
        for (int s = 1; s <= 2 * params_.N; ++s)
            for (int t = 0; t < params_.length(); ++t) basis_.push_back({br, s, t});
    const std::size_t D = basis_.size();
    table_.resize(D * D);
    for (std::size_t a = 0; a < D; ++a) {
        const Word wa = word_of(basis_[a]);
        for (std::size_t b = 0; b < D; ++b) table_[a * D + b] = rewrite(concat({wa, word_of(basis_[b])}));
    }
}

std::size_t SuzukiAlgebra::index(const BasisWord& w) const {
    const int N = params_.N, L = params_.length();
    if (w.s < 1 || w.s > 2 * N || w.t < 0 || w.t >= L) throw BadIndex("basis word out of range: " + w.str());
    return static_cast<std::size_t>((static_cast<int>(w.branch) * 2 * N + (w.s - 1)) * L + w.t);
}

Word SuzukiAlgebra::word_of(const BasisWord& w) const { return letters_of(w); }

Word letters_of(const BasisWord& w) {
    if (w.branch == Branch::diagonal) return concat({power(Gen::x11, w.s), chi(Gen::x22, Gen::x11, w.t)});
    return concat({power(Gen::x12, w.s), chi(Gen::x21, Gen::x12, w.t)});
}

namespace {

struct Rewriter {
    int N, L;
    int powc, altc;
    std::string alt_ba, alt_ab;

    Rewriter(int N_, int L_, int powc_, int altc_) : N(N_), L(L_), powc(powc_), altc(altc_) {
        for (int i = 0; i < L / 2; ++i) alt_ba += "ba", alt_ab += "ab";
    }

    std::size_t leading_a(const std::string& s) const {
        std::size_t i = 0;
        while (i < s.size() && s[i] == 'a') ++i;
        return i;
    }

    // One rewrite step; false when the word is irreducible.
    bool step(std::string& s, int& sign, RuleOrder order) const {
        auto find = [&](const std::string& pat) {
            return order == RuleOrder::leftmost_first ? s.find(pat) : s.rfind(pat);
        };
        auto squares = [&] {
            auto pos = find("bb");
            if (pos == std::string::npos) return false;
            s.replace(pos, 2, "aa");
            return true;
        };
        auto commute = [&] {
            auto pos = find("baa");
            if (pos == std::string::npos) return false;
            s.replace(pos, 3, "aab");
            return true;
        };
        auto alternating = [&] {
            auto pos = find(alt_ba);
            if (pos == std::string::npos) return false;
            s.replace(pos, alt_ba.size(), alt_ab);
            sign *= altc;
            return true;
        };
        auto unit_power = [&] {
            if (leading_a(s) <= static_cast<std::size_t>(2 * N)) return false;
            s.erase(0, static_cast<std::size_t>(2 * N));
            sign *= powc;
            return true;
        };
        if (order == RuleOrder::leftmost_first) return squares() || commute() || alternating() || unit_power();
        return unit_power() || alternating() || commute() || squares();
    }
};

}  // namespace

SignedWord SuzukiAlgebra::rewrite(const Word& w, RuleOrder order) const {
    if (w.empty()) throw BadIndex("the empty word is the unit, not a basis word");
    auto is_off = [](Gen g) { return g == Gen::x12 || g == Gen::x21; };
    const bool off = is_off(w.front());
    for (Gen g : w)
        if (is_off(g) != off) return {};  // parity annihilation
    const Gen a = off ? Gen::x12 : Gen::x11;
    std::string s;
    for (Gen g : w) s += (g == a) ? 'a' : 'b';
    int sign = 1;
    const int powc = off ? params_.mu : 1;
    const Rewriter rw(params_.N, params_.length(), powc, off ? params_.lambda : 1);
    if (s.front() == 'b') {
        // b = (a^{2N} + mu' (other branch)^{2N}) b, and the other branch dies by parity.
        s.insert(0, static_cast<std::size_t>(2 * params_.N), 'a');
        sign *= powc;
    }
    while (rw.step(s, sign, order)) {
    }
    const std::size_t lead = rw.leading_a(s);
    const int t = static_cast<int>(s.size() - lead);
    return {sign, {off ? Branch::off_diagonal : Branch::diagonal, static_cast<int>(lead), t}};
}

AlgebraElement SuzukiAlgebra::unit() const {
    AlgebraElement u;
    u.emplace(BasisWord{Branch::diagonal, 2 * params_.N, 0}, Cyc(1));
    u.emplace(BasisWord{Branch::off_diagonal, 2 * params_.N, 0}, Cyc(params_.mu));
    return u;
}

AlgebraElement SuzukiAlgebra::normalize_word(const Word& w) const {
    if (w.empty()) return unit();
    auto sw = rewrite(w);
    AlgebraElement e;
    if (!sw.is_zero()) e.emplace(sw.word, Cyc(sw.sign));
    return e;
}

AlgebraElement SuzukiAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            auto p = product(wa, wb);
            if (p.is_zero()) continue;
            add_term(out, p.word, ca * cb * Cyc(p.sign));
        }
    return out;
}

SignedWord SuzukiAlgebra::letter(Gen g) const { return rewrite({g}); }

std::array<SuzukiAlgebra::CoproductTerm, 2> SuzukiAlgebra::coproduct(const BasisWord& w) const {
    const Word word = word_of(w);
    std::array<CoproductTerm, 2> out{};
    for (int flip = 0; flip < 2; ++flip) {
        Word left, right;
        for (Gen g : word) {
            const int i = gen_row(g), j = gen_col(g);
            const int k = flip ? 1 - i : i;
            left.push_back(gen_at(i, k));
            right.push_back(gen_at(k, j));
        }
        auto l = rewrite(left), r = rewrite(right);
        out[flip] = {l.sign * r.sign, l.word, r.word};
    }
    return out;
}

Word SuzukiAlgebra::antipode_word(const Word& w) const {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const Gen transposed = gen_at(gen_col(*it), gen_row(*it));
        auto p = power(transposed, 4 * params_.N - 1);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

SignedWord SuzukiAlgebra::antipode(const BasisWord& w) const { return rewrite(antipode_word(word_of(w))); }

namespace {

struct AltResult {
    int a_power;  // extra power of the leading letter
    int t;
    int sign;
};

// alt_b(t) * a in normal form.
AltResult alt_times_a(int t, int L, int altc) {
    if (t == 0) return {1, 0, 1};
    if (t % 2 == 1) {
        if (t + 1 < L) return {0, t + 1, 1};
        return {1, L - 1, altc};  // (ba)^n = altc (ab)^n
    }
    return {2, t - 1, 1};  // ...ba * a = ...b * a^2
}

// alt_b(T) for T < 2L in normal form.
AltResult reduce_alt(int T, int L, int altc) {
    if (T < L) return {0, T, 1};
    return {1 + 2 * (T - L), 2 * L - 1 - T, altc};
}

}  // namespace

SignedWord closed_form_product(const SuzukiParams& p, const BasisWord& x, const BasisWord& y) {
    if (x.branch != y.branch) return {};
    const bool off = x.branch == Branch::off_diagonal;
    const int powc = off ? p.mu : 1, altc = off ? p.lambda : 1;
    const int L = p.length(), N = p.N;
    int sign = 1;
    // z = a^2 is central, so even powers of a move to the front.
    int S = x.s + 2 * (y.s / 2);
    int t1 = x.t;
    if (y.s % 2 == 1) {
        auto r = alt_times_a(t1, L, altc);
        S += r.a_power;
        t1 = r.t;
        sign *= r.sign;
    }
    const int t2 = y.t;
    int T;
    if (t1 % 2 == 0) {
        T = t1 + t2;
    } else {
        const int m = std::min(t1, t2);
        S += 2 * m;  // each cancelled pair bb or aa contributes z
        if (t1 >= t2) {
            T = t1 - t2;
        } else {
            S += 1;
            T = t2 - t1 - 1;
        }
    }
    auto r = reduce_alt(T, L, altc);
    S += r.a_power;
    sign *= r.sign;
    while (S > 2 * N) {
        S -= 2 * N;
        sign *= powc;
    }
    return {sign, {x.branch, S, r.t}};
}

namespace {

using Tensor2 = std::map<std::pair<std::size_t, std::size_t>, long>;
using Tensor3 = std::map<std::array<std::size_t, 3>, long>;

void bump(Tensor2& t, std::size_t a, std::size_t b, long c) {
    if (c == 0) return;
    auto& v = t[{a, b}];
    v += c;
    if (v == 0) t.erase({a, b});
}

void bump(Tensor3& t, std::array<std::size_t, 3> k, long c) {
    if (c == 0) return;
    auto& v = t[k];
    v += c;
    if (v == 0) t.erase(k);
}

}  // namespace

HopfReport verify_hopf(const SuzukiParams& p, std::size_t bound) {
    if (p.dim() > bound)
        throw BoundExceeded("algebra dimension " + std::to_string(p.dim()) + " exceeds bound " + std::to_string(bound));
    const SuzukiAlgebra A(p);
    const std::size_t D = A.dim();
    const auto& B = A.basis();
    HopfReport rep;
    rep.params = p;
    rep.dim = D;
    auto record = [&](AxiomResult r) {
        rep.pass = rep.pass && r.pass;
        rep.axioms.push_back(std::move(r));
    };

    {
        AxiomResult r{.name = "basis_normal_forms", .pass = true, .counterexample = {}};
        if (D != p.dim()) r.pass = false, r.counterexample = "basis size " + std::to_string(D);
        for (const auto& b : B) {
            auto sw = A.rewrite(A.word_of(b));
            if (sw.sign != 1 || !(sw.word == b)) {
                r.pass = false;
                r.counterexample = b.str();
                break;
            }
        }
        record(r);
    }
    {
        AxiomResult r{.name = "closed_form_agrees_with_rewriting", .pass = true, .counterexample = {}};
        AxiomResult c{.name = "rewrite_confluence", .pass = true, .counterexample = {}};
        for (const auto& x : B) {
            for (const auto& y : B) {
                auto t = A.product(x, y);
                if (r.pass && !(closed_form_product(p, x, y) == t))
                    r.pass = false, r.counterexample = x.str() + " * " + y.str();
                auto alt = A.rewrite(concat({A.word_of(x), A.word_of(y)}), RuleOrder::rightmost_reverse_priority);
                if (c.pass && !(alt == t)) c.pass = false, c.counterexample = x.str() + " * " + y.str();
            }
        }
        record(r);
        record(c);
    }
    {
        AxiomResult r{.name = "associativity", .pass = true, .counterexample = {}};
        for (std::size_t a = 0; a < D && r.pass; ++a)
            for (std::size_t b = 0; b < D && r.pass; ++b) {
                auto ab = A.product(B[a], B[b]);
                for (std::size_t c = 0; c < D; ++c) {
                    auto bc = A.product(B[b], B[c]);
                    SignedWord left = ab.is_zero() ? SignedWord{} : A.product(ab.word, B[c]);
                    left.sign *= ab.sign;
                    SignedWord right = bc.is_zero() ? SignedWord{} : A.product(B[a], bc.word);
                    right.sign *= bc.sign;
                    if (!(left == right)) {
                        r.pass = false;
                        r.counterexample = "(" + B[a].str() + ")(" + B[b].str() + ")(" + B[c].str() + ")";
                        break;
                    }
                }
            }
        record(r);
    }
    const AlgebraElement one = A.unit();
    {
        AxiomResult r{.name = "unit", .pass = true, .counterexample = {}};
        for (const auto& b : B) {
            AlgebraElement e{{b, Cyc(1)}};
            if (!(A.multiply(one, e) == e) || !(A.multiply(e, one) == e)) {
                r.pass = false;
                r.counterexample = b.str();
                break;
            }
        }
        record(r);
    }
    {
        AxiomResult r{.name = "coassociativity", .pass = true, .counterexample = {}};
        for (const auto& b : B) {
            Tensor3 lhs, rhs;
            for (const auto& t : A.coproduct(b)) {
                for (const auto& u : A.coproduct(t.left))
                    bump(lhs, {A.index(u.left), A.index(u.right), A.index(t.right)}, t.sign * u.sign);
                for (const auto& u : A.coproduct(t.right))
                    bump(rhs, {A.index(t.left), A.index(u.left), A.index(u.right)}, t.sign * u.sign);
            }
            if (lhs != rhs) {
                r.pass = false;
                r.counterexample = b.str();
                break;
            }
        }
        record(r);
    }
    {
        AxiomResult r{.name = "counit", .pass = true, .counterexample = {}};
        for (const auto& b : B) {
            std::map<std::size_t, long> l, rr;
            for (const auto& t : A.coproduct(b)) {
                l[A.index(t.right)] += t.sign * A.counit(t.left);
                rr[A.index(t.left)] += t.sign * A.counit(t.right);
            }
            std::erase_if(l, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(rr, [](const auto& kv) { return kv.second == 0; });
            std::map<std::size_t, long> want{{A.index(b), 1}};
            if (l != want || rr != want) {
                r.pass = false;
                r.counterexample = b.str();
                break;
            }
        }
        record(r);
    }
    {
        AxiomResult r{.name = "coproduct_multiplicative", .pass = true, .counterexample = {}};
        AxiomResult e{.name = "counit_multiplicative", .pass = true, .counterexample = {}};
        for (std::size_t a = 0; a < D && (r.pass || e.pass); ++a)
            for (std::size_t b = 0; b < D; ++b) {
                auto ab = A.product(B[a], B[b]);
                const long eps_ab = ab.is_zero() ? 0 : ab.sign * A.counit(ab.word);
                if (e.pass && eps_ab != A.counit(B[a]) * A.counit(B[b]))
                    e.pass = false, e.counterexample = B[a].str() + " * " + B[b].str();
                Tensor2 lhs, rhs;
                if (!ab.is_zero())
                    for (const auto& t : A.coproduct(ab.word))
                        bump(lhs, A.index(t.left), A.index(t.right), ab.sign * t.sign);
                for (const auto& x : A.coproduct(B[a]))
                    for (const auto& y : A.coproduct(B[b])) {
                        auto l = A.product(x.left, y.left), rr = A.product(x.right, y.right);
                        if (l.is_zero() || rr.is_zero()) continue;
                        bump(rhs, A.index(l.word), A.index(rr.word), x.sign * y.sign * l.sign * rr.sign);
                    }
                if (r.pass && lhs != rhs) r.pass = false, r.counterexample = B[a].str() + " * " + B[b].str();
            }
        // Delta(1) = 1 (x) 1
        const std::vector<std::pair<BasisWord, long>> unit_terms{
            {{Branch::diagonal, 2 * p.N, 0}, 1}, {{Branch::off_diagonal, 2 * p.N, 0}, p.mu}};
        Tensor2 d1, want;
        for (const auto& [w, c] : unit_terms)
            for (const auto& t : A.coproduct(w)) bump(d1, A.index(t.left), A.index(t.right), c * t.sign);
        for (const auto& [w1, c1] : unit_terms)
            for (const auto& [w2, c2] : unit_terms) bump(want, A.index(w1), A.index(w2), c1 * c2);
        if (r.pass && d1 != want) r.pass = false, r.counterexample = "Delta(1)";
        record(r);
        record(e);
    }
    {
        AxiomResult r{.name = "antipode", .pass = true, .counterexample = {}};
        for (const auto& b : B) {
            AlgebraElement left, right;
            for (const auto& t : A.coproduct(b)) {
                auto sl = A.antipode(t.left);
                auto pl = sl.is_zero() ? SignedWord{} : A.product(sl.word, t.right);
                if (!pl.is_zero()) add_term(left, pl.word, Cyc(t.sign * sl.sign * pl.sign));
                auto sr = A.antipode(t.right);
                auto pr = sr.is_zero() ? SignedWord{} : A.product(t.left, sr.word);
                if (!pr.is_zero()) add_term(right, pr.word, Cyc(t.sign * sr.sign * pr.sign));
            }
            AlgebraElement want = A.counit(b) ? one : AlgebraElement{};
            if (!(left == want) || !(right == want)) {
                r.pass = false;
                r.counterexample = b.str();
                break;
            }
        }
        record(r);
    }
    return rep;
}

}  // namespace nforge
