#include "nforge/errors.hpp"
#include "nforge/yd_radford.hpp"

#include <sstream>

namespace nforge {

namespace {

void accumulate(BoxSpace::Vec& v, std::size_t idx, const Cyc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.try_emplace(idx, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
}

SignedWord times(const SuzukiAlgebra& a, const SignedWord& x, const SignedWord& y) {
    if (x.is_zero() || y.is_zero()) return {};
    SignedWord r = a.product(x.word, y.word);
    r.sign *= x.sign * y.sign;
    return r;
}

}  // namespace

BoxSpace::BoxSpace(const SuzukiAlgebra& algebra, SimpleModule module)
    : algebra_(&algebra), module_(std::move(module)) {
    const std::size_t D = algebra.dim();
    std::array<SignedWord, 4> letters, antipodes;
    for (int g = 0; g < 4; ++g) {
        letters[g] = algebra.letter(static_cast<Gen>(g));
        antipodes[g] = algebra.rewrite(algebra.antipode_word({static_cast<Gen>(g)}));
    }
    for (int g = 0; g < 4; ++g) {
        const int p = gen_row(static_cast<Gen>(g)), q = gen_col(static_cast<Gen>(g));
        auto& images = action_[g];
        images.assign(dim(), Vec{});
        for (std::size_t v = 0; v < module_.dim; ++v)
            for (std::size_t bi = 0; bi < D; ++bi) {
                Vec& out = images[v * D + bi];
                const SignedWord b{1, algebra.basis()[bi]};
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        const SignedWord w =
                            times(algebra, times(algebra, letters[2 * p + k], b), antipodes[2 * l + q]);
                        if (w.is_zero()) continue;
                        const CycMatrix& h2 = module_.action(gen_at(k, l));
                        const std::size_t target = algebra.index(w.word);
                        for (std::size_t u = 0; u < module_.dim; ++u) {
                            Cyc c = h2.get(u, v);
                            if (c.is_zero()) continue;
                            accumulate(out, u * D + target, c * Cyc(w.sign));
                        }
                    }
            }
    }
}

BoxSpace::Vec BoxSpace::act_radford(Gen g, std::size_t v, const BasisWord& b) const {
    const std::size_t D = algebra_->dim();
    const int p = gen_row(g), q = gen_col(g);
    Vec out;
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
            const Word w = concat({{gen_at(p, k)}, algebra_->word_of(b), algebra_->antipode_word({gen_at(l, q)})});
            const SignedWord r = algebra_->rewrite(w);
            if (r.is_zero()) continue;
            const CycMatrix& h2 = module_.action(gen_at(k, l));
            for (std::size_t u = 0; u < module_.dim; ++u) {
                Cyc c = h2.get(u, v);
                if (!c.is_zero()) accumulate(out, u * D + algebra_->index(r.word), c * Cyc(r.sign));
            }
        }
    return out;
}

BoxSpace::Vec BoxSpace::vec(const std::vector<Term>& terms) const {
    Vec out;
    const std::size_t D = algebra_->dim();
    for (const auto& t : terms) {
        if (t.v >= module_.dim) throw BadIndex("module vector index out of range");
        const SignedWord r = algebra_->rewrite(t.word);
        if (r.is_zero()) continue;
        accumulate(out, t.v * D + algebra_->index(r.word), t.coeff * Cyc(r.sign));
    }
    return out;
}

BoxSpace::Vec BoxSpace::apply(Gen g, const Vec& x) const {
    Vec out;
    for (const auto& [idx, c] : x)
        for (const auto& [k, a] : action_[static_cast<int>(g)][idx]) accumulate(out, k, c * a);
    return out;
}

BoxSpace::Vec BoxSpace::apply_word(const Word& w, const Vec& x) const {
    Vec cur = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply(*it, cur);
    return cur;
}

std::map<BasisWord, BoxSpace::Vec> BoxSpace::coaction(const Vec& x) const {
    std::map<BasisWord, Vec> out;
    const std::size_t D = algebra_->dim();
    for (const auto& [idx, c] : x) {
        const std::size_t v = idx / D;
        for (const auto& t : algebra_->coproduct(algebra_->basis()[idx % D])) {
            if (t.sign == 0) continue;
            accumulate(out[t.left], v * D + algebra_->index(t.right), c * Cyc(t.sign));
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

std::string BoxSpace::describe(const Vec& x) const {
    std::ostringstream os;
    const std::size_t D = algebra_->dim();
    bool first = true;
    for (const auto& [idx, c] : x) {
        os << (first ? "" : " + ") << "(" << c.str() << ")v" << idx / D + 1 << "#" << algebra_->basis()[idx % D].str();
        first = false;
    }
    return first ? "0" : os.str();
}

SpanCoordinates::SpanCoordinates(std::vector<BoxSpace::Vec> spanning, unsigned order)
    : spanning_(std::move(spanning)) {
    const std::size_t d = spanning_.size();
    std::vector<BoxSpace::Vec> reduced;
    for (const auto& w : spanning_) {
        BoxSpace::Vec r = w;
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            auto it = r.find(pivots_[i]);
            if (it == r.end()) continue;
            const Cyc f = it->second / reduced[i].at(pivots_[i]);
            for (const auto& [k, x] : reduced[i]) accumulate(r, k, -(f * x));
        }
        if (r.empty()) throw NotClosed("spanning vectors are linearly dependent");
        pivots_.push_back(r.begin()->first);
        reduced.push_back(std::move(r));
    }
    CycMatrix g(d, d, order);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t i = 0; i < d; ++i) {
            auto it = spanning_[i].find(pivots_[a]);
            if (it != spanning_[i].end()) g.set(a, i, it->second);
        }
    auto inv = inverse(g);
    if (!inv) throw NotClosed("pivot block is singular");
    pivot_inverse_ = std::move(*inv);
}

std::optional<CycVector> SpanCoordinates::coords(const BoxSpace::Vec& x) const {
    const std::size_t d = spanning_.size();
    CycVector xp(d, Cyc::zero(pivot_inverse_.order()));
    for (std::size_t a = 0; a < d; ++a) {
        auto it = x.find(pivots_[a]);
        if (it != x.end()) xp[a] = it->second;
    }
    CycVector c = pivot_inverse_.apply(xp);
    BoxSpace::Vec back;
    for (std::size_t i = 0; i < d; ++i)
        if (!c[i].is_zero())
            for (const auto& [k, v] : spanning_[i]) accumulate(back, k, c[i] * v);
    if (back.size() != x.size()) return std::nullopt;
    for (const auto& [k, v] : x) {
        auto it = back.find(k);
        if (it == back.end() || !(it->second == v)) return std::nullopt;
    }
    return c;
}

YDModule module_from_span(const BoxSpace& box, const std::vector<BoxSpace::Vec>& spanning, FamilyKey key,
                          std::vector<std::string> labels) {
    YDModule m;
    m.params = box.algebra().params();
    m.key = key;
    m.dim = spanning.size();
    m.labels = std::move(labels);
    m.base = box.module();
    m.box_vectors = spanning;
    const unsigned M = box.order();
    const SpanCoordinates sc(spanning, M);
    for (int g = 0; g < 4; ++g) {
        CycMatrix a(m.dim, m.dim, M);
        for (std::size_t i = 0; i < m.dim; ++i) {
            auto c = sc.coords(box.apply(static_cast<Gen>(g), spanning[i]));
            if (!c)
                throw NotClosed(key.str() + ": " + gen_name(static_cast<Gen>(g)) + " moves " + m.labels[i] +
                                " outside the span");
            for (std::size_t r = 0; r < m.dim; ++r) a.set(r, i, (*c)[r]);
        }
        m.action[g] = std::move(a);
    }
    m.coaction.resize(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (const auto& [word, y] : box.coaction(spanning[i])) {
            auto c = sc.coords(y);
            if (!c) throw NotClosed(key.str() + ": coaction of " + m.labels[i] + " leaves the span at " + word.str());
            m.coaction[i].push_back({word, std::move(*c)});
        }
    return m;
}

CycMatrix module_word_action(const YDModule& m, const Word& w) {
    CycMatrix r = CycMatrix::identity(m.dim, m.params.order());
    for (Gen g : w) r = r * m.act(g);
    return r;
}

namespace {

using Key2 = std::pair<BasisWord, std::size_t>;
using Key3 = std::tuple<BasisWord, BasisWord, std::size_t>;

template <class K>
void bump(std::map<K, Cyc>& m, const K& k, const Cyc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
}

template <class K>
bool same(const std::map<K, Cyc>& a, const std::map<K, Cyc>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        if (it == b.end() || !(it->second == v)) return false;
    }
    return true;
}

}  // namespace

YDReport yd_compat_check(const SuzukiAlgebra& algebra, const YDModule& m) {
    YDReport rep;
    auto fail = [&](std::string check, std::string detail) {
        rep.pass = false;
        rep.failed_check = std::move(check);
        rep.detail = std::move(detail);
        return rep;
    };
    if (auto v = relation_violation(m.params, m.action)) return fail("module relations", *v);

    const unsigned M = m.params.order();
    for (std::size_t i = 0; i < m.dim; ++i) {
        // Counit: (eps (x) id) rho(e_i) = e_i.
        CycVector back(m.dim, Cyc::zero(M));
        for (const auto& t : m.coaction[i])
            if (algebra.counit(t.word) != 0)
                for (std::size_t l = 0; l < m.dim; ++l) back[l] += t.coeffs[l];
        for (std::size_t l = 0; l < m.dim; ++l)
            if (!(back[l] == Cyc(l == i ? 1 : 0))) return fail("counit", "at " + m.labels[i]);
        // Coassociativity.
        std::map<Key3, Cyc> lhs, rhs;
        for (const auto& t : m.coaction[i]) {
            for (const auto& d : algebra.coproduct(t.word)) {
                if (d.sign == 0) continue;
                for (std::size_t l = 0; l < m.dim; ++l) bump(lhs, Key3{d.left, d.right, l}, t.coeffs[l] * Cyc(d.sign));
            }
            for (std::size_t l = 0; l < m.dim; ++l) {
                if (t.coeffs[l].is_zero()) continue;
                for (const auto& u : m.coaction[l])
                    for (std::size_t r = 0; r < m.dim; ++r) bump(rhs, Key3{t.word, u.word, r}, t.coeffs[l] * u.coeffs[r]);
            }
        }
        if (!same(lhs, rhs)) return fail("coassociativity", "at " + m.labels[i]);
    }

    // delta(h v) = h_(1) v_(-1) S(h_(3)) (x) h_(2) v_(0) for the generators h = x_pq.
    std::array<SignedWord, 4> letters, antipodes;
    for (int g = 0; g < 4; ++g) {
        letters[g] = algebra.letter(static_cast<Gen>(g));
        antipodes[g] = algebra.rewrite(algebra.antipode_word({static_cast<Gen>(g)}));
    }
    for (int g = 0; g < 4; ++g) {
        const int p = gen_row(static_cast<Gen>(g)), q = gen_col(static_cast<Gen>(g));
        for (std::size_t i = 0; i < m.dim; ++i) {
            std::map<Key2, Cyc> lhs, rhs;
            for (std::size_t u = 0; u < m.dim; ++u) {
                const Cyc a = m.action[g].get(u, i);
                if (a.is_zero()) continue;
                for (const auto& t : m.coaction[u])
                    for (std::size_t l = 0; l < m.dim; ++l) bump(lhs, Key2{t.word, l}, a * t.coeffs[l]);
            }
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    const CycMatrix& mid = m.act(gen_at(k, l));
                    for (const auto& t : m.coaction[i]) {
                        SignedWord w = times(algebra, times(algebra, letters[2 * p + k], {1, t.word}),
                                             antipodes[2 * l + q]);
                        if (w.is_zero()) continue;
                        const CycVector moved = mid.apply(t.coeffs);
                        for (std::size_t r = 0; r < m.dim; ++r) bump(rhs, Key2{w.word, r}, moved[r] * Cyc(w.sign));
                    }
                }
            if (!same(lhs, rhs))
                return fail("yetter-drinfeld compatibility",
                            "h=" + gen_name(static_cast<Gen>(g)) + ", v=" + m.labels[i]);
        }
    }
    return rep;
}

BraidedSpace braiding_of(const YDModule& m) {
    BraidedSpace b(m.dim, m.params.order());
    b.labels = m.labels;
    std::map<BasisWord, CycMatrix> cache;
    for (std::size_t x = 0; x < m.dim; ++x)
        for (const auto& t : m.coaction[x]) {
            auto it = cache.find(t.word);
            if (it == cache.end()) {
                it = cache.emplace(t.word, module_word_action(m, letters_of(t.word))).first;
            }
            const CycMatrix& h = it->second;
            for (const auto& [rc, hv] : h.entries()) {
                const auto [k, y] = rc;
                for (std::size_t l = 0; l < m.dim; ++l)
                    if (!t.coeffs[l].is_zero()) b.add(x, y, k, l, hv * t.coeffs[l]);
            }
        }
    return b;
}

namespace {

std::vector<CycMatrix> coaction_matrices(const YDModule& m, const std::set<BasisWord>& words) {
    std::vector<CycMatrix> out;
    for (const auto& w : words) {
        CycMatrix c(m.dim, m.dim, m.params.order());
        for (std::size_t i = 0; i < m.dim; ++i)
            for (const auto& t : m.coaction[i])
                if (t.word == w)
                    for (std::size_t l = 0; l < m.dim; ++l) c.set(l, i, t.coeffs[l]);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

std::optional<CycMatrix> find_intertwiner(const YDModule& from, const YDModule& to) {
    if (from.dim != to.dim || !(from.params == to.params)) return std::nullopt;
    const std::size_t d = from.dim;
    const unsigned M = from.params.order();
    std::set<BasisWord> words;
    for (const auto* m : {&from, &to})
        for (const auto& terms : m->coaction)
            for (const auto& t : terms) words.insert(t.word);
    std::vector<CycMatrix> A(from.action.begin(), from.action.end());
    std::vector<CycMatrix> B(to.action.begin(), to.action.end());
    auto ca = coaction_matrices(from, words), cb = coaction_matrices(to, words);
    A.insert(A.end(), ca.begin(), ca.end());
    B.insert(B.end(), cb.begin(), cb.end());

    // Unknown T(r, c) sits at r * d + c; each pair gives T A - B T = 0.
    CycMatrix sys(A.size() * d * d, d * d, M);
    std::size_t row = 0;
    for (std::size_t e = 0; e < A.size(); ++e)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c, ++row) {
                for (std::size_t x = 0; x < d; ++x) {
                    Cyc a = A[e].get(x, c);
                    if (!a.is_zero()) sys.add(row, r * d + x, a);
                    Cyc b = B[e].get(r, x);
                    if (!b.is_zero()) sys.add(row, x * d + c, -b);
                }
            }
    const auto ker = kernel_basis(sys);
    if (ker.empty()) return std::nullopt;
    auto as_matrix = [&](const CycVector& v) {
        CycMatrix t(d, d, M);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) t.set(r, c, v[r * d + c]);
        return t;
    };
    std::vector<CycVector> candidates = ker;
    CycVector mix(d * d, Cyc::zero(M));
    for (std::size_t b = 0; b < ker.size(); ++b)
        for (std::size_t x = 0; x < d * d; ++x) mix[x] += ker[b][x] * Cyc(static_cast<long>(b + 1));
    candidates.push_back(mix);
    for (const auto& v : candidates) {
        CycMatrix t = as_matrix(v);
        if (rank_exact(t) == d) return t;
    }
    return std::nullopt;
}

}  // namespace nforge
