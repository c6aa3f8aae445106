#include "nforge/errors.hpp"
#include "nforge/nichols_engine.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace nforge {

void TensorElement::add(const std::vector<std::uint32_t>& word, const Cyc& c) {
    if (degree == 0 && terms.empty()) degree = word.size();
    if (word.size() != degree) throw BadIndex("tensor terms of mixed degree");
    if (c.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(word, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

std::string TensorElement::str(const BraidedSpace& b) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        os << (first ? "" : " + ") << "(" << c.str() << ")";
        for (auto x : w) os << " " << b.label(x);
        first = false;
    }
    return first ? "0" : os.str();
}

std::size_t tensor_index(const std::vector<std::uint32_t>& word, std::size_t d) {
    std::size_t idx = 0;
    for (auto x : word) idx = idx * d + x;
    return idx;
}

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::exact: return "exact";
        case Engine::modular: return "modular";
        case Engine::sketch: return "sketch";
    }
    return "?";
}

std::size_t DegreeDims::total() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

namespace {

std::size_t ipow(std::size_t d, std::size_t k, std::size_t bound) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > bound / std::max<std::size_t>(d, 1)) throw BoundExceeded("d^k exceeds the bound " + std::to_string(bound));
        r *= d;
    }
    if (r > bound) throw BoundExceeded("d^k exceeds the bound " + std::to_string(bound));
    return r;
}

void check_entries(std::size_t rows, std::size_t D, const DimsOptions& opts) {
    if (rows > opts.max_entries / D)
        throw BoundExceeded(std::to_string(rows) + " candidates of length " + std::to_string(D) +
                            " exceed the entry bound " + std::to_string(opts.max_entries));
}

CycMatrix local_braiding(const BraidedSpace& b, std::size_t k, int pos) {
    const std::size_t d = b.dim();
    const std::size_t D = ipow(d, k, std::numeric_limits<std::size_t>::max());
    const std::size_t stride = ipow(d, k - pos - 2, std::numeric_limits<std::size_t>::max());
    CycMatrix m(D, D, b.order());
    for (std::size_t idx = 0; idx < D; ++idx) {
        const std::size_t x = (idx / (stride * d)) % d, y = (idx / stride) % d;
        const std::size_t base = idx - (x * d + y) * stride;
        for (const auto& t : b.image(x, y)) m.add(base + (t.k * d + t.l) * stride, idx, t.coeff);
    }
    return m;
}

// ---- modular kernels ------------------------------------------------------

struct ModBraid {
    std::size_t d = 0;
    std::uint64_t p = 0;
    struct Term {
        std::uint32_t kl;  // k * d + l
        std::uint64_t c;
    };
    std::vector<std::vector<Term>> images;  // (x * d + y)

    ModBraid(const BraidedSpace& b, const ModPrime& mp) : d(b.dim()), p(mp.p), images(d * d) {
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y)
                for (const auto& t : b.image(x, y))
                    images[x * d + y].push_back(
                        {static_cast<std::uint32_t>(t.k * d + t.l), reduce_mod_p(t.coeff, mp)});
    }

    // c at factors (pos, pos+1) of a k-tensor.
    void apply(const std::vector<std::uint64_t>& in, std::vector<std::uint64_t>& out, std::size_t stride) const {
        std::fill(out.begin(), out.end(), 0);
        for (std::size_t idx = 0; idx < in.size(); ++idx) {
            const std::uint64_t v = in[idx];
            if (!v) continue;
            const std::size_t xy = (idx / stride) % (d * d);
            const std::size_t base = idx - xy * stride;
            for (const auto& t : images[xy]) {
                std::uint64_t& o = out[base + t.kl * stride];
                o = modp::add(o, modp::mul(v, t.c, p), p);
            }
        }
    }

    // T_m = 1 + c_{m-2} + c_{m-3}c_{m-2} + ... on the first m factors of a k-tensor (0-based c).
    std::vector<std::uint64_t> apply_T(std::vector<std::uint64_t> v, std::size_t m, std::size_t k) const {
        std::vector<std::uint64_t> sum = v, tmp(v.size());
        for (int pos = static_cast<int>(m) - 2; pos >= 0; --pos) {
            std::size_t stride = 1;
            for (std::size_t i = 0; i + pos + 2 < k; ++i) stride *= d;
            apply(v, tmp, stride);
            std::swap(v, tmp);
            for (std::size_t i = 0; i < v.size(); ++i) sum[i] = modp::add(sum[i], v[i], p);
        }
        return sum;
    }
};

std::vector<std::size_t> modular_dims(const BraidedSpace& b, std::size_t kmax, const ModPrime& mp,
                                      const DimsOptions& opts, std::vector<bool>* lower, bool sketch) {
    const ModBraid mb(b, mp);
    const std::size_t d = b.dim();
    std::vector<std::size_t> dims{1};
    std::vector<modp::Row> basis{modp::Row{1}};
    if (lower) lower->assign(1, false);
    std::mt19937_64 rng(static_cast<std::uint64_t>(opts.seed) * 7919u + 17u);
    for (std::size_t k = 1; k <= kmax; ++k) {
        if (dims.back() == 0) {
            dims.push_back(0);
            if (lower) lower->push_back(false);
            continue;
        }
        const std::size_t D = ipow(d, k, opts.bound);
        if (sketch && k >= opts.sketch_from) {
            // Black-box S_k = T_k (T_{k-1} (x) 1) ... (T_2 (x) 1 ...), probed at random vectors.
            const ModMatvec matvec = [&](const std::vector<std::uint64_t>& in, std::vector<std::uint64_t>& out) {
                std::vector<std::uint64_t> v = in;
                for (std::size_t m = 2; m <= k; ++m) v = mb.apply_T(std::move(v), m, k);
                out = std::move(v);
            };
            const std::size_t r = std::min(D, dims.back() * d);
            dims.push_back(randomized_rank_lower_bound(matvec, D, r, rng(), mp));
            if (lower) lower->push_back(true);
            basis.clear();
            // Later exact degrees would need a basis; the sketch path stays a sketch.
            continue;
        }
        if (basis.empty()) throw BoundExceeded("exact degree after a sketched degree");
        check_entries(basis.size() * d, D, opts);
        std::vector<modp::Row> cands(basis.size() * d);
        const long n_cand = static_cast<long>(cands.size());
#pragma omp parallel for schedule(dynamic) if (opts.exec == modp::Exec::parallel)
        for (long c = 0; c < n_cand; ++c) {
            const std::size_t u = static_cast<std::size_t>(c) / d, j = static_cast<std::size_t>(c) % d;
            modp::Row v(D, 0);
            const auto& row = basis[u];
            for (std::size_t i = 0; i < row.size(); ++i)
                if (row[i]) v[i * d + j] = row[i];
            cands[c] = mb.apply_T(std::move(v), k, k);
        }
        modp::Echelon ech(mp.p);
        for (auto& v : cands) ech.insert(std::move(v));
        dims.push_back(ech.rank());
        basis = ech.rows();
        if (lower) lower->push_back(false);
    }
    return dims;
}

// ---- exact kernels --------------------------------------------------------

using Sparse = CycEchelon::SparseVec;

void bump(Sparse& v, std::size_t i, const Cyc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.try_emplace(i, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
}

Sparse apply_c(const BraidedSpace& b, const Sparse& in, std::size_t stride) {
    const std::size_t d = b.dim();
    Sparse out;
    for (const auto& [idx, v] : in) {
        const std::size_t x = (idx / (stride * d)) % d, y = (idx / stride) % d;
        const std::size_t base = idx - (x * d + y) * stride;
        for (const auto& t : b.image(x, y)) bump(out, base + (t.k * d + t.l) * stride, v * t.coeff);
    }
    return out;
}

Sparse apply_T(const BraidedSpace& b, Sparse v, std::size_t m, std::size_t k) {
    const std::size_t d = b.dim();
    Sparse sum = v;
    for (int pos = static_cast<int>(m) - 2; pos >= 0; --pos) {
        std::size_t stride = 1;
        for (std::size_t i = 0; i + pos + 2 < k; ++i) stride *= d;
        v = apply_c(b, v, stride);
        for (const auto& [i, c] : v) bump(sum, i, c);
    }
    return sum;
}

std::vector<std::size_t> exact_dims(const BraidedSpace& b, std::size_t kmax, const DimsOptions& opts) {
    const std::size_t d = b.dim();
    std::vector<std::size_t> dims{1};
    std::vector<Sparse> basis{Sparse{{0, Cyc::one(b.order())}}};
    for (std::size_t k = 1; k <= kmax; ++k) {
        if (dims.back() == 0) {
            dims.push_back(0);
            continue;
        }
        check_entries(basis.size() * d, ipow(d, k, opts.bound), opts);
        std::vector<Sparse> cands(basis.size() * d);
        const long n_cand = static_cast<long>(cands.size());
#pragma omp parallel for schedule(dynamic) if (opts.exec == modp::Exec::parallel)
        for (long c = 0; c < n_cand; ++c) {
            const std::size_t u = static_cast<std::size_t>(c) / d, j = static_cast<std::size_t>(c) % d;
            Sparse v;
            for (const auto& [i, x] : basis[u]) v.emplace(i * d + j, x);
            cands[c] = apply_T(b, std::move(v), k, k);
        }
        CycEchelon ech;
        for (auto& v : cands) ech.insert(std::move(v));
        dims.push_back(ech.rank());
        basis = ech.rows();
    }
    return dims;
}

}  // namespace

std::vector<int> reduced_word(std::vector<int> sigma) {
    const std::size_t k = sigma.size();
    std::vector<int> word;
    for (;;) {
        std::vector<int> inv(k);
        for (std::size_t a = 0; a < k; ++a) inv.at(sigma[a]) = static_cast<int>(a);
        int found = -1;
        for (std::size_t i = 0; i + 1 < k; ++i)
            if (inv[i] > inv[i + 1]) {
                found = static_cast<int>(i);
                break;
            }
        if (found < 0) return word;
        word.push_back(found);
        for (auto& x : sigma)
            if (x == found) x = found + 1;
            else if (x == found + 1) x = found;
    }
}

CycMatrix braided_lift_word(const BraidedSpace& b, std::size_t k, const std::vector<int>& word) {
    const std::size_t D = ipow(b.dim(), k, std::numeric_limits<std::size_t>::max());
    CycMatrix m = CycMatrix::identity(D, b.order());
    for (int pos : word) {
        if (pos < 0 || static_cast<std::size_t>(pos) + 1 >= k) throw BadIndex("braid position out of range");
        m = m * local_braiding(b, k, pos);
    }
    return m;
}

CycMatrix braided_lift(const BraidedSpace& b, const std::vector<int>& sigma) {
    std::vector<int> check = sigma;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i)
        if (check[i] != static_cast<int>(i)) throw BadIndex("not a permutation");
    return braided_lift_word(b, sigma.size(), reduced_word(sigma));
}

CycMatrix symmetrizer(const BraidedSpace& b, std::size_t k, std::size_t bound) {
    const std::size_t D = ipow(b.dim(), k, bound);
    std::vector<CycMatrix> locals;
    for (std::size_t i = 0; i + 1 < k; ++i) locals.push_back(local_braiding(b, k, static_cast<int>(i)));
    std::vector<int> id(k);
    std::iota(id.begin(), id.end(), 0);
    // Level by length: T_{s_i sigma} = c_i T_sigma whenever the length grows.
    std::map<std::vector<int>, CycMatrix> level{{id, CycMatrix::identity(D, b.order())}};
    std::set<std::vector<int>> seen{id};
    CycMatrix sum = CycMatrix::identity(D, b.order());
    while (!level.empty()) {
        std::map<std::vector<int>, CycMatrix> next;
        for (const auto& [sigma, lift] : level) {
            std::vector<int> inv(k);
            for (std::size_t a = 0; a < k; ++a) inv[sigma[a]] = static_cast<int>(a);
            for (std::size_t i = 0; i + 1 < k; ++i) {
                if (inv[i] > inv[i + 1]) continue;
                std::vector<int> tau = sigma;
                for (auto& x : tau)
                    if (x == static_cast<int>(i)) x = static_cast<int>(i + 1);
                    else if (x == static_cast<int>(i + 1)) x = static_cast<int>(i);
                if (!seen.insert(tau).second) continue;
                CycMatrix m = locals[i] * lift;
                sum = sum + m;
                next.emplace(std::move(tau), std::move(m));
            }
        }
        level = std::move(next);
    }
    return sum;
}

DegreeDims degree_dims(const BraidedSpace& b, std::size_t kmax, Engine engine, const DimsOptions& opts) {
    DegreeDims r;
    r.engine = engine;
    if (engine == Engine::exact) {
        r.dims = exact_dims(b, kmax, opts);
        r.lower_bound.assign(r.dims.size(), false);
    } else {
        const ModPrime p1 = choose_prime(b.order(), opts.seed), p2 = choose_prime(b.order(), opts.seed + 1);
        std::vector<bool> lb1, lb2;
        const bool sketch = engine == Engine::sketch;
        r.dims = modular_dims(b, kmax, p1, opts, &lb1, sketch);
        const auto second = modular_dims(b, kmax, p2, opts, &lb2, sketch);
        r.primes = {p1.p, p2.p};
        for (std::size_t k = 0; k < r.dims.size(); ++k) {
            if (lb1[k]) {
                r.dims[k] = std::max(r.dims[k], second[k]);
            } else if (r.dims[k] != second[k]) {
                throw BadPrime("ranks disagree in degree " + std::to_string(k) + " between primes " +
                               std::to_string(p1.p) + " and " + std::to_string(p2.p));
            }
        }
        r.lower_bound = lb1;
    }
    r.terminated = std::find(r.dims.begin(), r.dims.end(), 0u) != r.dims.end();
    return r;
}

std::vector<std::size_t> brute_force_dims(const BraidedSpace& b, std::size_t kmax, std::size_t bound) {
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k <= kmax; ++k) {
        if (!dims.empty() && dims.back() == 0) {
            dims.push_back(0);
            continue;
        }
        dims.push_back(k == 0 ? 1 : rank_exact(symmetrizer(b, k, bound)));
    }
    return dims;
}

std::vector<std::size_t> shuffle_dims(const QMatrix& q, std::size_t kmax) {
    const std::size_t d = q.dim;
    unsigned M = 1;
    for (const auto& x : q.q) M = static_cast<unsigned>(lcm_order(M, x.order()));
    std::vector<std::size_t> dims{1};
    for (std::size_t k = 1; k <= kmax; ++k) {
        // Words grouped by letter multiset; S_k preserves each group.
        std::map<std::vector<std::uint32_t>, std::vector<std::vector<std::uint32_t>>> blocks;
        std::vector<std::uint32_t> w(k, 0);
        for (;;) {
            auto key = w;
            std::sort(key.begin(), key.end());
            blocks[key].push_back(w);
            std::size_t pos = k;
            while (pos > 0 && w[pos - 1] + 1 == d) w[--pos] = 0;
            if (pos == 0) break;
            ++w[pos - 1];
        }
        std::vector<int> perm(k);
        std::size_t total = 0;
        for (const auto& [key, words] : blocks) {
            std::map<std::vector<std::uint32_t>, std::size_t> pos_of;
            for (std::size_t i = 0; i < words.size(); ++i) pos_of[words[i]] = i;
            CycMatrix m(words.size(), words.size(), M);
            for (std::size_t c = 0; c < words.size(); ++c) {
                const auto& src = words[c];
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    Cyc coeff = Cyc::one(M);
                    for (std::size_t a = 0; a < k; ++a)
                        for (std::size_t bb = a + 1; bb < k; ++bb)
                            if (perm[a] > perm[bb]) coeff *= q.at(src[a], src[bb]);
                    std::vector<std::uint32_t> out(k);
                    for (std::size_t a = 0; a < k; ++a) out[perm[a]] = src[a];
                    m.add(pos_of.at(out), c, coeff);
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
            total += rank_exact(m);
        }
        dims.push_back(total);
    }
    return dims;
}

TensorElement apply_symmetrizer(const BraidedSpace& b, const TensorElement& x) {
    const std::size_t d = b.dim(), k = x.degree;
    Sparse v;
    for (const auto& [w, c] : x.terms) bump(v, tensor_index(w, d), c);
    for (std::size_t m = 2; m <= k; ++m) v = apply_T(b, std::move(v), m, k);
    TensorElement out;
    out.degree = k;
    for (const auto& [idx, c] : v) {
        std::vector<std::uint32_t> w(k);
        std::size_t r = idx;
        for (std::size_t i = k; i-- > 0;) {
            w[i] = static_cast<std::uint32_t>(r % d);
            r /= d;
        }
        out.terms.emplace(std::move(w), c);
    }
    return out;
}

bool relation_in_kernel(const BraidedSpace& b, const TensorElement& rel, std::size_t bound) {
    ipow(b.dim(), rel.degree, bound);
    return apply_symmetrizer(b, rel).is_zero();
}

std::vector<std::size_t> product_series(const std::vector<std::pair<int, int>>& factors) {
    std::vector<std::size_t> c{1};
    for (const auto& [e, m] : factors)
        for (int r = 0; r < m; ++r) {
            std::vector<std::size_t> n(c.size() + e, 0);
            for (std::size_t i = 0; i < c.size(); ++i) {
                n[i] += c[i];
                n[i + e] += c[i];
            }
            c = std::move(n);
        }
    return c;
}

HilbertReport hilbert_report(const BraidedSpace& b, const HilbertOptions& opts) {
    HilbertReport r;
    r.dims = degree_dims(b, opts.kmax, opts.engine, opts.dims);
    std::size_t acc = 0;
    for (auto x : r.dims.dims) r.partial_sums.push_back(acc += x);
    const bool sketched = std::find(r.dims.lower_bound.begin(), r.dims.lower_bound.end(), true) !=
                          r.dims.lower_bound.end();
    r.provenance = opts.engine == Engine::exact ? "exact" : sketched ? "sketch-lower-bound" : "modular-confirmed";
    if (opts.compare_series) {
        bool ok = true;
        for (std::size_t k = 0; k < r.dims.dims.size(); ++k) {
            const std::size_t want = k < opts.compare_series->size() ? (*opts.compare_series)[k] : 0;
            if (r.dims.lower_bound[k] ? r.dims.dims[k] > want : r.dims.dims[k] != want) ok = false;
        }
        r.series_match = ok;
    }
    return r;
}

}  // namespace nforge
