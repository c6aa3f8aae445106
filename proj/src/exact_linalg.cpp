#include "nforge/exact_linalg.hpp"

#include "nforge/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace nforge {

CycMatrix::CycMatrix(std::size_t rows, std::size_t cols, unsigned order) : rows_(rows), cols_(cols), order_(order) {}

CycMatrix CycMatrix::identity(std::size_t n, unsigned order) {
    CycMatrix m(n, n, order);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Cyc::one(order));
    return m;
}

void CycMatrix::raise_order(unsigned target) {
    if (target == order_) return;
    for (auto& [k, v] : entries_) v = v.promoted(target);
    order_ = target;
}

void CycMatrix::set(std::size_t r, std::size_t c, const Cyc& v) {
    if (r >= rows_ || c >= cols_) throw BadIndex("matrix index out of range");
    if (v.is_zero()) {
        entries_.erase({r, c});
        return;
    }
    if (order_ % v.order() != 0) raise_order(static_cast<unsigned>(lcm_order(order_, v.order())));
    entries_.insert_or_assign(Key{r, c}, v.promoted(order_));
}

void CycMatrix::add(std::size_t r, std::size_t c, const Cyc& v) {
    if (v.is_zero()) return;
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        set(r, c, v);
        return;
    }
    Cyc s = it->second + v;
    set(r, c, s);
}

Cyc CycMatrix::get(std::size_t r, std::size_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Cyc::zero(order_) : it->second;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_) throw BadIndex("matrix product shape mismatch");
    CycMatrix out(rows_, o.cols_, static_cast<unsigned>(lcm_order(order_, o.order_)));
    // Row-indexed view of the right factor.
    std::vector<std::vector<std::pair<std::size_t, const Cyc*>>> by_row(o.rows_);
    for (const auto& [k, v] : o.entries_) by_row[k.first].push_back({k.second, &v});
    for (const auto& [k, v] : entries_)
        for (const auto& [c, w] : by_row[k.second]) out.add(k.first, c, v * *w);
    return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw BadIndex("matrix sum shape mismatch");
    CycMatrix out = *this;
    for (const auto& [k, v] : o.entries_) out.add(k.first, k.second, v);
    return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const { return *this + o.scaled(Cyc(-1)); }

CycMatrix CycMatrix::scaled(const Cyc& s) const {
    CycMatrix out(rows_, cols_, order_);
    for (const auto& [k, v] : entries_) out.set(k.first, k.second, v * s);
    return out;
}

CycVector CycMatrix::apply(const CycVector& v) const {
    if (v.size() != cols_) throw BadIndex("matrix-vector shape mismatch");
    CycVector out(rows_, Cyc::zero(order_));
    for (const auto& [k, x] : entries_)
        if (!v[k.second].is_zero()) out[k.first] += x * v[k.second];
    return out;
}

CycVector CycMatrix::column(std::size_t c) const {
    CycVector out(rows_, Cyc::zero(order_));
    for (const auto& [k, x] : entries_)
        if (k.second == c) out[k.first] = x;
    return out;
}

std::vector<CycVector> CycMatrix::dense_rows() const {
    std::vector<CycVector> a(rows_, CycVector(cols_, Cyc::zero(order_)));
    for (const auto& [k, v] : entries_) a[k.first][k.second] = v;
    return a;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return (a - b).is_zero();
}

namespace {

std::size_t row_weight(const CycVector& r, std::size_t from) {
    std::size_t w = 0;
    for (std::size_t k = from; k < r.size(); ++k) w += !r[k].is_zero();
    return w;
}

// Bareiss-style elimination on a dense buffer: row_i <- (p*row_i - a_ic*row_r)/prev.
std::size_t rank_dense_bareiss(std::vector<CycVector> a, std::size_t cols, PivotStrategy strategy) {
    const std::size_t rows = a.size();
    std::size_t r = 0;
    Cyc prev_inv = Cyc(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        std::size_t best = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            if (strategy == PivotStrategy::first_nonzero) {
                piv = i;
                break;
            }
            std::size_t w = row_weight(a[i], c);
            if (piv == rows || w < best) piv = i, best = w;
        }
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const Cyc p = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Cyc f = a[i][c];
            if (f.is_zero()) {
                if (!(p * prev_inv).is_one())
                    for (std::size_t k = c + 1; k < cols; ++k)
                        if (!a[i][k].is_zero()) a[i][k] = a[i][k] * p * prev_inv;
                continue;
            }
            for (std::size_t k = c + 1; k < cols; ++k) {
                Cyc v = a[i][k] * p;
                if (!a[r][k].is_zero()) v -= f * a[r][k];
                a[i][k] = v * prev_inv;
            }
            a[i][c] = Cyc::zero(a[i][c].order());
        }
        prev_inv = p.inv();
        ++r;
    }
    return r;
}

using SparseRow = std::map<std::size_t, Cyc>;

std::size_t rank_sparse(const CycMatrix& m, PivotStrategy strategy) {
    std::vector<SparseRow> rows(m.rows());
    for (const auto& [k, v] : m.entries()) rows[k.first].emplace(k.second, v);
    std::vector<bool> used(rows.size(), false);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t piv = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || !rows[i].count(c)) continue;
            if (strategy == PivotStrategy::first_nonzero) {
                piv = i;
                break;
            }
            if (piv == rows.size() || rows[i].size() < rows[piv].size()) piv = i;
        }
        if (piv == rows.size()) continue;
        used[piv] = true;
        ++rank;
        const Cyc s = rows[piv].at(c).inv();
        for (auto& [k, v] : rows[piv]) v *= s;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i]) continue;
            auto it = rows[i].find(c);
            if (it == rows[i].end()) continue;
            const Cyc f = it->second;
            for (const auto& [k, v] : rows[piv]) {
                Cyc nv = rows[i].count(k) ? rows[i][k] - f * v : -(f * v);
                if (nv.is_zero()) rows[i].erase(k);
                else rows[i][k] = nv;
            }
        }
    }
    return rank;
}

struct Rref {
    std::vector<CycVector> a;
    std::vector<std::size_t> pivots;
};

Rref rref(std::vector<CycVector> a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        const Cyc s = a[r][c].inv();
        for (auto& x : a[r])
            if (!x.is_zero()) x *= s;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Cyc f = a[i][c];
            for (std::size_t k = 0; k < a[i].size(); ++k)
                if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return {std::move(a), std::move(pivots)};
}

}  // namespace

std::size_t rank_exact(const CycMatrix& m, PivotStrategy strategy) {
    if (m.entries().empty()) return 0;
    if (m.cols() < 512) return rank_dense_bareiss(m.dense_rows(), m.cols(), strategy);
    return rank_sparse(m, strategy);
}

std::vector<CycVector> kernel_basis(const CycMatrix& m) {
    auto [a, pivots] = rref(m.dense_rows(), m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<CycVector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        CycVector v(m.cols(), Cyc::zero(m.order()));
        v[f] = Cyc::one(m.order());
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<CycVector> solve(const CycMatrix& m, const CycVector& b) {
    auto rows = m.dense_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(b[i]);
    auto [a, pivots] = rref(std::move(rows), m.cols() + 1);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    CycVector x(m.cols(), Cyc::zero(m.order()));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][m.cols()];
    return x;
}

std::optional<CycMatrix> inverse(const CycMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    auto rows = m.dense_rows();
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].resize(2 * n, Cyc::zero(m.order()));
        rows[i][n + i] = Cyc::one(m.order());
    }
    auto [a, pivots] = rref(std::move(rows), n);
    if (pivots.size() != n) return std::nullopt;
    CycMatrix out(n, n, m.order());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, a[i][n + j]);
    return out;
}

void CycEchelon::reduce(SparseVec& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        auto it = v.find(pivots_[i]);
        if (it == v.end()) continue;
        const Cyc f = it->second;
        for (const auto& [k, x] : rows_[i]) {
            auto jt = v.find(k);
            Cyc nv = jt == v.end() ? -(f * x) : jt->second - f * x;
            if (nv.is_zero()) v.erase(k);
            else v[k] = std::move(nv);
        }
    }
}

bool CycEchelon::insert(SparseVec v) {
    for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
    reduce(v);
    if (v.empty()) return false;
    const std::size_t c = v.begin()->first;
    const Cyc s = v.begin()->second.inv();
    for (auto& [k, x] : v) x *= s;
    for (auto& r : rows_) {
        auto it = r.find(c);
        if (it == r.end()) continue;
        const Cyc f = it->second;
        for (const auto& [k, x] : v) {
            auto jt = r.find(k);
            Cyc nv = jt == r.end() ? -(f * x) : jt->second - f * x;
            if (nv.is_zero()) r.erase(k);
            else r[k] = std::move(nv);
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    return true;
}

bool CycEchelon::contains(SparseVec v) const {
    for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
    reduce(v);
    return v.empty();
}

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull})
        if (n % q == 0) return n == q;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = modp::pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = modp::mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= m; ++q) {
        if (m % q) continue;
        out.push_back(q);
        while (m % q == 0) m /= q;
    }
    if (m > 1) out.push_back(m);
    return out;
}

bool has_exact_order(std::uint64_t rho, unsigned M, std::uint64_t p) {
    if (modp::pow(rho, M, p) != 1) return false;
    for (auto q : prime_factors(M))
        if (modp::pow(rho, M / q, p) == 1) return false;
    return true;
}

}  // namespace

ModPrime choose_prime(unsigned M, int seed) {
    if (M == 0) throw BadIndex("order must be positive");
    constexpr std::uint64_t lower = 1ull << 20;
    std::uint64_t t = lower / M + 1;
    int skip = std::max(seed, 0);
    for (std::uint64_t iter = 0; iter < 10'000'000; ++iter, ++t) {
        const std::uint64_t p = 1 + t * M;
        if (p >= (1ull << 32)) break;
        if (p <= lower || !is_prime_u64(p)) continue;
        if (skip-- > 0) continue;
        for (std::uint64_t g = 2; g < p; ++g) {
            const std::uint64_t rho = modp::pow(g, (p - 1) / M, p);
            if (has_exact_order(rho, M, p)) return {p, rho, M};
        }
    }
    throw SearchExhausted("no prime found for order " + std::to_string(M));
}

ModPrime validate_prime(unsigned M, std::uint64_t p, std::uint64_t rho) {
    if (p < 3 || p >= (1ull << 32) || !is_prime_u64(p)) throw BadPrime(std::to_string(p) + " is not a usable prime");
    if ((p - 1) % M != 0) throw BadPrime(std::to_string(p) + " is not 1 mod " + std::to_string(M));
    if (!has_exact_order(rho % p, M, p)) throw BadPrime("residue does not have exact order " + std::to_string(M));
    return {p, rho % p, M};
}

std::uint64_t reduce_mod_p(const Cyc& x, const ModPrime& mp) {
    const unsigned m = x.order();
    if (mp.M % m != 0)
        throw BadPrime("scalar order " + std::to_string(m) + " does not divide " + std::to_string(mp.M));
    const std::uint64_t p = mp.p;
    const std::uint64_t z = modp::pow(mp.rho, mp.M / m, p);
    std::uint64_t acc = 0, zi = 1;
    for (const auto& q : x.coords()) {
        if (sgn(q) != 0) {
            mpz_class num = q.get_num() % static_cast<unsigned long>(p);
            if (num < 0) num += static_cast<unsigned long>(p);
            mpz_class den = q.get_den() % static_cast<unsigned long>(p);
            if (den == 0) throw DenominatorCollision("denominator vanishes modulo " + std::to_string(p));
            std::uint64_t v = modp::mul(num.get_ui(), modp::inv(den.get_ui(), p), p);
            acc = modp::add(acc, modp::mul(v, zi, p), p);
        }
        zi = modp::mul(zi, z, p);
    }
    return acc;
}

std::size_t mod_p_rank(const CycMatrix& m, const ModPrime& mp, modp::Exec exec) {
    std::vector<std::uint64_t> a(m.rows() * m.cols(), 0);
    for (const auto& [k, v] : m.entries()) a[k.first * m.cols() + k.second] = reduce_mod_p(v, mp);
    return modp::rank_dense(std::move(a), m.rows(), m.cols(), mp.p, exec);
}

std::size_t mod_p_rank(const CycMatrix& m, std::uint64_t p, std::uint64_t rho) {
    return mod_p_rank(m, validate_prime(m.order(), p, rho));
}

std::size_t randomized_rank_lower_bound(const ModMatvec& apply, std::size_t D, std::size_t r, std::uint64_t seed,
                                        const ModPrime& mp) {
    if (r > D) throw BadIndex("sketch size exceeds dimension");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, mp.p - 1);
    std::vector<std::vector<std::uint64_t>> Y(r);
    std::vector<std::uint64_t> in(D), out(D);
    for (std::size_t j = 0; j < r; ++j) {
        for (auto& x : in) x = dist(rng);
        std::fill(out.begin(), out.end(), 0);
        apply(in, out);
        Y[j] = out;
    }
    std::vector<std::uint64_t> C(r * r, 0);
    std::vector<std::uint64_t> arow(D);
    for (std::size_t i = 0; i < r; ++i) {
        for (auto& x : arow) x = dist(rng);
        for (std::size_t j = 0; j < r; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < D; ++k)
                if (arow[k] && Y[j][k]) acc = modp::add(acc, modp::mul(arow[k], Y[j][k], mp.p), mp.p);
            C[i * r + j] = acc;
        }
    }
    return modp::rank_dense(std::move(C), r, r, mp.p, modp::Exec::serial);
}

}  // namespace nforge
