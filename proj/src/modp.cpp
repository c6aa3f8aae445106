#include "nforge/modp.hpp"

#include <algorithm>

namespace nforge::modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

namespace {

// Eliminate column `col` from rows [from, rows) using the pivot row at `piv`.
void eliminate_below(std::vector<std::uint64_t>& a, std::size_t cols, std::size_t piv, std::size_t from,
                     std::size_t rows, std::size_t col, std::uint64_t p, Exec exec) {
    const std::uint64_t* pr = &a[piv * cols];
    const auto n = static_cast<long>(rows);
    auto body = [&](long i) {
        std::uint64_t* ri = &a[static_cast<std::size_t>(i) * cols];
        const std::uint64_t f = ri[col];
        if (f == 0) return;
        for (std::size_t c = col; c < cols; ++c)
            if (pr[c]) ri[c] = sub(ri[c], mul(f, pr[c], p), p);
    };
    if (exec == Exec::parallel && (rows - from) * (cols - col) > 4096) {
#pragma omp parallel for schedule(static)
        for (long i = static_cast<long>(from); i < n; ++i) body(i);
    } else {
        for (long i = static_cast<long>(from); i < n; ++i) body(i);
    }
}

}  // namespace

std::size_t rank_dense(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols, std::uint64_t p,
                       Exec exec) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            std::swap_ranges(a.begin() + static_cast<long>(piv * cols), a.begin() + static_cast<long>((piv + 1) * cols),
                             a.begin() + static_cast<long>(r * cols));
        const std::uint64_t s = inv(a[r * cols + c], p);
        for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = mul(a[r * cols + k], s, p);
        eliminate_below(a, cols, r, r + 1, rows, c, p, exec);
        ++r;
    }
    return r;
}

std::vector<Row> echelon_basis(std::vector<Row> rows, std::uint64_t p, Exec exec) {
    if (rows.empty()) return {};
    const std::size_t cols = rows.front().size();
    const std::size_t n = rows.size();
    std::vector<std::uint64_t> a(n * cols);
    for (std::size_t i = 0; i < n; ++i) std::copy(rows[i].begin(), rows[i].end(), a.begin() + static_cast<long>(i * cols));
    rows.clear();
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && a[piv * cols + c] == 0) ++piv;
        if (piv == n) continue;
        if (piv != r)
            std::swap_ranges(a.begin() + static_cast<long>(piv * cols), a.begin() + static_cast<long>((piv + 1) * cols),
                             a.begin() + static_cast<long>(r * cols));
        const std::uint64_t s = inv(a[r * cols + c], p);
        for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = mul(a[r * cols + k], s, p);
        eliminate_below(a, cols, r, r + 1, n, c, p, exec);
        pivots.push_back(c);
        ++r;
    }
    // Back substitution to reduced form.
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t c = pivots[i];
        for (std::size_t j = 0; j < i; ++j) {
            std::uint64_t f = a[j * cols + c];
            if (!f) continue;
            for (std::size_t k = c; k < cols; ++k)
                if (a[i * cols + k]) a[j * cols + k] = sub(a[j * cols + k], mul(f, a[i * cols + k], p), p);
        }
    }
    std::vector<Row> out(r);
    for (std::size_t i = 0; i < r; ++i)
        out[i].assign(a.begin() + static_cast<long>(i * cols), a.begin() + static_cast<long>((i + 1) * cols));
    return out;
}

void Echelon::reduce(Row& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::uint64_t f = v[pivots_[i]];
        if (!f) continue;
        const Row& r = rows_[i];
        for (std::size_t k = 0; k < v.size(); ++k)
            if (r[k]) v[k] = sub(v[k], mul(f, r[k], p_), p_);
    }
}

bool Echelon::insert(Row v) {
    reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    if (it == v.end()) return false;
    const std::size_t c = static_cast<std::size_t>(it - v.begin());
    const std::uint64_t s = inv(v[c], p_);
    for (auto& x : v) x = mul(x, s, p_);
    for (auto& r : rows_) {
        const std::uint64_t f = r[c];
        if (!f) continue;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k]) r[k] = sub(r[k], mul(f, v[k], p_), p_);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    return true;
}

bool Echelon::contains(Row v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

}  // namespace nforge::modp
