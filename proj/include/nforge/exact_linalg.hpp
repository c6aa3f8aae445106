#pragma once

#include "nforge/cyclotomic.hpp"
#include "nforge/modp.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace nforge {

using CycVector = std::vector<Cyc>;

class CycMatrix {
public:
    using Key = std::pair<std::size_t, std::size_t>;

    CycMatrix() = default;
    CycMatrix(std::size_t rows, std::size_t cols, unsigned order = 1);
    static CycMatrix identity(std::size_t n, unsigned order = 1);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned order() const { return order_; }
    const std::map<Key, Cyc>& entries() const { return entries_; }

    // Zero values erase the entry; the value is promoted to the matrix order.
    void set(std::size_t r, std::size_t c, const Cyc& v);
    void add(std::size_t r, std::size_t c, const Cyc& v);
    Cyc get(std::size_t r, std::size_t c) const;

    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;
    CycMatrix scaled(const Cyc& s) const;
    CycVector apply(const CycVector& v) const;
    CycVector column(std::size_t c) const;
    std::vector<CycVector> dense_rows() const;
    bool is_zero() const { return entries_.empty(); }
    friend bool operator==(const CycMatrix& a, const CycMatrix& b);

private:
    void raise_order(unsigned target);
    std::size_t rows_ = 0, cols_ = 0;
    unsigned order_ = 1;
    std::map<Key, Cyc> entries_;
};

enum class PivotStrategy { first_nonzero, sparsest_row };

std::size_t rank_exact(const CycMatrix& m, PivotStrategy strategy = PivotStrategy::sparsest_row);
std::vector<CycVector> kernel_basis(const CycMatrix& m);
// Solution of m x = b when one exists.
std::optional<CycVector> solve(const CycMatrix& m, const CycVector& b);
std::optional<CycMatrix> inverse(const CycMatrix& m);

// Incremental exact span over Q(zeta_M) for vectors given as sparse maps.
class CycEchelon {
public:
    using SparseVec = std::map<std::size_t, Cyc>;
    bool insert(SparseVec v);
    bool contains(SparseVec v) const;
    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseVec>& rows() const { return rows_; }

private:
    void reduce(SparseVec& v) const;
    std::vector<SparseVec> rows_;  // each row has leading entry 1 at pivots_[i]
    std::vector<std::size_t> pivots_;
};

struct ModPrime {
    std::uint64_t p = 0;
    std::uint64_t rho = 0;  // exact order M modulo p
    unsigned M = 1;
};

// The (seed+1)-th prime above 2^20 that is 1 mod M, with the smallest generator-derived
// residue of exact order M.
ModPrime choose_prime(unsigned M, int seed);
ModPrime validate_prime(unsigned M, std::uint64_t p, std::uint64_t rho);
std::uint64_t reduce_mod_p(const Cyc& x, const ModPrime& mp);

std::size_t mod_p_rank(const CycMatrix& m, const ModPrime& mp, modp::Exec exec = modp::Exec::parallel);
std::size_t mod_p_rank(const CycMatrix& m, std::uint64_t p, std::uint64_t rho);

// Linear operator on (Z/p)^D given as a black box.
using ModMatvec = std::function<void(const std::vector<std::uint64_t>& in, std::vector<std::uint64_t>& out)>;
std::size_t randomized_rank_lower_bound(const ModMatvec& apply, std::size_t D, std::size_t r, std::uint64_t seed,
                                        const ModPrime& mp);

}  // namespace nforge
