#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Arithmetic and elimination kernels over Z/p for word-sized primes (p < 2^32).
namespace nforge::modp {

enum class Exec { serial, parallel };

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

using Row = std::vector<std::uint64_t>;

// Rank of a dense row-major matrix; the buffer is consumed.
std::size_t rank_dense(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols, std::uint64_t p,
                       Exec exec = Exec::parallel);

// Reduced row-echelon basis of the span of the given rows.
std::vector<Row> echelon_basis(std::vector<Row> rows, std::uint64_t p, Exec exec = Exec::parallel);

// Incremental span tracking; rows kept reduced against each other's pivots.
class Echelon {
public:
    explicit Echelon(std::uint64_t p) : p_(p) {}
    // Returns true when v was independent of the rows seen so far.
    bool insert(Row v);
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }
    bool contains(Row v) const;

private:
    void reduce(Row& v) const;
    std::uint64_t p_;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace nforge::modp
