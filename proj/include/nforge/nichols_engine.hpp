#pragma once

#include "nforge/braided_analysis.hpp"
#include "nforge/exact_linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nforge {

// Element of V^{(x)k}; the tuple lists basis indices left to right.
struct TensorElement {
    std::size_t degree = 0;
    std::map<std::vector<std::uint32_t>, Cyc> terms;

    void add(const std::vector<std::uint32_t>& word, const Cyc& c);
    bool is_zero() const { return terms.empty(); }
    std::string str(const BraidedSpace& b) const;
};

// Flat index of a basis tensor, first factor most significant.
std::size_t tensor_index(const std::vector<std::uint32_t>& word, std::size_t d);

// c_{w_1} c_{w_2} ... c_{w_m} on V^{(x)k}; positions are 0-based (c_i acts on factors i, i+1),
// so the last letter of the word acts first.
CycMatrix braided_lift_word(const BraidedSpace& b, std::size_t k, const std::vector<int>& word);
// Lift along a reduced word of sigma, given by its images sigma[0..k-1].
CycMatrix braided_lift(const BraidedSpace& b, const std::vector<int>& sigma);
std::vector<int> reduced_word(std::vector<int> sigma);

// Sum of the lifts over all of S_k; throws BoundExceeded when d^k exceeds the bound.
CycMatrix symmetrizer(const BraidedSpace& b, std::size_t k, std::size_t bound = 4096);

enum class Engine { exact, modular, sketch };
std::string engine_name(Engine e);

struct DimsOptions {
    std::size_t bound = 1u << 20;  // largest d^k handled
    std::size_t max_entries = 1u << 25;  // candidates x d^k held at once
    int seed = 0;                   // modular: primes seeds and seed+1; sketch: RNG seed
    std::size_t sketch_from = 7;    // sketch engine: degrees >= this use the randomized bound
    modp::Exec exec = modp::Exec::parallel;
};

struct DegreeDims {
    std::vector<std::size_t> dims;  // rank S_k for k = 0..kmax
    Engine engine = Engine::exact;
    bool terminated = false;         // some rank reached zero
    std::vector<std::uint64_t> primes;
    std::vector<bool> lower_bound;  // per degree, true when only a randomized lower bound
    std::size_t total() const;
};

// Ranks through Im S_k = T_k (Im S_{k-1} (x) V), T_k = 1 + c_{k-1} + c_{k-2}c_{k-1} + ... .
// Modular runs two primes and throws BadPrime if they disagree.
DegreeDims degree_dims(const BraidedSpace& b, std::size_t kmax, Engine engine, const DimsOptions& opts = {});

// Oracles: explicit symmetrizer ranks, and the shuffle formula for diagonal braidings.
std::vector<std::size_t> brute_force_dims(const BraidedSpace& b, std::size_t kmax, std::size_t bound = 4096);
std::vector<std::size_t> shuffle_dims(const QMatrix& q, std::size_t kmax);

// S_k applied to a tensor, using the same factorisation.
TensorElement apply_symmetrizer(const BraidedSpace& b, const TensorElement& x);
bool relation_in_kernel(const BraidedSpace& b, const TensorElement& rel, std::size_t bound = 1u << 20);

struct HilbertOptions {
    std::size_t kmax = 6;
    Engine engine = Engine::modular;
    DimsOptions dims;
    std::optional<std::vector<std::size_t>> compare_series;  // e.g. [(1+t)^2(1+t^2)]^2
};

struct HilbertReport {
    DegreeDims dims;
    std::vector<std::size_t> partial_sums;
    std::string provenance;  // exact | modular-confirmed | sketch-lower-bound
    std::optional<bool> series_match;
};

HilbertReport hilbert_report(const BraidedSpace& b, const HilbertOptions& opts);

// Coefficients of a product of polynomials (1 + t^e)^m given as (e, m) pairs.
std::vector<std::size_t> product_series(const std::vector<std::pair<int, int>>& factors);

// Relation text: one relation per line, "lhs = rhs [= ...]" chains, '#' comments,
// "let NAME = root(M,k) | INT | INT/INT" and "vec NAME = linear combination of labels".
// Scalar names carry no digits; basis labels end in digits.
struct ParsedRelation {
    std::string text;
    std::size_t line = 0;
    TensorElement element;
};

std::vector<ParsedRelation> parse_relations(const std::string& text, const BraidedSpace& b,
                                            const std::map<std::string, Cyc>& bindings);

}  // namespace nforge
