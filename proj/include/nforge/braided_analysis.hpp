#pragma once

#include "nforge/cyclotomic.hpp"
#include "nforge/exact_linalg.hpp"
#include "nforge/modp.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nforge {

struct BraidTerm {
    std::uint32_t k = 0, l = 0;
    Cyc coeff;
};

// c(e_i (x) e_j) = sum of coeff * e_k (x) e_l over the stored terms.
class BraidedSpace {
public:
    BraidedSpace() = default;
    BraidedSpace(std::size_t dim, unsigned order);

    std::size_t dim() const { return dim_; }
    unsigned order() const { return order_; }

    void add(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Cyc& c);
    const std::vector<BraidTerm>& image(std::size_t i, std::size_t j) const { return images_[i * dim_ + j]; }
    Cyc coefficient(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;

    // d^2 x d^2 matrix; column i*d+j holds c(e_i (x) e_j).
    CycMatrix matrix() const;
    // The same braiding in the basis e'_i = scale[i] e_i.
    BraidedSpace rescaled(const std::vector<Cyc>& scale) const;

    std::vector<std::string> labels;  // optional basis names
    std::string label(std::size_t i) const;

    friend bool operator==(const BraidedSpace& a, const BraidedSpace& b);

private:
    std::size_t dim_ = 0;
    unsigned order_ = 1;
    std::vector<std::vector<BraidTerm>> images_;
};

struct BraidCheck {
    bool pass = true;
    std::size_t triples = 0;
    std::string first_mismatch;
};

// Exhaustive c1 c2 c1 == c2 c1 c2 on all basis triples.
BraidCheck check_braid_equation(const BraidedSpace& b, modp::Exec exec = modp::Exec::parallel);

struct QMatrix {
    std::size_t dim = 0;
    std::vector<Cyc> q;  // row-major
    const Cyc& at(std::size_t i, std::size_t j) const { return q[i * dim + j]; }
};

std::optional<QMatrix> detect_diagonal(const BraidedSpace& b);
BraidedSpace diagonal_braiding(const QMatrix& q);

struct DynkinEdge {
    std::size_t i = 0, j = 0;
    Cyc label;  // q_ij q_ji
};

struct DynkinDiagram {
    std::vector<Cyc> vertices;
    std::vector<DynkinEdge> edges;  // i < j, only labels different from 1
    std::string str() const;
};

DynkinDiagram dynkin(const QMatrix& q);

// c(v1 v1) = a v2 v2, c(v1 v2) = b v1 v2, c(v2 v1) = b v2 v1, c(v2 v2) = e v1 v1.
BraidedSpace make_vabe(const Cyc& a, const Cyc& b, const Cyc& e);

struct VabeParams {
    Cyc a, b, e;
};
std::optional<VabeParams> detect_vabe(const BraidedSpace& b);

struct Rack {
    std::size_t size = 0;
    std::vector<std::uint32_t> table;  // x * size + y -> x |> y
    std::uint32_t act(std::size_t x, std::size_t y) const { return table[x * size + y]; }
    bool self_distributive() const;
    bool translations_bijective() const;
};

struct RackBraiding {
    Rack rack;
    std::vector<Cyc> cocycle;  // c(e_x e_y) = cocycle[x*size+y] e_{x|>y} e_x
};

std::optional<RackBraiding> extract_rack(const BraidedSpace& b);
// Rebuilds the braiding from rack and cocycle.
BraidedSpace rack_braiding(const RackBraiding& rb, unsigned order);

struct TypeDWitness {
    std::vector<std::size_t> part_r, part_s;
    std::size_t r = 0, s = 0;
    std::size_t value = 0;  // r |> (s |> (r |> s)), different from s
    bool exhaustive = true;
};

// Decomposition X = R u S into subracks with X |> R = R and X |> S = S, plus r in R,
// s in S with r |> (s |> (r |> s)) != s. preferred_split, when given, is tried first.
// Enumeration of all splits runs for racks of size <= exhaustive_limit.
std::optional<TypeDWitness> is_type_D(const Rack& r, const std::vector<std::size_t>& preferred_split = {},
                                      std::size_t exhaustive_limit = 12);
// Whether a search for r had full coverage.
bool type_D_search_exhaustive(const Rack& r, std::size_t exhaustive_limit = 12);

extern const char* const kTypeDDefinition;

}  // namespace nforge
