#pragma once

#include "nforge/braided_analysis.hpp"
#include "nforge/suzuki_hopf.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nforge {

// Theorem families first, then the duplicates that only show up inside V (box) A.
enum class Family { A, Abar, B, C, D, E, G, H, P, I, K, F, M, N, J, L, Q };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);
const std::vector<Family>& all_families();

struct FamilyIndices {
    int i = 0, j = 0, k = 0, p = 0, s = 1, t = 0;
    auto operator<=>(const FamilyIndices&) const = default;
};

struct FamilyKey {
    Family family = Family::A;
    FamilyIndices idx;
    auto operator<=>(const FamilyKey&) const = default;
    std::string str() const;
};

// Which of i, j, k, p, s, t a family is indexed by; unused slots are zeroed in keys.
struct IndexUse {
    bool i, j, k, p, s, t;
};
IndexUse index_use(Family f);
FamilyKey make_key(Family f, FamilyIndices idx);

// V (box) A: basis v_a (box) b indexed by a * dim(A) + index(b).
class BoxSpace {
public:
    using Vec = CycEchelon::SparseVec;
    struct Term {
        std::size_t v;
        Word word;
        Cyc coeff;
    };

    BoxSpace(const SuzukiAlgebra& algebra, SimpleModule module);

    const SuzukiAlgebra& algebra() const { return *algebra_; }
    const SimpleModule& module() const { return module_; }
    std::size_t dim() const { return module_.dim * algebra_->dim(); }
    unsigned order() const { return algebra_->params().order(); }

    Vec vec(const std::vector<Term>& terms) const;
    Vec apply(Gen g, const Vec& x) const;
    // Rightmost letter acts first.
    Vec apply_word(const Word& w, const Vec& x) const;
    // rho(v (box) h) = h_(1) (x) v (box) h_(2).
    std::map<BasisWord, Vec> coaction(const Vec& x) const;
    std::string describe(const Vec& x) const;

    // x_pq (v (box) g) evaluated directly from h_(2) v (box) h_(1) g S(h_(3)).
    Vec act_radford(Gen g, std::size_t v, const BasisWord& b) const;

private:
    const SuzukiAlgebra* algebra_;
    SimpleModule module_;
    // Per generator, the image of every basis vector.
    std::array<std::vector<Vec>, 4> action_;
};

struct CoactionTerm {
    BasisWord word;
    CycVector coeffs;  // word (x) sum coeffs[l] e_l
};

struct YDModule {
    SuzukiParams params;
    FamilyKey key;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::array<CycMatrix, 4> action;                 // indexed by Gen, column convention
    std::vector<std::vector<CoactionTerm>> coaction;  // per basis vector, sorted by word
    SimpleModule base;
    std::vector<BoxSpace::Vec> box_vectors;

    const CycMatrix& act(Gen g) const { return action[static_cast<int>(g)]; }
    std::string label() const { return key.str(); }
};

// Coordinates of box vectors in a fixed independent spanning set.
class SpanCoordinates {
public:
    explicit SpanCoordinates(std::vector<BoxSpace::Vec> spanning, unsigned order);
    std::size_t dim() const { return spanning_.size(); }
    std::optional<CycVector> coords(const BoxSpace::Vec& x) const;

private:
    std::vector<BoxSpace::Vec> spanning_;
    std::vector<std::size_t> pivots_;
    CycMatrix pivot_inverse_;
};

// Builds the module spanned by the given vectors; throws NotClosed when they fail to
// span a sub-YD-module.
YDModule module_from_span(const BoxSpace& box, const std::vector<BoxSpace::Vec>& spanning, FamilyKey key,
                          std::vector<std::string> labels);

// Strict validates the theorem's index ranges; lax accepts any index for which the
// defining simple module can be written down.
YDModule build_family(const SuzukiAlgebra& algebra, Family f, FamilyIndices idx,
                      IndexMode mode = IndexMode::strict);
bool in_strict_range(const SuzukiParams& p, Family f, const FamilyIndices& idx);
SimpleModule underlying_simple(const SuzukiParams& p, Family f, const FamilyIndices& idx, IndexMode mode);

struct YDReport {
    bool pass = true;
    std::string failed_check;
    std::string detail;
};

YDReport yd_compat_check(const SuzukiAlgebra& algebra, const YDModule& m);

// c(x (x) y) = x_(-1) y (x) x_(0).
BraidedSpace braiding_of(const YDModule& m);
CycMatrix module_word_action(const YDModule& m, const Word& w);

// Isomorphism relations between families, applied verbatim.
FamilyKey canonical_key(const SuzukiParams& p, Family f, FamilyIndices idx);

// An invertible T with T m = m' as YD modules, if one exists.
std::optional<CycMatrix> find_intertwiner(const YDModule& from, const YDModule& to);

// Labels of the simple subcoalgebras spanned by the coaction's matrix coefficients:
// "g+_s", "g-_s", "h+_s", "h-_s" and "L_{s,u}".
std::set<std::string> comodule_support(const SuzukiAlgebra& algebra, const YDModule& m);
// Support printed in the comodule column of the two-dimensional table, when it has a row.
std::optional<std::set<std::string>> expected_support(const SuzukiParams& p, const FamilyKey& key);

struct CensusCounts {
    std::size_t one_dim = 0, two_dim = 0, twon_dim = 0;
    std::size_t expected_one = 0, expected_two = 0, expected_twon = 0;
    std::size_t weighted_sum = 0, expected_square = 0;
    bool pass() const;
};

// Enumerates the strict index ranges; the identity check is pure integer arithmetic.
CensusCounts yd_census(const SuzukiParams& p);
std::size_t family_dim(const SuzukiParams& p, Family f);
std::vector<FamilyKey> strict_keys(const SuzukiParams& p);

struct Constituent {
    FamilyKey printed;
    FamilyKey canonical;   // after the printed isomorphism relations
    FamilyKey resolved;    // a theorem representative, by intertwiner search if needed
    bool by_search = false;
    std::size_t dim = 0;
};

struct Decomposition {
    SimpleModule simple;
    std::size_t box_dim = 0;
    std::size_t total = 0;
    std::vector<Constituent> parts;
    std::vector<std::string> notes;
};

// All printed constituents of V (box) A, checked for independence and exhaustion.
Decomposition decompose_boxtimes(const SuzukiAlgebra& algebra, const SimpleModule& v, std::size_t bound = 4096);

// Theorem representative isomorphic to m, found among strict modules with the same
// dimension, s, k and comodule support.
std::optional<FamilyKey> resolve_by_search(const SuzukiAlgebra& algebra, const YDModule& m);

}  // namespace nforge
