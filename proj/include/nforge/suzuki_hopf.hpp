#pragma once

#include "nforge/cyclotomic.hpp"
#include "nforge/exact_linalg.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nforge {

// Parameters of the Suzuki algebra A_{N,2n}^{mu lambda}; mu and lambda are +1 or -1.
struct SuzukiParams {
    int N = 1;
    int n = 1;
    int mu = 1;
    int lambda = 1;

    static SuzukiParams make(int N, int n, int mu, int lambda);

    unsigned order() const { return static_cast<unsigned>(8 * n * N); }  // of omega
    int length() const { return 2 * n; }                                // alternating-word bound
    std::size_t dim() const { return static_cast<std::size_t>(8 * N * n); }

    Cyc omega(long e = 1) const { return Cyc::root(order(), e); }
    Cyc mu_tilde() const { return mu == 1 ? Cyc::one(order()) : omega(2 * n); }
    Cyc mu_bar() const { return mu == 1 ? Cyc::one(order()) : omega(4 * n); }
    // Fixed square roots: sqrt(lambda), sqrt(mu_bar) = mu_tilde, sqrt((-1)^e).
    Cyc sqrt_lambda() const { return lambda == 1 ? Cyc::one(order()) : omega(2 * n * N); }
    Cyc sqrt_sign(long e) const { return e % 2 == 0 ? Cyc::one(order()) : omega(2 * n * N); }

    std::string label() const;
    friend bool operator==(const SuzukiParams&, const SuzukiParams&) = default;
};

enum class Gen : std::uint8_t { x11 = 0, x12 = 1, x21 = 2, x22 = 3 };
using Word = std::vector<Gen>;

inline int gen_row(Gen g) { return static_cast<int>(g) / 2; }  // 0 or 1
inline int gen_col(Gen g) { return static_cast<int>(g) % 2; }
inline Gen gen_at(int row, int col) { return static_cast<Gen>(2 * row + col); }
std::string gen_name(Gen g);

enum class Branch : std::uint8_t { diagonal = 0, off_diagonal = 1 };

// diagonal: x11^s chi22^t, off_diagonal: x12^s chi21^t; s in 1..2N, t in 0..2n-1.
struct BasisWord {
    Branch branch = Branch::diagonal;
    int s = 1;
    int t = 0;
    auto operator<=>(const BasisWord&) const = default;
    std::string str() const;
};

// A basis word with coefficient in {-1, 0, +1}; products of basis words have this shape.
struct SignedWord {
    int sign = 0;
    BasisWord word;
    bool is_zero() const { return sign == 0; }
    friend bool operator==(const SignedWord& a, const SignedWord& b) {
        return a.sign == b.sign && (a.sign == 0 || a.word == b.word);
    }
};

using AlgebraElement = std::map<BasisWord, Cyc>;

void add_term(AlgebraElement& e, const BasisWord& w, const Cyc& c);

// Alternating words: chi_ab(t) = a b a b ... (t letters).
Word chi(Gen first, Gen second, int t);
Word power(Gen g, int e);
Word concat(std::initializer_list<Word> parts);
// Letters of a basis word; independent of N and n.
Word letters_of(const BasisWord& w);

enum class RuleOrder { leftmost_first, rightmost_reverse_priority };

class SuzukiAlgebra {
public:
    explicit SuzukiAlgebra(const SuzukiParams& params);

    const SuzukiParams& params() const { return params_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisWord>& basis() const { return basis_; }
    std::size_t index(const BasisWord& w) const;
    Word word_of(const BasisWord& w) const;

    // String-rewriting normal form; the source of truth for multiplication.
    // Throws BadIndex on the empty word, whose value is the unit (two basis terms).
    SignedWord rewrite(const Word& w, RuleOrder order = RuleOrder::leftmost_first) const;
    AlgebraElement normalize_word(const Word& w) const;

    SignedWord product(const BasisWord& a, const BasisWord& b) const {
        return table_[index(a) * dim() + index(b)];
    }
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement unit() const;
    SignedWord letter(Gen g) const;

    struct CoproductTerm {
        int sign;
        BasisWord left, right;
    };
    std::array<CoproductTerm, 2> coproduct(const BasisWord& w) const;
    int counit(const BasisWord& w) const { return w.branch == Branch::diagonal ? 1 : 0; }
    SignedWord antipode(const BasisWord& w) const;
    Word antipode_word(const Word& w) const;

private:
    SuzukiParams params_;
    std::vector<BasisWord> basis_;
    std::vector<SignedWord> table_;
};

// Case rules on (branch, s, t) pairs, kept independent of the rewriting engine.
SignedWord closed_form_product(const SuzukiParams& p, const BasisWord& a, const BasisWord& b);

struct AxiomResult {
    std::string name;
    bool pass = true;
    std::string counterexample;
};

struct HopfReport {
    SuzukiParams params;
    std::size_t dim = 0;
    bool pass = true;
    std::vector<AxiomResult> axioms;
};

HopfReport verify_hopf(const SuzukiParams& p, std::size_t bound = 256);

// Simple left modules.
enum class SimpleKind { V_ijk, Vp_ijk, V_jk, Vp_jk };
std::string kind_name(SimpleKind k);

struct SimpleModule {
    SimpleKind kind = SimpleKind::V_ijk;
    int i = 0, j = 0, k = 0;
    std::size_t dim = 1;
    std::array<CycMatrix, 4> gens;  // indexed by Gen; column-vector convention
    const CycMatrix& action(Gen g) const { return gens[static_cast<int>(g)]; }
    std::string label() const;
};

enum class IndexMode { strict, lax };

SimpleModule simple_module(const SuzukiParams& p, SimpleKind kind, int i, int j, int k,
                           IndexMode mode = IndexMode::strict);

// Matrix of a word acting on the module (rightmost letter acts first).
CycMatrix word_action(const SimpleModule& m, const Word& w);
// First defining relation violated by the module's matrices, if any.
std::optional<std::string> relation_violation(const SuzukiParams& p, const std::array<CycMatrix, 4>& gens);

struct SimpleCensus {
    std::size_t count = 0;
    std::size_t sum_of_squares = 0;
    std::size_t expected = 0;
    bool relations_ok = true;
    std::vector<SimpleModule> modules;
};
SimpleCensus simple_census(const SuzukiParams& p);

}  // namespace nforge
