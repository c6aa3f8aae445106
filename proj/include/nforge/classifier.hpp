#pragma once

#include "nforge/braided_analysis.hpp"
#include "nforge/nichols_engine.hpp"
#include "nforge/yd_radford.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nforge {

enum class Outcome { finite, infinite, unknown, unclassified };
enum class TypeTag { none, A1, A1xA1, A2, A2xA2, SuperA2, ufo8, D4rack, Vabe4m, VabeM2, other };

std::string outcome_name(Outcome o);
std::string tag_name(TypeTag t);
std::optional<Outcome> outcome_from_name(const std::string& s);
std::optional<TypeTag> tag_from_name(const std::string& s);

struct DimVerdict {
    Outcome outcome = Outcome::unknown;
    std::optional<unsigned long> dim;  // empty on a finite verdict means type-only
    TypeTag tag = TypeTag::none;
    std::string reason;
    std::string provenance = "lemma";  // lemma | table | exact | modular-confirmed | sketch-lower-bound
    bool necessary_condition = false;  // Unknown, but the printed necessary condition holds
    std::vector<TypeTag> matches;      // every printed case that applied, in printed order
    std::optional<DynkinDiagram> diagram;

    bool type_only() const { return outcome == Outcome::finite && !dim; }
    std::string str() const;

    static DimVerdict finite(std::optional<unsigned long> dim, TypeTag tag, std::string reason);
    static DimVerdict infinite(std::string reason, TypeTag tag = TypeTag::none);
    static DimVerdict unknown(std::string reason);
    static DimVerdict unclassified(std::string reason);
};

bool operator==(const DimVerdict& a, const DimVerdict& b);

// Rank one and two diagonal patterns only; anything else is Unclassified with its diagram.
DimVerdict rank2_table_lookup(const QMatrix& q);
DimVerdict rank2_table_lookup(const BraidedSpace& b);  // NotDiagonal unless the braiding is diagonal

DimVerdict vabe_verdict(const RootOfUnity& a, const RootOfUnity& b, const RootOfUnity& e);
// Unknown unless all three are roots of unity; ZeroParameter on a zero input.
DimVerdict vabe_verdict(const Cyc& a, const Cyc& b, const Cyc& e);

struct GHParameters {
    RootOfUnity ae, b;
};
GHParameters gh_parameters(Family f, const SuzukiParams& p, const FamilyIndices& idx);

// Closed-form scalars of the dihedral and K-family lemmas.
RootOfUnity family_q(Family f, const SuzukiParams& p, const FamilyIndices& idx);

// Scalars named in the relation fixtures (alpha, beta for I and K n = 3; a, b for K n = 2).
std::map<std::string, Cyc> relation_bindings(Family f, const SuzukiParams& p, const FamilyIndices& idx);

// The printed four-case test on (alpha, beta) modulo M.
DimVerdict de_verdict(long alpha, long beta, long M);

// Per-family lemma, in exponent arithmetic. BadIndex outside the theorem's index ranges or
// for families the theorem does not list.
DimVerdict lemma_verdict(Family f, const SuzukiParams& p, const FamilyIndices& idx);

struct PipelineOptions {
    std::size_t kmax = 12;
    std::size_t max_entries = 1u << 22;
    bool confirm_diagonal = true;       // rerun finite diagonal verdicts through the engine
    std::size_t confirm_bound = 1u << 14;  // d^k budget for that confirmation
    int seed = 0;
};

// build_family -> braiding_of -> diagonal / V_abe / rack analysis, then braided sub-blocks
// and the engine.
DimVerdict pipeline_verdict(const BraidedSpace& b, const PipelineOptions& opts = {});

enum class Agreement { agree, compatible, weak, disagree };
std::string agreement_name(Agreement a);
Agreement compare_verdicts(const DimVerdict& lemma, const DimVerdict& pipeline);

struct CrossCheckReport {
    FamilyKey key;
    SuzukiParams params;
    DimVerdict lemma, pipeline;
    Agreement agreement = Agreement::agree;
    std::optional<DegreeDims> confirmation;
    std::string braiding_dump;
};

std::string dump_braiding(const BraidedSpace& b);

// Throws Disagreement (message carries both verdicts and the braiding) unless
// throw_on_disagreement is false.
CrossCheckReport cross_check(const SuzukiAlgebra& algebra, Family f, const FamilyIndices& idx,
                             const PipelineOptions& opts = {}, bool throw_on_disagreement = true);

// Braidings as displayed in the family lemmas, in the module's own basis. K carries both the
// general display and the n = 1, 2, 3 ones; G and H are only given through (ae, b).
struct PrintedBraiding {
    std::string form;
    BraidedSpace braiding;
};
std::vector<PrintedBraiding> printed_braidings(Family f, const SuzukiParams& p, const FamilyIndices& idx);

struct Conformance {
    bool pass = true;
    std::size_t forms = 0, compared = 0;
    std::string mismatch;  // first one
};
// Exponent-by-exponent comparison of braiding_of(build_family(...)) with the printed forms.
Conformance braiding_conformance(const SuzukiAlgebra& algebra, Family f, const FamilyIndices& idx);

struct SweepRecord {
    int k = 0, s = 1, t = 0;
    DimVerdict verdict;
};

struct SweepSpec {
    Family family = Family::D;
    SuzukiParams params;
    FamilyIndices fixed;  // i, j, p
    int k_min = 0, k_max = -1, s_min = 1, s_max = -1, t_min = 0, t_max = -1;  // inclusive
    std::function<bool(const DimVerdict&)> predicate;                         // keep all when empty
};

// Lemma verdicts over the box, strict indices only, sorted by (k, s, t).
std::vector<SweepRecord> sweep(const SweepSpec& spec, modp::Exec exec = modp::Exec::parallel);

// n = 8, N = 48, j = 2, k <= 11, records with an ufo8 match.
SweepSpec ufo8_preset(Family f);

}  // namespace nforge
