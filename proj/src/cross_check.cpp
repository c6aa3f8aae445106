#include "nforge/classifier.hpp"
#include "nforge/errors.hpp"

#include <algorithm>
#include <sstream>

namespace nforge {

namespace {

BraidedSpace restrict_to(const BraidedSpace& b, const std::vector<std::size_t>& idx) {
    std::vector<long> pos(b.dim(), -1);
    for (std::size_t a = 0; a < idx.size(); ++a) pos[idx[a]] = static_cast<long>(a);
    BraidedSpace out(idx.size(), b.order());
    for (std::size_t a = 0; a < idx.size(); ++a) {
        out.labels.push_back(b.label(idx[a]));
        for (std::size_t c = 0; c < idx.size(); ++c)
            for (const auto& t : b.image(idx[a], idx[c])) out.add(a, c, pos[t.k], pos[t.l], t.coeff);
    }
    return out;
}

bool closed(const BraidedSpace& b, const std::vector<std::size_t>& idx) {
    std::vector<bool> in(b.dim(), false);
    for (auto i : idx) in[i] = true;
    for (auto x : idx)
        for (auto y : idx)
            for (const auto& t : b.image(x, y))
                if (!in[t.k] || !in[t.l]) return false;
    return true;
}

// Table verdict for a braiding of dimension at most two, when one applies.
std::optional<DimVerdict> small_verdict(const BraidedSpace& b) {
    if (b.dim() > 2) return std::nullopt;
    if (auto q = detect_diagonal(b)) return rank2_table_lookup(*q);
    if (b.dim() == 2)
        if (auto v = detect_vabe(b)) return vabe_verdict(v->a, v->b, v->e);
    return std::nullopt;
}

std::string names(const BraidedSpace& b, const std::vector<std::size_t>& idx) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + b.label(idx[i]);
    return s + "}";
}

}  // namespace

std::string dump_braiding(const BraidedSpace& b) {
    std::ostringstream os;
    for (std::size_t x = 0; x < b.dim(); ++x)
        for (std::size_t y = 0; y < b.dim(); ++y) {
            os << "c(" << b.label(x) << " (x) " << b.label(y) << ") =";
            const auto& img = b.image(x, y);
            if (img.empty()) os << " 0";
            for (std::size_t i = 0; i < img.size(); ++i) {
                const auto& t = img[i];
                std::string c;
                if (auto r = as_root_of_unity(t.coeff)) c = "zeta_" + std::to_string(r->order) + "^" + std::to_string(r->exp);
                else c = "(" + t.coeff.str() + ")";
                os << (i ? " + " : " ") << c << " " << b.label(t.k) << " (x) " << b.label(t.l);
            }
            os << "\n";
        }
    return os.str();
}

DimVerdict pipeline_verdict(const BraidedSpace& b, const PipelineOptions& opts) {
    if (auto v = small_verdict(b)) return *v;

    if (auto rb = extract_rack(b)) {
        // Family modules list their w's before their m's; that split is tried first.
        std::vector<std::size_t> first_half;
        for (std::size_t i = 0; i < b.dim() / 2; ++i) first_half.push_back(i);
        if (auto w = is_type_D(rb->rack, first_half)) {
            DimVerdict v = DimVerdict::infinite("rack of type D: " + b.label(w->r) + " |> (" + b.label(w->s) + " |> (" +
                                                b.label(w->r) + " |> " + b.label(w->s) + ")) = " + b.label(w->value));
            v.provenance = "rack";
            return v;
        }
    }

    // A braided subspace with an infinite Nichols algebra forces infinite dimension.
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t x = 0; x < b.dim(); ++x) {
        blocks.push_back({x});
        for (std::size_t y = x + 1; y < b.dim(); ++y) blocks.push_back({x, y});
    }
    for (const auto& idx : blocks) {
        if (!closed(b, idx)) continue;
        const auto v = small_verdict(restrict_to(b, idx));
        if (v && v->outcome == Outcome::infinite) {
            DimVerdict out = DimVerdict::infinite("braided subspace " + names(b, idx) + ": " + v->reason);
            out.provenance = "table";
            return out;
        }
    }

    DimsOptions dopts;
    dopts.max_entries = opts.max_entries;
    dopts.seed = opts.seed;
    try {
        const auto dd = degree_dims(b, opts.kmax, Engine::modular, dopts);
        if (dd.terminated) {
            DimVerdict v = DimVerdict::finite(dd.total(), TypeTag::other, "symmetrizer ranks vanish");
            v.provenance = "modular-confirmed";
            return v;
        }
        return DimVerdict::unclassified("no vanishing rank through degree " + std::to_string(opts.kmax));
    } catch (const BoundExceeded& e) {
        return DimVerdict::unclassified(std::string("engine bound reached: ") + e.what());
    }
}

std::string agreement_name(Agreement a) {
    switch (a) {
        case Agreement::agree: return "agree";
        case Agreement::compatible: return "compatible";
        case Agreement::weak: return "weak";
        case Agreement::disagree: return "disagree";
    }
    return "?";
}

Agreement compare_verdicts(const DimVerdict& lemma, const DimVerdict& pipe) {
    if (lemma.outcome == Outcome::unknown) return Agreement::compatible;
    if (lemma.outcome == Outcome::finite) {
        if (pipe.outcome == Outcome::finite) {
            if (lemma.dim && pipe.dim) return *lemma.dim == *pipe.dim ? Agreement::agree : Agreement::disagree;
            return lemma.tag == pipe.tag ? Agreement::agree : Agreement::disagree;
        }
        return pipe.outcome == Outcome::unknown ? Agreement::weak : Agreement::disagree;
    }
    if (lemma.outcome == Outcome::infinite) {
        if (pipe.outcome == Outcome::infinite) return Agreement::agree;
        return pipe.outcome == Outcome::finite ? Agreement::disagree : Agreement::weak;
    }
    return pipe.outcome == Outcome::finite ? Agreement::disagree : Agreement::weak;
}

CrossCheckReport cross_check(const SuzukiAlgebra& algebra, Family f, const FamilyIndices& idx,
                             const PipelineOptions& opts, bool throw_on_disagreement) {
    CrossCheckReport r;
    r.params = algebra.params();
    r.key = make_key(f, idx);
    r.lemma = lemma_verdict(f, r.params, idx);
    const YDModule m = build_family(algebra, f, idx);
    const BraidedSpace b = braiding_of(m);
    r.pipeline = pipeline_verdict(b, opts);
    r.agreement = compare_verdicts(r.lemma, r.pipeline);

    if (opts.confirm_diagonal && r.agreement == Agreement::agree && r.pipeline.provenance == "table" &&
        r.pipeline.dim && r.pipeline.outcome == Outcome::finite) {
        std::size_t kmax = 0;
        for (std::size_t D = b.dim(); D <= opts.confirm_bound && b.dim() > 1; D *= b.dim()) ++kmax;
        DimsOptions dopts;
        dopts.seed = opts.seed;
        dopts.max_entries = opts.max_entries;
        try {
            auto dd = degree_dims(b, kmax, Engine::modular, dopts);
            if (dd.terminated && dd.total() != *r.pipeline.dim) r.agreement = Agreement::disagree;
            r.confirmation = std::move(dd);
        } catch (const BoundExceeded&) {
        }
    }

    if (r.agreement == Agreement::disagree) {
        r.braiding_dump = dump_braiding(b);
        if (throw_on_disagreement) {
            std::string msg = r.params.label() + " " + r.key.str() + ": lemma " + r.lemma.str() + " (" + r.lemma.reason +
                              ") vs pipeline " + r.pipeline.str() + " (" + r.pipeline.reason + ")";
            if (r.confirmation) {
                msg += "; engine dims";
                for (auto x : r.confirmation->dims) msg += " " + std::to_string(x);
            }
            throw Disagreement(msg + "\n" + r.braiding_dump);
        }
    }
    return r;
}

std::vector<SweepRecord> sweep(const SweepSpec& spec, modp::Exec exec) {
    struct Tuple {
        int k, s, t;
    };
    std::vector<Tuple> tuples;
    for (int k = spec.k_min; k <= spec.k_max; ++k)
        for (int s = spec.s_min; s <= spec.s_max; ++s)
            for (int t = spec.t_min; t <= spec.t_max; ++t) tuples.push_back({k, s, t});
    std::vector<std::optional<SweepRecord>> out(tuples.size());
    const long count = static_cast<long>(tuples.size());
#pragma omp parallel for schedule(static) if (exec == modp::Exec::parallel)
    for (long i = 0; i < count; ++i) {
        FamilyIndices x = spec.fixed;
        x.k = tuples[i].k;
        x.s = tuples[i].s;
        x.t = tuples[i].t;
        if (!in_strict_range(spec.params, spec.family, x)) continue;
        DimVerdict v = lemma_verdict(spec.family, spec.params, x);
        if (spec.predicate && !spec.predicate(v)) continue;
        out[i] = SweepRecord{x.k, x.s, x.t, std::move(v)};
    }
    std::vector<SweepRecord> records;
    for (auto& r : out)
        if (r) records.push_back(std::move(*r));
    return records;
}

SweepSpec ufo8_preset(Family f) {
    if (f != Family::D && f != Family::E) throw BadIndex("the ufo8 presets exist for D and E only");
    SweepSpec s;
    s.family = f;
    s.params = SuzukiParams::make(48, 8, 1, 1);
    s.fixed.j = 2;
    s.k_min = 0;
    s.k_max = 11;
    s.s_min = 1;
    s.s_max = 48;
    s.t_min = 0;
    s.t_max = 7;
    s.predicate = [](const DimVerdict& v) {
        return std::find(v.matches.begin(), v.matches.end(), TypeTag::ufo8) != v.matches.end();
    };
    return s;
}

}  // namespace nforge
