#include "nforge/braided_analysis.hpp"

#include <algorithm>

namespace nforge {

const char* const kTypeDDefinition =
    "X = R u S with R, S nonempty, X|>R = R and X|>S = S, and some r in R, s in S with "
    "r|>(s|>(r|>s)) != s";

namespace {

bool is_stable_part(const Rack& r, const std::vector<bool>& in_r) {
    for (std::size_t x = 0; x < r.size; ++x)
        for (std::size_t y = 0; y < r.size; ++y)
            if (in_r[y] != in_r[r.act(x, y)]) return false;
    return true;
}

std::optional<TypeDWitness> witness_for(const Rack& r, const std::vector<bool>& in_r) {
    if (!is_stable_part(r, in_r)) return std::nullopt;
    for (std::size_t a = 0; a < r.size; ++a) {
        if (!in_r[a]) continue;
        for (std::size_t b = 0; b < r.size; ++b) {
            if (in_r[b]) continue;
            const std::size_t v = r.act(a, r.act(b, r.act(a, b)));
            if (v == b) continue;
            TypeDWitness w;
            for (std::size_t x = 0; x < r.size; ++x) (in_r[x] ? w.part_r : w.part_s).push_back(x);
            w.r = a;
            w.s = b;
            w.value = v;
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace

bool type_D_search_exhaustive(const Rack& r, std::size_t exhaustive_limit) { return r.size <= exhaustive_limit; }

std::optional<TypeDWitness> is_type_D(const Rack& r, const std::vector<std::size_t>& preferred_split,
                                      std::size_t exhaustive_limit) {
    const bool exhaustive = type_D_search_exhaustive(r, exhaustive_limit);
    if (!preferred_split.empty()) {
        std::vector<bool> in_r(r.size, false);
        for (auto x : preferred_split) in_r.at(x) = true;
        if (std::count(in_r.begin(), in_r.end(), true) < static_cast<long>(r.size)) {
            if (auto w = witness_for(r, in_r)) {
                w->exhaustive = exhaustive;
                return w;
            }
        }
    }
    if (!exhaustive || r.size < 2) return std::nullopt;
    // Element 0 always sits in R; S ranges over nonempty subsets of the rest.
    const std::uint64_t count = 1ull << (r.size - 1);
    for (std::uint64_t mask = 0; mask + 1 < count; ++mask) {
        std::vector<bool> in_r(r.size, false);
        in_r[0] = true;
        for (std::size_t x = 1; x < r.size; ++x) in_r[x] = (mask >> (x - 1)) & 1;
        // The search is symmetric in R and S, so both orientations are tried.
        for (bool flip : {false, true}) {
            std::vector<bool> part = in_r;
            if (flip) part.flip();
            if (auto w = witness_for(r, part)) return w;
        }
    }
    return std::nullopt;
}

}  // namespace nforge
