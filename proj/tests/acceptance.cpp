// One line per acceptance criterion. Exit status is the number of failing criteria.
#include "nforge/classifier.hpp"
#include "nforge/cli_io.hpp"
#include "nforge/errors.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

using namespace nforge;

namespace {

using Dims = std::vector<std::size_t>;

struct Result {
    bool pass;
    std::string detail;
};

const std::vector<std::pair<int, int>> kGrid = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};

template <class F>
void for_params(const std::vector<std::pair<int, int>>& grid, F&& f) {
    for (auto [N, n] : grid)
        for (int mu : {1, -1})
            for (int lambda : {1, -1}) f(SuzukiParams::make(N, n, mu, lambda));
}

Dims trimmed(Dims d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

std::string join(const Dims& d) {
    std::ostringstream s;
    for (std::size_t i = 0; i < d.size(); ++i) s << (i ? "," : "") << d[i];
    return "[" + s.str() + "]";
}

Result hopf_audit() {
    std::size_t n = 0;
    std::string bad;
    for_params(kGrid, [&](const SuzukiParams& p) {
        const auto r = verify_hopf(p);
        ++n;
        if ((!r.pass || r.dim != static_cast<std::size_t>(8 * p.N * p.n)) && bad.empty()) bad = p.label();
    });
    return {bad.empty(), bad.empty() ? std::to_string(n) + " algebras, all axioms on the full basis" : "fails at " + bad};
}

Result simple_census_audit() {
    std::string bad;
    for_params(kGrid, [&](const SuzukiParams& p) {
        const auto c = simple_census(p);
        if ((c.sum_of_squares != c.expected || !c.relations_ok) && bad.empty()) bad = p.label();
    });
    return {bad.empty(), bad.empty() ? "sum of squares = 8Nn and relations hold on 16 algebras" : "fails at " + bad};
}

Result yd_census_audit() {
    std::string bad;
    std::size_t n = 0;
    for_params({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}, [&](const SuzukiParams& p) {
        ++n;
        if (!yd_census(p).pass() && bad.empty()) bad = p.label();
    });
    return {bad.empty(), bad.empty() ? "counts and identity hold for " + std::to_string(n) + " algebras" : "fails at " + bad};
}

Result conformance_audit() {
    std::size_t modules = 0, forms = 0;
    std::string bad;
    for_params({{1, 1}, {1, 2}, {1, 3}, {2, 2}}, [&](const SuzukiParams& p) {
        const SuzukiAlgebra a(p);
        for (const auto& key : strict_keys(p)) {
            if (key.family > Family::K) continue;
            if (key.family == Family::I && p.n > 2) continue;
            const auto c = braiding_conformance(a, key.family, key.idx);
            ++modules;
            forms += c.forms;
            if (!c.pass && bad.empty()) bad = p.label() + " " + key.str() + ": " + c.mismatch;
        }
    });
    return {bad.empty(), std::to_string(modules) + " modules, " + std::to_string(forms) + " printed forms" +
                             (bad.empty() ? "" : "; first mismatch " + bad)};
}

Result ufo8_audit() {
    std::string detail;
    bool ok = true;
    for (Family f : {Family::D, Family::E}) {
        const auto preset = nlohmann::json::parse(io::read_file(io::data_dir() + "/presets/ufo8-" + family_name(f) + ".json"));
        std::set<std::tuple<int, int, int>> want, got;
        for (const auto& t : preset.at("expected")) want.emplace(t[0].get<int>(), t[1].get<int>(), t[2].get<int>());
        for (const auto& r : sweep(ufo8_preset(f))) got.emplace(r.k, r.s, r.t);
        ok = ok && got == want && want.size() == 32;
        detail += family_name(f) + ": " + std::to_string(got.size()) + (got == want ? " equal " : " DIFFER ");
    }
    return {ok, detail + "(32 printed each)"};
}

Result desk_dims() {
    const Cyc w3 = Cyc::root(3, 1);
    const auto a11 = degree_dims(diagonal_braiding(QMatrix{2, {Cyc(-1), Cyc(1), Cyc(1), Cyc(-1)}}), 4, Engine::exact);
    const auto a2 = degree_dims(diagonal_braiding(QMatrix{2, {w3, w3.inv(), Cyc(1), w3}}), 9, Engine::exact);
    const auto v9 = degree_dims(make_vabe(Cyc(1), w3, Cyc(1)), 6, Engine::exact);
    const auto v12 = degree_dims(make_vabe(w3, Cyc(-1), Cyc(1)), 8, Engine::exact);
    const bool ok = a11.total() == 4 && a2.total() == 27 && v9.total() == 9 && v12.total() == 12;
    return {ok, "A1xA1 " + std::to_string(a11.total()) + ", A2 " + std::to_string(a2.total()) + " " +
                    join(trimmed(a2.dims)) + " (top degree " + std::to_string(trimmed(a2.dims).size() - 1) +
                    "), V_abe " + std::to_string(v9.total()) + " and " + std::to_string(v12.total())};
}

Result sixty_four() {
    const Dims series = product_series({{1, 2}, {2, 1}, {1, 2}, {2, 1}});
    const Dims prefix(series.begin(), series.begin() + 7);
    const auto p = SuzukiParams::make(1, 2, 1, 1);
    const SuzukiAlgebra a(p);
    bool ok = true;
    std::string detail;
    for (auto [f, j] : std::vector<std::pair<Family, int>>{{Family::I, 2}, {Family::I, 4}, {Family::K, 2}, {Family::K, 4}}) {
        const auto b = braiding_of(build_family(a, f, {0, j, 0, 1, 1, 0}));
        const auto d = degree_dims(b, 6, Engine::modular);
        const Dims got = d.dims;
        std::size_t sum = 0;
        for (auto x : got) sum += x;
        const bool good = d.primes.size() == 2 && sum <= 64 && got == prefix;
        ok = ok && good;
        detail += family_name(f) + "/j=" + std::to_string(j) + (good ? " ok " : " BAD ");
    }
    // relation sets: Lemma and Remark lists for I, the K lists at n = 2, 3
    std::size_t checked = 0;
    struct Case {
        int N, n, mu;
        Family f;
        std::vector<std::string> files;
    };
    for (const auto& c : std::vector<Case>{{1, 2, 1, Family::I, {"I_n2", "I_n2_u"}},
                                          {1, 2, -1, Family::I, {"I_n2", "I_n2_u"}},
                                          {1, 2, 1, Family::K, {"K_n2"}},
                                          {1, 3, 1, Family::K, {"K_n3"}}}) {
        const auto q = SuzukiParams::make(c.N, c.n, c.mu, 1);
        const SuzukiAlgebra alg(q);
        for (const auto& key : strict_keys(q)) {
            if (key.family != c.f) continue;
            const auto b = braiding_of(build_family(alg, key.family, key.idx));
            if (!(b.coefficient(0, 0, 0, 0) == Cyc(-1))) continue;
            const auto binds = relation_bindings(key.family, q, key.idx);
            if (c.f == Family::K && c.n == 3 && binds.contains("beta") && !(binds.at("beta") * binds.at("beta") == Cyc(1)))
                continue;
            for (const auto& file : c.files) {
                if (file == "I_n2_u" && key.idx.j != 4) continue;  // stated for j = 4 only
                for (const auto& r : parse_relations(io::read_file(io::data_dir() + "/relations/" + file + ".rel"), b, binds)) {
                    ++checked;
                    if (!relation_in_kernel(b, r.element)) {
                        ok = false;
                        detail += "; " + file + ":" + std::to_string(r.line) + " not in kernel at " + q.label() + " " + key.str();
                    }
                }
            }
        }
    }
    // degrees 7 and 8, for the total
    const auto full = degree_dims(braiding_of(build_family(a, Family::K, {0, 4, 0, 1, 1, 0})), 9, Engine::modular);
    return {ok, detail + "prefix " + join(prefix) + ", " + std::to_string(checked) +
                    " relations in the kernel, degrees 7-8 give total " + std::to_string(full.total())};
}

Result type_d() {
    std::string detail;
    bool ok = true;
    for (int n : {3, 4}) {
        const SuzukiAlgebra a(SuzukiParams::make(1, n, 1, 1));
        const auto b = braiding_of(build_family(a, Family::I, {0, 2, 0, 0, 1, 0}));
        const auto rb = extract_rack(b);
        if (!rb) return {false, "no rack at n=" + std::to_string(n)};
        const auto& r = rb->rack;
        const std::size_t w1 = 0, m1 = static_cast<std::size_t>(n);
        const auto v = r.act(w1, r.act(m1, r.act(w1, m1)));
        const bool good = b.label(v) == "m" + std::to_string(n) && is_type_D(r).has_value();
        ok = ok && good;
        detail += "n=" + std::to_string(n) + " witness " + b.label(v) + ", ";
    }
    const SuzukiAlgebra a(SuzukiParams::make(1, 2, 1, 1));
    const auto rb = extract_rack(braiding_of(build_family(a, Family::I, {0, 2, 0, 0, 1, 0})));
    const bool none = rb && !is_type_D(rb->rack) && type_D_search_exhaustive(rb->rack);
    return {ok && none, detail + (none ? "n=2 none (exhaustive)" : "n=2 unexpected")};
}

Result cross_check_audit() {
    std::size_t counts[4] = {0, 0, 0, 0};
    std::string bad;
    for_params(kGrid, [&](const SuzukiParams& p) {
        const SuzukiAlgebra a(p);
        for (const auto& key : strict_keys(p)) {
            const auto r = cross_check(a, key.family, key.idx, {}, false);
            ++counts[static_cast<int>(r.agreement)];
            if (r.agreement == Agreement::disagree && bad.empty())
                bad = p.label() + " " + key.str() + "\n" + r.braiding_dump;
        }
    });
    std::string detail = std::to_string(counts[0]) + " agree, " + std::to_string(counts[1]) + " compatible, " +
                         std::to_string(counts[2]) + " weak, " + std::to_string(counts[3]) + " disagree";
    if (!bad.empty()) detail += "; first disagreement " + bad;
    return {counts[3] == 0, detail};
}

Result vabe_corollary() {
    std::size_t checked = 0;
    bool ok = true;
    for (long m : {5, 6, 7})
        for (long e = 1; e < m; ++e) {
            if (std::gcd(e, m) != 1) continue;
            const auto b = RootOfUnity::make(m, e);
            ++checked;
            ok = ok && vabe_verdict(b.pow(-2), b, RootOfUnity::make(1, 0)).outcome == Outcome::infinite;
        }
    std::string g4;
    bool residual = true;
    for (long e : {1, 3}) {
        const auto b = RootOfUnity::make(4, e);
        const auto v = vabe_verdict(b.pow(-2), b, RootOfUnity::make(1, 0));
        residual = residual && v.outcome == Outcome::unknown;
        g4 += outcome_name(v.outcome) + (v.reason.empty() ? "" : " (" + v.reason + ")") + " ";
    }
    return {ok && residual, std::to_string(checked) + " orders 5-7 Infinite" + std::string(ok ? "" : " (NOT all)") +
                                "; G4: " + g4 + (residual ? "" : "expected Unknown; b^-2 = b^2 = -1 here")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"Hopf audit", hopf_audit},
        {"simple-module census", simple_census_audit},
        {"YD census", yd_census_audit},
        {"braiding conformance", conformance_audit},
        {"ufo(8) tables", ufo8_audit},
        {"desk-scale Nichols dimensions", desk_dims},
        {"64-dimensional cases", sixty_four},
        {"type-D detection", type_d},
        {"cross-check audit", cross_check_audit},
        {"V_abe corollary", vabe_corollary},
    };
    int failed = 0, n = 0;
    for (const auto& [name, run] : criteria) {
        ++n;
        const auto t0 = std::chrono::steady_clock::now();
        Result o{false, ""};
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("criterion %d: %s: %s: %s [%.2fs]\n", n, o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria pass\n", n - failed, n);
    return failed;
}
