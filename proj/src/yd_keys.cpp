#include "nforge/errors.hpp"
#include "nforge/yd_radford.hpp"
#include "yd_internal.hpp"

#include <numeric>
#include <sstream>

namespace nforge {

namespace {

int mod4(int a) { return ((a % 4) + 4) % 4; }

// Representative of a residue class mod 4 inside the strict range {1, 2, 3, 4}.
int rep4(int a) { return mod4(a) == 0 ? 4 : mod4(a); }

const std::array<const char*, 17> kNames = {"A", "Abar", "B", "C", "D", "E", "G", "H", "P",
                                            "I", "K",    "F", "M", "N", "J", "L", "Q"};

}  // namespace

std::string family_name(Family f) { return kNames[static_cast<int>(f)]; }

std::optional<Family> family_from_name(const std::string& s) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (s == kNames[i]) return static_cast<Family>(i);
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> all = [] {
        std::vector<Family> v;
        for (std::size_t i = 0; i < kNames.size(); ++i) v.push_back(static_cast<Family>(i));
        return v;
    }();
    return all;
}

IndexUse index_use(Family f) {
    switch (f) {
        case Family::A: return {true, false, true, true, true, false};
        case Family::Abar: return {true, true, true, true, true, false};
        case Family::B: return {true, true, true, false, true, false};
        case Family::C:
        case Family::P: return {true, true, true, true, true, true};
        case Family::D:
        case Family::E:
        case Family::G:
        case Family::H: return {false, true, true, true, true, true};
        case Family::F:
        case Family::I:
        case Family::J:
        case Family::K:
        case Family::L: return {false, true, true, true, true, false};
        case Family::M:
        case Family::N: return {true, true, true, false, true, false};
        case Family::Q: return {true, true, true, true, true, false};
    }
    return {};
}

FamilyKey make_key(Family f, FamilyIndices idx) {
    const IndexUse u = index_use(f);
    if (!u.i) idx.i = 0;
    if (!u.j) idx.j = 0;
    if (!u.p) idx.p = 0;
    if (!u.t) idx.t = 0;
    return {f, idx};
}

std::string FamilyKey::str() const {
    const IndexUse u = index_use(family);
    std::ostringstream os;
    os << family_name(family) << "[";
    bool first = true;
    auto put = [&](bool used, const char* name, int v) {
        if (!used) return;
        os << (first ? "" : ",") << name << "=" << v;
        first = false;
    };
    put(u.i, "i", idx.i);
    put(u.j, "j", idx.j);
    put(u.k, "k", idx.k);
    put(u.p, "p", idx.p);
    put(u.s, "s", idx.s);
    put(u.t, "t", idx.t);
    os << "]";
    return os.str();
}

FamilyKey canonical_key(const SuzukiParams& P, Family f, FamilyIndices x) {
    const bool lam = P.lambda == 1;
    const bool n_even = P.n % 2 == 0;
    const bool ij_even = (x.i + x.j) % 2 == 0;
    auto to_I = [&](int p, int j) {
        if (j % 2 != 0) throw BadIndex("I needs an even j");
        FamilyIndices y{0, rep4(j), x.k, p, x.s, 0};
        return make_key(Family::I, y);
    };
    auto to_K = [&](int p, int j) {
        if ((mod4(j) % 2 == 0) != lam) throw BadIndex("K needs j even for lambda = 1 and odd for lambda = -1");
        return make_key(Family::K, {0, rep4(j), x.k, p, x.s, 0});
    };
    switch (f) {
        case Family::I: return to_I(x.p, x.j);
        case Family::J: return to_I(x.p, lam ? x.j : x.j + 2);
        case Family::M: return to_I(x.i, (n_even || ij_even) ? 0 : 2);
        case Family::N: {
            int j = 0;
            if (n_even) j = lam ? 0 : 2;
            else j = (lam == ij_even) ? 0 : 2;
            return to_I(x.j, j);
        }
        case Family::K: return to_K(x.p, x.j);
        case Family::L: return to_K(x.p, -x.j);
        case Family::Q: {
            const int jl = (n_even || ij_even) ? 0 : 2;
            return to_K(x.p, -jl);
        }
        default: return make_key(f, x);
    }
}

std::vector<FamilyKey> strict_keys(const SuzukiParams& P) {
    std::vector<FamilyKey> out;
    const int N = P.N, n = P.n;
    const bool lam = P.lambda == 1;
    auto add = [&](Family f, FamilyIndices x) {
        if (!in_strict_range(P, f, x)) throw BadIndex("strict enumeration produced " + make_key(f, x).str());
        out.push_back(make_key(f, x));
    };
    for (int s = 1; s <= N; ++s)
        for (int k = 0; k < N; ++k) {
            for (int i = 0; i < 2; ++i)
                for (int p = 0; p < 2; ++p) {
                    add(Family::A, {i, i, k, p, s, 0});
                    add(Family::Abar, {i, lam ? i : 1 - i, k, p, s, 0});
                }
            add(Family::B, {0, 1, k, 0, s, 0});
            for (int j = 0; j < 2; ++j)
                for (int p = 0; p < 2; ++p)
                    for (int t = 0; t + 2 <= n; ++t) add(Family::C, {0, j, k, p, s, t});
            add(Family::C, {0, lam ? 1 : 0, k, 0, s, n - 1});
            for (int h = 1; h <= n - 1; ++h)
                for (int p = 0; p < 2; ++p)
                    for (int t = 0; t < n; ++t) {
                        add(Family::D, {0, 2 * h, k, p, s, t});
                        add(Family::E, {0, 2 * h, k, p, s, t});
                    }
            const std::vector<int> gh_j = [&] {
                std::vector<int> v;
                if (lam)
                    for (int h = 1; h <= n - 1; ++h) v.push_back(2 * h);
                else
                    for (int h = 1; h <= n; ++h) v.push_back(2 * h - 1);
                return v;
            }();
            for (int j : gh_j)
                for (int p = 0; p < 2; ++p)
                    for (int t = 0; t < n; ++t) {
                        add(Family::G, {0, j, k, p, s, t});
                        add(Family::H, {0, j, k, p, s, t});
                    }
            if (lam)
                for (int j = 0; j < 2; ++j)
                    for (int p = 0; p < 2; ++p)
                        for (int t = 0; t < n; ++t) add(Family::P, {0, j, k, p, s, t});
            for (int p = 0; p < 2; ++p)
                for (int j : {2, 4}) add(Family::I, {0, j, k, p, s, 0});
            for (int p = 0; p < 2; ++p)
                for (int j : lam ? std::array{2, 4} : std::array{1, 3}) add(Family::K, {0, j, k, p, s, 0});
        }
    return out;
}

std::size_t family_dim(const SuzukiParams& P, Family f) {
    switch (f) {
        case Family::A:
        case Family::Abar: return 1;
        case Family::I:
        case Family::K:
        case Family::M:
        case Family::N:
        case Family::J:
        case Family::L:
        case Family::Q: return static_cast<std::size_t>(2 * P.n);
        default: return 2;
    }
}

bool CensusCounts::pass() const {
    return one_dim == expected_one && two_dim == expected_two && twon_dim == expected_twon &&
           weighted_sum == expected_square;
}

CensusCounts yd_census(const SuzukiParams& P) {
    CensusCounts c;
    const std::size_t N = static_cast<std::size_t>(P.N), n = static_cast<std::size_t>(P.n);
    for (const auto& key : strict_keys(P)) {
        const std::size_t d = family_dim(P, key.family);
        const bool ladder = key.family == Family::I || key.family == Family::K;
        (d == 1 ? c.one_dim : ladder ? c.twon_dim : c.two_dim)++;
        c.weighted_sum += d * d;
    }
    // At n = 1 the ladder families are two-dimensional too; they are counted by family.
    c.expected_one = 8 * N * N;
    c.expected_two = 2 * N * N * (4 * n * n - 1);
    c.expected_twon = 8 * N * N;
    c.expected_square = 64 * N * N * n * n;
    return c;
}

// ---------------------------------------------------------------------------
// Comodule support

namespace {

struct CoalgebraBlocks {
    std::vector<std::size_t> root;  // union-find representative per basis index
    std::map<std::string, std::size_t> block_of_label;
    std::map<std::string, CycEchelon::SparseVec> grouplike;  // g+_s, g-_s, h+_s, h-_s

    std::size_t find(std::size_t x) const {
        while (root[x] != x) x = root[x];
        return x;
    }
};

CycEchelon::SparseVec as_sparse(const SuzukiAlgebra& a, const AlgebraElement& e) {
    CycEchelon::SparseVec v;
    for (const auto& [w, c] : e)
        if (!c.is_zero()) v[a.index(w)] = c;
    return v;
}

CoalgebraBlocks coalgebra_blocks(const SuzukiAlgebra& a) {
    CoalgebraBlocks b;
    const std::size_t D = a.dim();
    b.root.resize(D);
    std::iota(b.root.begin(), b.root.end(), 0);
    auto unite = [&](std::size_t x, std::size_t y) {
        x = b.find(x);
        y = b.find(y);
        if (x != y) b.root[std::max(x, y)] = std::min(x, y);
    };
    for (std::size_t i = 0; i < D; ++i)
        for (const auto& t : a.coproduct(a.basis()[i])) {
            if (t.sign == 0) continue;
            unite(i, a.index(t.left));
            unite(i, a.index(t.right));
        }
    const SuzukiParams& P = a.params();
    auto block_at = [&](const Word& w) { return b.find(a.index(a.rewrite(w).word)); };
    for (int s = 1; s <= P.N; ++s) {
        const std::string ss = std::to_string(s);
        const Word g1 = power(Gen::x11, 2 * s), g2 = power(Gen::x12, 2 * s);
        const Word h1 = concat({g1, chi(Gen::x11, Gen::x22, 2 * P.n)});
        const Word h2 = concat({g2, chi(Gen::x12, Gen::x21, 2 * P.n)});
        b.block_of_label["g_" + ss] = block_at(g1);
        b.block_of_label["h_" + ss] = block_at(h1);
        for (int sign : {1, -1}) {
            const std::string tag = sign == 1 ? "+" : "-";
            AlgebraElement g = a.normalize_word(g1);
            for (const auto& [w, c] : a.normalize_word(g2)) add_term(g, w, c * Cyc(sign));
            b.grouplike["g" + tag + "_" + ss] = as_sparse(a, g);
            AlgebraElement h = a.normalize_word(h1);
            for (const auto& [w, c] : a.normalize_word(h2)) add_term(h, w, c * Cyc(sign) * P.sqrt_lambda());
            b.grouplike["h" + tag + "_" + ss] = as_sparse(a, h);
        }
        for (int u = 1; u < 2 * P.n; ++u)
            b.block_of_label["L_{" + ss + "," + std::to_string(u) + "}"] =
                block_at(concat({g1, chi(Gen::x22, Gen::x11, u)}));
    }
    return b;
}

}  // namespace

std::set<std::string> comodule_support(const SuzukiAlgebra& a, const YDModule& m) {
    const CoalgebraBlocks blocks = coalgebra_blocks(a);
    CycEchelon coeffs;
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t l = 0; l < m.dim; ++l) {
            CycEchelon::SparseVec f;
            for (const auto& t : m.coaction[i])
                if (!t.coeffs[l].is_zero()) f[a.index(t.word)] = t.coeffs[l];
            if (!f.empty()) coeffs.insert(std::move(f));
        }
    std::set<std::size_t> touched;
    for (const auto& row : coeffs.rows())
        for (const auto& [idx, c] : row) touched.insert(blocks.find(idx));
    std::set<std::string> out;
    for (const auto& [label, v] : blocks.grouplike)
        if (coeffs.contains(v)) out.insert(label);
    for (const auto& [label, blk] : blocks.block_of_label)
        if (label[0] == 'L' && touched.count(blk)) out.insert(label);
    return out;
}

std::optional<std::set<std::string>> expected_support(const SuzukiParams& P, const FamilyKey& key) {
    const int s = key.idx.s, t = key.idx.t, n = P.n;
    const std::string ss = std::to_string(s);
    auto lam = [&](int u) { return std::set<std::string>{"L_{" + ss + "," + std::to_string(u) + "}"}; };
    const std::set<std::string> g{"g+_" + ss, "g-_" + ss}, h{"h+_" + ss, "h-_" + ss};
    switch (key.family) {
        case Family::B: return g;
        case Family::C:
        case Family::D: return t == n - 1 ? h : lam(2 * t + 2);
        case Family::E: return t == 0 ? g : lam(2 * t);
        case Family::G:
        case Family::H:
        case Family::P: return lam(2 * t + 1);
        default: return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Decomposition of V (box) A

namespace {

class StrictCatalog {
public:
    explicit StrictCatalog(const SuzukiAlgebra& a) : algebra_(&a) {}

    std::optional<FamilyKey> resolve(const YDModule& m) {
        load();
        const auto support = comodule_support(*algebra_, m);
        for (std::size_t i = 0; i < modules_.size(); ++i) {
            if (modules_[i].dim != m.dim || supports_[i] != support) continue;
            if (find_intertwiner(m, modules_[i])) return modules_[i].key;
        }
        return std::nullopt;
    }

private:
    void load() {
        if (!modules_.empty()) return;
        for (const auto& key : strict_keys(algebra_->params())) {
            modules_.push_back(build_family(*algebra_, key.family, key.idx));
            supports_.push_back(comodule_support(*algebra_, modules_.back()));
        }
    }

    const SuzukiAlgebra* algebra_;
    std::vector<YDModule> modules_;
    std::vector<std::set<std::string>> supports_;
};

struct Printed {
    Family f;
    FamilyIndices idx;
};

std::vector<Printed> printed_constituents(const SuzukiParams& P, const SimpleModule& v, int s) {
    std::vector<Printed> out;
    const int n = P.n, i = v.i, j = v.j, k = v.k;
    const bool lam = P.lambda == 1;
    switch (v.kind) {
        case SimpleKind::V_ijk: {
            out.push_back({Family::M, {i, j, k, 0, s, 0}});
            out.push_back({Family::N, {i, j, k, 0, s, 0}});
            if (i != j) out.push_back({Family::B, {i, j, k, 0, s, 0}});
            else
                for (int p = 0; p < 2; ++p) out.push_back({Family::A, {i, i, k, p, s, 0}});
            for (int t = 0; t + 2 <= n; ++t)
                for (int p = 0; p < 2; ++p) out.push_back({Family::C, {i, j, k, p, s, t}});
            if ((lam && i == j) || (!lam && i != j))
                for (int p = 0; p < 2; ++p) out.push_back({Family::Abar, {i, j, k, p, s, 0}});
            else
                out.push_back({Family::C, {i, j, k, 0, s, n - 1}});
            break;
        }
        case SimpleKind::V_jk:
            for (int p = 0; p < 2; ++p) {
                out.push_back({Family::I, {0, j, k, p, s, 0}});
                out.push_back({Family::J, {0, j, k, p, s, 0}});
                out.push_back({Family::E, {0, j, k, p, s, 0}});
                for (int t = 0; t < n; ++t) {
                    out.push_back({Family::D, {0, j, k, p, s, t}});
                    if (t + 1 < n) out.push_back({Family::E, {0, j, k, p, s, t + 1}});
                }
            }
            break;
        case SimpleKind::Vp_jk:
            for (int p = 0; p < 2; ++p) {
                out.push_back({Family::K, {0, j, k, p, s, 0}});
                out.push_back({Family::L, {0, j, k, p, s, 0}});
                for (int t = 0; t < n; ++t) {
                    out.push_back({Family::G, {0, j, k, p, s, t}});
                    out.push_back({Family::H, {0, j, k, p, s, t}});
                }
            }
            break;
        case SimpleKind::Vp_ijk:
            for (int p = 0; p < 2; ++p) {
                out.push_back({Family::Q, {i, j, k, p, s, 0}});
                for (int t = 0; t < n; ++t) out.push_back({Family::P, {i, j, k, p, s, t}});
            }
            break;
    }
    return out;
}

}  // namespace

std::optional<FamilyKey> resolve_by_search(const SuzukiAlgebra& algebra, const YDModule& m) {
    StrictCatalog catalog(algebra);
    return catalog.resolve(m);
}

Decomposition decompose_boxtimes(const SuzukiAlgebra& algebra, const SimpleModule& v, std::size_t bound) {
    const SuzukiParams& P = algebra.params();
    Decomposition d;
    d.simple = v;
    d.box_dim = v.dim * algebra.dim();
    if (d.box_dim > bound)
        throw BoundExceeded("V (box) A has dimension " + std::to_string(d.box_dim) + " above the bound " +
                            std::to_string(bound));
    const BoxSpace box(algebra, v);
    StrictCatalog catalog(algebra);
    CycEchelon all;
    for (int s = 1; s <= P.N; ++s)
        for (const auto& pc : printed_constituents(P, v, s)) {
            const FamilyKey printed = make_key(pc.f, pc.idx);
            auto span = detail::family_vectors(box, pc.f, printed.idx);
            const YDModule m = module_from_span(box, span.vectors, printed, span.labels);
            for (const auto& w : m.box_vectors)
                if (!all.insert(w))
                    throw GapFound(printed.str() + " overlaps the constituents listed before it");
            Constituent c;
            c.printed = printed;
            c.canonical = canonical_key(P, pc.f, printed.idx);
            c.dim = m.dim;
            if (in_strict_range(P, c.canonical.family, c.canonical.idx)) {
                c.resolved = c.canonical;
            } else if (auto r = catalog.resolve(m)) {
                c.resolved = *r;
                c.by_search = true;
                d.notes.push_back(printed.str() + " resolved by intertwiner search to " + r->str());
            } else {
                c.resolved = c.canonical;
                d.notes.push_back(printed.str() + ": no theorem representative found");
            }
            d.total += m.dim;
            d.parts.push_back(c);
        }
    if (d.total != d.box_dim || all.rank() != d.box_dim)
        throw GapFound("constituents span " + std::to_string(all.rank()) + " of " + std::to_string(d.box_dim) +
                       " dimensions");
    return d;
}

}  // namespace nforge
