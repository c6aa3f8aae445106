#include "nforge/classifier.hpp"
#include "nforge/errors.hpp"

#include <numeric>
#include <sstream>

namespace nforge {

namespace {

const std::vector<std::pair<Outcome, std::string>> kOutcomes = {
    {Outcome::finite, "Finite"}, {Outcome::infinite, "Infinite"}, {Outcome::unknown, "Unknown"},
    {Outcome::unclassified, "Unclassified"}};

const std::vector<std::pair<TypeTag, std::string>> kTags = {
    {TypeTag::none, "none"},     {TypeTag::A1, "A1"},         {TypeTag::A1xA1, "A1xA1"},
    {TypeTag::A2, "A2"},         {TypeTag::A2xA2, "A2xA2"},   {TypeTag::SuperA2, "SuperA2"},
    {TypeTag::ufo8, "ufo8"},     {TypeTag::D4rack, "D4rack"}, {TypeTag::Vabe4m, "Vabe4m"},
    {TypeTag::VabeM2, "VabeM2"}, {TypeTag::other, "other"}};

long mod(long a, long m) { return ((a % m) + m) % m; }

// Order of a root of unity as an unsigned dimension factor.
unsigned long ord(const RootOfUnity& r) { return static_cast<unsigned long>(r.multiplicative_order()); }

unsigned long upow(unsigned long b, int e) {
    unsigned long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Exponent bookkeeping in omega, of order M = 8nN.
struct Omega {
    long n, N, M;
    int mu, lambda;
    explicit Omega(const SuzukiParams& p)
        : n(p.n), N(p.N), M(8L * p.n * p.N), mu(p.mu), lambda(p.lambda) {}
    RootOfUnity w(long e) const { return RootOfUnity::make(M, e); }
    long minus_one() const { return 4 * n * N; }
    long sign(long e) const { return mod(e, 2) ? minus_one() : 0; }  // (-1)^e
    long mu_bar() const { return mu == 1 ? 0 : 4 * n; }
    long mu_tilde() const { return mu == 1 ? 0 : 2 * n; }
    long sqrt_sign(long e) const { return mod(e, 2) ? 2 * n * N : 0; }  // sqrt((-1)^e)
    long lambda_e() const { return lambda == 1 ? 0 : minus_one(); }
};

bool same(const RootOfUnity& a, const RootOfUnity& b) { return (a * b.inv()).is_one(); }
bool is_minus_one(const RootOfUnity& r) { return r.multiplicative_order() == 2; }

std::optional<RootOfUnity> root_of(const Cyc& c) { return as_root_of_unity(c); }

// Shared n = 1 rule of the I and K lemmas.
DimVerdict n1_rule(const RootOfUnity& q, bool lambda_one, const std::string& who) {
    const RootOfUnity lam = lambda_one ? RootOfUnity::make(1, 0) : RootOfUnity::minus_one();
    if (!q.is_one() && (lam * q.pow(2)).is_one())
        return DimVerdict::finite(upow(ord(q), 2), TypeTag::A1xA1, who + ": lambda q^2 = 1 != q");
    if (!q.is_one() && (lam * q.pow(3)).is_one())
        return DimVerdict::finite(upow(ord(q), 3), TypeTag::A2, who + ": lambda q^3 = 1 != q");
    return DimVerdict::infinite(who + ": n = 1, neither lambda q^2 = 1 != q nor lambda q^3 = 1 != q");
}

}  // namespace

std::string outcome_name(Outcome o) {
    for (const auto& [k, v] : kOutcomes)
        if (k == o) return v;
    return "?";
}

std::string tag_name(TypeTag t) {
    for (const auto& [k, v] : kTags)
        if (k == t) return v;
    return "?";
}

std::optional<Outcome> outcome_from_name(const std::string& s) {
    for (const auto& [k, v] : kOutcomes)
        if (v == s) return k;
    return std::nullopt;
}

std::optional<TypeTag> tag_from_name(const std::string& s) {
    for (const auto& [k, v] : kTags)
        if (v == s) return k;
    return std::nullopt;
}

std::string DimVerdict::str() const {
    std::string s = outcome_name(outcome);
    if (outcome == Outcome::finite) s += "(" + (dim ? std::to_string(*dim) : std::string("type-only")) + ", " + tag_name(tag) + ")";
    else if (tag != TypeTag::none) s += "(" + tag_name(tag) + ")";
    if (necessary_condition) s += "[necessary condition holds]";
    return s;
}

DimVerdict DimVerdict::finite(std::optional<unsigned long> dim, TypeTag tag, std::string reason) {
    DimVerdict v;
    v.outcome = Outcome::finite;
    v.dim = dim;
    v.tag = tag;
    v.reason = std::move(reason);
    return v;
}

DimVerdict DimVerdict::infinite(std::string reason, TypeTag tag) {
    DimVerdict v;
    v.outcome = Outcome::infinite;
    v.tag = tag;
    v.reason = std::move(reason);
    return v;
}

DimVerdict DimVerdict::unknown(std::string reason) {
    DimVerdict v;
    v.reason = std::move(reason);
    return v;
}

DimVerdict DimVerdict::unclassified(std::string reason) {
    DimVerdict v;
    v.outcome = Outcome::unclassified;
    v.reason = std::move(reason);
    return v;
}

bool operator==(const DimVerdict& a, const DimVerdict& b) {
    return a.outcome == b.outcome && a.dim == b.dim && a.tag == b.tag && a.necessary_condition == b.necessary_condition;
}

// ---- diagonal table -------------------------------------------------------

DimVerdict rank2_table_lookup(const QMatrix& q) {
    DimVerdict v;
    if (q.dim == 1) {
        const auto r = root_of(q.at(0, 0));
        if (!r || r->is_one()) v = DimVerdict::infinite("rank one, q = " + q.at(0, 0).str());
        else v = DimVerdict::finite(ord(*r), TypeTag::A1, "rank one, q of order " + std::to_string(ord(*r)));
        v.provenance = "table";
        return v;
    }
    DynkinDiagram diagram = dynkin(q);
    if (q.dim != 2) {
        v = DimVerdict::unclassified("rank " + std::to_string(q.dim) + " is outside the rank-two table");
        v.diagram = diagram;
        v.provenance = "table";
        return v;
    }
    const auto q1 = root_of(q.at(0, 0)), q2 = root_of(q.at(1, 1)), e = root_of(q.at(0, 1) * q.at(1, 0));
    if ((q1 && q1->is_one()) || (q2 && q2->is_one())) {
        v = DimVerdict::infinite("a vertex equals 1");
    } else if (!q1 || !q2 || !e) {
        v = DimVerdict::unclassified("labels are not roots of unity");
    } else if (e->is_one()) {
        v = DimVerdict::finite(ord(*q1) * ord(*q2), TypeTag::A1xA1, "edge label 1, product of two rank-one algebras");
    } else if (same(*q1, *q2) && same(*e, q1->inv())) {
        v = DimVerdict::finite(upow(ord(*q1), 3), TypeTag::A2, "Cartan type A2: both vertices q, edge q^-1");
    } else if (is_minus_one(*q1) && is_minus_one(*q2) && !is_minus_one(*e)) {
        v = DimVerdict::finite(std::nullopt, TypeTag::SuperA2, "vertices -1, -1, edge not +-1");
    } else if (e->multiplicative_order() == 12 && same(*q1, RootOfUnity::minus_one() * e->pow(2)) &&
               same(*q2, *q1)) {
        v = DimVerdict::finite(std::nullopt, TypeTag::ufo8, "vertices -zeta^2, edge zeta of order 12");
    } else {
        v = DimVerdict::unclassified("rank-two diagram outside the encoded patterns");
    }
    v.diagram = diagram;
    v.provenance = "table";
    return v;
}

DimVerdict rank2_table_lookup(const BraidedSpace& b) {
    const auto q = detect_diagonal(b);
    if (!q) throw NotDiagonal("braiding is not of diagonal type in the given basis");
    return rank2_table_lookup(*q);
}

// ---- V_abe ------------------------------------------------------------------

DimVerdict vabe_verdict(const RootOfUnity& a, const RootOfUnity& b, const RootOfUnity& e) {
    const RootOfUnity ae = a * e;
    DimVerdict v;
    if (same(ae, b.pow(2))) {
        if (is_minus_one(b)) v = DimVerdict::finite(4, TypeTag::A1xA1, "ae = b^2, b = -1");
        else if (b.pow(3).is_one() && !b.is_one()) v = DimVerdict::finite(27, TypeTag::A2, "ae = b^2, b^3 = 1 != b");
        else v = DimVerdict::infinite("ae = b^2 with b neither -1 nor of order 3");
    } else if (is_minus_one(b)) {
        const unsigned long m = ord(ae);
        v = DimVerdict::finite(4 * m, TypeTag::Vabe4m, "b = -1, ae of order " + std::to_string(m));
    } else if (ae.is_one() && !b.is_one()) {
        const unsigned long m = ord(b);
        v = DimVerdict::finite(m * m, TypeTag::VabeM2, "ae = 1, b of order " + std::to_string(m));
    } else if (same(b.pow(2), ae.inv()) && b.multiplicative_order() >= 5) {
        v = DimVerdict::infinite("b^2 = (ae)^-1 with b of order " + std::to_string(ord(b)) + " >= 5");
    } else if (b.is_one()) {
        v = DimVerdict::infinite("b = 1 is not a primitive m-th root for any m >= 2");
    } else {
        v = DimVerdict::unknown("residual case of the V_abe formula");
    }
    v.provenance = "table";
    return v;
}

DimVerdict vabe_verdict(const Cyc& a, const Cyc& b, const Cyc& e) {
    if (a.is_zero() || b.is_zero() || e.is_zero()) throw ZeroParameter("V_abe parameters must be nonzero");
    const auto ra = root_of(a), rb = root_of(b), re = root_of(e);
    if (!ra || !rb || !re) return DimVerdict::unknown("parameters are not all roots of unity");
    return vabe_verdict(*ra, *rb, *re);
}

// ---- lemmas -----------------------------------------------------------------

GHParameters gh_parameters(Family f, const SuzukiParams& p, const FamilyIndices& x) {
    const Omega o(p);
    const long n = o.n, N = o.N, j = x.j, k = x.k, s = x.s, t = x.t;
    if (f == Family::G)
        return {o.w(o.mu_bar() * (2 * s + 2 * t + 1) + 4 * k * n * (4 * s + 4 * t + 2) + j * N * (-2 - 4 * t)),
                o.w(o.sign(x.p) + o.mu_bar() * (s + t) + o.mu_tilde() + 4 * n * k * (2 * s + 2 * t + 1) +
                    j * N * (2 * t + 1))};
    if (f == Family::H)
        return {o.w(o.mu_bar() * (2 * s + 2 * t + 1) + 4 * k * n * (4 * t + 4 * s + 2) + j * N * (4 * t + 2)),
                o.w(o.sign(x.p) + o.mu_bar() * (s + t) + o.mu_tilde() + 4 * k * n * (2 * t + 2 * s + 1) +
                    j * N * (-1 - 2 * t))};
    throw BadIndex("gh_parameters applies to G and H only");
}

RootOfUnity family_q(Family f, const SuzukiParams& p, const FamilyIndices& x) {
    const Omega o(p);
    const long n = o.n, k = x.k, s = x.s, t = x.t;
    switch (f) {
        case Family::I: return o.w(o.sign(x.p) + 4 * k * n * (2 * s + 1));
        case Family::K: return o.w(o.sign(x.p) + o.mu_bar() * s + 8 * k * n * s);
        case Family::P:
            return o.w(o.sign(x.p + x.j) + o.sqrt_sign(x.i + x.j) * (2 * t + 1) + o.mu_tilde() * (2 * s + 2 * t + 1) +
                       4 * n * k * (2 * s + 2 * t + 1));
        default: throw BadIndex("no closed-form q for family " + family_name(f));
    }
}

std::map<std::string, Cyc> relation_bindings(Family f, const SuzukiParams& p, const FamilyIndices& x) {
    const long n = p.n, N = p.N, k = x.k, s = x.s, j = x.j;
    if (f == Family::I) return {{"alpha", p.omega(8 * k * n * s)}, {"beta", p.omega(2 * n * j * N)}};
    if (f == Family::K && n == 2) return {{"a", p.mu_bar().pow(2) * p.omega(16 * k * n)}, {"b", p.omega(4 * j * N)}};
    if (f == Family::K && n == 3)
        return {{"alpha", Cyc(p.lambda) * p.mu_bar() * p.omega(8 * k * n)}, {"beta", p.omega(6 * j * N)}};
    return {};
}

DimVerdict de_verdict(long alpha, long beta, long M) {
    const long a = mod(alpha, M), half = M / 2;
    const auto is = [&](long x, long r) { return mod(x, M) == r; };
    const unsigned long m = ord(RootOfUnity::make(M, alpha));
    std::vector<DimVerdict> hits;
    if (a != 0 && is(2 * beta, 0))
        hits.push_back(DimVerdict::finite(upow(m, 2), TypeTag::A1xA1, "M !| alpha, M | 2 beta"));
    if (a != 0 && is(alpha + 2 * beta, 0))
        hits.push_back(DimVerdict::finite(upow(m, 3), TypeTag::A2, "M !| alpha, M | alpha + 2 beta"));
    if (a == half && !is(2 * beta, 0) && !is(2 * beta, half))
        hits.push_back(DimVerdict::finite(std::nullopt, TypeTag::SuperA2, "alpha = M/2, 2 beta not 0 or M/2"));
    if (is(alpha - 4 * beta, half) && is(12 * beta, half) && !is(8 * beta, 0))
        hits.push_back(DimVerdict::finite(std::nullopt, TypeTag::ufo8, "alpha - 4 beta = 12 beta = M/2, 8 beta != 0"));
    if (hits.empty()) return DimVerdict::infinite("none of the four cases holds");
    DimVerdict v = hits.front();
    for (const auto& h : hits) v.matches.push_back(h.tag);
    return v;
}

DimVerdict lemma_verdict(Family f, const SuzukiParams& p, const FamilyIndices& x) {
    if (!in_strict_range(p, f, x))
        throw BadIndex(make_key(f, x).str() + " is outside the theorem's index ranges");
    const Omega o(p);
    const long n = o.n, N = o.N, M = o.M, k = x.k, s = x.s, t = x.t;
    const bool lam = p.lambda == 1;
    switch (f) {
        case Family::A: {
            const long ks = k * s;
            if (ks % N == 0) return DimVerdict::infinite("N | ks");
            return DimVerdict::finite(N / std::gcd(N, ks), TypeTag::A1, "N !| ks, dim N/(N,ks)");
        }
        case Family::Abar: {
            if (lam) {
                const long X = k * (s + n);
                if (X % N == 0) return DimVerdict::infinite("lambda = 1, N | k(s+n)");
                return DimVerdict::finite(N / std::gcd(N, X), TypeTag::A1, "lambda = 1, dim N/(N,k(s+n))");
            }
            const long X = N * n + 2 * k * (s + n);
            if (X % (2 * N) == 0) return DimVerdict::infinite("lambda = -1, 2N | Nn + 2k(s+n)");
            return DimVerdict::finite(2 * N / std::gcd(2 * N, X), TypeTag::A1,
                                      "lambda = -1, dim 2N/(2N, Nn + 2k(s+n))");
        }
        case Family::B: {
            const long ks = k * s;
            if ((2 * ks) % N == 0 && ks % N != 0) return DimVerdict::finite(4, TypeTag::A1xA1, "N | 2ks, N !| ks");
            if ((3 * ks) % N == 0 && ks % N != 0) return DimVerdict::finite(27, TypeTag::A2, "N | 3ks, N !| ks");
            return DimVerdict::infinite("neither N | 2ks nor N | 3ks with N !| ks");
        }
        case Family::C: {
            const long d = 2 * k * (s + t + 1) + N * (x.i + x.j) * (t + 1);
            if (d % N == 0 && d % (2 * N) != 0) return DimVerdict::finite(4, TypeTag::A1xA1, "N | d, 2N !| d");
            if ((3 * d) % (2 * N) == 0 && d % (2 * N) != 0) return DimVerdict::finite(27, TypeTag::A2, "2N | 3d, 2N !| d");
            return DimVerdict::infinite("d fits neither finite case");
        }
        case Family::D:
            return de_verdict(8 * n * k * (s + t + 1) - 2 * x.j * N * (t + 1),
                              8 * n * k * (s + t + 1) + 2 * x.j * N * (t + 1), M);
        case Family::E:
            return de_verdict(8 * n * k * (s + t) + 2 * x.j * N * t, 8 * n * k * (s + t) - 2 * x.j * N * t, M);
        case Family::G:
        case Family::H: {
            const auto gh = gh_parameters(f, p, x);
            DimVerdict v = vabe_verdict(gh.ae, gh.b, RootOfUnity::make(1, 0));
            v.provenance = "lemma";
            return v;
        }
        case Family::P: {
            const RootOfUnity q = family_q(f, p, x);
            if (is_minus_one(q)) return DimVerdict::finite(4, TypeTag::A1xA1, "q = -1");
            if (q.pow(3).is_one() && !q.is_one()) return DimVerdict::finite(27, TypeTag::A2, "q^3 = 1 != q");
            return DimVerdict::infinite("q is neither -1 nor of order 3");
        }
        case Family::I: {
            const RootOfUnity q = family_q(f, p, x);
            if (n == 1) return n1_rule(q, lam, "I");
            if (n == 2) {
                if (is_minus_one(q) && lam)
                    return DimVerdict::finite(64, x.j == 2 ? TypeTag::D4rack : TypeTag::A2xA2, "q = -1, lambda = 1");
                return DimVerdict::infinite("n = 2 without q = -1, lambda = 1");
            }
            return DimVerdict::infinite("n > 2, the rack is of type D");
        }
        case Family::K: {
            const RootOfUnity q = family_q(f, p, x);
            if (n == 1) return n1_rule(q, lam, "K");
            if (n == 2 && lam) {
                if (is_minus_one(q)) return DimVerdict::finite(64, TypeTag::A2xA2, "n = 2, lambda = 1, q = -1");
                return DimVerdict::infinite("n = 2, lambda = 1, q != -1");
            }
            DimVerdict v = DimVerdict::unknown(n == 2 ? "n = 2, lambda = -1: only a necessary condition is known"
                                                      : "n >= 3 is open");
            if (n == 2) v.necessary_condition = is_minus_one(q) || (q.pow(3).is_one() && !q.is_one());
            return v;
        }
        default: throw BadIndex("family " + family_name(f) + " is not among the theorem's families");
    }
}

}  // namespace nforge
