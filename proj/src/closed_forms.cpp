#include "nforge/classifier.hpp"
#include "nforge/errors.hpp"

#include <sstream>

namespace nforge {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

// Exponents of omega for the scalars the lemmas are written in.
struct Ex {
    long n, N, M;
    int mu, lambda;
    explicit Ex(const SuzukiParams& p) : n(p.n), N(p.N), M(8L * p.n * p.N), mu(p.mu), lambda(p.lambda) {}
    long sign(long e) const { return mod(e, 2) ? 4 * n * N : 0; }
    long lam(long e) const { return lambda == 1 ? 0 : sign(e); }
    long mu_bar(long e) const { return mu == 1 ? 0 : 4 * n * e; }
    long mu_tilde(long e) const { return mu == 1 ? 0 : 2 * n * e; }
    long sqrt_sign(long e) const { return mod(e, 2) ? 2 * n * N : 0; }
};

class Printed {
public:
    Printed(const Ex& x, std::vector<std::string> labels) : x_(x), b_(labels.size(), static_cast<unsigned>(x.M)) {
        b_.labels = std::move(labels);
    }
    void put(std::size_t i, std::size_t j, std::size_t k, std::size_t l, long e) {
        b_.add(i, j, k, l, Cyc::root(static_cast<unsigned>(x_.M), mod(e, x_.M)));
    }
    // c(v_i (x) v_j) = q_ij v_j (x) v_i
    void diagonal(const std::vector<long>& q) {
        const std::size_t d = b_.dim();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) put(i, j, j, i, q[i * d + j]);
    }
    BraidedSpace done() { return std::move(b_); }

private:
    const Ex& x_;
    BraidedSpace b_;
};

std::vector<std::string> w_labels(std::size_t d) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= d; ++i) v.push_back("w" + std::to_string(i));
    return v;
}

// General K display, valid for every n; indices of w are 1-based.
BraidedSpace k_general(const Ex& x, const FamilyIndices& idx) {
    const long n = x.n, N = x.N, j = idx.j, k = idx.k, s = idx.s, p = idx.p;
    Printed pr(x, w_labels(2 * n));
    const long mbw = x.mu_bar(1) + 8 * n * k;  // mu_bar omega^{8nk}
    for (long a = 1; a <= 2 * n; ++a)
        for (long b = 1; b <= 2 * n; ++b) {
            if (a == 1) {
                pr.put(0, b - 1, b - 1, 0, x.sign(p) + s * mbw);
                continue;
            }
            const long right = 2 * n - a + 2;
            if ((a + b) % 2 == 0) {
                const long r = (b + 2 * a - 2) / (2 * n), d = (b + 2 * a - 2) % (2 * n);
                if (d == 0)
                    pr.put(a - 1, b - 1, 2 * n - 1, right - 1,
                           x.sign(p) + x.lam(r) + x.mu_bar(s + n * (r - 2)) + 2 * n * (r - 2) * (4 * n * k + j * N) +
                               8 * n * k * s);
                else
                    pr.put(a - 1, b - 1, d - 1, right - 1,
                           x.sign(p) + x.lam(r + 1) + x.mu_bar(s + n * (r - 1)) +
                               2 * n * (r - 1) * (4 * n * k + j * N) + 8 * n * k * s);
            } else {
                const long v = 2 * n + 1 - b + 2 * a - 2, e = v / (2 * n), f = v % (2 * n);
                if (f == 0)
                    pr.put(a - 1, b - 1, 0, right - 1,
                           x.sign(p) + x.lam(e) + (s - n * e - 2 + 2 * a) * mbw - 2 * j * N * n * e);
                else
                    pr.put(a - 1, b - 1, 2 * n - f, right - 1,
                           x.sign(p) + x.lam(e + 1) + (s - n * (e + 1) - 2 + 2 * a) * mbw - 2 * j * N * n * (e + 1));
            }
        }
    return pr.done();
}

struct Entry {
    int i, j, k, l;
    int q, a, b, lam;  // powers of q, alpha (or a), beta (or b) and lambda
};

BraidedSpace from_entries(const Ex& x, std::vector<std::string> labels, const std::vector<Entry>& es, long q,
                          long a, long b) {
    Printed pr(x, std::move(labels));
    for (const auto& e : es) pr.put(e.i, e.j, e.k, e.l, e.q * q + e.a * a + e.b * b + x.lam(e.lam));
    return pr.done();
}

// Displays for K at n = 2 (in q, a, b) and n = 3 (in q, alpha, beta); 0-based indices.
const std::vector<Entry> kK2 = {
    {0, 0, 0, 0, 1, 0, 0, 0},  {0, 1, 1, 0, 1, 0, 0, 0},   {0, 2, 2, 0, 1, 0, 0, 0}, {0, 3, 3, 0, 1, 0, 0, 0},
    {1, 0, 2, 3, 1, -1, 2, 0}, {1, 1, 3, 3, 1, -1, -1, 1}, {1, 2, 0, 3, 1, 0, -1, 1}, {1, 3, 1, 3, 1, 0, 0, 0},
    {2, 0, 0, 2, 1, 0, 0, 0},  {2, 1, 1, 2, 1, 0, 2, 0},   {2, 2, 2, 2, 1, 0, 0, 0}, {2, 3, 3, 2, 1, 0, 2, 0},
    {3, 0, 2, 1, 1, 0, 1, 1},  {3, 1, 3, 1, 1, 0, 0, 0},   {3, 2, 0, 1, 1, 1, 2, 0}, {3, 3, 1, 1, 1, 1, 1, 1},
};

const std::vector<Entry> kK3 = {
    {0, 0, 0, 0, 1, 0, 0, 0},   {0, 1, 1, 0, 1, 0, 0, 0},   {0, 2, 2, 0, 1, 0, 0, 0},   {0, 3, 3, 0, 1, 0, 0, 0},
    {0, 4, 4, 0, 1, 0, 0, 0},   {0, 5, 5, 0, 1, 0, 0, 0},   {1, 0, 4, 5, 1, -4, -2, 0}, {1, 1, 3, 5, 1, -3, -1, 0},
    {1, 2, 0, 5, 1, -1, -1, 0}, {1, 3, 5, 5, 1, -3, -1, 0}, {1, 4, 2, 5, 1, -1, -1, 0}, {1, 5, 1, 5, 1, 0, 0, 0},
    {2, 0, 4, 4, 1, -3, -1, 0}, {2, 1, 3, 4, 1, -2, -2, 0}, {2, 2, 0, 4, 1, 0, 0, 0},   {2, 3, 5, 4, 1, -2, -2, 0},
    {2, 4, 2, 4, 1, 0, 0, 0},   {2, 5, 1, 4, 1, 1, -1, 0},  {3, 0, 0, 3, 1, 0, -2, 0},  {3, 1, 1, 3, 1, 0, 0, 0},
    {3, 2, 2, 3, 1, 0, -2, 0},  {3, 3, 3, 3, 1, 0, 0, 0},   {3, 4, 4, 3, 1, 0, -2, 0},  {3, 5, 5, 3, 1, 0, 0, 0},
    {4, 0, 2, 2, 1, 0, 0, 0},   {4, 1, 5, 2, 1, -1, -3, 0}, {4, 2, 4, 2, 1, 0, 0, 0},   {4, 3, 1, 2, 1, 2, -2, 0},
    {4, 4, 0, 2, 1, 3, 1, 0},   {4, 5, 3, 2, 1, 2, -2, 0},  {5, 0, 2, 1, 1, 1, -3, 0},  {5, 1, 5, 1, 1, 0, 0, 0},
    {5, 2, 4, 1, 1, 1, -3, 0},  {5, 3, 1, 1, 1, 3, 1, 0},   {5, 4, 0, 1, 1, 4, -2, 0},  {5, 5, 3, 1, 1, 3, 1, 0},
};

// I at n = 2 in q, alpha, beta; basis w1, w2, m1, m2.
const std::vector<Entry> kI2 = {
    {0, 0, 0, 0, 1, 0, 0, 0},  {0, 1, 1, 0, 1, 0, 1, 0},  {1, 0, 0, 1, 1, 0, 1, 0},  {1, 1, 1, 1, 1, 0, 0, 0},
    {0, 2, 3, 0, 0, 1, 0, 0},  {0, 3, 2, 0, 2, -1, 0, 0}, {1, 2, 3, 1, 0, 1, 1, 1},  {1, 3, 2, 1, 2, -1, 1, 1},
    {2, 2, 2, 2, 1, 0, 0, 0},  {2, 3, 3, 2, 1, 0, 1, 1}, {3, 2, 2, 3, 1, 0, 1, 1},  {3, 3, 3, 3, 1, 0, 0, 0},
    {2, 0, 1, 2, 0, 1, 0, 0},  {2, 1, 0, 2, 2, -1, 0, 0}, {3, 0, 1, 3, 0, 1, 1, 0},  {3, 1, 0, 3, 2, -1, 1, 0},
};

long q_I(const Ex& x, const FamilyIndices& idx) { return x.sign(idx.p) + 4 * idx.k * x.n * (2 * idx.s + 1); }
long q_K(const Ex& x, const FamilyIndices& idx) { return x.sign(idx.p) + x.mu_bar(idx.s) + 8 * idx.k * x.n * idx.s; }

std::string exponent_str(const Cyc& c) {
    if (auto r = as_root_of_unity(c)) return "zeta_" + std::to_string(r->order) + "^" + std::to_string(r->exp);
    return "(" + c.str() + ")";
}

}  // namespace

std::vector<PrintedBraiding> printed_braidings(Family f, const SuzukiParams& p, const FamilyIndices& idx) {
    const Ex x(p);
    const long n = x.n, N = x.N, i = idx.i, j = idx.j, k = idx.k, s = idx.s, t = idx.t;
    std::vector<PrintedBraiding> out;
    const auto diag2 = [&](const std::string& name, long a, long b) {
        Printed pr(x, w_labels(2));
        pr.diagonal({a, b, b, a});
        out.push_back({name, pr.done()});
    };
    switch (f) {
        case Family::A: {
            Printed pr(x, {"w"});
            pr.diagonal({8 * n * k * s});
            out.push_back({"A", pr.done()});
            break;
        }
        case Family::Abar: {
            Printed pr(x, {"w"});
            pr.diagonal({x.sign((i + j) * n) + 8 * k * n * (s + n)});
            out.push_back({"Abar", pr.done()});
            break;
        }
        case Family::B: diag2("B", 8 * n * k * s, 8 * n * k * s); break;
        case Family::C: {
            const long q = x.sign((i + j) * (t + 1)) + 8 * n * k * (s + t + 1);
            diag2("C", q, q);
            break;
        }
        case Family::D:
            diag2("D", 8 * n * k * (s + t + 1) - 2 * j * N * (t + 1), 8 * n * k * (s + t + 1) + 2 * j * N * (t + 1));
            break;
        case Family::E: diag2("E", 8 * n * k * (s + t) + 2 * j * N * t, 8 * n * k * (s + t) - 2 * j * N * t); break;
        case Family::P: {
            // V_qqq with q = (-1)^{p + (i+j)(t+1/2) + j} mu_tilde^{2s+2t+1} omega^{4nk(2s+2t+1)}
            const long q = x.sign(idx.p + j) + x.sqrt_sign(i + j) * (2 * t + 1) + x.mu_tilde(2 * s + 2 * t + 1) +
                           4 * n * k * (2 * s + 2 * t + 1);
            Printed pr(x, w_labels(2));
            pr.put(0, 0, 1, 1, q);
            pr.put(0, 1, 0, 1, q);
            pr.put(1, 0, 1, 0, q);
            pr.put(1, 1, 0, 0, q);
            out.push_back({"P", pr.done()});
            break;
        }
        case Family::I: {
            const long q = q_I(x, idx);
            if (n == 1) {
                Printed pr(x, {"w1", "m1"});
                pr.put(0, 0, 0, 0, q);
                pr.put(0, 1, 1, 0, x.lam(1) + q + 2 * n * j * N * (2 * s + 1));
                pr.put(1, 0, 0, 1, q + 2 * n * j * N);
                pr.put(1, 1, 1, 1, q);
                out.push_back({"I n=1", pr.done()});
            } else if (n == 2) {
                out.push_back({"I n=2", from_entries(x, {"w1", "w2", "m1", "m2"}, kI2, q, 8 * k * n * s, 2 * n * j * N)});
            }
            break;
        }
        case Family::K: {
            const long q = q_K(x, idx);
            out.push_back({"K general", k_general(x, idx)});
            if (n == 1) {
                Printed pr(x, w_labels(2));
                pr.diagonal({q, q, q - 4 * j * N, q});
                out.push_back({"K n=1", pr.done()});
            } else if (n == 2) {
                out.push_back({"K n=2", from_entries(x, w_labels(4), kK2, q, x.mu_bar(2) + 16 * k * n, 4 * j * N)});
            } else if (n == 3) {
                out.push_back({"K n=3", from_entries(x, w_labels(6), kK3, q, x.lam(1) + x.mu_bar(1) + 8 * k * n, 6 * j * N)});
            }
            break;
        }
        default: break;
    }
    return out;
}

Conformance braiding_conformance(const SuzukiAlgebra& algebra, Family f, const FamilyIndices& idx) {
    const SuzukiParams& p = algebra.params();
    const BraidedSpace built = braiding_of(build_family(algebra, f, idx));
    Conformance c;
    const auto fail = [&](const std::string& m) {
        if (c.pass) c.mismatch = p.label() + " " + make_key(f, idx).str() + ": " + m;
        c.pass = false;
    };

    if (f == Family::G || f == Family::H) {
        // Printed only through the V_abe invariants ae and b.
        const auto v = detect_vabe(built);
        const auto gh = gh_parameters(f, p, idx);
        ++c.forms;
        c.compared += 2;
        if (!v) {
            fail("braiding is not of type V_abe");
            return c;
        }
        const auto ae = as_root_of_unity(v->a * v->e), b = as_root_of_unity(v->b);
        const auto same = [](const std::optional<RootOfUnity>& x, const RootOfUnity& y) {
            return x && (*x * y.inv()).is_one();
        };
        if (!same(ae, gh.ae)) fail("ae differs from the printed value");
        if (!same(b, gh.b)) fail("b differs from the printed value");
        return c;
    }

    for (const auto& pb : printed_braidings(f, p, idx)) {
        ++c.forms;
        if (pb.braiding.dim() != built.dim()) {
            fail(pb.form + ": dimension " + std::to_string(built.dim()) + " vs printed " +
                 std::to_string(pb.braiding.dim()));
            continue;
        }
        for (std::size_t a = 0; a < built.dim(); ++a) {
            if (built.label(a) != pb.braiding.label(a))
                fail(pb.form + ": basis label " + built.label(a) + " vs printed " + pb.braiding.label(a));
            for (std::size_t b = 0; b < built.dim(); ++b) {
                ++c.compared;
                const auto& got = built.image(a, b);
                const auto& want = pb.braiding.image(a, b);
                const bool ok = got.size() == want.size() && got.size() == 1 && got[0].k == want[0].k &&
                                got[0].l == want[0].l && got[0].coeff == want[0].coeff;
                if (ok) continue;
                std::ostringstream os;
                os << pb.form << ": c(" << built.label(a) << " (x) " << built.label(b) << ") built";
                for (const auto& t : got)
                    os << " " << exponent_str(t.coeff) << " " << built.label(t.k) << " (x) " << built.label(t.l);
                os << ", printed";
                for (const auto& t : want)
                    os << " " << exponent_str(t.coeff) << " " << built.label(t.k) << " (x) " << built.label(t.l);
                fail(os.str());
            }
        }
    }
    if (c.forms == 0) fail("no printed braiding for this family");
    return c;
}

}  // namespace nforge
