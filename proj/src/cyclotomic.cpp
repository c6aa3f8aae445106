#include "nforge/cyclotomic.hpp"

#include "nforge/errors.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace nforge {

namespace {

std::atomic<unsigned long> g_order_cap{100000};

// Polynomial helpers over Z, constant term first.
std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division by a monic polynomial.
std::vector<mpz_class> poly_div_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<mpz_class> q(num.size() - dn);
    for (std::size_t i = num.size(); i-- > dn;) {
        mpz_class c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

}  // namespace

void set_order_cap(unsigned long cap) { g_order_cap = cap; }
unsigned long order_cap() { return g_order_cap; }

unsigned euler_phi(unsigned M) {
    unsigned r = M, m = M;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        r -= r / p;
    }
    if (m > 1) r -= r / m;
    return r;
}

unsigned long lcm_order(unsigned a, unsigned b) { return std::lcm<unsigned long>(a, b); }

std::vector<mpz_class> cyclotomic_polynomial(unsigned M) {
    if (M == 0) throw BadIndex("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<unsigned, std::vector<mpz_class>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(M); it != cache.end()) return it->second;
    }
    std::vector<mpz_class> num(M + 1);
    num[0] = -1;
    num[M] = 1;
    std::vector<mpz_class> den{1};
    for (unsigned d = 1; d < M; ++d)
        if (M % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
    auto phi = poly_div_monic(std::move(num), den);
    std::lock_guard lock(mu);
    return cache.emplace(M, std::move(phi)).first->second;
}

namespace detail {

struct Field {
    unsigned M;
    unsigned phi;
    std::vector<long> poly;  // Phi_M, monic, degree phi
    // zeta^e reduced, for 0 <= e < M; only for small fields.
    std::vector<std::vector<long>> powers;
    std::map<std::vector<long>, long> exponent_of;

    explicit Field(unsigned m) : M(m), phi(euler_phi(m)) {
        for (const auto& c : cyclotomic_polynomial(m)) poly.push_back(c.get_si());
        if (static_cast<unsigned long>(M) * phi <= (1ul << 22)) {
            std::vector<long> cur(phi, 0);
            cur[0] = 1;
            for (unsigned e = 0; e < M; ++e) {
                powers.push_back(cur);
                exponent_of.emplace(cur, e);
                cur = times_x(cur);
            }
        }
    }

    std::vector<long> times_x(const std::vector<long>& v) const {
        std::vector<long> r(phi, 0);
        long top = v[phi - 1];
        for (unsigned i = phi - 1; i > 0; --i) r[i] = v[i - 1];
        r[0] = 0;
        if (top != 0)
            for (unsigned i = 0; i < phi; ++i) r[i] -= top * poly[i];
        return r;
    }

    std::vector<long> power(long e) const {
        e %= static_cast<long>(M);
        if (e < 0) e += M;
        if (!powers.empty()) return powers[e];
        std::vector<long> cur(phi, 0);
        cur[0] = 1;
        for (long i = 0; i < e; ++i) cur = times_x(cur);
        return cur;
    }

    // In-place reduction of a coefficient vector of any length down to phi entries.
    void reduce(std::vector<mpq_class>& v) const {
        mpq_class t;
        for (std::size_t i = v.size(); i-- > phi;) {
            if (sgn(v[i]) == 0) continue;
            const std::size_t base = i - phi;
            for (unsigned j = 0; j < phi; ++j) {
                if (poly[j] == 0) continue;
                t = v[i] * poly[j];
                v[base + j] -= t;
            }
        }
        v.resize(phi);
    }
};

const Field* field_for(unsigned M) {
    if (M == 0) throw BadIndex("cyclotomic order must be positive");
    if (M > order_cap())
        throw OrderCapExceeded("order " + std::to_string(M) + " exceeds cap " + std::to_string(order_cap()));
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<Field>> fields;
    {
        std::lock_guard lock(mu);
        if (auto it = fields.find(M); it != fields.end()) return it->second.get();
    }
    auto f = std::make_unique<Field>(M);
    std::lock_guard lock(mu);
    auto [it, fresh] = fields.emplace(M, std::move(f));
    return it->second.get();
}

}  // namespace detail

using detail::field_for;

Cyc::Cyc() : field_(field_for(1)), c_(1) {}
Cyc::Cyc(long value) : field_(field_for(1)), c_{mpq_class(value)} {}
Cyc::Cyc(const mpq_class& value, unsigned order) : field_(field_for(order)), c_(field_->phi) {
    c_[0] = value;
}
Cyc::Cyc(const detail::Field* f, std::vector<mpq_class> c) : field_(f), c_(std::move(c)) {}

Cyc Cyc::zero(unsigned order) { return Cyc(mpq_class(0), order); }
Cyc Cyc::one(unsigned order) { return Cyc(mpq_class(1), order); }

Cyc Cyc::root(unsigned order, long k) {
    const auto* f = field_for(order);
    auto p = f->power(k);
    std::vector<mpq_class> c(p.begin(), p.end());
    return Cyc(f, std::move(c));
}

Cyc Cyc::from_coords(unsigned order, std::vector<mpq_class> coords) {
    const auto* f = field_for(order);
    if (coords.size() < f->phi) coords.resize(f->phi);
    for (auto& q : coords) q.canonicalize();
    f->reduce(coords);
    return Cyc(f, std::move(coords));
}

unsigned Cyc::order() const { return field_->M; }

bool Cyc::is_zero() const {
    for (const auto& q : c_)
        if (sgn(q) != 0) return false;
    return true;
}

bool Cyc::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

std::optional<mpq_class> Cyc::as_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return std::nullopt;
    return c_[0];
}

Cyc Cyc::promoted(unsigned target) const {
    const unsigned M = order();
    if (target == M) return *this;
    if (target % M != 0)
        throw BadIndex("cannot promote order " + std::to_string(M) + " to " + std::to_string(target));
    const auto* f = field_for(target);
    const unsigned step = target / M;
    std::vector<mpq_class> out(f->phi);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        auto p = f->power(static_cast<long>(i * step));
        for (unsigned j = 0; j < f->phi; ++j)
            if (p[j] != 0) out[j] += c_[i] * p[j];
    }
    return Cyc(f, std::move(out));
}

std::optional<Cyc> Cyc::demoted(unsigned target) const {
    const unsigned M = order();
    if (target == M) return *this;
    if (M % target != 0) return std::nullopt;
    // Solve for coordinates in the subfield basis by elimination over Q.
    const auto* sub = field_for(target);
    const unsigned step = M / target;
    const unsigned rows = field_->phi, cols = sub->phi;
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols + 1));
    for (unsigned j = 0; j < cols; ++j) {
        auto p = field_->power(static_cast<long>(j * step));
        for (unsigned i = 0; i < rows; ++i) a[i][j] = p[i];
    }
    for (unsigned i = 0; i < rows; ++i) a[i][cols] = c_[i];
    std::vector<int> pivot_col;
    unsigned r = 0;
    for (unsigned c = 0; c < cols && r < rows; ++c) {
        unsigned p = r;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        mpq_class inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (unsigned i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            mpq_class fac = a[i][c];
            for (unsigned k = c; k <= cols; ++k) a[i][k] -= fac * a[r][k];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    for (unsigned i = r; i < rows; ++i)
        if (sgn(a[i][cols]) != 0) return std::nullopt;
    std::vector<mpq_class> out(cols);
    for (unsigned i = 0; i < r; ++i) out[pivot_col[i]] = a[i][cols];
    return Cyc(sub, std::move(out));
}

void Cyc::align(Cyc& a, Cyc& b) {
    if (a.field_ == b.field_) return;
    const auto L = lcm_order(a.order(), b.order());
    if (L > order_cap()) throw OrderCapExceeded("lcm order " + std::to_string(L) + " exceeds cap");
    a = a.promoted(static_cast<unsigned>(L));
    b = b.promoted(static_cast<unsigned>(L));
}

Cyc& Cyc::operator+=(const Cyc& o) {
    if (field_ == o.field_) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cyc b = o;
    align(*this, b);
    return *this += b;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    if (field_ == o.field_) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Cyc b = o;
    align(*this, b);
    return *this -= b;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    if (field_ != o.field_) {
        // Rational factors never need promotion.
        if (o.order() == 1) {
            for (auto& q : c_) q *= o.c_[0];
            return *this;
        }
        if (order() == 1) {
            mpq_class s = c_[0];
            *this = o;
            for (auto& q : c_) q *= s;
            return *this;
        }
        Cyc b = o;
        align(*this, b);
        return *this *= b;
    }
    const unsigned phi = field_->phi;
    std::vector<mpq_class> r(2 * phi - 1);
    mpq_class t;
    for (unsigned i = 0; i < phi; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (sgn(o.c_[j]) == 0) continue;
            t = c_[i] * o.c_[j];
            r[i + j] += t;
        }
    }
    field_->reduce(r);
    c_ = std::move(r);
    return *this;
}

Cyc& Cyc::operator/=(const Cyc& o) { return *this *= o.inv(); }

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

bool operator==(const Cyc& a, const Cyc& b) {
    if (a.field_ == b.field_) return a.c_ == b.c_;
    Cyc x = a, y = b;
    Cyc::align(x, y);
    return x.c_ == y.c_;
}

Cyc Cyc::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
    const unsigned phi = field_->phi;
    if (phi == 1) return Cyc(field_, {1 / c_[0]});
    // Extended Euclid on (Phi_M, a): track s with s*a == r (mod Phi_M).
    using Poly = std::vector<mpq_class>;
    auto trim = [](Poly& p) {
        while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
    };
    auto deg = [](const Poly& p) { return static_cast<int>(p.size()) - 1; };
    Poly r0(field_->poly.begin(), field_->poly.end());
    Poly r1 = c_;
    trim(r1);
    Poly s0{0}, s1{1};
    while (!(r1.size() == 1)) {
        // r0 = q*r1 + rem
        Poly rem = r0;
        Poly q(std::max(0, deg(r0) - deg(r1)) + 1);
        const mpq_class lead = r1.back();
        for (int i = deg(rem); i >= deg(r1); --i) {
            if (sgn(rem[i]) == 0) continue;
            mpq_class f = rem[i] / lead;
            q[i - deg(r1)] = f;
            for (int j = 0; j <= deg(r1); ++j) rem[i - deg(r1) + j] -= f * r1[j];
        }
        rem.resize(std::max(1, deg(r1)));
        trim(rem);
        Poly s2(std::max(s0.size(), q.size() + s1.size() - 1));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant since Phi_M is irreducible.
    mpq_class c = 1 / r1[0];
    for (auto& x : s1) x *= c;
    if (s1.size() < phi) s1.resize(phi);
    field_->reduce(s1);
    return Cyc(field_, std::move(s1));
}

Cyc Cyc::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyc result = Cyc::one(order());
    Cyc base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::optional<long> Cyc::monomial_exponent() const {
    std::vector<long> ints(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].get_den() != 1 || !c_[i].get_num().fits_slong_p()) return std::nullopt;
        ints[i] = c_[i].get_num().get_si();
    }
    if (!field_->powers.empty()) {
        auto it = field_->exponent_of.find(ints);
        if (it == field_->exponent_of.end()) return std::nullopt;
        return it->second;
    }
    std::vector<long> cur(field_->phi, 0);
    cur[0] = 1;
    for (unsigned e = 0; e < field_->M; ++e) {
        if (cur == ints) return e;
        cur = field_->times_x(cur);
    }
    return std::nullopt;
}

std::optional<unsigned long> Cyc::multiplicative_order() const {
    if (is_zero()) throw DivisionByZero("multiplicative order of zero");
    auto r = as_root_of_unity(*this);
    if (!r) return std::nullopt;
    return static_cast<unsigned long>(r->multiplicative_order());
}

std::string Cyc::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        if (!first) os << (sgn(c_[i]) > 0 ? " + " : " - ");
        else if (sgn(c_[i]) < 0) os << "-";
        mpq_class a = abs(c_[i]);
        bool unit = (a == 1) && i > 0;
        if (!unit) os << a.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "z" << order();
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

RootOfUnity RootOfUnity::make(long order, long exp) {
    if (order <= 0) throw BadIndex("root of unity order must be positive");
    exp %= order;
    if (exp < 0) exp += order;
    return {order, exp};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    long L = std::lcm(order, o.order);
    return make(L, exp * (L / order) + o.exp * (L / o.order));
}

RootOfUnity RootOfUnity::pow(long e) const {
    __int128 x = static_cast<__int128>(exp) * e;
    long r = static_cast<long>(x % order);
    return make(order, r);
}

long RootOfUnity::multiplicative_order() const { return order / std::gcd(order, exp); }

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    long L = std::lcm(a.order, b.order);
    return (a.exp * (L / a.order)) % L == (b.exp * (L / b.order)) % L;
}

std::optional<RootOfUnity> as_root_of_unity(const Cyc& x) {
    const long M = x.order();
    if (auto e = x.monomial_exponent()) return RootOfUnity::make(M, *e);
    if (auto e = (-x).monomial_exponent()) {
        // -zeta_M^e = zeta_{2M}^{2e+M}
        return RootOfUnity::make(2 * M, 2 * *e + M);
    }
    return std::nullopt;
}

}  // namespace nforge
