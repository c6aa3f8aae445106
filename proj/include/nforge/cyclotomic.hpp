#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nforge {

// Integer coefficients of the M-th cyclotomic polynomial, constant term first.
std::vector<mpz_class> cyclotomic_polynomial(unsigned M);

unsigned euler_phi(unsigned M);
unsigned long lcm_order(unsigned a, unsigned b);

// Promotion beyond this order throws OrderCapExceeded.
void set_order_cap(unsigned long cap);
unsigned long order_cap();

namespace detail {
struct Field;
}

// Exact element of Q(zeta_M), stored as coordinates in 1, zeta, ..., zeta^(phi(M)-1)
// reduced modulo Phi_M.
class Cyc {
public:
    Cyc();
    Cyc(long value);  // NOLINT: integers convert implicitly
    explicit Cyc(const mpq_class& value, unsigned order = 1);

    static Cyc zero(unsigned order = 1);
    static Cyc one(unsigned order = 1);
    static Cyc root(unsigned order, long k);
    static Cyc from_coords(unsigned order, std::vector<mpq_class> coords);

    unsigned order() const;
    const std::vector<mpq_class>& coords() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    std::optional<mpq_class> as_rational() const;

    // order() must divide target.
    Cyc promoted(unsigned target) const;
    // Some representative of the same value at a smaller order, if it lives there.
    std::optional<Cyc> demoted(unsigned target) const;

    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o);
    Cyc operator-() const;
    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
    friend bool operator==(const Cyc& a, const Cyc& b);

    Cyc inv() const;
    Cyc pow(long e) const;

    // e with x == zeta_M^e, when x is exactly a power of zeta_M.
    std::optional<long> monomial_exponent() const;
    // Least m with x^m == 1; empty when x is not a root of unity.
    std::optional<unsigned long> multiplicative_order() const;

    std::string str() const;

private:
    Cyc(const detail::Field* f, std::vector<mpq_class> c);
    static void align(Cyc& a, Cyc& b);

    const detail::Field* field_;
    std::vector<mpq_class> c_;
};

// Exponent arithmetic for values known to be roots of unity. Used where orders get
// too large for coordinate arithmetic to be cheap (the ufo8 sweeps run at order 3072).
struct RootOfUnity {
    long order = 1;
    long exp = 0;

    static RootOfUnity make(long order, long exp);
    static RootOfUnity minus_one() { return make(2, 1); }
    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity inv() const { return make(order, -exp); }
    RootOfUnity pow(long e) const;
    long multiplicative_order() const;
    bool is_one() const { return exp % order == 0; }
    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);
    Cyc to_cyc() const { return Cyc::root(static_cast<unsigned>(order), exp); }
};

std::optional<RootOfUnity> as_root_of_unity(const Cyc& x);

}  // namespace nforge
