// Coefficient fields for the exact linear algebra kernel: arbitrary-precision
// rationals (the default) and a runtime prime field F_p used as a speed mode.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qdim {

using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// mpq_class(num, den) does not canonicalize; this does.
inline Rat rat_frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Field of rationals. Stateless; kept as an object so that all linear-algebra
// code is uniform over the prime-field mode.
struct Rationals {
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long n) const { return Elem(n); }
    Elem from_rat(const Rat& r) const { return r; }

    bool is_zero(const Elem& x) const { return sgn(x) == 0; }
    bool eq(const Elem& x, const Elem& y) const { return x == y; }

    Elem add(const Elem& x, const Elem& y) const { return x + y; }
    Elem sub(const Elem& x, const Elem& y) const { return x - y; }
    Elem mul(const Elem& x, const Elem& y) const { return x * y; }
    Elem neg(const Elem& x) const { return -x; }
    Elem inv(const Elem& x) const {
        if (is_zero(x)) throw std::domain_error("Rationals::inv: division by zero");
        return Elem(1) / x;
    }
    Elem div(const Elem& x, const Elem& y) const { return mul(x, inv(y)); }

    std::string str(const Elem& x) const { return x.get_str(); }
    const char* name() const { return "Q"; }
};

// F_p with a runtime modulus. Elements are canonical representatives in [0,p).
struct PrimeField {
    using Elem = std::int64_t;

    std::int64_t p = 0;

    PrimeField() = default;
    explicit PrimeField(std::int64_t prime) : p(prime) {
        if (p < 2) throw std::invalid_argument("PrimeField: modulus must be >= 2");
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("PrimeField: modulus is not prime");
        if (p > (std::int64_t(1) << 30))
            throw std::invalid_argument("PrimeField: modulus too large for exact 64-bit products");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_long(long n) const {
        Elem r = n % p;
        return r < 0 ? r + p : r;
    }
    Elem from_rat(const Rat& r) const {
        // num/den mod p; the denominator must be a unit.
        mpz_class num = r.get_num(), den = r.get_den();
        mpz_class pz(static_cast<long>(p));
        mpz_class nm = num % pz, dm = den % pz;
        Elem n = from_long(nm.get_si());
        Elem d = from_long(dm.get_si());
        return mul(n, inv(d));
    }

    bool is_zero(const Elem& x) const { return x == 0; }
    bool eq(const Elem& x, const Elem& y) const { return x == y; }

    Elem add(const Elem& x, const Elem& y) const {
        Elem r = x + y;
        return r >= p ? r - p : r;
    }
    Elem sub(const Elem& x, const Elem& y) const {
        Elem r = x - y;
        return r < 0 ? r + p : r;
    }
    Elem mul(const Elem& x, const Elem& y) const { return (x * y) % p; }
    Elem neg(const Elem& x) const { return x == 0 ? 0 : p - x; }
    Elem inv(const Elem& x) const {
        if (x == 0) throw std::domain_error("PrimeField::inv: division by zero");
        // extended Euclid
        std::int64_t a = x, b = p, u = 1, v = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            a -= q * b;
            std::swap(a, b);
            u -= q * v;
            std::swap(u, v);
        }
        return from_long(u);
    }
    Elem div(const Elem& x, const Elem& y) const { return mul(x, inv(y)); }

    std::string str(const Elem& x) const { return std::to_string(x); }
    std::string name() const { return "F" + std::to_string(p); }
};

}  // namespace qdim
