#pragma once

/*
 * Prime-field scalar with a per-element modulus.
 *
 * Generic code (polynomial arithmetic, elimination) manufactures scalars from
 * integer literals as T(0), T(1); such values are created "unbound" and pick
 * up the modulus of the first bound operand they combine with.  This keeps
 * the prime a runtime quantity (CLI flag / GF_PRIME) without global state.
 */

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gfres {

inline constexpr long long kDefaultPrime = 32003;

struct GF {
    long long v = 0; // canonical in [0,p) when bound
    long long p = 0; // 0 = unbound integer literal

    GF() = default;
    GF(long long value) : v(value) {} // NOLINT: implicit on purpose (T(0), T(1))

    static long long norm(long long value, long long prime) {
        long long r = value % prime;
        return r < 0 ? r + prime : r;
    }

    static GF make(long long value, long long prime) {
        if (prime < 2) throw std::invalid_argument("GF: modulus must be >= 2");
        GF x;
        x.p = prime;
        x.v = norm(value, prime);
        return x;
    }

    bool bound() const { return p != 0; }
    bool is_zero() const { return v == 0; } // canonical either way

    GF bound_to(long long prime) const { return bound() ? *this : make(v, prime); }

    friend long long joint_modulus(const GF& a, const GF& b) {
        if (a.p != 0 && b.p != 0 && a.p != b.p)
            throw std::invalid_argument("GF: mixed moduli " + std::to_string(a.p) +
                                        " and " + std::to_string(b.p));
        return a.p != 0 ? a.p : b.p;
    }

    friend GF operator+(const GF& a, const GF& b) {
        long long m = joint_modulus(a, b);
        if (m == 0) return GF(a.v + b.v);
        return make(norm(a.v, m) + norm(b.v, m), m);
    }
    friend GF operator-(const GF& a, const GF& b) {
        long long m = joint_modulus(a, b);
        if (m == 0) return GF(a.v - b.v);
        return make(norm(a.v, m) - norm(b.v, m), m);
    }
    friend GF operator-(const GF& a) { return a.p ? make(-a.v, a.p) : GF(-a.v); }
    friend GF operator*(const GF& a, const GF& b) {
        long long m = joint_modulus(a, b);
        if (m == 0) return GF(a.v * b.v);
        return make(norm(a.v, m) * norm(b.v, m), m); // p < 2^31: no overflow
    }

    GF inverse() const {
        if (!bound()) throw std::logic_error("GF: inverse of unbound literal");
        if (v == 0) throw std::domain_error("GF: inverse of zero");
        // extended Euclid
        long long a = v, b = p, x0 = 1, x1 = 0;
        while (b != 0) {
            long long q = a / b;
            a -= q * b;
            std::swap(a, b);
            x0 -= q * x1;
            std::swap(x0, x1);
        }
        if (a != 1) throw std::domain_error("GF: modulus not prime to value");
        return make(x0, p);
    }

    friend GF operator/(const GF& a, const GF& b) {
        long long m = joint_modulus(a, b);
        if (m == 0) { // exact integer division of literals (Bareiss-style uses /1)
            if (b.v == 0) throw std::domain_error("GF: division by zero literal");
            if (a.v % b.v != 0) throw std::logic_error("GF: inexact literal division");
            return GF(a.v / b.v);
        }
        return a.bound_to(m) * b.bound_to(m).inverse();
    }

    GF& operator+=(const GF& o) { return *this = *this + o; }
    GF& operator-=(const GF& o) { return *this = *this - o; }
    GF& operator*=(const GF& o) { return *this = *this * o; }
    GF& operator/=(const GF& o) { return *this = *this / o; }

    friend bool operator==(const GF& a, const GF& b) {
        long long m = joint_modulus(a, b);
        if (m == 0) return a.v == b.v;
        return norm(a.v, m) == norm(b.v, m);
    }
    friend bool operator!=(const GF& a, const GF& b) { return !(a == b); }

    std::string str() const { return std::to_string(v); }
};

} // namespace gfres
