#pragma once

/*
 * Sparse homogeneous polynomials over an exact coefficient ring.
 *
 * A HomPoly<T> stores terms in a map ordered graded-lexicographically with
 * the largest monomial first, so printing and iteration are canonical.  All
 * mutating entry points enforce homogeneity: the zero polynomial has degree
 * -1 and is compatible with every degree.
 */

#include "gfres/gf.hpp"
#include "gfres/numeric.hpp"

#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfres {

using Mono = std::vector<int>; // exponent vector, one slot per variable

inline int mono_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Graded-lex, biggest term first: higher total degree wins, ties broken by
// lexicographically larger exponent vector (so X^2 > XY > Y^2 > XZ ...).
struct GrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

// --- scalar adapters -------------------------------------------------------

template <class T>
struct ScalarIO; // is_zero / is_negative / abs_str specializations below

template <>
struct ScalarIO<Rational> {
    static bool is_zero(const Rational& c) { return c == 0; }
    static bool is_negative(const Rational& c) { return c < 0; }
    static std::string abs_str(const Rational& c) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (boost::multiprecision::denominator(a) == 1)
            return boost::multiprecision::numerator(a).str();
        return boost::multiprecision::numerator(a).str() + "/" +
               boost::multiprecision::denominator(a).str();
    }
    static bool is_one_like(const Rational& c) { return c == 1 || c == -1; }
};

template <>
struct ScalarIO<GF> {
    static bool is_zero(const GF& c) { return c.is_zero(); }
    static bool is_negative(const GF&) { return false; } // canonical in [0,p)
    static std::string abs_str(const GF& c) { return c.str(); }
    static bool is_one_like(const GF& c) { return c.v == 1; }
};

template <>
struct ScalarIO<std::complex<double>> {
    static bool is_zero(const std::complex<double>& c) { return c == 0.0; }
    static bool is_negative(const std::complex<double>&) { return false; }
    static std::string abs_str(const std::complex<double>& c) {
        std::ostringstream os;
        os << "(" << c.real() << "+" << c.imag() << "i)";
        return os.str();
    }
    static bool is_one_like(const std::complex<double>&) { return false; }
};

template <class T>
bool scalar_is_zero(const T& c) {
    return ScalarIO<T>::is_zero(c);
}

// --- homogeneous polynomial ------------------------------------------------

template <class T>
class HomPoly {
public:
    using Terms = std::map<Mono, T, GrlexGreater>;

    HomPoly() = default;
    explicit HomPoly(int nvars) : nvars_(nvars) {}

    static HomPoly zero(int nvars) { return HomPoly(nvars); }

    static HomPoly constant(int nvars, const T& c) {
        HomPoly p(nvars);
        p.add_term(Mono(nvars, 0), c);
        return p;
    }

    static HomPoly variable(int nvars, int i) {
        if (i < 0 || i >= nvars) throw std::out_of_range("HomPoly: variable index");
        HomPoly p(nvars);
        Mono m(nvars, 0);
        m[i] = 1;
        p.add_term(m, T(1));
        return p;
    }

    static HomPoly monomial(int nvars, const Mono& m, const T& c) {
        HomPoly p(nvars);
        p.add_term(m, c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    // -1 for the zero polynomial (compatible with any degree)
    int degree() const { return terms_.empty() ? -1 : mono_degree(terms_.begin()->first); }

    void add_term(const Mono& m, const T& c) {
        if (static_cast<int>(m.size()) != nvars_)
            throw std::invalid_argument("HomPoly: exponent vector has wrong length");
        for (int e : m)
            if (e < 0) throw std::invalid_argument("HomPoly: negative exponent");
        if (scalar_is_zero(c)) return;
        if (!terms_.empty() && mono_degree(m) != degree())
            throw std::invalid_argument("HomPoly: mixing degrees " +
                                        std::to_string(degree()) + " and " +
                                        std::to_string(mono_degree(m)));
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend HomPoly operator+(const HomPoly& a, const HomPoly& b) {
        a.check_same_ring(b);
        HomPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend HomPoly operator-(const HomPoly& a, const HomPoly& b) { return a + (-b); }
    friend HomPoly operator-(const HomPoly& a) {
        HomPoly r(a.nvars_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b) {
        a.check_same_ring(b);
        HomPoly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono m(a.nvars_);
                for (int k = 0; k < a.nvars_; ++k) m[k] = ma[k] + mb[k];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend HomPoly operator*(const T& c, const HomPoly& a) {
        HomPoly r(a.nvars_);
        for (const auto& [m, t] : a.terms_) r.add_term(m, c * t);
        return r;
    }
    HomPoly& operator+=(const HomPoly& o) { return *this = *this + o; }
    HomPoly& operator-=(const HomPoly& o) { return *this = *this - o; }
    HomPoly& operator*=(const HomPoly& o) { return *this = *this * o; }

    friend bool operator==(const HomPoly& a, const HomPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HomPoly& a, const HomPoly& b) { return !(a == b); }

    // Evaluate at a point with coordinates of type U; `conv` lifts each
    // coefficient into U (e.g. Rational -> complex<double>, or GF binding).
    template <class U, class Conv>
    U eval(const std::vector<U>& pt, Conv conv) const {
        if (static_cast<int>(pt.size()) != nvars_)
            throw std::invalid_argument("HomPoly: point has wrong dimension");
        U acc = U(0);
        for (const auto& [m, c] : terms_) {
            U t = conv(c);
            for (int k = 0; k < nvars_; ++k)
                for (int e = 0; e < m[k]; ++e) t = t * pt[k];
            acc = acc + t;
        }
        return acc;
    }

    std::string str(const std::vector<std::string>& vars) const {
        if (static_cast<int>(vars.size()) != nvars_)
            throw std::invalid_argument("HomPoly: variable name list has wrong length");
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            bool neg = ScalarIO<T>::is_negative(c);
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? "-" : "+";
            }
            first = false;
            std::string mono;
            for (int k = 0; k < nvars_; ++k) {
                if (m[k] == 0) continue;
                mono += vars[k];
                if (m[k] > 1) mono += "^" + std::to_string(m[k]);
            }
            std::string coef = ScalarIO<T>::abs_str(c);
            if (mono.empty()) {
                out += coef;
            } else if (ScalarIO<T>::is_one_like(c)) {
                out += mono;
            } else {
                out += coef + mono;
            }
        }
        return out;
    }

private:
    void check_same_ring(const HomPoly& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("HomPoly: mixing variable counts " +
                                        std::to_string(nvars_) + " and " +
                                        std::to_string(o.nvars_));
    }

    int nvars_ = 0;
    Terms terms_;
};

// All monomials of the given total degree, largest first under GrlexGreater.
inline std::vector<Mono> enumerate_monomials(int nvars, int degree) {
    if (nvars < 1 || degree < 0) return {};
    std::vector<Mono> out;
    Mono cur(nvars, 0);
    // recursive descent placing the largest exponents to the left first
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == nvars - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

// Uniformly random homogeneous polynomial (dense in the given degree).
template <class T, class Draw>
HomPoly<T> random_hom_poly(int nvars, int degree, Draw&& draw_coef) {
    HomPoly<T> p(nvars);
    for (const Mono& m : enumerate_monomials(nvars, degree)) p.add_term(m, draw_coef());
    return p;
}

// Coefficient-wise reduction Q -> F_p; throws if a denominator vanishes mod p.
inline HomPoly<GF> reduce_mod(const HomPoly<Rational>& f, long long p) {
    HomPoly<GF> r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        Int num = boost::multiprecision::numerator(c);
        Int den = boost::multiprecision::denominator(c);
        long long nm = to_longlong(num % p, "numerator residue");
        long long dm = to_longlong(den % p, "denominator residue");
        if (dm == 0)
            throw std::domain_error("reduce_mod: denominator divisible by " +
                                    std::to_string(p));
        r.add_term(m, GF::make(nm, p) * GF::make(dm, p).inverse());
    }
    return r;
}

inline std::vector<std::string> default_var_names(int nvars) {
    static const std::vector<std::string> classic = {"X", "Y", "Z", "T", "U"};
    if (nvars <= static_cast<int>(classic.size()))
        return {classic.begin(), classic.begin() + nvars};
    std::vector<std::string> v;
    for (int i = 0; i < nvars; ++i) v.push_back("X" + std::to_string(i));
    return v;
}

} // namespace gfres
