#pragma once

/*
 * Parser for the textual polynomial format used by fixture files and the
 * CLI: signed integer coefficients, juxtaposed variables (longest match
 * against the declared alphabet), and ^ powers.  Examples over X,Y,Z,T,U:
 *
 *     X^2-ZU      -YT^2U      3XY+2Z^2      0
 *
 * Errors carry the offset of the offending character.  Homogeneity is a
 * grammar-level contract: every written term must have the same total
 * degree, even if terms would cancel.
 */

#include "gfres/poly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gfres {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t offset)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
          offset(offset) {}
    size_t offset;
};

namespace detail {

struct Cursor {
    std::string_view s;
    size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void skip_ws() {
        while (!done() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eat(char c) {
        if (!done() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    long long integer() {
        size_t start = i;
        long long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > (1LL << 60)) throw ParseError("integer too large", start);
            ++i;
        }
        if (i == start) throw ParseError("expected an integer", i);
        return v;
    }
    // longest variable name starting here, or -1
    int match_var(const std::vector<std::string>& vars) {
        int best = -1;
        size_t best_len = 0;
        for (size_t k = 0; k < vars.size(); ++k) {
            const std::string& v = vars[k];
            if (v.size() > best_len && s.compare(i, v.size(), v) == 0) {
                best = static_cast<int>(k);
                best_len = v.size();
            }
        }
        if (best >= 0) i += best_len;
        return best;
    }
};

} // namespace detail

// `from_int` lifts a signed integer literal into the coefficient ring
// (e.g. Rational(k), or GF::make(k, p)).
template <class T, class FromInt>
HomPoly<T> parse_poly(std::string_view text, const std::vector<std::string>& vars,
                      FromInt from_int) {
    const int nv = static_cast<int>(vars.size());
    detail::Cursor c{text};

    struct Written {
        Mono m;
        T coef;
        size_t offset;
        std::string text;
    };
    std::vector<Written> written; // syntactic terms, for the homogeneity report

    c.skip_ws();
    if (c.done()) throw ParseError("empty polynomial", 0);

    bool first = true;
    while (true) {
        c.skip_ws();
        if (c.done()) {
            if (first) throw ParseError("empty polynomial", c.i);
            break;
        }
        long long sign = 1;
        if (c.eat('+')) {
            sign = 1;
        } else if (c.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError(std::string("expected '+' or '-', found '") + c.peek() + "'",
                             c.i);
        }
        c.skip_ws();
        size_t term_start = c.i;

        bool have_coef = false;
        long long coef = 1;
        if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = c.integer();
            have_coef = true;
        }
        Mono m(nv, 0);
        bool have_var = false;
        while (true) {
            c.skip_ws();
            if (c.done()) break;
            size_t at = c.i;
            int vi = c.match_var(vars);
            if (vi < 0) break;
            have_var = true;
            long long e = 1;
            c.skip_ws();
            if (c.eat('^')) {
                c.skip_ws();
                e = c.integer();
            }
            if (m[vi] + e > 1'000'000) throw ParseError("exponent too large", at);
            m[vi] += static_cast<int>(e);
        }
        if (!have_coef && !have_var) {
            throw ParseError(c.done() ? std::string("dangling sign")
                                      : std::string("expected a term, found '") +
                                            c.peek() + "'",
                             c.i);
        }
        if (coef != 0)
            written.push_back({m, from_int(sign * coef), term_start,
                               std::string(text.substr(term_start, c.i - term_start))});
        first = false;
    }

    // homogeneity is a property of what was written, not of the sum
    if (!written.empty()) {
        int deg = mono_degree(written.front().m);
        std::string offenders;
        for (const auto& w : written)
            if (mono_degree(w.m) != deg)
                offenders += (offenders.empty() ? "" : ", ") + w.text + " (degree " +
                             std::to_string(mono_degree(w.m)) + ")";
        if (!offenders.empty())
            throw ParseError("non-homogeneous polynomial: first term has degree " +
                                 std::to_string(deg) + " but also found " + offenders,
                             written.front().offset);
    }

    HomPoly<T> out(nv);
    for (const auto& w : written) out.add_term(w.m, w.coef);
    return out;
}

// parse "[p, q, r]" into a row of polynomials
template <class T, class FromInt>
std::vector<HomPoly<T>> parse_bracket_row(std::string_view text,
                                          const std::vector<std::string>& vars,
                                          FromInt from_int) {
    detail::Cursor c{text};
    c.skip_ws();
    if (!c.eat('[')) throw ParseError("expected '['", c.i);
    std::vector<HomPoly<T>> row;
    size_t cell_start = c.i;
    std::string cell;
    auto flush = [&](size_t at) {
        try {
            row.push_back(parse_poly<T>(cell, vars, from_int));
        } catch (const ParseError& e) {
            throw ParseError(std::string("entry ") + std::to_string(row.size()) + ": " +
                                 e.what(),
                             cell_start + e.offset);
        }
        (void)at;
        cell.clear();
    };
    while (true) {
        if (c.done()) throw ParseError("unterminated row, expected ']'", c.i);
        char ch = c.peek();
        if (ch == ',') {
            flush(c.i);
            ++c.i;
            cell_start = c.i;
        } else if (ch == ']') {
            flush(c.i);
            ++c.i;
            break;
        } else {
            cell += ch;
            ++c.i;
        }
    }
    c.skip_ws();
    if (!c.done()) throw ParseError("trailing characters after ']'", c.i);
    return row;
}

} // namespace gfres
