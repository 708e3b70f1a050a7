#pragma once

// Reduced Burau representation and the Alexander polynomial it yields:
// det(I - Burau(w)) * (1 - t) / (1 - t^n)  up to units.  Entirely independent
// of the Seifert-surface route, which makes it a good cross-check.

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "cforge/braid.hpp"
#include "cforge/laurent.hpp"

namespace cforge {
namespace detail {

// Laurent polynomial over Z with arbitrary-precision coefficients; zero is
// the empty vector.  Only what the Burau determinant needs.
struct LZPoly {
    std::vector<mpz_class> c;
    int lo = 0;

    bool zero() const { return c.empty(); }
    void trim() {
        std::size_t front = 0;
        while (front < c.size() && c[front] == 0) ++front;
        std::size_t back = c.size();
        while (back > front && c[back - 1] == 0) --back;
        c = std::vector<mpz_class>(c.begin() + front, c.begin() + back);
        lo += static_cast<int>(front);
        if (c.empty()) lo = 0;
    }
};

inline LZPoly lz_mono(long v, int e) {
    LZPoly p;
    if (v != 0) {
        p.c = {mpz_class(v)};
        p.lo = e;
    }
    return p;
}

inline LZPoly lz_add(const LZPoly& a, const LZPoly& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    const int lo = std::min(a.lo, b.lo);
    const int hi = std::max(a.lo + static_cast<int>(a.c.size()), b.lo + static_cast<int>(b.c.size()));
    LZPoly r;
    r.lo = lo;
    r.c.assign(hi - lo, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[a.lo - lo + i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[b.lo - lo + i] += b.c[i];
    r.trim();
    return r;
}

// p * v * t^e
inline LZPoly lz_scale(const LZPoly& p, long v, int e) {
    if (p.zero() || v == 0) return {};
    LZPoly r = p;
    r.lo += e;
    for (auto& x : r.c) x *= v;
    return r;
}

inline LZPoly lz_mul(const LZPoly& a, const LZPoly& b) {
    if (a.zero() || b.zero()) return {};
    LZPoly r;
    r.lo = a.lo + b.lo;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

inline LZPoly lz_sub(const LZPoly& a, const LZPoly& b) { return lz_add(a, lz_scale(b, -1, 0)); }

// Exact division; throws if the quotient is not a Laurent polynomial over Z.
inline LZPoly lz_divexact(LZPoly num, const LZPoly& den) {
    if (den.zero()) throw std::invalid_argument("division by zero polynomial");
    if (num.zero()) return {};
    if (num.c.size() < den.c.size()) throw std::logic_error("inexact polynomial division");
    LZPoly q;
    q.lo = num.lo - den.lo;
    q.c.assign(num.c.size() - den.c.size() + 1, 0);
    const mpz_class& dl = den.c.back();
    for (std::size_t k = q.c.size(); k-- > 0;) {
        mpz_class& nl = num.c[k + den.c.size() - 1];
        if (nl == 0) continue;
        if (!mpz_divisible_p(nl.get_mpz_t(), dl.get_mpz_t()))
            throw std::logic_error("inexact polynomial division");
        q.c[k] = nl / dl;
        for (std::size_t j = 0; j < den.c.size(); ++j) num.c[k + j] -= q.c[k] * den.c[j];
    }
    for (const auto& x : num.c)
        if (x != 0) throw std::logic_error("inexact polynomial division");
    q.trim();
    return q;
}

// Fraction-free determinant over Z[t, 1/t].
inline LZPoly lz_det(std::vector<std::vector<LZPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return lz_mono(1, 0);
    LZPoly prev = lz_mono(1, 0);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].zero()) ++r;
            if (r == n) return {};
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = lz_divexact(lz_sub(lz_mul(m[k][k], m[i][j]), lz_mul(m[i][k], m[k][j])), prev);
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    LZPoly d = m[n - 1][n - 1];
    return sign > 0 ? d : lz_scale(d, -1, 0);
}

}  // namespace detail

// Reduced Burau matrix of the braid word, entries in Z[t, 1/t].
inline std::vector<std::vector<detail::LZPoly>> burau_reduced(const BraidWord& w) {
    using detail::LZPoly;
    validate_braid(w);
    const int m = w.strands - 1;
    std::vector<std::vector<LZPoly>> B(m, std::vector<LZPoly>(m));
    for (int i = 0; i < m; ++i) B[i][i] = detail::lz_mono(1, 0);
    for (int e : w.letters) {
        const int i = std::abs(e);
        const int col = i - 1;
        // right-multiplying by a generator only rewrites one column
        std::vector<LZPoly> nc(m);
        for (int r = 0; r < m; ++r) {
            LZPoly acc;
            if (e > 0) {
                acc = detail::lz_scale(B[r][i - 1], -1, 1);
                if (i - 2 >= 0) acc = detail::lz_add(acc, detail::lz_scale(B[r][i - 2], 1, 1));
                if (i < m) acc = detail::lz_add(acc, B[r][i]);
            } else {
                acc = detail::lz_scale(B[r][i - 1], -1, -1);
                if (i - 2 >= 0) acc = detail::lz_add(acc, B[r][i - 2]);
                if (i < m) acc = detail::lz_add(acc, detail::lz_scale(B[r][i], 1, -1));
            }
            nc[r] = acc;
        }
        for (int r = 0; r < m; ++r) B[r][col] = std::move(nc[r]);
    }
    return B;
}

// Alexander polynomial from the Burau determinant, reduced to minimum
// exponent zero with positive leading coefficient.  Requires a knot closure.
inline LaurentPoly alexander_burau(const BraidWord& w) {
    using detail::LZPoly;
    if (!closure_is_knot(w))
        throw std::invalid_argument("alexander_burau: closure is not a knot");
    const int m = w.strands - 1;
    if (m == 0) return LaurentPoly::monomial(1, 0);
    auto B = burau_reduced(w);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            LZPoly id = (i == j) ? detail::lz_mono(1, 0) : LZPoly{};
            B[i][j] = detail::lz_sub(id, B[i][j]);
        }
    LZPoly det = detail::lz_det(std::move(B));
    if (det.zero()) throw std::logic_error("alexander_burau: vanishing Burau determinant on a knot");
    LZPoly cyc;  // 1 + t + ... + t^{n-1}
    cyc.c.assign(w.strands, 1);
    LZPoly quot = detail::lz_divexact(det, cyc);
    LaurentPoly out;
    for (std::size_t i = 0; i < quot.c.size(); ++i) {
        if (quot.c[i] == 0) continue;
        if (!quot.c[i].fits_slong_p()) throw std::overflow_error("alexander coefficient overflow");
        out = out + LaurentPoly::monomial(quot.c[i].get_si(), static_cast<int>(i));
    }
    return out.normalized();
}

}  // namespace cforge
