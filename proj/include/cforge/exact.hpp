#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "laurent.hpp"

namespace cforge {

using IMatrix = std::vector<std::vector<std::int64_t>>;
using ZMatrix = std::vector<std::vector<mpz_class>>;

inline ZMatrix to_zmatrix(const IMatrix& a) {
    ZMatrix m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != a.size()) throw std::invalid_argument("matrix is not square");
        m[i].reserve(a.size());
        for (auto v : a[i]) m[i].emplace_back(static_cast<long>(v));
    }
    return m;
}

// Fraction-free Bareiss elimination; every division below is exact.
inline mpz_class det_exact(ZMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix is not square");
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

inline mpz_class det_exact(const IMatrix& a) { return det_exact(to_zmatrix(a)); }

// Sylvester's criterion. In Bareiss elimination without row swaps the pivot
// entering stage k equals the leading principal (k+1)-minor, so a single
// elimination pass checks every minor; a non-positive pivot ends the test.
inline bool positive_definite(ZMatrix m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("matrix is not square");
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i]) throw std::invalid_argument("matrix is not symmetric");
    }
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return true;
}

inline bool positive_definite(const IMatrix& a) { return positive_definite(to_zmatrix(a)); }

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    int signature() const { return positive - negative; }
    int rank() const { return positive + negative; }
};

// Exact inertia of a symmetric integer matrix by rational congruence reduction
// (Schur complements). When the whole remaining diagonal vanishes but row k
// does not, adding row+column l into row+column k makes the pivot 2*a[k][l].
inline Inertia inertia_exact(const ZMatrix& sym) {
    const std::size_t n = sym.size();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (sym[i].size() != n) throw std::invalid_argument("matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (sym[i][j] != sym[j][i]) throw std::invalid_argument("matrix is not symmetric");
            a[i][j] = mpq_class(sym[i][j]);
        }
    }
    Inertia res;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t diag = n;
            for (std::size_t l = k + 1; l < n; ++l)
                if (a[l][l] != 0) {
                    diag = l;
                    break;
                }
            if (diag < n) {
                for (std::size_t j = k; j < n; ++j) std::swap(a[k][j], a[diag][j]);
                for (std::size_t i = k; i < n; ++i) std::swap(a[i][k], a[i][diag]);
            } else {
                std::size_t off = n;
                for (std::size_t j = k + 1; j < n; ++j)
                    if (a[k][j] != 0) {
                        off = j;
                        break;
                    }
                if (off == n) {
                    ++res.zero;
                    continue;
                }
                for (std::size_t j = k; j < n; ++j) a[k][j] += a[off][j];
                for (std::size_t i = k; i < n; ++i) a[i][k] += a[i][off];
            }
        }
        const mpq_class d = a[k][k];
        if (d > 0)
            ++res.positive;
        else
            ++res.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const mpq_class f = a[i][k] / d;
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        for (std::size_t i = k + 1; i < n; ++i) a[i][k] = a[k][i] = 0;
    }
    return res;
}

inline Inertia inertia_exact(const IMatrix& a) { return inertia_exact(to_zmatrix(a)); }

inline int signature_exact(const ZMatrix& sym) { return inertia_exact(sym).signature(); }
inline int signature_exact(const IMatrix& sym) { return inertia_exact(sym).signature(); }

// Newton interpolation through distinct integer nodes; power-basis coefficients.
inline std::vector<mpq_class> interpolate_rational(const std::vector<std::int64_t>& xs,
                                                   const std::vector<mpq_class>& ys) {
    const std::size_t n = xs.size();
    if (ys.size() != n || n == 0) throw std::invalid_argument("interpolation needs matching nonempty node lists");
    std::vector<mpq_class> dd(ys);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(static_cast<long>(xs[i] - xs[i - level]));
            if (i == level) break;
        }
    std::vector<mpq_class> coeffs(n, mpq_class(0));
    std::vector<mpq_class> basis(n, mpq_class(0));
    basis[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) coeffs[j] += dd[i] * basis[j];
        if (i + 1 < n) {
            for (std::size_t j = i + 1; j > 0; --j)
                basis[j] = basis[j - 1] - mpq_class(static_cast<long>(xs[i])) * basis[j];
            basis[0] = -mpq_class(static_cast<long>(xs[i])) * basis[0];
        }
    }
    return coeffs;
}

// Interprets index i as the coefficient of t^i; rejects non-integer values.
inline LaurentPoly to_integer_poly(const std::vector<mpq_class>& coeffs) {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        mpq_class c = coeffs[i];
        c.canonicalize();
        if (c == 0) continue;
        if (c.get_den() != 1) throw std::logic_error("expected integer polynomial coefficient");
        if (!c.get_num().fits_slong_p()) throw std::overflow_error("polynomial coefficient overflow");
        p = p + LaurentPoly::monomial(c.get_num().get_si(), static_cast<int>(i));
    }
    return p;
}

}  // namespace cforge
