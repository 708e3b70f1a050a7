#pragma once

// Exact classical invariants and the fingerprint used for identification.

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cforge/braid.hpp"
#include "cforge/burau.hpp"
#include "cforge/diagram.hpp"
#include "cforge/dt.hpp"
#include "cforge/exact.hpp"
#include "cforge/goeritz.hpp"
#include "cforge/laurent.hpp"
#include "cforge/seifert.hpp"

namespace cforge {

// det(V - t*V^T) computed exactly over Z[t].
inline LaurentPoly alexander_from_seifert(const IMatrix& V) {
    using detail::LZPoly;
    const std::size_t g = V.size();
    std::vector<std::vector<LZPoly>> A(g, std::vector<LZPoly>(g));
    for (std::size_t i = 0; i < g; ++i) {
        if (V[i].size() != g) throw std::invalid_argument("matrix is not square");
        for (std::size_t j = 0; j < g; ++j)
            A[i][j] = detail::lz_add(detail::lz_mono(static_cast<long>(V[i][j]), 0),
                                     detail::lz_mono(static_cast<long>(-V[j][i]), 1));
    }
    LZPoly det = detail::lz_det(std::move(A));
    LaurentPoly out;
    for (std::size_t i = 0; i < det.c.size(); ++i) {
        if (det.c[i] == 0) continue;
        if (!det.c[i].fits_slong_p()) throw std::overflow_error("alexander coefficient overflow");
        out = out + LaurentPoly::monomial(det.c[i].get_si(), det.lo + static_cast<int>(i));
    }
    return out;
}

// Shift to minimal exponent 0 and positive leading coefficient, then insist
// the result looks like a knot's Alexander polynomial.
inline LaurentPoly normalize_alexander(const LaurentPoly& p) {
    if (p.is_zero()) throw std::logic_error("alexander polynomial is zero");
    LaurentPoly q = p.normalized();
    const std::int64_t at_one = q.eval_int(1);
    if (at_one != 1 && at_one != -1)
        throw std::logic_error("alexander normalization: |value at 1| != 1");
    for (int e = 0; e <= q.max_exp(); ++e)
        if (q.coeff(e) != q.coeff(q.max_exp() - e))
            throw std::logic_error("alexander normalization: coefficients not symmetric");
    return q;
}

inline LaurentPoly alexander(const BraidWord& w) {
    if (!closure_is_knot(w)) throw std::invalid_argument("alexander: closure is not a knot");
    return normalize_alexander(alexander_from_seifert(seifert_matrix(w)));
}

inline int signature(const BraidWord& w) {
    if (!closure_is_knot(w)) throw std::invalid_argument("signature: closure is not a knot");
    const IMatrix V = seifert_matrix(w);
    IMatrix S(V.size(), std::vector<std::int64_t>(V.size()));
    for (std::size_t i = 0; i < V.size(); ++i)
        for (std::size_t j = 0; j < V.size(); ++j) S[i][j] = V[i][j] + V[j][i];
    const int sig = signature_exact(S);
    if (sig % 2 != 0) throw std::logic_error("signature of a knot must be even");
    return sig;
}

inline std::int64_t determinant(const LaurentPoly& alex) {
    const std::int64_t v = alex.eval_int(-1);
    return v < 0 ? -v : v;
}

inline std::int64_t determinant(const BraidWord& w) { return determinant(alexander(w)); }

// Alexander polynomial from the Wirtinger presentation of a diagram: one Fox
// row per crossing over the generators (arcs merged through over-passages),
// one row and one column deleted.
inline LaurentPoly alexander(const Diagram& din) {
    const Diagram d = reduce_r1(din);
    const int n = static_cast<int>(d.crossings.size());
    if (n == 0) return LaurentPoly::monomial(1, 0);
    std::vector<int> up(d.arc_count);
    for (int a = 0; a < d.arc_count; ++a) up[a] = a;
    auto root = [&](int a) {
        while (up[a] != a) a = up[a] = up[up[a]];
        return a;
    };
    for (const auto& c : d.crossings) up[root(c.arc[1])] = root(c.arc[3]);
    std::vector<int> cls(d.arc_count, -1);
    int m = 0;
    for (int a = 0; a < d.arc_count; ++a) {
        const int r = root(a);
        if (cls[r] == -1) cls[r] = m++;
        cls[a] = cls[r];
    }
    if (m != n) throw std::logic_error("wirtinger: generator count mismatch");

    using detail::LZPoly;
    std::vector<std::vector<LZPoly>> A(n - 1, std::vector<LZPoly>(n - 1));
    auto put = [&](int row, int g, long c0, long c1) {
        if (row >= n - 1 || g >= n - 1) return;  // deleted row/column
        A[row][g] = detail::lz_add(A[row][g],
                                   detail::lz_add(detail::lz_mono(c0, 0), detail::lz_mono(c1, 1)));
    };
    for (int c = 0; c < n; ++c) {
        const int o = cls[d.crossings[c].arc[1]];
        const int u = cls[d.crossings[c].arc[0]];
        const int w = cls[d.crossings[c].arc[2]];
        if (d.crossings[c].sign > 0) {
            put(c, o, 1, -1);  // 1 - t
            put(c, u, 0, 1);   // t
            put(c, w, -1, 0);  // -1
        } else {
            put(c, o, -1, 1);  // t - 1
            put(c, u, 1, 0);   // 1
            put(c, w, 0, -1);  // -t
        }
    }
    LZPoly det = detail::lz_det(std::move(A));
    LaurentPoly out;
    for (std::size_t i = 0; i < det.c.size(); ++i) {
        if (det.c[i] == 0) continue;
        if (!det.c[i].fits_slong_p()) throw std::overflow_error("alexander coefficient overflow");
        out = out + LaurentPoly::monomial(det.c[i].get_si(), det.lo + static_cast<int>(i));
    }
    return normalize_alexander(out);
}

struct InvariantFingerprint {
    LaurentPoly alexander;
    int signature = 0;
    std::int64_t determinant = 1;
    std::optional<LaurentPoly> jones;

    bool operator==(const InvariantFingerprint& o) const {
        return alexander == o.alexander && signature == o.signature &&
               determinant == o.determinant && jones == o.jones;
    }

    // index key over the always-present fields; Jones settles collisions
    std::string key() const {
        return alexander.str() + " | " + std::to_string(signature) + " | " + std::to_string(determinant);
    }

    // equality with absent Jones treated as unconstrained
    bool compatible(const InvariantFingerprint& o) const {
        if (!(alexander == o.alexander) || signature != o.signature || determinant != o.determinant)
            return false;
        if (jones && o.jones) return *jones == *o.jones;
        return true;
    }
};

inline InvariantFingerprint fingerprint(const BraidWord& w) {
    InvariantFingerprint fp;
    fp.alexander = alexander(w);
    fp.signature = signature(w);
    fp.determinant = determinant(fp.alexander);
    if (fp.determinant % 2 == 0) throw std::logic_error("knot determinant must be odd");
    return fp;
}

inline InvariantFingerprint fingerprint(const Diagram& din) {
    const Diagram d = reduce_r1(din);
    InvariantFingerprint fp;
    fp.alexander = alexander(d);
    fp.signature = gl_signature(d);
    fp.determinant = determinant(fp.alexander);
    if (fp.determinant % 2 == 0) throw std::logic_error("knot determinant must be odd");
    return fp;
}

inline InvariantFingerprint fingerprint(const PDCode& pd) { return fingerprint(pd_to_diagram(pd)); }

// Mirror image: Alexander fixed, signature negated, Jones reflected.  Names
// identify knots only up to mirror, and g4 is mirror-invariant, so lookups
// may consult both chiralities.
inline InvariantFingerprint mirrored(const InvariantFingerprint& fp) {
    InvariantFingerprint out = fp;
    out.signature = -fp.signature;
    if (fp.jones) out.jones = fp.jones->mirrored().normalized();
    return out;
}

// Realized DT codes fix a knot only up to mirror; normalize to the chirality
// with nonpositive signature, matching the table convention.
inline Diagram realize_dt_normalized(const DTCode& dt) {
    const Diagram d = realize_dt(dt);
    return gl_signature(d) > 0 ? mirror(d) : d;
}

}  // namespace cforge
