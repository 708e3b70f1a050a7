#pragma once

// Integer lattice embedding: decides whether a positive-definite Gram matrix
// G (m x m) factors as M^T M with M an n x m integer matrix, by exhaustive
// backtracking over columns modulo the signed-permutation symmetry of Z^n.
// A completed search is a proof of nonexistence; a budget cutoff is not.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cforge/exact.hpp"
#include "cforge/goeritz.hpp"

namespace cforge {

struct EmbeddingCertificate {
    enum class Outcome { Witness, Exhausted, Inconclusive };
    Outcome outcome = Outcome::Inconclusive;
    IMatrix witness;                     // n x m with witness^T * witness = G
    std::uint64_t nodes_searched = 0;
    std::uint64_t symmetry_classes = 0;  // canonical first-column classes tried
};

struct NormVectorConstraints {
    IMatrix columns;                 // previously fixed columns, each of length dim
    std::vector<std::int64_t> dots;  // required inner products v . columns[l]
    bool canonical = true;           // reduce modulo the stabilizer of the columns
};

namespace detail {

struct EmbedCtx {
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;  // 0 = unlimited
    bool budget_hit = false;

    bool tick() {
        ++nodes;
        if (budget != 0 && nodes > budget) {
            budget_hit = true;
            return false;
        }
        return true;
    }
};

inline std::int64_t isqrt64(std::int64_t x) {
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Walks every v in Z^dim with v.v = norm and v . cols[l] = dots[l].  With
// `canonical` set, coordinates are reduced modulo the tracked stabilizer of
// the fixed columns: positions carrying equal value tuples across all
// columns are interchangeable (v must be non-increasing on each class), and
// positions where every column vanishes also admit sign flips (v must be
// nonnegative there).  That group is a subgroup of the full stabilizer, so
// the reduction is complete: every orbit keeps at least one representative.
// The visitor returns false to abort the walk; so does the node budget.
template <class F>
bool for_each_norm_vector(std::int64_t norm, int dim, const IMatrix& cols,
                          const std::vector<std::int64_t>& dots, bool canonical, EmbedCtx& ctx,
                          F&& visit) {
    const int k = static_cast<int>(cols.size());
    std::vector<int> cls(static_cast<std::size_t>(dim), 0);
    std::vector<char> zero_class;
    {
        std::map<std::vector<std::int64_t>, int> ids;
        std::vector<std::int64_t> sig(static_cast<std::size_t>(k));
        for (int r = 0; r < dim; ++r) {
            for (int l = 0; l < k; ++l) sig[(std::size_t)l] = cols[(std::size_t)l][(std::size_t)r];
            auto [it, fresh] = ids.emplace(sig, static_cast<int>(ids.size()));
            cls[(std::size_t)r] = it->second;
            if (fresh)
                zero_class.push_back(
                    std::all_of(sig.begin(), sig.end(), [](std::int64_t x) { return x == 0; }));
        }
    }
    // suffix square sums per fixed column, for the Cauchy-Schwarz prune
    std::vector<std::vector<std::int64_t>> suf(
        static_cast<std::size_t>(k), std::vector<std::int64_t>(static_cast<std::size_t>(dim) + 1, 0));
    for (int l = 0; l < k; ++l)
        for (int r = dim - 1; r >= 0; --r) {
            const std::int64_t e = cols[(std::size_t)l][(std::size_t)r];
            suf[(std::size_t)l][(std::size_t)r] = suf[(std::size_t)l][(std::size_t)r + 1] + e * e;
        }

    std::vector<std::int64_t> v(static_cast<std::size_t>(dim), 0);
    std::vector<std::int64_t> partial(static_cast<std::size_t>(k), 0);
    std::vector<std::int64_t> last(zero_class.size(), std::numeric_limits<std::int64_t>::max());

    auto rec = [&](auto&& self, int r, std::int64_t rem) -> bool {
        if (r == dim) {
            if (rem != 0) return true;
            for (int l = 0; l < k; ++l)
                if (partial[(std::size_t)l] != dots[(std::size_t)l]) return true;
            return visit(const_cast<const std::vector<std::int64_t>&>(v));
        }
        for (int l = 0; l < k; ++l) {
            const std::int64_t need = dots[(std::size_t)l] - partial[(std::size_t)l];
            if (need * need > rem * suf[(std::size_t)l][(std::size_t)r]) return true;
        }
        std::int64_t hi = isqrt64(rem);
        std::int64_t lo = -hi;
        const int c = cls[(std::size_t)r];
        if (canonical) {
            hi = std::min(hi, last[(std::size_t)c]);
            if (zero_class[(std::size_t)c]) lo = 0;
        }
        for (std::int64_t x = hi; x >= lo; --x) {
            if (!ctx.tick()) return false;
            v[(std::size_t)r] = x;
            for (int l = 0; l < k; ++l)
                partial[(std::size_t)l] += x * cols[(std::size_t)l][(std::size_t)r];
            const std::int64_t prev = last[(std::size_t)c];
            last[(std::size_t)c] = x;
            const bool keep_going = self(self, r + 1, rem - x * x);
            last[(std::size_t)c] = prev;
            for (int l = 0; l < k; ++l)
                partial[(std::size_t)l] -= x * cols[(std::size_t)l][(std::size_t)r];
            if (!keep_going) return false;
        }
        v[(std::size_t)r] = 0;
        return true;
    };
    return rec(rec, 0, norm);
}

}  // namespace detail

inline IMatrix enumerate_norm_vectors(std::int64_t norm, int dim,
                                      const NormVectorConstraints& c = {}) {
    if (norm < 0) throw std::invalid_argument("enumerate_norm_vectors: norm must be nonnegative");
    if (dim < 1) throw std::invalid_argument("enumerate_norm_vectors: dimension must be positive");
    if (c.columns.size() != c.dots.size())
        throw std::invalid_argument("enumerate_norm_vectors: one dot per fixed column");
    for (const auto& col : c.columns)
        if (static_cast<int>(col.size()) != dim)
            throw std::invalid_argument("enumerate_norm_vectors: column length mismatch");
    detail::EmbedCtx ctx;
    IMatrix out;
    detail::for_each_norm_vector(norm, dim, c.columns, c.dots, c.canonical, ctx,
                                 [&](const std::vector<std::int64_t>& v) {
                                     out.push_back(v);
                                     return true;
                                 });
    return out;
}

// Exhaustive search for M with M^T M = G, M of size n x m.  Columns are
// processed in order of descending diagonal entry (fewest lattice vectors
// first); each column is enumerated against the inner products required by
// the already-placed ones.  `max_nodes` of 0 means unlimited; a cutoff
// yields Inconclusive, never Exhausted.
inline EmbeddingCertificate embeds(const IMatrix& G, int n, std::uint64_t max_nodes = 0) {
    const int m = static_cast<int>(G.size());
    for (const auto& row : G)
        if (static_cast<int>(row.size()) != m)
            throw std::invalid_argument("embeds: gram matrix must be square");
    constexpr std::int64_t kEntryBound = std::int64_t{1} << 20;
    for (const auto& row : G)
        for (std::int64_t e : row)
            if (e <= -kEntryBound || e >= kEntryBound)
                throw std::invalid_argument("embeds: gram entries out of supported range");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (G[(std::size_t)i][(std::size_t)j] != G[(std::size_t)j][(std::size_t)i])
                throw std::invalid_argument("embeds: gram matrix must be symmetric");
    // Cauchy-Schwarz, then the exact definiteness test
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && G[(std::size_t)i][(std::size_t)j] * G[(std::size_t)i][(std::size_t)j] >=
                              G[(std::size_t)i][(std::size_t)i] * G[(std::size_t)j][(std::size_t)j])
                throw std::invalid_argument("embeds: gram matrix must be positive definite");
    if (m > 0 && !positive_definite(G))
        throw std::invalid_argument("embeds: gram matrix must be positive definite");
    if (n < 1) throw std::invalid_argument("embeds: target dimension must be positive");

    EmbeddingCertificate cert;
    if (m == 0) {
        cert.outcome = EmbeddingCertificate::Outcome::Witness;
        cert.witness.assign(static_cast<std::size_t>(n), {});
        return cert;
    }
    if (n < m) {  // rank(M^T M) <= n < m = rank(G)
        cert.outcome = EmbeddingCertificate::Outcome::Exhausted;
        return cert;
    }

    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return G[(std::size_t)a][(std::size_t)a] > G[(std::size_t)b][(std::size_t)b];
    });
    IMatrix Gp(static_cast<std::size_t>(m), std::vector<std::int64_t>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            Gp[(std::size_t)i][(std::size_t)j] =
                G[(std::size_t)order[(std::size_t)i]][(std::size_t)order[(std::size_t)j]];

    detail::EmbedCtx ctx;
    ctx.budget = max_nodes;
    IMatrix placed;
    placed.reserve(static_cast<std::size_t>(m));
    IMatrix witness_cols;

    auto rec = [&](auto&& self) -> bool {  // false = stop the whole search
        const int k = static_cast<int>(placed.size());
        if (k == m) {
            witness_cols = placed;
            return false;
        }
        std::vector<std::int64_t> dots(Gp[(std::size_t)k].begin(),
                                       Gp[(std::size_t)k].begin() + k);
        return detail::for_each_norm_vector(
            Gp[(std::size_t)k][(std::size_t)k], n, placed, dots, /*canonical=*/true, ctx,
            [&](const std::vector<std::int64_t>& v) {
                if (k == 0) ++cert.symmetry_classes;
                placed.push_back(v);
                const bool keep_going = self(self);
                placed.pop_back();
                return keep_going;
            });
    };
    rec(rec);
    cert.nodes_searched = ctx.nodes;

    if (!witness_cols.empty()) {
        cert.outcome = EmbeddingCertificate::Outcome::Witness;
        cert.witness.assign(static_cast<std::size_t>(n),
                            std::vector<std::int64_t>(static_cast<std::size_t>(m), 0));
        for (int k = 0; k < m; ++k)
            for (int r = 0; r < n; ++r)
                cert.witness[(std::size_t)r][(std::size_t)order[(std::size_t)k]] =
                    witness_cols[(std::size_t)k][(std::size_t)r];
        for (int i = 0; i < m; ++i)  // re-verify M^T M = G before handing it out
            for (int j = 0; j < m; ++j) {
                std::int64_t s = 0;
                for (int r = 0; r < n; ++r)
                    s += cert.witness[(std::size_t)r][(std::size_t)i] *
                         cert.witness[(std::size_t)r][(std::size_t)j];
                if (s != G[(std::size_t)i][(std::size_t)j])
                    throw std::logic_error("embeds: witness failed verification");
            }
        return cert;
    }
    cert.outcome = ctx.budget_hit ? EmbeddingCertificate::Outcome::Inconclusive
                                  : EmbeddingCertificate::Outcome::Exhausted;
    return cert;
}

struct G4Bound {
    int bound = 0;
    int signature = 0;                             // of the diagram actually tested
    IMatrix gram;                                  // empty when no form was tested
    std::optional<EmbeddingCertificate> certificate;
    std::string rule;
};

// Smooth 4-genus lower bound from a positive-definite Goeritz form G of a
// diagram with signature sigma <= 0: |sigma|/2 always holds, and if G admits
// no embedding into Z^(m - sigma) the bound improves to |sigma|/2 + 1.
inline G4Bound g4_lower_bound(const IMatrix& G, int sigma, std::uint64_t max_nodes = 0) {
    if (sigma > 0) throw std::invalid_argument("g4_lower_bound: signature must be nonpositive");
    if (sigma % 2 != 0) throw std::invalid_argument("g4_lower_bound: knot signature is even");
    G4Bound out;
    out.signature = sigma;
    out.bound = -sigma / 2;
    out.rule = "signature";
    if (G.empty()) return out;
    out.gram = G;
    const int n = static_cast<int>(G.size()) - sigma;
    out.certificate = embeds(G, n, max_nodes);
    if (out.certificate->outcome == EmbeddingCertificate::Outcome::Exhausted) {
        out.bound = -sigma / 2 + 1;
        out.rule = "signature+embedding-exhausted";
    }
    return out;
}

// g4 is mirror-invariant, so a positive-signature diagram is mirrored first.
// Diagrams without a positive-definite Goeritz form on either chirality fall
// back to the bare signature bound.
inline G4Bound g4_lower_bound(const Diagram& din, std::uint64_t max_nodes = 0) {
    const Diagram d = gl_signature(din) > 0 ? mirror(din) : din;
    const int sigma = gl_signature(d);
    if (d.crossings.empty()) {
        G4Bound out;
        out.rule = "trivial";
        return out;
    }
    try {
        const GoeritzForm form = positive_goeritz(d);
        return g4_lower_bound(form.matrix, sigma, max_nodes);
    } catch (const std::runtime_error&) {
        G4Bound out;
        out.signature = sigma;
        out.bound = -sigma / 2;
        out.rule = "signature (no positive-definite goeritz form)";
        return out;
    }
}

// Whitespace/CSV/TeX-tolerant square-matrix reader: parentheses, commas,
// ampersands and trailing backslashes are separators; blank lines ignored.
inline IMatrix parse_gram(const std::string& text) {
    IMatrix rows;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        for (char& ch : line)
            if (ch == '(' || ch == ')' || ch == ',' || ch == '&' || ch == '\\' || ch == '\r' ||
                ch == '\t')
                ch = ' ';
        std::istringstream fields(line);
        std::vector<std::int64_t> row;
        std::string tok;
        while (fields >> tok) {
            std::size_t used = 0;
            std::int64_t value = 0;
            try {
                value = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size())
                throw std::invalid_argument("parse_gram: bad entry '" + tok + "' on line " +
                                            std::to_string(lineno));
            row.push_back(value);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    const std::size_t m = rows.size();
    if (m == 0) throw std::invalid_argument("parse_gram: no matrix rows found");
    for (std::size_t i = 0; i < m; ++i)
        if (rows[i].size() != m)
            throw std::invalid_argument("parse_gram: matrix must be square (row " +
                                        std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " of " +
                                        std::to_string(m) + " entries)");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (rows[i][j] != rows[j][i])
                throw std::invalid_argument("parse_gram: matrix must be symmetric");
    return rows;
}

}  // namespace cforge
