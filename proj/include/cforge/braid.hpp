#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rng.hpp"

namespace cforge {

// Braid word on `strands` strands; letter e with 1 <= |e| <= strands-1 stands
// for the generator with that index (negative = inverse). Words are stored
// verbatim: no automatic free reduction, so letter positions are stable.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    bool operator==(const BraidWord&) const = default;
};

inline void validate_braid(const BraidWord& b) {
    if (b.strands < 1) throw std::invalid_argument("strand count must be positive");
    for (int e : b.letters) {
        if (e == 0) throw std::invalid_argument("braid letter 0");
        int idx = e < 0 ? -e : e;
        if (idx > b.strands - 1) throw std::invalid_argument("braid letter out of range for strand count");
    }
}

inline BraidWord make_braid(std::vector<int> letters, int strands = 0) {
    if (strands == 0) {
        strands = 1;
        for (int e : letters) {
            int idx = e < 0 ? -e : e;
            if (idx + 1 > strands) strands = idx + 1;
        }
    }
    BraidWord b{strands, std::move(letters)};
    validate_braid(b);
    return b;
}

// Text form `[e1,e2,...,ek]`; strand count inferred as max|letter|+1 unless supplied.
inline BraidWord parse_braid(const std::string& text, int strands = 0) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("braid text must be bracketed: " + text);
    std::vector<int> letters;
    std::string body = s.substr(1, s.size() - 2);
    if (!body.empty()) {
        std::istringstream in(body);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("empty braid token in: " + text);
            std::size_t used = 0;
            int value;
            try {
                value = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed braid token '" + tok + "'");
            }
            if (used != tok.size()) throw std::invalid_argument("malformed braid token '" + tok + "'");
            letters.push_back(value);
        }
        if (body.back() == ',') throw std::invalid_argument("trailing comma in: " + text);
    }
    return make_braid(std::move(letters), strands);
}

inline std::string format_braid(const BraidWord& b) {
    std::string out = "[";
    for (std::size_t i = 0; i < b.letters.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(b.letters[i]);
    }
    out.push_back(']');
    return out;
}

// Image of each strand under the closure permutation (0-based).
inline std::vector<int> closure_permutation(const BraidWord& b) {
    std::vector<int> perm(static_cast<std::size_t>(b.strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int e : b.letters) {
        int i = (e < 0 ? -e : e) - 1;
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i) + 1]);
    }
    return perm;
}

inline int closure_components(const BraidWord& b) {
    auto perm = closure_permutation(b);
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t k = s; !seen[k]; k = static_cast<std::size_t>(perm[k])) seen[k] = true;
    }
    return cycles;
}

inline bool closure_is_knot(const BraidWord& b) { return closure_components(b) == 1; }

inline int writhe(const BraidWord& b) {
    int w = 0;
    for (int e : b.letters) w += (e > 0) ? 1 : -1;
    return w;
}

inline BraidWord mirror(const BraidWord& b) {
    BraidWord m = b;
    for (int& e : m.letters) e = -e;
    return m;
}

struct RandomBraidOptions {
    int min_strands = 4;
    int max_strands = 12;
    int min_length = 20;
    int max_length = 60;
    int resample_cap = 10000;
};

// Draws uniform letters until the closure is a knot; deterministic per seed.
inline BraidWord random_braid(std::uint64_t seed, RandomBraidOptions opt = {}) {
    if (opt.min_strands < 2 || opt.max_strands < opt.min_strands || opt.min_length < 1 ||
        opt.max_length < opt.min_length)
        throw std::invalid_argument("empty range for random_braid");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < opt.resample_cap; ++attempt) {
        int n = static_cast<int>(rng.uniform(opt.min_strands, opt.max_strands));
        int len = static_cast<int>(rng.uniform(opt.min_length, opt.max_length));
        std::vector<int> letters(static_cast<std::size_t>(len));
        for (auto& e : letters) {
            e = static_cast<int>(rng.uniform(1, n - 1));
            if (rng.coin()) e = -e;
        }
        BraidWord b{n, std::move(letters)};
        if (closure_is_knot(b)) return b;
    }
    throw std::runtime_error("random_braid: resample cap exceeded");
}

// Rewrites the word by knot-type-preserving moves: conjugation, Markov
// stabilization, and canceling-pair insertion. Grows the diagram without
// changing the closure's knot type.
inline BraidWord diversify(const BraidWord& b, std::uint64_t seed, int steps) {
    if (!closure_is_knot(b)) throw std::invalid_argument("diversify requires a knot closure");
    SplitMix64 rng(seed);
    BraidWord w = b;
    for (int s = 0; s < steps; ++s) {
        // A 1-strand word has no generators; only stabilization applies.
        switch (w.strands < 2 ? 1 : rng.uniform(0, 2)) {
            case 0: {  // conjugate: e w e^{-1}
                int e = static_cast<int>(rng.uniform(1, w.strands - 1));
                if (rng.coin()) e = -e;
                w.letters.insert(w.letters.begin(), e);
                w.letters.push_back(-e);
                break;
            }
            case 1: {  // stabilize: append +-sigma_n on n+1 strands
                int e = w.strands;
                if (rng.coin()) e = -e;
                w.strands += 1;
                w.letters.push_back(e);
                break;
            }
            default: {  // insert canceling pair (e, -e)
                int e = static_cast<int>(rng.uniform(1, w.strands - 1));
                if (rng.coin()) e = -e;
                auto pos = static_cast<std::ptrdiff_t>(rng.uniform(0, static_cast<std::int64_t>(w.letters.size())));
                w.letters.insert(w.letters.begin() + pos, {e, -e});
                break;
            }
        }
    }
    return w;
}

}  // namespace cforge
