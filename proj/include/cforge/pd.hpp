#pragma once

// Planar-diagram codes: each crossing is a quadruple of arc labels listed
// counterclockwise from the incoming under-strand.

#include <array>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cforge {

struct PDCode {
    std::vector<std::array<int, 4>> crossings;
    bool operator==(const PDCode&) const = default;
};

// Text form: whitespace/newline separated entries `X[a,b,c,d]`.
inline std::string format_pd(const PDCode& pd) {
    std::string out;
    for (const auto& x : pd.crossings) {
        out += "X[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
               std::to_string(x[2]) + "," + std::to_string(x[3]) + "]";
        out += '\n';
    }
    return out;
}

inline PDCode parse_pd(const std::string& text) {
    PDCode pd;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != 'X') throw std::invalid_argument("pd parse: expected 'X' at offset " + std::to_string(i));
        ++i;
        if (i >= text.size() || text[i] != '[') throw std::invalid_argument("pd parse: expected '['");
        ++i;
        std::array<int, 4> q{};
        for (int k = 0; k < 4; ++k) {
            skip_ws();
            bool neg = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("pd parse: expected arc label");
            long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            q[k] = static_cast<int>(neg ? -v : v);
            skip_ws();
        }
        if (i >= text.size() || text[i] != ']') throw std::invalid_argument("pd parse: expected ']'");
        ++i;
        pd.crossings.push_back(q);
        skip_ws();
    }
    return pd;
}

// Each arc label must occur exactly twice across all quadruples.
inline void validate_pd(const PDCode& pd) {
    std::map<int, int> seen;
    for (const auto& x : pd.crossings)
        for (int a : x) ++seen[a];
    for (const auto& [label, count] : seen)
        if (count != 2)
            throw std::invalid_argument("pd code: arc label " + std::to_string(label) + " occurs " +
                                        std::to_string(count) + " times (want 2)");
}

}  // namespace cforge
