#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cforge {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

// Laurent polynomial with exact integer coefficients.
// Stored as a dense coefficient block [lo, lo + coeffs.size()) over exponents;
// the zero polynomial has an empty block.
class LaurentPoly {
public:
    LaurentPoly() = default;

    explicit LaurentPoly(std::int64_t constant) {
        if (constant != 0) {
            lo_ = 0;
            coeffs_ = {constant};
        }
    }

    static LaurentPoly monomial(std::int64_t c, int exponent) {
        LaurentPoly p;
        if (c != 0) {
            p.lo_ = exponent;
            p.coeffs_ = {c};
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    int min_exp() const {
        if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
        return lo_;
    }
    int max_exp() const {
        if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
        return lo_ + static_cast<int>(coeffs_.size()) - 1;
    }

    std::int64_t coeff(int exponent) const {
        if (is_zero()) return 0;
        int idx = exponent - lo_;
        if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(idx)];
    }

    int degree_span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.lo_, b.lo_);
        int hi = std::max(a.max_exp(), b.max_exp());
        LaurentPoly r;
        r.lo_ = lo;
        r.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            r.coeffs_[static_cast<std::size_t>(a.lo_ - lo) + i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
            auto& slot = r.coeffs_[static_cast<std::size_t>(b.lo_ - lo) + i];
            slot = checked_add(slot, b.coeffs_[i]);
        }
        r.trim();
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (b * LaurentPoly(-1)); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly();
        LaurentPoly r;
        r.lo_ = a.lo_ + b.lo_;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
            }
        }
        r.trim();
        return r;
    }

    bool operator==(const LaurentPoly& other) const { return lo_ == other.lo_ && coeffs_ == other.coeffs_; }
    bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

    // Total order for canonical sorting of findings and table keys.
    bool operator<(const LaurentPoly& other) const {
        if (lo_ != other.lo_) return lo_ < other.lo_;
        return coeffs_ < other.coeffs_;
    }

    // Evaluate at an integer point; negative exponents are only allowed at t = +-1.
    std::int64_t eval_int(std::int64_t t) const {
        if (is_zero()) return 0;
        if (t == 1 || t == -1) {
            std::int64_t acc = 0;
            for (int e = min_exp(); e <= max_exp(); ++e) {
                std::int64_t c = coeff(e);
                if (t == -1 && (e & 1)) c = -c;
                acc = checked_add(acc, c);
            }
            return acc;
        }
        if (lo_ < 0) throw std::logic_error("eval_int with negative exponents");
        std::int64_t acc = 0;
        for (int e = max_exp(); e >= 0; --e) {
            acc = checked_mul(acc, t);
            acc = checked_add(acc, coeff(e));
        }
        return acc;
    }

    // t -> 1/t
    LaurentPoly mirrored() const {
        if (is_zero()) return {};
        LaurentPoly r;
        r.lo_ = -max_exp();
        r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
        return r;
    }

    // Shift so the minimal exponent is 0 and the leading coefficient is positive.
    LaurentPoly normalized() const {
        if (is_zero()) return {};
        LaurentPoly r = *this;
        r.lo_ = 0;
        if (r.coeffs_.back() < 0)
            for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    // Canonical descending-order text form, e.g. "2*t^2 - 5*t + 2".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (int e = max_exp(); e >= min_exp(); --e) {
            std::int64_t c = coeff(e);
            if (c == 0) continue;
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            std::int64_t mag = c < 0 ? -c : c;
            if (mag != 1 || e == 0) out << mag;
            if (e != 0) {
                if (mag != 1) out << "*";
                out << "t";
                if (e != 1) out << "^" << e;
            }
            first = false;
        }
        return out.str();
    }

    static LaurentPoly parse(const std::string& text);

private:
    void trim() {
        std::size_t begin = 0, end = coeffs_.size();
        while (begin < end && coeffs_[begin] == 0) ++begin;
        while (end > begin && coeffs_[end - 1] == 0) --end;
        if (begin == end) {
            coeffs_.clear();
            lo_ = 0;
        } else {
            coeffs_ = std::vector<std::int64_t>(coeffs_.begin() + static_cast<std::ptrdiff_t>(begin),
                                                coeffs_.begin() + static_cast<std::ptrdiff_t>(end));
            lo_ += static_cast<int>(begin);
        }
    }

    int lo_ = 0;
    std::vector<std::int64_t> coeffs_;
};

// Parses the canonical text form produced by str(): terms "c*t^k", "t^k", "c*t", "t", "c"
// joined by "+"/"-"; whitespace is ignored.
inline LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly result;
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    if (s == "0") return result;
    std::size_t i = 0;
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        }
        std::int64_t mag = 1;
        bool saw_digits = false;
        std::int64_t acc = 0;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
            acc = checked_add(checked_mul(acc, 10), s[i] - '0');
            saw_digits = true;
            ++i;
        }
        if (saw_digits) mag = acc;
        int exp = 0;
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 't') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                int esign = 1;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
                    if (s[i] == '-') esign = -1;
                    ++i;
                }
                int eacc = 0;
                bool saw_exp = false;
                while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
                    eacc = eacc * 10 + (s[i] - '0');
                    saw_exp = true;
                    ++i;
                }
                if (!saw_exp) throw std::invalid_argument("malformed exponent in polynomial: " + text);
                exp = esign * eacc;
            }
        } else if (!saw_digits) {
            throw std::invalid_argument("malformed polynomial term: " + text);
        }
        result = result + LaurentPoly::monomial(sign * mag, exp);
    }
    return result;
}

}  // namespace cforge
