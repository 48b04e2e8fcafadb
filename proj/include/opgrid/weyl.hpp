#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opgrid/parampoly.hpp"

namespace opgrid {

/// Normal-ordered word X^a D^b in the Weyl algebra localized at X.
/// a may be negative (Laurent X), b never is.
struct WeylMonomial {
    long x = 0;
    long d = 0;
    bool operator==(const WeylMonomial&) const = default;
};

struct WeylMonomialDesc {
    bool operator()(const WeylMonomial& a, const WeylMonomial& b) const {
        if (a.x != b.x) return a.x > b.x;
        return a.d > b.d;
    }
};

/// Element of the localized Weyl algebra in normal form: a finite sum of
/// X^a D^b words with ParamPoly coefficients. The defining relation is
/// [D,X] = 1, extended to Laurent powers of X.
class WeylElement {
public:
    using TermMap = std::map<WeylMonomial, ParamPoly, WeylMonomialDesc>;

    WeylElement() = default;

    static WeylElement scalar(const ParamPoly& c) {
        WeylElement e;
        e.add_term({0, 0}, c);
        return e;
    }
    static WeylElement monomial(long x, long d, const ParamPoly& c = ParamPoly(1)) {
        if (d < 0) throw std::domain_error("negative D power");
        WeylElement e;
        e.add_term({x, d}, c);
        return e;
    }
    static WeylElement X() { return monomial(1, 0); }
    static WeylElement Xinv() { return monomial(-1, 0); }
    static WeylElement D() { return monomial(0, 1); }
    /// C = D - 1
    static WeylElement C() { return D() - scalar(ParamPoly(1)); }
    /// R = X^2 - 1
    static WeylElement R() { return monomial(2, 0) - scalar(ParamPoly(1)); }
    /// calD(j) = 1 + D + ... + D^j  (concrete j only)
    static WeylElement calD(long j) {
        if (j < 0) throw std::domain_error("calD requires j >= 0");
        WeylElement e;
        for (long i = 0; i <= j; ++i) e.add_term({0, i}, ParamPoly(1));
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    bool operator==(const WeylElement& o) const { return terms_ == o.terms_; }

    WeylElement& operator+=(const WeylElement& o) {
        for (const auto& [mo, c] : o.terms_) add_term(mo, c);
        return *this;
    }
    WeylElement& operator-=(const WeylElement& o) {
        for (const auto& [mo, c] : o.terms_) add_term(mo, -c);
        return *this;
    }
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator-(const WeylElement& a) {
        WeylElement r;
        for (const auto& [mo, c] : a.terms_) r.terms_[mo] = -c;
        return r;
    }

    /// Normal-ordered product. Per monomial pair the rewrite chain collapses
    /// to the closed formula
    ///   D^b X^a = sum_i C(b,i) a(a-1)...(a-i+1) X^{a-i} D^{b-i},
    /// valid for any integer a.
    friend WeylElement operator*(const WeylElement& lhs, const WeylElement& rhs) {
        WeylElement r;
        for (const auto& [ma, ca] : lhs.terms_)
            for (const auto& [mb, cb] : rhs.terms_) {
                const ParamPoly coeff = ca * cb;
                for (long i = 0; i <= ma.d; ++i) {
                    const Rational f =
                        binomial_coeff(ma.d, i) * Rational(falling_factorial(BigInt(mb.x), i));
                    if (f == 0) continue;
                    r.add_term({ma.x + mb.x - i, ma.d + mb.d - i}, f * coeff);
                }
            }
        return r;
    }
    WeylElement& operator*=(const WeylElement& o) { return *this = *this * o; }

    friend WeylElement operator*(const ParamPoly& c, const WeylElement& e) {
        return WeylElement::scalar(c) * e;
    }

    WeylElement pow(long e) const {
        if (e < 0) throw std::domain_error("negative element power");
        WeylElement r = scalar(ParamPoly(1));
        for (long i = 0; i < e; ++i) r *= *this;
        return r;
    }

    friend WeylElement commutator(const WeylElement& a, const WeylElement& b) {
        return a * b - b * a;
    }

    /// Evaluate every coefficient; the assignment must cover all symbols present.
    WeylElement substitute_params(const SymAssignment& a) const {
        WeylElement r;
        for (const auto& [mo, c] : terms_) r.add_term(mo, ParamPoly(c.eval(a)));
        return r;
    }

    /// Replace one symbol by a polynomial in all coefficients (index shifts).
    WeylElement substitute_sym(Sym s, const ParamPoly& value) const {
        WeylElement r;
        for (const auto& [mo, c] : terms_) r.add_term(mo, c.substitute(s, value));
        return r;
    }

    bool is_parameter_free() const {
        for (const auto& [mo, c] : terms_)
            if (!c.is_constant()) return false;
        return true;
    }

    std::string to_string() const;

private:
    void add_term(const WeylMonomial& mo, const ParamPoly& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(mo);
        if (it == terms_.end()) {
            terms_[mo] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

namespace detail {

inline void append_generator_power(std::string& out, const char* g, long e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += g;
    if (e != 1) out += "^" + std::to_string(e);
}

// Shared term formatting: coefficient polynomial times a generator word.
inline std::string format_terms(const std::vector<std::pair<std::string, ParamPoly>>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [word, coeff] : terms) {
        ParamPoly c = coeff;
        bool neg = false;
        if (c.is_constant()) {
            if (c.constant_value() < 0) {
                neg = true;
                c = -c;
            }
        } else if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
            neg = true;
            c = -c;
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (word.empty()) {
            const std::string cs = c.to_string();
            const bool needs_parens = !c.is_constant() && c.terms().size() > 1;
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else if (c.is_constant() && c.constant_value() == 1) {
            os << word;
        } else if (c.is_constant()) {
            const Rational cv = c.constant_value();
            if (denominator(cv) == 1) {
                os << numerator(cv).str() << "*" << word;
            } else {
                os << numerator(cv).str() << "*" << word << "/" << denominator(cv).str();
            }
        } else {
            const bool simple = c.terms().size() == 1;
            os << (simple ? c.to_string() : "(" + c.to_string() + ")") << "*" << word;
        }
    }
    return os.str();
}

}  // namespace detail

inline std::string WeylElement::to_string() const {
    std::vector<std::pair<std::string, ParamPoly>> rows;
    for (const auto& [mo, c] : terms_) {
        std::string word;
        detail::append_generator_power(word, "X", mo.x);
        detail::append_generator_power(word, "D", mo.d);
        rows.emplace_back(word, c);
    }
    return detail::format_terms(rows);
}

}  // namespace opgrid
