#pragma once

#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "opgrid/rational.hpp"

namespace opgrid {

// The closed set of parameter symbols appearing in grid indices and tables.
enum class Sym : int { n = 0, k = 1, l = 2, m = 3, j = 4 };
inline constexpr int kSymCount = 5;
inline constexpr std::array<char, kSymCount> kSymNames = {'n', 'k', 'l', 'm', 'j'};

inline char sym_name(Sym s) { return kSymNames[static_cast<int>(s)]; }

inline Sym sym_from_char(char c) {
    for (int i = 0; i < kSymCount; ++i)
        if (kSymNames[i] == c) return static_cast<Sym>(i);
    throw std::invalid_argument(std::string("unknown parameter symbol '") + c + "'");
}

struct ParamExponents {
    std::array<int, kSymCount> e{};

    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool operator==(const ParamExponents&) const = default;
};

// Graded lexicographic, descending, so map iteration yields the canonical
// printed order (leading term first) and equality of maps is structural.
struct GradedLexDesc {
    bool operator()(const ParamExponents& a, const ParamExponents& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.e > b.e;
    }
};

class UnassignedSymbol : public std::domain_error {
public:
    explicit UnassignedSymbol(Sym s)
        : std::domain_error(std::string("unassigned symbol '") + sym_name(s) + "'"), sym(s) {}
    Sym sym;
};

using SymAssignment = std::map<Sym, Rational>;

/// Polynomial over Q in the parameter symbols {n,k,l,m,j}.
/// Canonical: no zero coefficients, terms in graded-lex order.
class ParamPoly {
public:
    using TermMap = std::map<ParamExponents, Rational, GradedLexDesc>;

    ParamPoly() = default;
    ParamPoly(const Rational& c) { if (c != 0) terms_[ParamExponents{}] = c; }
    ParamPoly(long c) : ParamPoly(Rational(c)) {}

    static ParamPoly sym(Sym s) {
        ParamPoly p;
        ParamExponents ex;
        ex.e[static_cast<int>(s)] = 1;
        p.terms_[ex] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("ParamPoly is not constant: " + to_string());
        return terms_.begin()->second;
    }

    const TermMap& terms() const { return terms_; }

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

    ParamPoly& operator+=(const ParamPoly& o) {
        for (const auto& [ex, c] : o.terms_) add_term(ex, c);
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        for (const auto& [ex, c] : o.terms_) add_term(ex, -c);
        return *this;
    }
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator-(const ParamPoly& a) {
        ParamPoly r;
        for (const auto& [ex, c] : a.terms_) r.terms_[ex] = -c;
        return r;
    }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ParamExponents ex;
                for (int i = 0; i < kSymCount; ++i) ex.e[i] = ea.e[i] + eb.e[i];
                r.add_term(ex, ca * cb);
            }
        return r;
    }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    ParamPoly pow(long e) const {
        if (e < 0) throw std::domain_error("negative ParamPoly power");
        ParamPoly r(1);
        for (long i = 0; i < e; ++i) r *= *this;
        return r;
    }

    /// Exact evaluation; every symbol occurring must be assigned.
    Rational eval(const SymAssignment& a) const {
        Rational total = 0;
        for (const auto& [ex, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < kSymCount; ++i) {
                if (ex.e[i] == 0) continue;
                auto it = a.find(static_cast<Sym>(i));
                if (it == a.end()) throw UnassignedSymbol(static_cast<Sym>(i));
                for (int p = 0; p < ex.e[i]; ++p) t *= it->second;
            }
            total += t;
        }
        return total;
    }

    /// Substitute a polynomial for one symbol (used to shift grid indices).
    ParamPoly substitute(Sym s, const ParamPoly& value) const {
        const int si = static_cast<int>(s);
        ParamPoly r;
        for (const auto& [ex, c] : terms_) {
            ParamExponents rest = ex;
            rest.e[si] = 0;
            ParamPoly t;
            t.terms_[rest] = c;
            r += t * value.pow(ex.e[si]);
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [ex, c] : terms_) {
            const bool neg = c < 0;
            Rational mag = neg ? Rational(-c) : c;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            std::string vars;
            for (int i = 0; i < kSymCount; ++i) {
                if (ex.e[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += sym_name(static_cast<Sym>(i));
                if (ex.e[i] > 1) vars += "^" + std::to_string(ex.e[i]);
            }
            if (vars.empty()) {
                os << opgrid::to_string(mag);
            } else {
                if (numerator(mag) != 1) os << numerator(mag).str() << "*";
                os << vars;
                if (denominator(mag) != 1) os << "/" << denominator(mag).str();
            }
        }
        return os.str();
    }

private:
    void add_term(const ParamExponents& ex, const Rational& c) {
        auto it = terms_.find(ex);
        if (it == terms_.end()) {
            if (c != 0) terms_[ex] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline ParamPoly operator*(const Rational& c, const ParamPoly& p) { return ParamPoly(c) * p; }

// Shorthands used throughout grid/table definitions.
namespace syms {
inline const ParamPoly n = ParamPoly::sym(Sym::n);
inline const ParamPoly k = ParamPoly::sym(Sym::k);
inline const ParamPoly l = ParamPoly::sym(Sym::l);
inline const ParamPoly m = ParamPoly::sym(Sym::m);
inline const ParamPoly j = ParamPoly::sym(Sym::j);
}  // namespace syms

}  // namespace opgrid
