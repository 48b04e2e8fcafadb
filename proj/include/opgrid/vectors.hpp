#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "opgrid/rational.hpp"

namespace opgrid {

struct LaurentTag {
    static constexpr const char* name = "laurent";
    static constexpr bool print_descending = true;
    static std::string term(long e) {
        if (e == 0) return "";
        if (e == 1) return "x";
        return "x^" + std::to_string(e);
    }
};

struct DeltaTag {
    static constexpr const char* name = "delta";
    static constexpr bool print_descending = false;
    static std::string term(long e) { return "d[" + std::to_string(e) + "]"; }
};

struct FourierTag {
    static constexpr const char* name = "fourier";
    static constexpr bool print_descending = false;
    static std::string term(long e) {
        if (e == 0) return "";
        if (e == 1) return "u";
        return "u^" + std::to_string(e);
    }
};

/// Finitely supported exact vector: exponent (or lattice point) -> coefficient.
/// LaurentVector is a Laurent polynomial in x, DeltaVector a function on Z,
/// FourierVector a Laurent polynomial in u = e^{ix}.
template <class Tag>
class SparseVec {
public:
    using Coeffs = std::map<long, Rational>;
    using tag = Tag;

    SparseVec() = default;

    static SparseVec basis(long e, const Rational& c = Rational(1)) {
        SparseVec v;
        v.set(e, c);
        return v;
    }
    static SparseVec constant(const Rational& c) { return basis(0, c); }

    bool is_zero() const { return c_.empty(); }
    const Coeffs& coeffs() const { return c_; }
    Rational coeff(long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rational(0) : it->second;
    }
    void set(long e, const Rational& c) {
        if (c == 0)
            c_.erase(e);
        else
            c_[e] = c;
    }
    void add(long e, const Rational& c) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (c != 0) c_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    long min_exp() const {
        if (c_.empty()) throw std::domain_error("min_exp of zero vector");
        return c_.begin()->first;
    }
    long max_exp() const {
        if (c_.empty()) throw std::domain_error("max_exp of zero vector");
        return c_.rbegin()->first;
    }

    bool operator==(const SparseVec&) const = default;

    SparseVec& operator+=(const SparseVec& o) {
        for (const auto& [e, c] : o.c_) add(e, c);
        return *this;
    }
    SparseVec& operator-=(const SparseVec& o) {
        for (const auto& [e, c] : o.c_) add(e, -c);
        return *this;
    }
    friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
    friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
    friend SparseVec operator*(const Rational& s, const SparseVec& v) {
        SparseVec r;
        if (s == 0) return r;
        for (const auto& [e, c] : v.c_) r.c_[e] = s * c;
        return r;
    }

    /// Scale so coefficients are coprime integers and the highest-exponent
    /// coefficient is positive; canonical representative of the span.
    SparseVec primitive() const {
        if (c_.empty()) return *this;
        BigInt num_gcd = 0, den_lcm = 1;
        for (const auto& [e, c] : c_) {
            num_gcd = gcd(num_gcd, numerator(c));
            den_lcm = lcm(den_lcm, denominator(c));
        }
        Rational s(den_lcm, num_gcd);
        if (c_.rbegin()->second < 0) s = -s;
        return s * *this;
    }

    /// The constant c with *this == c * other, if any (zero vectors excluded).
    std::optional<Rational> ratio_to(const SparseVec& other) const {
        if (is_zero() || other.is_zero()) return std::nullopt;
        if (c_.size() != other.c_.size()) return std::nullopt;
        const auto& [e0, c0] = *other.c_.begin();
        const Rational r = coeff(e0) / c0;
        if (r == 0) return std::nullopt;
        return (*this == r * other) ? std::optional<Rational>(r) : std::nullopt;
    }

    friend bool span_equal(const SparseVec& a, const SparseVec& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.ratio_to(b).has_value();
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        auto emit = [&](long e, const Rational& c) {
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            const std::string t = Tag::term(e);
            if (t.empty()) {
                os << opgrid::to_string(mag);
            } else {
                if (numerator(mag) != 1) os << numerator(mag).str() << "*";
                os << t;
                if (denominator(mag) != 1) os << "/" << denominator(mag).str();
            }
        };
        if (Tag::print_descending) {
            for (auto it = c_.rbegin(); it != c_.rend(); ++it) emit(it->first, it->second);
        } else {
            for (const auto& [e, c] : c_) emit(e, c);
        }
        return os.str();
    }

private:
    Coeffs c_;
};

using LaurentVector = SparseVec<LaurentTag>;
using DeltaVector = SparseVec<DeltaTag>;
using FourierVector = SparseVec<FourierTag>;

/// Multiply exponents by x^a (total on Laurent vectors).
inline LaurentVector shift_exponents(const LaurentVector& v, long a) {
    LaurentVector r;
    for (const auto& [e, c] : v.coeffs()) r.set(e + a, c);
    return r;
}

class DivisibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact division by a Laurent polynomial; throws DivisibilityError if the
/// quotient is not again a (finite) Laurent polynomial.
inline LaurentVector divide_exact(LaurentVector num, const LaurentVector& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return {};
    // For an exact quotient the lowest exponent equals num.min - den.min;
    // falling below that bound proves the division inexact.
    const long qmin_bound = num.min_exp() - den.min_exp();
    LaurentVector q;
    const long dlead = den.max_exp();
    const Rational dc = den.coeff(dlead);
    while (!num.is_zero()) {
        const long qe = num.max_exp() - dlead;
        if (qe < qmin_bound) throw DivisibilityError("inexact polynomial division");
        const Rational qc = num.coeff(num.max_exp()) / dc;
        q.set(qe, qc);
        for (const auto& [e, c] : den.coeffs()) num.add(e + qe, -(c * qc));
    }
    return q;
}

}  // namespace opgrid
