#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opgrid/parampoly.hpp"
#include "opgrid/weyl.hpp"  // detail::format_terms

namespace opgrid {

/// Normal-ordered word X^a M^e D^b of the h-Weyl algebra at h = 1, with
/// e in {0,1}; M^2 is always reduced via M^2 = 1 + D^2.
struct HWeylMonomial {
    long x = 0;
    int m = 0;
    long d = 0;
    bool operator==(const HWeylMonomial&) const = default;
};

struct HWeylMonomialDesc {
    bool operator()(const HWeylMonomial& a, const HWeylMonomial& b) const {
        if (a.x != b.x) return a.x > b.x;
        if (a.m != b.m) return a.m > b.m;
        return a.d > b.d;
    }
};

/// Element of the h-Weyl algebra (h = 1) in canonical normal form.
/// Relations: [M,D] = 0, [M,X] = D, [D,X] = M, M^2 - D^2 = 1.
class HWeylElement {
public:
    using TermMap = std::map<HWeylMonomial, ParamPoly, HWeylMonomialDesc>;

    HWeylElement() = default;

    static HWeylElement scalar(const ParamPoly& c) {
        HWeylElement e;
        e.add_term({0, 0, 0}, c);
        return e;
    }
    static HWeylElement monomial(long x, int m, long d, const ParamPoly& c = ParamPoly(1)) {
        if (x < 0 || d < 0 || m < 0 || m > 1)
            throw std::domain_error("invalid h-Weyl monomial exponents");
        HWeylElement e;
        e.add_term({x, m, d}, c);
        return e;
    }
    static HWeylElement X() { return monomial(1, 0, 0); }
    static HWeylElement M() { return monomial(0, 1, 0); }
    static HWeylElement D() { return monomial(0, 0, 1); }

    /// G_j = j D + M X  (= (j+1) D + X M); j may be symbolic.
    static HWeylElement G(const ParamPoly& j) {
        return scalar(j) * D() + M() * X();
    }
    /// L_j = j M + D X  (= (j+1) M + X D); j may be symbolic.
    static HWeylElement L(const ParamPoly& j) {
        return scalar(j) * M() + D() * X();
    }
    /// Binomial operator H_{nm} = (n+m+1) M^2 + DXM - (n+1); n, m may be symbolic.
    static HWeylElement Hnm(const ParamPoly& n, const ParamPoly& m) {
        return Hnm_form(1, n, m);
    }
    /// The five displayed forms of H_{nm}; all must normal-order identically.
    static HWeylElement Hnm_form(int form, const ParamPoly& n, const ParamPoly& m) {
        const ParamPoly one(1);
        const HWeylElement M2 = M() * M();
        switch (form) {
            case 1: return scalar(n + m + one) * M2 + D() * X() * M() - scalar(n + one);
            case 2: return scalar(n + m + one) * M2 + M() * X() * D() - scalar(n);
            case 3:
                return scalar(n + m + one) * (M2 - scalar(one)) + M() * X() * D() +
                       scalar(m + one);
            case 4:
                return scalar(n + m + one) * D() * D() + M() * X() * D() + scalar(m + one);
            case 5: return scalar(n + m + one) * D() * D() + D() * X() * M() + scalar(m);
            default: throw std::invalid_argument("Hnm_form expects form in 1..5");
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    bool operator==(const HWeylElement& o) const { return terms_ == o.terms_; }

    HWeylElement& operator+=(const HWeylElement& o) {
        for (const auto& [mo, c] : o.terms_) add_term(mo, c);
        return *this;
    }
    HWeylElement& operator-=(const HWeylElement& o) {
        for (const auto& [mo, c] : o.terms_) add_term(mo, -c);
        return *this;
    }
    friend HWeylElement operator+(HWeylElement a, const HWeylElement& b) { return a += b; }
    friend HWeylElement operator-(HWeylElement a, const HWeylElement& b) { return a -= b; }
    friend HWeylElement operator-(const HWeylElement& a) {
        HWeylElement r;
        for (const auto& [mo, c] : a.terms_) r.terms_[mo] = -c;
        return r;
    }

    /// Normal-ordered product. Each left monomial X^a M^e D^b is folded onto
    /// the right element generator by generator; commuting M or D past X^a
    /// uses the closed expansion
    ///   M X^a = Q_a(X) M + P_a(X) D,   D X^a = P_a(X) M + Q_a(X) D
    /// with Q_a = ((X+1)^a + (X-1)^a)/2 and P_a = ((X+1)^a - (X-1)^a)/2.
    friend HWeylElement operator*(const HWeylElement& lhs, const HWeylElement& rhs) {
        HWeylElement r;
        for (const auto& [mo, c] : lhs.terms_) {
            HWeylElement acc = rhs;
            for (long i = 0; i < mo.d; ++i) acc = left_mul_MD(acc, /*is_M=*/false);
            if (mo.m) acc = left_mul_MD(acc, /*is_M=*/true);
            for (const auto& [mb, cb] : acc.terms_)
                r.add_term({mb.x + mo.x, mb.m, mb.d}, c * cb);
        }
        return r;
    }
    HWeylElement& operator*=(const HWeylElement& o) { return *this = *this * o; }

    friend HWeylElement operator*(const ParamPoly& c, const HWeylElement& e) {
        return HWeylElement::scalar(c) * e;
    }

    HWeylElement pow(long e) const {
        if (e < 0) throw std::domain_error("negative element power");
        HWeylElement r = scalar(ParamPoly(1));
        for (long i = 0; i < e; ++i) r *= *this;
        return r;
    }

    friend HWeylElement commutator(const HWeylElement& a, const HWeylElement& b) {
        return a * b - b * a;
    }

    HWeylElement substitute_params(const SymAssignment& a) const {
        HWeylElement r;
        for (const auto& [mo, c] : terms_) r.add_term(mo, ParamPoly(c.eval(a)));
        return r;
    }

    HWeylElement substitute_sym(Sym s, const ParamPoly& value) const {
        HWeylElement r;
        for (const auto& [mo, c] : terms_) r.add_term(mo, c.substitute(s, value));
        return r;
    }

    bool is_parameter_free() const {
        for (const auto& [mo, c] : terms_)
            if (!c.is_constant()) return false;
        return true;
    }

    std::string to_string() const {
        std::vector<std::pair<std::string, ParamPoly>> rows;
        for (const auto& [mo, c] : terms_) {
            std::string word;
            detail::append_generator_power(word, "X", mo.x);
            detail::append_generator_power(word, "M", mo.m);
            detail::append_generator_power(word, "D", mo.d);
            rows.emplace_back(word, c);
        }
        return detail::format_terms(rows);
    }

private:
    // Left-multiply a normal form by M (is_M) or D (!is_M).
    static HWeylElement left_mul_MD(const HWeylElement& e, bool is_M) {
        HWeylElement r;
        for (const auto& [mo, c] : e.terms_) {
            // (X+1)^a and (X-1)^a expansions; even part goes with the same
            // generator, odd part with the swapped one.
            for (long i = 0; i <= mo.x; ++i) {
                const Rational b = binomial_coeff(mo.x, i);
                const long xpow = mo.x - i;           // X^{x-i} from the expansion
                const bool odd = (i % 2) != 0;        // (X-1)^a sign of this term
                // q-part coefficient: (b + (-1)^i b)/2; p-part: (b - (-1)^i b)/2
                const Rational qc = odd ? Rational(0) : b;
                const Rational pc = odd ? b : Rational(0);
                // generator reaching the monomial after the commute:
                //   is_M:  q -> M, p -> D;   !is_M: p -> M, q -> D
                const Rational to_M = is_M ? qc : pc;
                const Rational to_D = is_M ? pc : qc;
                if (to_M != 0) emit_after_generator(r, xpow, /*gen_is_M=*/true, mo, to_M * c);
                if (to_D != 0) emit_after_generator(r, xpow, /*gen_is_M=*/false, mo, to_D * c);
            }
        }
        return r;
    }

    // Append generator * M^{mo.m} D^{mo.d} under prefix X^xpow, reducing M^2.
    static void emit_after_generator(HWeylElement& out, long xpow, bool gen_is_M,
                                     const HWeylMonomial& mo, const ParamPoly& c) {
        if (gen_is_M) {
            if (mo.m == 0) {
                out.add_term({xpow, 1, mo.d}, c);
            } else {  // M*M = 1 + D^2
                out.add_term({xpow, 0, mo.d}, c);
                out.add_term({xpow, 0, mo.d + 2}, c);
            }
        } else {
            out.add_term({xpow, mo.m, mo.d + 1}, c);
        }
    }

    void add_term(const HWeylMonomial& mo, const ParamPoly& c) {
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

}  // namespace opgrid
