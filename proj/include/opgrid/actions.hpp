#pragma once

#include <stdexcept>

#include "opgrid/hweyl.hpp"
#include "opgrid/vectors.hpp"
#include "opgrid/weyl.hpp"

namespace opgrid {

namespace detail {

inline Rational constant_coeff(const ParamPoly& c) {
    // throws UnassignedSymbol-ish error if symbolic; callers must substitute first
    return c.constant_value();
}

}  // namespace detail

/// d/dx on Laurent polynomials (x^e -> e x^{e-1}, any integer e).
inline LaurentVector differentiate(const LaurentVector& v) {
    LaurentVector r;
    for (const auto& [e, c] : v.coeffs())
        if (e != 0) r.add(e - 1, Rational(e) * c);
    return r;
}

/// Standard (Laurent) representation of the localized Weyl algebra:
/// X^a D^b acts by b-fold differentiation followed by an exponent shift.
inline LaurentVector apply(const WeylElement& op, const LaurentVector& v) {
    LaurentVector out;
    for (const auto& [mo, c] : op.terms()) {
        LaurentVector w = v;
        for (long i = 0; i < mo.d; ++i) w = differentiate(w);
        w = shift_exponents(w, mo.x);
        out += detail::constant_coeff(c) * w;
    }
    return out;
}

/// Diff representation on Z (h = 1):
///   M f(x) = (f(x+1)+f(x-1))/2,  D f(x) = (f(x+1)-f(x-1))/2,  X f(x) = x f(x).
/// On delta functions: M d[z] = (d[z-1]+d[z+1])/2, D d[z] = (d[z-1]-d[z+1])/2.
inline DeltaVector apply(const HWeylElement& op, const DeltaVector& v) {
    const Rational half(1, 2);
    auto act_M = [&](const DeltaVector& w) {
        DeltaVector r;
        for (const auto& [z, c] : w.coeffs()) {
            r.add(z - 1, half * c);
            r.add(z + 1, half * c);
        }
        return r;
    };
    auto act_D = [&](const DeltaVector& w) {
        DeltaVector r;
        for (const auto& [z, c] : w.coeffs()) {
            r.add(z - 1, half * c);
            r.add(z + 1, -half * c);
        }
        return r;
    };
    DeltaVector out;
    for (const auto& [mo, c] : op.terms()) {
        DeltaVector w = v;
        for (long i = 0; i < mo.d; ++i) w = act_D(w);
        if (mo.m) w = act_M(w);
        for (long i = 0; i < mo.x; ++i) {
            DeltaVector r;
            for (const auto& [z, cv] : w.coeffs()) r.add(z, Rational(z) * cv);
            w = r;
        }
        out += detail::constant_coeff(c) * w;
    }
    return out;
}

/// Trig representation encoded in u = e^{ix}:
///   M = (u + u^{-1})/2,  D = (u - u^{-1})/2,  X u^k = -k u^k.
inline FourierVector apply(const HWeylElement& op, const FourierVector& v) {
    const Rational half(1, 2);
    auto mul_half_sum = [&](const FourierVector& w, bool minus) {
        FourierVector r;
        for (const auto& [e, c] : w.coeffs()) {
            r.add(e + 1, half * c);
            r.add(e - 1, minus ? Rational(-half * c) : Rational(half * c));
        }
        return r;
    };
    FourierVector out;
    for (const auto& [mo, c] : op.terms()) {
        FourierVector w = v;
        for (long i = 0; i < mo.d; ++i) w = mul_half_sum(w, /*minus=*/true);
        if (mo.m) w = mul_half_sum(w, /*minus=*/false);
        for (long i = 0; i < mo.x; ++i) {
            FourierVector r;
            for (const auto& [e, cv] : w.coeffs()) r.add(e, Rational(-e) * cv);
            w = r;
        }
        out += detail::constant_coeff(c) * w;
    }
    return out;
}

// Algebra/backend pairings used by the grid verifier and the CLI.
struct WeylLaurent {
    using Element = WeylElement;
    using Vector = LaurentVector;
    static constexpr const char* backend_name = "laurent";
    static Vector act(const Element& e, const Vector& v) { return apply(e, v); }
};

struct HWeylDelta {
    using Element = HWeylElement;
    using Vector = DeltaVector;
    static constexpr const char* backend_name = "delta";
    static Vector act(const Element& e, const Vector& v) { return apply(e, v); }
};

struct HWeylFourier {
    using Element = HWeylElement;
    using Vector = FourierVector;
    static constexpr const char* backend_name = "fourier";
    static Vector act(const Element& e, const Vector& v) { return apply(e, v); }
};

}  // namespace opgrid
